//! Dense univariate polynomials over a gcd domain.
//!
//! Bivariate polynomials are nested: `UPoly<UPoly<BigInt>>` is a polynomial in
//! the outer variable whose coefficients are polynomials in the inner one.
//! Gcds use the primitive pseudo-remainder sequence, with shortcuts for
//! constants and monomials, which covers nearly every call in practice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// A commutative ring with exact division and a normalized gcd.
pub trait GcdRing: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(self / d)` when `d` divides `self` exactly.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading coefficient, outermost variable first.
    fn signum(&self) -> i8;

    fn add_assign(&mut self, other: &Self) {
        *self = GcdRing::add(self, other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = GcdRing::sub(self, other);
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = GcdRing::add(self, &GcdRing::mul(a, b));
    }

    fn unit_normal(&self) -> Self {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl GcdRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn signum(&self) -> i8 {
        if self.is_negative() {
            -1
        } else if self.is_positive() {
            1
        } else {
            0
        }
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Dense polynomial `c[0] + c[1] x + ...` with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<R> {
    c: Vec<R>,
}

impl<R: GcdRing> UPoly<R> {
    pub fn from_coeffs(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn constant(r: R) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn monomial(r: R, deg: usize) -> Self {
        if r.is_zero() {
            return UPoly { c: Vec::new() };
        }
        let mut c = vec![R::zero(); deg + 1];
        c[deg] = r;
        UPoly { c }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> &R {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).unwrap_or(0)
    }

    pub fn nonzero_terms(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.c.is_empty() || k == 0 {
            return self.clone();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Divide by `x^k`; the low coefficients must be zero.
    fn unshift(&self, k: usize) -> Self {
        UPoly {
            c: self.c[k.min(self.c.len())..].to_vec(),
        }
    }

    pub fn scale(&self, r: &R) -> Self {
        if r.is_zero() {
            return UPoly { c: Vec::new() };
        }
        Self::from_coeffs(self.c.iter().map(|x| x.mul(r)).collect())
    }

    /// Substitute `x -> x^k`.
    pub fn spread(&self, k: usize) -> Self {
        if self.c.len() <= 1 || k == 1 {
            return self.clone();
        }
        let mut c = vec![R::zero(); (self.c.len() - 1) * k + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * k] = x.clone();
        }
        UPoly { c }
    }

    /// Coefficient reversal `x^d p(1/x)` with `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut c = vec![R::zero(); d + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[d - i] = x.clone();
        }
        Self::from_coeffs(c)
    }

    pub fn map_coeffs<F: FnMut(&R) -> R>(&self, f: F) -> Self {
        Self::from_coeffs(self.c.iter().map(f).collect())
    }

    pub fn content(&self) -> R {
        let mut g = R::zero();
        for x in &self.c {
            if x.is_zero() {
                continue;
            }
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn divide_coeffs(&self, d: &R) -> Self {
        if d.is_one() {
            return self.clone();
        }
        UPoly {
            c: self
                .c
                .iter()
                .map(|x| x.div_exact(d).expect("content divides every coefficient"))
                .collect(),
        }
    }

    /// Primitive part with positive leading sign.
    pub fn primitive_part(&self) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        self.divide_coeffs(&self.content()).unit_normal()
    }

    /// Pseudo-remainder of `self` by `d` (up to a power of `lc(d)`).
    fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let ld = d.lc();
        let mut r = self.c.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let k = top - dd;
            for x in r.iter_mut() {
                *x = x.mul(ld);
            }
            for (j, dj) in d.c.iter().enumerate() {
                let t = lr.mul(dj);
                r[k + j].sub_assign(&t);
            }
            debug_assert!(r[top].is_zero());
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UPoly { c: r }
    }

    /// Evaluate with a ring homomorphism on coefficients into `S`.
    pub fn eval_with<S, F>(&self, x: &S, mut f: F, zero: S) -> S
    where
        S: Clone + std::ops::Add<Output = S> + std::ops::Mul<Output = S>,
        F: FnMut(&R) -> S,
    {
        let mut acc = zero;
        for c in self.c.iter().rev() {
            acc = acc * x.clone() + f(c);
        }
        acc
    }
}

impl<R: GcdRing> GcdRing for UPoly<R> {
    fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    fn one() -> Self {
        UPoly { c: vec![R::one()] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    fn add_assign(&mut self, other: &Self) {
        if self.c.len() < other.c.len() {
            self.c.resize(other.c.len(), R::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            a.add_assign(b);
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    fn sub_assign(&mut self, other: &Self) {
        if self.c.len() < other.c.len() {
            self.c.resize(other.c.len(), R::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            a.sub_assign(b);
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.c.is_empty() || other.c.is_empty() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j].add_mul_assign(a, b);
            }
        }
        Self::from_coeffs(c)
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.c.is_empty() || b.c.is_empty() {
            return;
        }
        let n = a.c.len() + b.c.len() - 1;
        if self.c.len() < n {
            self.c.resize(n, R::zero());
        }
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                self.c[i + j].add_mul_assign(x, y);
            }
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    fn neg(&self) -> Self {
        UPoly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.c.is_empty() {
            return Some(Self::zero());
        }
        if dd == 0 {
            let d0 = &d.c[0];
            let c: Option<Vec<R>> = self.c.iter().map(|x| x.div_exact(d0)).collect();
            return c.map(Self::from_coeffs);
        }
        let ds = self.c.len() - 1;
        if ds < dd {
            return None;
        }
        let ld = d.lc();
        let mut r = self.c.clone();
        let mut q = vec![R::zero(); ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            if r[i + dd].is_zero() {
                continue;
            }
            let qc = r[i + dd].div_exact(ld)?;
            for (j, dj) in d.c.iter().enumerate() {
                let t = qc.mul(dj);
                r[i + j].sub_assign(&t);
            }
            q[i] = qc;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    fn gcd(&self, other: &Self) -> Self {
        if self.c.is_empty() {
            return other.unit_normal();
        }
        if other.c.is_empty() {
            return self.unit_normal();
        }
        if self == other {
            return self.unit_normal();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        if self.is_constant() || other.is_constant() {
            return Self::constant(c);
        }
        let va = self.valuation();
        let vb = other.valuation();
        let v = va.min(vb);
        let mut a = self.divide_coeffs(&ca).unshift(va);
        let mut b = other.divide_coeffs(&cb).unshift(vb);
        let g = if a.is_constant() || b.is_constant() {
            Self::one()
        } else {
            if a.c.len() < b.c.len() {
                std::mem::swap(&mut a, &mut b);
            }
            b = b.primitive_part();
            loop {
                let r = a.prem(&b);
                if r.is_zero() {
                    break b.primitive_part();
                }
                if r.is_constant() {
                    break Self::one();
                }
                a = b;
                b = r.primitive_part();
            }
        };
        g.scale(&c).shift(v).unit_normal()
    }

    fn signum(&self) -> i8 {
        match self.c.last() {
            None => 0,
            Some(x) => x.signum(),
        }
    }
}

pub type QPoly = UPoly<BigInt>;
/// Polynomial in `t` whose coefficients are polynomials in `q`.
pub type Poly2 = UPoly<QPoly>;

/// Iterate the nonzero terms `(q_exp, t_exp, coeff)` of a bivariate polynomial.
pub fn poly2_terms(p: &Poly2) -> impl Iterator<Item = (usize, usize, &BigInt)> {
    p.coeffs().iter().enumerate().flat_map(|(j, qp)| {
        qp.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(move |(i, c)| (i, j, c))
    })
}

pub fn poly2_monomial(c: BigInt, qe: usize, te: usize) -> Poly2 {
    UPoly::monomial(UPoly::monomial(c, qe), te)
}

pub fn poly2_const(c: BigInt) -> Poly2 {
    UPoly::constant(UPoly::constant(c))
}

/// Maximum degree in `q` over all `t`-coefficients.
pub fn poly2_q_degree(p: &Poly2) -> usize {
    p.coeffs()
        .iter()
        .filter_map(|x| x.degree())
        .max()
        .unwrap_or(0)
}

/// Substitute `q -> q^k, t -> t^k`.
pub fn poly2_spread(p: &Poly2, k: usize) -> Poly2 {
    p.map_coeffs(|x| x.spread(k)).spread(k)
}
