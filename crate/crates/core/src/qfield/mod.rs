//! Exact coefficient arithmetic in Q(q,t) and the q-series primitives.
//!
//! A [`CoefQT`] is a reduced fraction of integer polynomials in `q` and `t`.
//! The denominator's leading coefficient under graded-lex order (ties broken
//! towards the higher power of `q`) is positive, so every value has exactly one
//! representation and structural equality is value equality.

pub(crate) mod parse;
pub mod poly;
mod qseries;

pub use qseries::{neg_shift_poch_identity_check, q_poch_general, qbinom, qbinom_hook, qpoch};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use poly::{poly2_const, poly2_monomial, poly2_q_degree, poly2_spread, poly2_terms, GcdRing, Poly2, UPoly};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoefQT {
    num: Poly2,
    den: Poly2,
}

fn grlex_lead_sign(p: &Poly2) -> i8 {
    let mut best: Option<(usize, usize, i8)> = None;
    for (i, j, c) in poly2_terms(p) {
        let key = (i + j, i);
        if best.is_none_or(|(d, qi, _)| key > (d, qi)) {
            best = Some((key.0, key.1, if c.is_negative() { -1 } else { 1 }));
        }
    }
    best.map_or(0, |b| b.2)
}

impl CoefQT {
    pub fn zero() -> Self {
        CoefQT {
            num: Poly2::zero(),
            den: Poly2::one(),
        }
    }

    pub fn one() -> Self {
        CoefQT {
            num: Poly2::one(),
            den: Poly2::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        CoefQT {
            num: poly2_const(n),
            den: Poly2::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        Self::from_fraction(poly2_const(n.into()), poly2_const(d.into()))
    }

    pub fn from_bigrational(r: &BigRational) -> Self {
        Self::reduce(poly2_const(r.numer().clone()), poly2_const(r.denom().clone()))
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^qe * t^te`; negative exponents land in the denominator.
    pub fn monomial(c: i64, qe: i64, te: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let (nq, dq) = if qe >= 0 { (qe as usize, 0) } else { (0, (-qe) as usize) };
        let (nt, dt) = if te >= 0 { (te as usize, 0) } else { (0, (-te) as usize) };
        CoefQT {
            num: poly2_monomial(BigInt::from(c), nq, nt),
            den: poly2_monomial(BigInt::from(1), dq, dt),
        }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::one() - Self::q_pow(e)
    }

    pub fn from_poly(num: Poly2) -> Self {
        CoefQT { num, den: Poly2::one() }
    }

    pub fn from_fraction(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly2, den: Poly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if grlex_lead_sign(&den) < 0 {
            num = num.neg();
            den = den.neg();
        }
        CoefQT { num, den }
    }

    /// Reduce a fraction whose parts are known to be coprime up to sign.
    fn sign_normalized(mut num: Poly2, mut den: Poly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if grlex_lead_sign(&den) < 0 {
            num = num.neg();
            den = den.neg();
        }
        CoefQT { num, den }
    }

    /// `self / d` for a polynomial `d`; skips the gcd when `d` divides the
    /// numerator exactly.
    pub fn div_poly(&self, d: &Poly2) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(num) = self.num.div_exact(d) {
            return Ok(Self::sign_normalized(num, self.den.clone()));
        }
        Self::from_fraction(self.num.clone(), self.den.mul(d))
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when neither numerator nor denominator involves `t`.
    pub fn is_t_free(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Rational constant, if the value involves neither `q` nor `t`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = constant_of(&self.num)?;
        let d = constant_of(&self.den)?;
        Some(BigRational::new(n, d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::sign_normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// The plethystic action of `p_k` on a scalar: `q -> q^k`, `t -> t^k`.
    pub fn frobenius(&self, k: usize) -> Self {
        if k == 1 {
            return self.clone();
        }
        CoefQT {
            num: poly2_spread(&self.num, k),
            den: poly2_spread(&self.den, k),
        }
    }

    /// Replace `q` and `t` by the given values and renormalize.
    pub fn subs(&self, q_image: &CoefQT, t_image: &CoefQT) -> Result<Self> {
        let dq = poly2_q_degree(&self.num).max(poly2_q_degree(&self.den));
        let dt = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let powers = |p: &Poly2, d: usize| {
            let mut v = Vec::with_capacity(d + 1);
            v.push(Poly2::one());
            for i in 1..=d {
                let next = v[i - 1].mul(p);
                v.push(next);
            }
            v
        };
        let qn = powers(&q_image.num, dq);
        let qd = powers(&q_image.den, dq);
        let tn = powers(&t_image.num, dt);
        let td = powers(&t_image.den, dt);
        let eval = |p: &Poly2| {
            let mut acc = Poly2::zero();
            for (i, j, c) in poly2_terms(p) {
                let term = qn[i].mul(&qd[dq - i]).mul(&tn[j]).mul(&td[dt - j]);
                acc.add_assign(&term.scale(&UPoly::constant(c.clone())));
            }
            acc
        };
        let den = eval(&self.den);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(Self::reduce(eval(&self.num), den))
    }

    pub fn subs_q(&self, q_image: &CoefQT) -> Result<Self> {
        self.subs(q_image, &CoefQT::t())
    }

    pub fn subs_t(&self, t_image: &CoefQT) -> Result<Self> {
        self.subs(&CoefQT::q(), t_image)
    }

    /// `q -> 1/q`, leaving `t` alone.
    pub fn invert_q(&self) -> Self {
        let d = poly2_q_degree(&self.num).max(poly2_q_degree(&self.den));
        let num = self.num.map_coeffs(|c| c.reversed(d));
        let den = self.den.map_coeffs(|c| c.reversed(d));
        Self::reduce(num, den)
    }

    /// Exact evaluation at rational `q`, `t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let ev = |p: &Poly2| {
            p.eval_with(
                t,
                |qp| qp.eval_with(q, |c| BigRational::from_integer(c.clone()), BigRational::zero()),
                BigRational::zero(),
            )
        };
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(ev(&self.num) / d)
    }

    /// Nonzero terms `(q_exp, t_exp, coeff)` of the numerator.
    pub fn numerator_terms(&self) -> Vec<(usize, usize, BigInt)> {
        poly2_terms(&self.num).map(|(i, j, c)| (i, j, c.clone())).collect()
    }

    /// Coefficient list in `q` of a `t`-free polynomial value.
    pub fn q_coeffs(&self) -> Option<Vec<BigInt>> {
        if !self.is_polynomial() || !self.num.is_constant() {
            return None;
        }
        Some(self.num.coeff(0).coeffs().to_vec())
    }

    /// True when the value is a polynomial whose coefficients are all >= 0.
    pub fn is_nonnegative_polynomial(&self) -> bool {
        self.is_polynomial() && poly2_terms(&self.num).all(|(_, _, c)| !c.is_negative())
    }

    /// Lowest exponent of `t` in the numerator after clearing a monomial denominator.
    pub fn min_t_exponent(&self) -> Option<i64> {
        let den_te = monomial_exponents(&self.den)?.1 as i64;
        let lo = poly2_terms(&self.num).map(|(_, j, _)| j).min()? as i64;
        Some(lo - den_te)
    }

    pub fn to_f64(&self, q: f64, t: f64) -> Option<f64> {
        let ev = |p: &Poly2| -> f64 {
            poly2_terms(p)
                .map(|(i, j, c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(i as i32) * t.powi(j as i32))
                .sum()
        };
        let d = ev(&self.den);
        (d != 0.0).then(|| ev(&self.num) / d)
    }
}

fn constant_of(p: &Poly2) -> Option<BigInt> {
    if p.is_zero() {
        return Some(BigInt::from(0));
    }
    if p.is_constant() && p.coeff(0).is_constant() {
        Some(p.coeff(0).coeff(0))
    } else {
        None
    }
}

/// `(q_exp, t_exp)` if `p` is `+-q^a t^b`.
fn monomial_exponents(p: &Poly2) -> Option<(usize, usize)> {
    let mut it = poly2_terms(p);
    let (i, j, c) = it.next()?;
    if it.next().is_some() || c.abs() != BigInt::from(1) {
        return None;
    }
    Some((i, j))
}

impl Default for CoefQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CoefQT {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for CoefQT {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl<'a> Add<&'a CoefQT> for &'a CoefQT {
    type Output = CoefQT;
    fn add(self, o: &CoefQT) -> CoefQT {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return CoefQT { num, den: self.den.clone() };
            }
            return CoefQT::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return CoefQT::sign_normalized(num, self.den.mul(&o.den));
        }
        let ad = self.den.div_exact(&g).expect("gcd divides");
        let bd = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&bd).add(&o.num.mul(&ad));
        let den = ad.mul(&o.den);
        if num.is_zero() {
            return CoefQT::zero();
        }
        let g2 = num.gcd(&g);
        if g2.is_one() {
            CoefQT::sign_normalized(num, den)
        } else {
            CoefQT::sign_normalized(
                num.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }
}

impl<'a> Mul<&'a CoefQT> for &'a CoefQT {
    type Output = CoefQT;
    fn mul(self, o: &CoefQT) -> CoefQT {
        if self.is_zero() || o.is_zero() {
            return CoefQT::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoefQT {
                num: self.num.mul(&o.num),
                den: Poly2::one(),
            };
        }
        let cross = |n: &Poly2, d: &Poly2| -> (Poly2, Poly2) {
            if d.is_one() || n.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (an, bd) = cross(&self.num, &o.den);
        let (bn, ad) = cross(&o.num, &self.den);
        CoefQT::sign_normalized(an.mul(&bn), ad.mul(&bd))
    }
}

impl<'a> Sub<&'a CoefQT> for &'a CoefQT {
    type Output = CoefQT;
    fn sub(self, o: &CoefQT) -> CoefQT {
        self + &(-o)
    }
}

impl<'a> Div<&'a CoefQT> for &'a CoefQT {
    type Output = CoefQT;
    /// Panics on division by zero; use [`CoefQT::checked_div`] otherwise.
    fn div(self, o: &CoefQT) -> CoefQT {
        self.checked_div(o).expect("division by zero in CoefQT")
    }
}

impl Neg for &CoefQT {
    type Output = CoefQT;
    fn neg(self) -> CoefQT {
        CoefQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CoefQT {
    type Output = CoefQT;
    fn neg(self) -> CoefQT {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CoefQT> for CoefQT {
            type Output = CoefQT;
            fn $m(self, o: CoefQT) -> CoefQT {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CoefQT> for CoefQT {
            type Output = CoefQT;
            fn $m(self, o: &CoefQT) -> CoefQT {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<CoefQT> for &'a CoefQT {
            type Output = CoefQT;
            fn $m(self, o: CoefQT) -> CoefQT {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CoefQT> for CoefQT {
    fn add_assign(&mut self, o: &CoefQT) {
        *self = &*self + o;
    }
}

impl AddAssign<CoefQT> for CoefQT {
    fn add_assign(&mut self, o: CoefQT) {
        *self = &*self + &o;
    }
}

impl SubAssign<&CoefQT> for CoefQT {
    fn sub_assign(&mut self, o: &CoefQT) {
        *self = &*self - o;
    }
}

impl SubAssign<CoefQT> for CoefQT {
    fn sub_assign(&mut self, o: CoefQT) {
        *self = &*self - &o;
    }
}

impl MulAssign<&CoefQT> for CoefQT {
    fn mul_assign(&mut self, o: &CoefQT) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for CoefQT {
    fn sum<I: Iterator<Item = CoefQT>>(iter: I) -> Self {
        iter.fold(CoefQT::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for CoefQT {
    fn product<I: Iterator<Item = CoefQT>>(iter: I) -> Self {
        iter.fold(CoefQT::one(), |a, b| a * b)
    }
}

/// Render a bivariate polynomial in decreasing graded-lex order.
fn fmt_poly2(p: &Poly2, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut terms: Vec<(usize, usize, &BigInt)> = poly2_terms(p).collect();
    if terms.is_empty() {
        return write!(f, "0");
    }
    terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
    for (idx, (i, j, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let mut factors: Vec<String> = Vec::new();
        if !One::is_one(&abs) || (i == 0 && j == 0) {
            factors.push(abs.to_string());
        }
        match i {
            0 => {}
            1 => factors.push("q".into()),
            _ => factors.push(format!("q^{i}")),
        }
        match j {
            0 => {}
            1 => factors.push("t".into()),
            _ => factors.push(format!("t^{j}")),
        }
        write!(f, "{}", factors.join("*"))?;
    }
    Ok(())
}

struct PolyDisplay<'a>(&'a Poly2);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly2(self.0, f)
    }
}

impl fmt::Display for CoefQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_poly2(&self.num, f);
        }
        write!(f, "({})/({})", PolyDisplay(&self.num), PolyDisplay(&self.den))
    }
}

impl fmt::Debug for CoefQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoefQT({self})")
    }
}

impl FromStr for CoefQT {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_coef(s)
    }
}
