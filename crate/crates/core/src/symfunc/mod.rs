//! Homogeneous symmetric functions over `CoefQT`, stored in the Schur basis.
//!
//! Conversions use the Schur basis as a hub: power sums through characters,
//! complete and monomial functions through the Kostka matrix, elementary
//! functions through the involution `omega`.

mod parse;
mod tables;
mod transform;

pub use transform::{AlphabetTransform, TransformKind, TransformOutput};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qfield::CoefQT;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
pub(crate) use tables::table;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(10);

/// Largest degree `multiply` will produce.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: usize) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Elementary,
    Complete,
    Power,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::Monomial, Basis::Elementary, Basis::Complete, Basis::Power, Basis::Schur];

    pub fn prefix(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Complete => 'h',
            Basis::Power => 'p',
            Basis::Schur => 's',
        }
    }

    pub fn from_prefix(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.prefix() == c)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.trim().chars();
        match (it.next().and_then(Basis::from_prefix), it.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown basis `{s}`"),
            }),
        }
    }
}

/// A homogeneous symmetric function. Zero is compatible with every degree.
#[derive(Clone)]
pub struct SymFunc {
    degree: usize,
    terms: BTreeMap<Partition, CoefQT>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant function `c` in degree 0.
    pub fn constant(c: CoefQT) -> Self {
        Self::from_schur_terms(0, [(Partition::empty(), c)])
    }

    pub fn one() -> Self {
        Self::constant(CoefQT::one())
    }

    /// Build from Schur coefficients; zero coefficients are dropped.
    pub fn from_schur_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, CoefQT)>) -> Self {
        let mut out = BTreeMap::new();
        for (p, c) in terms {
            assert_eq!(p.size(), degree, "inhomogeneous term {p}");
            if c.is_zero() {
                continue;
            }
            let e = out.entry(p).or_insert_with(CoefQT::zero);
            *e += c;
        }
        out.retain(|_, c: &mut CoefQT| !c.is_zero());
        SymFunc { degree, terms: out }
    }

    /// `b_mu` for a basis element.
    pub fn from_basis(basis: Basis, mu: &Partition) -> Self {
        Self::from_expansion(basis, mu.size(), [(mu.clone(), CoefQT::one())])
    }

    pub fn schur(mu: &Partition) -> Self {
        Self::from_schur_terms(mu.size(), [(mu.clone(), CoefQT::one())])
    }

    /// `h_n`.
    pub fn complete(n: usize) -> Self {
        Self::schur(&Partition::row(n))
    }

    /// `e_n`.
    pub fn elementary(n: usize) -> Self {
        Self::schur(&Partition::column(n))
    }

    /// `p_n` as a one-part power sum.
    pub fn power(n: usize) -> Self {
        Self::from_basis(Basis::Power, &Partition::row(n))
    }

    /// Build from an expansion in any basis.
    pub fn from_expansion(basis: Basis, degree: usize, terms: impl IntoIterator<Item = (Partition, CoefQT)>) -> Self {
        let t = table(degree);
        let mut dense = vec![CoefQT::zero(); t.len()];
        for (p, c) in terms {
            assert_eq!(p.size(), degree, "inhomogeneous term {p}");
            dense[t.idx(&p)] += c;
        }
        let schur = to_schur(basis, degree, dense);
        Self::from_dense(degree, schur)
    }

    fn from_dense(degree: usize, dense: Vec<CoefQT>) -> Self {
        let t = table(degree);
        let terms = t
            .parts
            .iter()
            .zip(dense)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c))
            .collect();
        SymFunc { degree, terms }
    }

    fn dense(&self) -> Vec<CoefQT> {
        let t = table(self.degree);
        let mut v = vec![CoefQT::zero(); t.len()];
        for (p, c) in &self.terms {
            v[t.idx(p)] = c.clone();
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Schur coefficients with nonzero value, in increasing partition order.
    pub fn terms(&self) -> &BTreeMap<Partition, CoefQT> {
        &self.terms
    }

    /// Schur coefficient of `s_lambda`.
    pub fn coeff(&self, lambda: &Partition) -> CoefQT {
        self.terms.get(lambda).cloned().unwrap_or_else(CoefQT::zero)
    }

    /// Nonzero coefficients in `target`, in reverse lexicographic order.
    pub fn basis_convert(&self, target: Basis) -> Vec<(Partition, CoefQT)> {
        let t = table(self.degree);
        let dense = from_schur(target, self.degree, self.dense());
        t.parts
            .iter()
            .zip(dense)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c))
            .collect()
    }

    /// Coefficient map in `target`.
    pub fn to_basis(&self, target: Basis) -> BTreeMap<Partition, CoefQT> {
        self.basis_convert(target).into_iter().collect()
    }

    pub fn omega(&self) -> SymFunc {
        SymFunc {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
        }
    }

    /// Hall scalar product; zero when degrees differ.
    pub fn hall_inner(&self, other: &SymFunc) -> CoefQT {
        if self.degree != other.degree {
            return CoefQT::zero();
        }
        self.terms
            .iter()
            .filter_map(|(p, c)| other.terms.get(p).map(|d| c * d))
            .sum()
    }

    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        let degree = self.degree + other.degree;
        if degree > max_degree() {
            return Err(Error::DegreeLimit {
                degree,
                limit: max_degree(),
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(SymFunc::zero(degree));
        }
        let a = self.basis_convert(Basis::Power);
        let b = other.basis_convert(Basis::Power);
        let mut prod: BTreeMap<Partition, CoefQT> = BTreeMap::new();
        for (pa, ca) in &a {
            for (pb, cb) in &b {
                *prod.entry(pa.union(pb)).or_insert_with(CoefQT::zero) += ca * cb;
            }
        }
        Ok(SymFunc::from_expansion(Basis::Power, degree, prod))
    }

    pub fn scale(&self, c: &CoefQT) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree);
        }
        SymFunc {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// Apply `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs(&self, f: impl Fn(&CoefQT) -> CoefQT) -> SymFunc {
        Self::from_schur_terms(self.degree, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&CoefQT) -> Result<CoefQT>) -> Result<SymFunc> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| Ok((p.clone(), f(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_schur_terms(self.degree, terms))
    }

    /// Every support partition is a hook `(a, 1^b)`.
    pub fn is_hook_only(&self) -> bool {
        self.terms.keys().all(Partition::is_hook)
    }

    /// `(1-u) sum_{s<n} (-u)^s s_{(n-s,1^s)}`, the hook expansion of `h_n[X(1-u)]`.
    pub fn hn_times_one_minus_u(n: usize, u: &CoefQT) -> SymFunc {
        assert!(n >= 1, "needs n >= 1");
        let lead = CoefQT::one() - u;
        let mut power = CoefQT::one();
        let neg_u = -u;
        let mut terms = Vec::with_capacity(n);
        for s in 0..n {
            terms.push((Partition::hook(n - s, s), &lead * &power));
            power = &power * &neg_u;
        }
        SymFunc::from_schur_terms(n, terms)
    }

    /// Scale or evaluate by an alphabet transform.
    pub fn apply_transform(&self, tr: &AlphabetTransform) -> TransformOutput {
        tr.apply(self)
    }

    /// First Schur coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &SymFunc) -> Option<(Partition, CoefQT, CoefQT)> {
        let keys: std::collections::BTreeSet<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().rev().find_map(|p| {
            let (a, b) = (self.coeff(p), other.coeff(p));
            (a != b).then(|| (p.clone(), a, b))
        })
    }

    /// Render in any basis using the `b[parts]*(coef)` grammar.
    pub fn render_in(&self, basis: Basis) -> String {
        let terms = self.basis_convert(basis);
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .iter()
            .map(|(p, c)| format!("{}{}*({})", basis.prefix(), p, c))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn to_schur(basis: Basis, degree: usize, v: Vec<CoefQT>) -> Vec<CoefQT> {
    let t = table(degree);
    let n = t.len();
    match basis {
        Basis::Schur => v,
        Basis::Power => (0..n)
            .map(|l| dot_int(&v, |r| t.chars[l][r]))
            .collect(),
        Basis::Complete => (0..n).map(|l| dot_int(&v, |m| t.kostka[l][m])).collect(),
        Basis::Elementary => {
            let via_h = to_schur(Basis::Complete, degree, v);
            permute(&via_h, &t.conj)
        }
        Basis::Monomial => {
            // c_mu = sum_{l >= mu} a_l K_{l,mu}, solved in decreasing dominance
            let mut a: Vec<CoefQT> = vec![CoefQT::zero(); n];
            for m in 0..n {
                let mut x = v[m].clone();
                for l in 0..m {
                    let k = t.kostka[l][m];
                    if k != 0 && !a[l].is_zero() {
                        x -= &a[l] * &CoefQT::from_int(k);
                    }
                }
                a[m] = x;
            }
            a
        }
    }
}

fn from_schur(basis: Basis, degree: usize, a: Vec<CoefQT>) -> Vec<CoefQT> {
    let t = table(degree);
    let n = t.len();
    match basis {
        Basis::Schur => a,
        Basis::Power => (0..n)
            .map(|r| {
                let s = dot_int(&a, |l| t.chars[l][r]);
                &s * &CoefQT::from_bigint(t.z[r].clone()).inv().expect("z is nonzero")
            })
            .collect(),
        Basis::Monomial => (0..n).map(|m| dot_int(&a, |l| t.kostka[l][m])).collect(),
        Basis::Complete => {
            // a_l = sum_{m <= l} b_m K_{l,m}, solved from the bottom of dominance
            let mut b: Vec<CoefQT> = vec![CoefQT::zero(); n];
            for l in (0..n).rev() {
                let mut x = a[l].clone();
                for m in l + 1..n {
                    let k = t.kostka[l][m];
                    if k != 0 && !b[m].is_zero() {
                        x -= &b[m] * &CoefQT::from_int(k);
                    }
                }
                b[l] = x;
            }
            b
        }
        Basis::Elementary => from_schur(Basis::Complete, degree, permute(&a, &t.conj)),
    }
}

/// `sum_j v[j] * w(j)` for integer weights.
fn dot_int(v: &[CoefQT], w: impl Fn(usize) -> i64) -> CoefQT {
    let mut acc = CoefQT::zero();
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match w(j) {
            0 => {}
            1 => acc += c,
            -1 => acc -= c,
            k => acc += c * &CoefQT::from_int(k),
        }
    }
    acc
}

/// `out[conj[i]] = v[i]`.
fn permute(v: &[CoefQT], conj: &[usize]) -> Vec<CoefQT> {
    let mut out = vec![CoefQT::zero(); v.len()];
    for (i, c) in v.iter().enumerate() {
        out[conj[i]] = c.clone();
    }
    out
}

/// Kostka number `K_{lambda,mu}`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let t = table(lambda.size());
    Ok(t.kostka[t.idx(lambda)][t.idx(mu)])
}

/// Irreducible character `chi^lambda(rho)`.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    let t = table(lambda.size());
    Ok(t.chars[t.idx(lambda)][t.idx(rho)])
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.terms.is_empty() || self.degree == other.degree)
    }
}

impl Eq for SymFunc {}

fn combine(a: &SymFunc, b: &SymFunc, negate: bool) -> SymFunc {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    assert_eq!(a.degree, b.degree, "adding symmetric functions of different degrees");
    let mut terms = a.terms.clone();
    for (p, c) in &b.terms {
        let e = terms.entry(p.clone()).or_insert_with(CoefQT::zero);
        if negate {
            *e -= c;
        } else {
            *e += c;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    SymFunc { degree: a.degree, terms }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    /// Panics when both sides are nonzero of different degrees.
    fn add(self, o: &SymFunc) -> SymFunc {
        combine(self, o, false)
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, o: &SymFunc) -> SymFunc {
        combine(self, o, true)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, o: SymFunc) -> SymFunc {
        combine(&self, &o, false)
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, o: SymFunc) -> SymFunc {
        combine(&self, &o, true)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&CoefQT> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, c: &CoefQT) -> SymFunc {
        self.scale(c)
    }
}

impl std::ops::AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, o: &SymFunc) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        assert_eq!(self.degree, o.degree, "adding symmetric functions of different degrees");
        for (p, c) in &o.terms {
            let e = self.terms.entry(p.clone()).or_insert_with(CoefQT::zero);
            *e += c;
            if e.is_zero() {
                self.terms.remove(p);
            }
        }
    }
}

impl fmt::Display for SymFunc {
    /// Schur expansion, largest partition first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "s{p}*({c})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

impl FromStr for SymFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_symfunc(s)
    }
}

#[cfg(test)]
mod tests;
