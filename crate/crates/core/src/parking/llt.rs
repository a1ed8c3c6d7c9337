//! Per-path LLT sums and the combinatorial side of the Delta conjecture.

use super::{enumerate_paths, enumerate_pfs_on, DyckPath};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qfield::CoefQT;
use crate::symfunc::{max_degree, Basis, SymFunc};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// How the composition `ides(w(PF))` turns into a symmetric function.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum QuasiMode {
    /// Gessel's fundamental quasisymmetric function `F_alpha`.
    #[default]
    Fundamental,
    /// Jacobi-Trudi Schur function of a composition, straightened to `+-s_lambda`.
    CompositionSchur,
}

/// `prod (1 + z t^{-a_i})` over the double rises of a path, stored as
/// `(z power, t power) -> coefficient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaglundFactor {
    terms: BTreeMap<(usize, i64), u64>,
}

impl HaglundFactor {
    pub fn z_degree(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Laurent polynomial in `t` multiplying `z^s`, as `(t power, coefficient)`.
    pub fn z_coeff(&self, s: usize) -> Vec<(i64, u64)> {
        self.terms.range((s, i64::MIN)..=(s, i64::MAX)).map(|(k, c)| (k.1, *c)).collect()
    }

    pub fn terms(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.terms
    }
}

impl fmt::Display for HaglundFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((z, t), c)| format!("{c}*z^{z}*t^{t}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn haglund_factor(path: &DyckPath) -> HaglundFactor {
    let mut terms = BTreeMap::from([((0, 0), 1u64)]);
    for i in path.double_rises() {
        let a = path.area_seq()[i] as i64;
        let mut next = terms.clone();
        for ((z, t), c) in terms {
            *next.entry((z + 1, t - a)).or_insert(0) += c;
        }
        terms = next;
    }
    HaglundFactor { terms }
}

/// `(q power, t power) -> count`, grouped by composition.
type Weights = HashMap<Vec<usize>, BTreeMap<(usize, usize), i64>>;

fn merge(mut a: Weights, b: Weights) -> Weights {
    for (comp, w) in b {
        let slot = a.entry(comp).or_default();
        for (k, c) in w {
            *slot.entry(k).or_insert(0) += c;
        }
    }
    a
}

fn to_coef(w: &BTreeMap<(usize, usize), i64>) -> CoefQT {
    w.iter()
        .filter(|(_, c)| **c != 0)
        .map(|(&(qe, te), &c)| CoefQT::monomial(c, qe as i64, te as i64))
        .sum()
}

/// Partial sums of a composition as a bitmask over `1..n`.
fn descent_mask(comp: &[usize]) -> u64 {
    let mut mask = 0;
    let mut s = 0;
    for &p in &comp[..comp.len().saturating_sub(1)] {
        s += p;
        mask |= 1 << s;
    }
    mask
}

/// Every composition of `n`, as its partial-sum mask together with its parts.
fn compositions(n: usize) -> Vec<(u64, Vec<usize>)> {
    (0..1u64 << (n - 1))
        .map(|bits| {
            let mask = bits << 1;
            let mut parts = Vec::new();
            let mut last = 0;
            for i in 1..n {
                if mask & (1 << i) != 0 {
                    parts.push(i - last);
                    last = i;
                }
            }
            parts.push(n - last);
            (mask, parts)
        })
        .collect()
}

/// `sum_alpha c_alpha F_alpha` in the Schur basis, after checking that the
/// coefficient of `x^beta` depends only on the sorted `beta`.
fn fundamental_to_schur(n: usize, weights: &Weights) -> Result<SymFunc> {
    let coefs: Vec<(u64, CoefQT)> = weights.iter().map(|(a, w)| (descent_mask(a), to_coef(w))).collect();
    let mut by_shape: BTreeMap<Partition, (Vec<usize>, CoefQT)> = BTreeMap::new();
    for (mask, beta) in compositions(n) {
        // F_alpha contains x^beta iff Des(alpha) is a subset of the partial sums of beta
        let c: CoefQT = coefs.iter().filter(|(a, _)| a & !mask == 0).map(|(_, c)| c.clone()).sum();
        let shape = Partition::from_unsorted(beta.clone());
        match by_shape.get(&shape) {
            None => {
                by_shape.insert(shape, (beta, c));
            }
            Some((first, seen)) if *seen != c => {
                return Err(Error::NonSymmetric(format!(
                    "coefficient of x^{beta:?} is {c} but x^{first:?} has {seen}"
                )));
            }
            Some(_) => {}
        }
    }
    Ok(SymFunc::from_expansion(
        Basis::Monomial,
        n,
        by_shape.into_iter().map(|(l, (_, c))| (l, c)),
    ))
}

/// Straighten `s_alpha` for a composition: `s_(..a,b..) = -s_(..b-1,a+1..)`.
fn straighten(mut comp: Vec<usize>) -> Option<(i64, Partition)> {
    let mut sign = 1;
    while let Some(i) = (0..comp.len().saturating_sub(1)).find(|&i| comp[i] < comp[i + 1]) {
        let (a, b) = (comp[i], comp[i + 1]);
        if b == a + 1 {
            return None;
        }
        comp[i] = b - 1;
        comp[i + 1] = a + 1;
        sign = -sign;
    }
    Some((sign, Partition::from_unsorted(comp)))
}

fn composition_schur_to_schur(n: usize, weights: &Weights) -> SymFunc {
    let mut acc: BTreeMap<Partition, CoefQT> = BTreeMap::new();
    for (comp, w) in weights {
        if let Some((sign, lambda)) = straighten(comp.clone()) {
            *acc.entry(lambda).or_insert_with(CoefQT::zero) += to_coef(w) * CoefQT::from_int(sign);
        }
    }
    SymFunc::from_schur_terms(n, acc)
}

fn to_symfunc(n: usize, weights: &Weights, mode: QuasiMode) -> Result<SymFunc> {
    match mode {
        QuasiMode::Fundamental => fundamental_to_schur(n, weights),
        QuasiMode::CompositionSchur => Ok(composition_schur_to_schur(n, weights)),
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > max_degree() {
        return Err(Error::DegreeLimit {
            degree: n,
            limit: max_degree(),
        });
    }
    Ok(())
}

/// `sum_{PF on D} t^{area} q^{dinv} F_{ides}` in the Schur basis.
pub fn llt_sum(path: &DyckPath) -> Result<SymFunc> {
    llt_sum_with_mode(path, QuasiMode::default())
}

pub fn llt_sum_with_mode(path: &DyckPath, mode: QuasiMode) -> Result<SymFunc> {
    check_degree(path.size())?;
    let mut weights = Weights::new();
    for pf in enumerate_pfs_on(path) {
        *weights.entry(pf.ides()).or_default().entry((pf.dinv(), pf.area())).or_insert(0) += 1;
    }
    to_symfunc(path.size(), &weights, mode)
}

/// `sum_D LLT_D H_D(z;t) |_{z^{n-k}}`, optionally at `t = 0`.
pub fn delta_side_combinatorial(n: usize, k: usize, t_zero: bool) -> Result<SymFunc> {
    delta_side_with_mode(n, k, t_zero, QuasiMode::default())
}

pub fn delta_side_with_mode(n: usize, k: usize, t_zero: bool, mode: QuasiMode) -> Result<SymFunc> {
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    check_degree(n)?;
    let weights = enumerate_paths(n)
        .par_iter()
        .map(|path| path_weights(path, n - k, t_zero))
        .try_reduce(Weights::new, |a, b| Ok(merge(a, b)))?;
    to_symfunc(n, &weights, mode)
}

fn path_weights(path: &DyckPath, zpow: usize, t_zero: bool) -> Result<Weights> {
    let mut weights = Weights::new();
    let factor = haglund_factor(path).z_coeff(zpow);
    if factor.is_empty() {
        return Ok(weights);
    }
    let area = path.area() as i64;
    for pf in enumerate_pfs_on(path) {
        let (dinv, ides) = (pf.dinv(), pf.ides());
        for &(te, c) in &factor {
            let e = area + te;
            if e < 0 {
                return Err(Error::NegativeTPower);
            }
            if t_zero && e > 0 {
                continue;
            }
            *weights.entry(ides.clone()).or_default().entry((dinv, e as usize)).or_insert(0) += c as i64;
        }
    }
    Ok(weights)
}
