//! The hook family `nu = (m-k, 1^k)`: closed forms, Remmel's coefficients and
//! the shifted Cauchy kernels.

use crate::error::{Error, Result};
use crate::hall_littlewood::hl_p;
use crate::partition::{partitions_of, Partition};
use crate::qfield::{qbinom, qpoch, CoefQT};
use crate::symfunc::{AlphabetTransform, SymFunc};

/// Parameters `(k, m, n)` of the hook `(m-k, 1^k)` acting in degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookParams {
    pub k: usize,
    pub m: usize,
    pub n: usize,
}

impl HookParams {
    /// Requires `k + 1 <= m < n`.
    pub fn new(k: usize, m: usize, n: usize) -> Result<Self> {
        if k + 1 > m || m >= n {
            return Err(Error::InvalidParams(format!("need k+1 <= m < n, got k={k} m={m} n={n}")));
        }
        Ok(HookParams { k, m, n })
    }

    /// The hook partition `(m-k, 1^k)`.
    pub fn nu(&self) -> Partition {
        Partition::hook(self.m - self.k, self.k)
    }
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `q^{m+C(k+1,2)} sum_mu q^{-n(mu)} (q;q)_l [m-1, k] [m+l-(k+2), m] P_mu[X;1/q]`.
pub fn lhs_hook_closed(p: &HookParams) -> SymFunc {
    let (k, m) = (p.k as i64, p.m as i64);
    let front = CoefQT::q_pow(m + binom2(k + 1)) * qbinom(m - 1, k);
    let mut acc = SymFunc::zero(p.n);
    for mu in partitions_of(p.n, None) {
        let l = mu.len() as i64;
        let c = qbinom(m + l - (k + 2), m);
        if c.is_zero() {
            continue;
        }
        let scalar = &front * &(c * qpoch(mu.len()) * CoefQT::q_pow(-(mu.nstat() as i64)));
        acc += &hl_p(&mu, true).scale(&scalar);
    }
    acc
}

/// `sum_{l(mu)=j} q^{n(mu)} P_mu[X;q]`.
fn p_sum_by_length(n: usize, j: usize) -> SymFunc {
    let mut acc = SymFunc::zero(n);
    for mu in partitions_of(n, Some(j)) {
        acc += &hl_p(&mu, false).scale(&CoefQT::q_pow(mu.nstat() as i64));
    }
    acc
}

/// `q^m sum_{j=k+2}^{m+1} q^{C(k+2,2)-(k+2)j+1} [j-2,k] [m-1,j-2] (q;q)_j
/// sum_{l(mu)=j} q^{n(mu)} P_mu[X;q]`.
pub fn rhs_hook(p: &HookParams) -> SymFunc {
    let (k, m) = (p.k as i64, p.m as i64);
    let mut acc = SymFunc::zero(p.n);
    for j in (k + 2)..=(m + 1) {
        let scalar = CoefQT::q_pow(m + binom2(k + 2) - (k + 2) * j + 1)
            * qbinom(j - 2, k)
            * qbinom(m - 1, j - 2)
            * qpoch(j as usize);
        acc += &p_sum_by_length(p.n, j as usize).scale(&scalar);
    }
    acc
}

/// Remmel's coefficient `c_s^{k,m}(q)`; zero outside `m-k-1 <= s <= m+1`.
pub fn remmel_coeff(s: i64, p: &HookParams) -> CoefQT {
    let (k, m) = (p.k as i64, p.m as i64);
    if s > m + 1 || s < m - k - 1 {
        return CoefQT::zero();
    }
    let sign = if (m + 1 - s) % 2 == 0 { 1 } else { -1 };
    CoefQT::monomial(sign, binom2(m + 1 - s) - (k + 1) * m + binom2(k + 1), 0)
        * qbinom(m - 1, k)
        * qbinom(k + 2, m + 1 - s)
        * CoefQT::one_minus_q_pow(s)
}

/// `h_n[X(1-q^i)] / (1-q^i)`, computed through the power-sum basis.
pub fn shifted_cauchy_target(n: usize, i: usize) -> SymFunc {
    let factor = CoefQT::one_minus_q_pow(i as i64);
    SymFunc::complete(n)
        .plethysm_scale(&AlphabetTransform::scale_by(factor.clone()))
        .scale(&factor.inv().expect("i >= 1"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CauchyVariant {
    /// `sum_mu q^{n(mu)} P_mu[X;q] prod_{j=2}^{l} (1 - q^{i-j+1})`
    Direct,
    /// `sum_mu q^{-n(mu)} P_mu[X;1/q] prod_{j=2}^{l} (1 - q^{i+j-1})`
    Inverse,
}

/// Hall-Littlewood expansion of `h_n[X(1-q^i)] / (1-q^i)`.
pub fn shifted_cauchy(n: usize, i: usize, variant: CauchyVariant) -> Result<SymFunc> {
    if i == 0 {
        return Err(Error::InvalidParams("shifted_cauchy needs i >= 1".into()));
    }
    let i = i as i64;
    let mut acc = SymFunc::zero(n);
    for mu in partitions_of(n, None) {
        let l = mu.len() as i64;
        let nstat = mu.nstat() as i64;
        let (prod, front, inverse) = match variant {
            CauchyVariant::Direct => (
                (2..=l).map(|j| CoefQT::one_minus_q_pow(i - j + 1)).product::<CoefQT>(),
                CoefQT::q_pow(nstat),
                false,
            ),
            CauchyVariant::Inverse => (
                (2..=l).map(|j| CoefQT::one_minus_q_pow(i + j - 1)).product::<CoefQT>(),
                CoefQT::q_pow(-nstat),
                true,
            ),
        };
        if prod.is_zero() {
            continue;
        }
        acc += &hl_p(&mu, inverse).scale(&(prod * front));
    }
    Ok(acc)
}

/// `sum_i c_i^{k,m}(q) h_n[X(1-q^i)] / (1-q^i)` over `i >= 1`.
pub fn coefficient_route(p: &HookParams) -> SymFunc {
    let mut acc = SymFunc::zero(p.n);
    let lo = (p.m as i64 - p.k as i64 - 1).max(1);
    for i in lo..=(p.m as i64 + 1) {
        let c = remmel_coeff(i, p);
        if !c.is_zero() {
            acc += &shifted_cauchy_target(p.n, i as usize).scale(&c);
        }
    }
    acc
}

/// The two polynomials of the GHRY identity:
/// `sum_mu q^{-n(mu)} P_mu[X;1/q] [l-1, k-1] (q;q)_l` and
/// `q^{-k(k-1)} (q;q)_k sum_{l(mu)=k} q^{n(mu)} P_mu[X;q]`.
pub fn ghry_sides(n: usize, k: usize) -> Result<(SymFunc, SymFunc)> {
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("ghry_sides needs 1 <= k <= n, got k={k} n={n}")));
    }
    let mut left = SymFunc::zero(n);
    for mu in partitions_of(n, None) {
        let l = mu.len();
        let c = qbinom(l as i64 - 1, k as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let scalar = c * qpoch(l) * CoefQT::q_pow(-(mu.nstat() as i64));
        left += &hl_p(&mu, true).scale(&scalar);
    }
    let k = k as i64;
    let right = p_sum_by_length(n, k as usize).scale(&(CoefQT::q_pow(-k * (k - 1)) * qpoch(k as usize)));
    Ok((left, right))
}
