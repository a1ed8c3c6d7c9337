//! Expansions for a general partition `nu`.

use crate::error::{Error, Result};
use crate::hall_littlewood::{b_mu, hl_p, kostka_foulkes};
use crate::partition::{partitions_of, Partition};
use crate::qfield::{qpoch, CoefQT};
use crate::symfunc::{AlphabetTransform, SymFunc};

/// `q^{|nu|} sum_mu s_nu[(1-q^{l-1})/(1-q)] q^{-n(mu)} (q;q)_l P_mu[X;1/q]`.
pub fn lhs_expansion_thm41(nu: &Partition, n: usize) -> Result<SymFunc> {
    if nu.is_empty() {
        return Err(Error::InvalidPartition("needs |nu| >= 1".into()));
    }
    let s_nu = SymFunc::schur(nu);
    let mut acc = SymFunc::zero(n);
    for mu in partitions_of(n, None) {
        let l = mu.len();
        let eval = s_nu.evaluate(&AlphabetTransform::evaluate_at(principal_alphabet(l - 1)));
        if eval.is_zero() {
            continue;
        }
        let scalar = eval * qpoch(l) * CoefQT::q_pow(nu.size() as i64 - mu.nstat() as i64);
        acc += &hl_p(&mu, true).scale(&scalar);
    }
    Ok(acc)
}

/// `(1 - q^j)/(1 - q) = 1 + q + ... + q^{j-1}`.
fn principal_alphabet(j: usize) -> CoefQT {
    CoefQT::one_minus_q_pow(j as i64)
        .checked_div(&CoefQT::one_minus_q_pow(1))
        .expect("1-q is nonzero")
}

/// `K_{nu,rho}(q) q^{n(rho)} / prod_i (q;q)_{m_i(rho)}`.
fn charge_weight(nu: &Partition, rho: &Partition) -> CoefQT {
    let k = kostka_foulkes(nu, rho).expect("same size");
    if k.is_zero() {
        return k;
    }
    k * CoefQT::q_pow(rho.nstat() as i64) * b_mu(rho).inv().expect("nonzero")
}

/// Two evaluations of `s_nu` at `1, q, ..., q^{j-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalEval {
    /// Evaluation through power sums.
    pub direct: CoefQT,
    /// `sum_k sum_{l(rho)=k} K_{nu,rho}(q) q^{n(rho)} / prod (q;q)_{m_i}
    /// * (q;q)_{j-1} / (q;q)_{j-1-k}`.
    pub via_charge: CoefQT,
}

pub fn schur_principal_eval(nu: &Partition, j: usize) -> Result<PrincipalEval> {
    if j == 0 {
        return Err(Error::InvalidParams("schur_principal_eval needs j >= 1".into()));
    }
    let direct = SymFunc::schur(nu).evaluate(&AlphabetTransform::evaluate_at(principal_alphabet(j - 1)));
    let mut via_charge = CoefQT::zero();
    let size = nu.size();
    for k in nu.len()..=size {
        // (q;q)_{j-1}/(q;q)_{j-1-k} as a product; vanishes once k > j-1
        let ratio: CoefQT = (1..=k).map(|s| CoefQT::one_minus_q_pow(j as i64 - s as i64)).product();
        if ratio.is_zero() {
            continue;
        }
        for rho in partitions_of(size, Some(k)) {
            via_charge += charge_weight(nu, &rho) * &ratio;
        }
    }
    Ok(PrincipalEval { direct, via_charge })
}

/// `q^{|nu|} sum_{k=l(nu)}^{|nu|} (q;q)_k sum_{l(rho)=k} K_{nu,rho}(q) q^{n(rho)}
/// / prod (q;q)_{m_i(rho)} * q^{-k(k+1)} (q;q)_{k+1} sum_{l(mu)=k+1} q^{n(mu)} P_mu[X;q]`.
pub fn rhs_nu(nu: &Partition, n: usize) -> Result<SymFunc> {
    if nu.is_empty() || n == 0 {
        return Err(Error::InvalidParams("rhs_nu needs |nu| >= 1 and n >= 1".into()));
    }
    let size = nu.size();
    let mut acc = SymFunc::zero(n);
    for k in nu.len()..=size {
        let inner: CoefQT = partitions_of(size, Some(k)).iter().map(|rho| charge_weight(nu, rho)).sum();
        if inner.is_zero() {
            continue;
        }
        let mut p_sum = SymFunc::zero(n);
        for mu in partitions_of(n, Some(k + 1)) {
            p_sum += &hl_p(&mu, false).scale(&CoefQT::q_pow(mu.nstat() as i64));
        }
        if p_sum.is_zero() {
            continue;
        }
        let k64 = k as i64;
        let scalar = inner * qpoch(k) * qpoch(k + 1) * CoefQT::q_pow(size as i64 - k64 * (k64 + 1));
        acc += &p_sum.scale(&scalar);
    }
    Ok(acc)
}
