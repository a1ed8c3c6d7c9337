//! Delta operators on `e_n` and the hook and general expansion families built
//! from Hall-Littlewood functions.
//!
//! Both operators use the modified Macdonald expansion
//! `e_n = sum_mu (1-q)(1-t) B_mu Pi'_mu H~_mu / w_mu`, scaling each term by
//! an eigenvalue `F[B_mu - 1]` (primed) or `F[B_mu]` (plain).

mod general;
mod hook;
mod span;

pub use general::{lhs_expansion_thm41, rhs_nu, schur_principal_eval, PrincipalEval};
pub use hook::{
    ghry_sides, lhs_hook_closed, remmel_coeff, coefficient_route, rhs_hook, shifted_cauchy, shifted_cauchy_target,
    CauchyVariant, HookParams,
};
pub use span::{span_dimension_report, SpanReport};

use crate::error::{Error, Result};
use crate::hall_littlewood::{full_limit, modified_macdonald_full, modified_macdonald_t0, t0_specializations};
use crate::partition::{partitions_of, Partition};
use crate::qfield::poly::{GcdRing, Poly2};
use crate::qfield::CoefQT;
use crate::symfunc::{AlphabetTransform, SymFunc};
use std::collections::BTreeMap;

/// `q + q^2 + ... + q^{l-1}`.
fn q_alphabet(l: usize) -> CoefQT {
    (1..l).map(|i| CoefQT::q_pow(i as i64)).sum()
}

/// `Delta'_F e_n` at `t = 0`.
pub fn delta_prime_t0(f: &SymFunc, n: usize) -> Result<SymFunc> {
    if n == 0 {
        return Err(Error::InvalidParams("delta_prime_t0 needs n >= 1".into()));
    }
    let one_minus_q = CoefQT::one_minus_q_pow(1);
    let mut acc = SymFunc::zero(n);
    for mu in partitions_of(n, None) {
        let eig = f.evaluate(&AlphabetTransform::evaluate_at(q_alphabet(mu.len())));
        if eig.is_zero() {
            continue;
        }
        let sp = t0_specializations(&mu)?;
        let scalar = &(&(&one_minus_q * &eig) * &(&sp.pi_prime * &sp.b)) / &sp.w;
        acc += &modified_macdonald_t0(&mu).scale(&scalar);
    }
    Ok(acc)
}

/// Cell sums and products entering the two-parameter expansion.
struct CellData {
    /// `B_mu = sum q^{a'} t^{l'}` over cells.
    b: CoefQT,
    /// `Pi'_mu = prod (1 - q^{a'} t^{l'})` over cells other than the corner.
    pi_prime: CoefQT,
    /// factors of `w_mu`, each `q^x - t^y` or `t^y - q^x`
    w_factors: Vec<Poly2>,
}

fn cell_data(mu: &Partition) -> CellData {
    let mut b = CoefQT::zero();
    let mut pi_prime = CoefQT::one();
    let mut w_factors = Vec::new();
    for c in mu.cell_stats() {
        let (coarm, coleg) = (c.col as i64, c.row as i64);
        let mono = CoefQT::monomial(1, coarm, coleg);
        if coarm != 0 || coleg != 0 {
            pi_prime *= &(CoefQT::one() - &mono);
        }
        b += mono;
        let (a, l) = (c.arm as i64, c.leg as i64);
        w_factors.push((CoefQT::q_pow(a) - CoefQT::t_pow(l + 1)).numerator().clone());
        w_factors.push((CoefQT::t_pow(l) - CoefQT::q_pow(a + 1)).numerator().clone());
    }
    CellData { b, pi_prime, w_factors }
}

/// Multiset of sign-normalized factors, plus whether an odd number of signs
/// were flipped.
fn factor_counts(factors: &[Poly2]) -> (Vec<(Poly2, usize)>, bool) {
    let mut out: Vec<(Poly2, usize)> = Vec::new();
    let mut negative = false;
    for f in factors {
        let g = f.unit_normal();
        if g != *f {
            negative = !negative;
        }
        match out.iter_mut().find(|(p, _)| *p == g) {
            Some(e) => e.1 += 1,
            None => out.push((g, 1)),
        }
    }
    (out, negative)
}

fn multiplicity(counts: &[(Poly2, usize)], p: &Poly2) -> usize {
    counts.iter().find(|(x, _)| x == p).map_or(0, |e| e.1)
}

/// `Delta'_F e_n` (`prime`) or `Delta_F e_n` over the full field.
///
/// The sum is taken over a common multiple of the `w_mu`, assembled from their
/// binomial factors, so only one division per Schur coefficient is needed.
pub fn delta_full(f: &SymFunc, n: usize, prime: bool) -> Result<SymFunc> {
    if n == 0 {
        return Err(Error::InvalidParams("delta_full needs n >= 1".into()));
    }
    if n > full_limit() {
        return Err(Error::DegreeLimit {
            degree: n,
            limit: full_limit(),
        });
    }
    let parts = partitions_of(n, None);
    let data: Vec<CellData> = parts.iter().map(cell_data).collect();
    let counts: Vec<_> = data.iter().map(|d| factor_counts(&d.w_factors)).collect();
    let mut lcm: Vec<(Poly2, usize)> = Vec::new();
    for (c, _) in &counts {
        for (p, k) in c {
            match lcm.iter_mut().find(|(x, _)| x == p) {
                Some(e) => e.1 = e.1.max(*k),
                None => lcm.push((p.clone(), *k)),
            }
        }
    }
    let mut common = Poly2::one();
    for (p, k) in &lcm {
        for _ in 0..*k {
            common = common.mul(p);
        }
    }
    let m = CoefQT::one_minus_q_pow(1) * (CoefQT::one() - CoefQT::t());
    let mut sums: BTreeMap<Partition, CoefQT> = BTreeMap::new();
    for ((mu, d), (cnt, negative)) in parts.iter().zip(&data).zip(&counts) {
        let alphabet = if prime { &d.b - &CoefQT::one() } else { d.b.clone() };
        let eig = f.evaluate(&AlphabetTransform::evaluate_at(alphabet));
        if eig.is_zero() {
            continue;
        }
        let mut cofactor = Poly2::one();
        for (p, k) in &lcm {
            for _ in multiplicity(cnt, p)..*k {
                cofactor = cofactor.mul(p);
            }
        }
        if *negative {
            cofactor = cofactor.neg();
        }
        let scalar = &(&(&eig * &m) * &(&d.b * &d.pi_prime)) * &CoefQT::from_poly(cofactor);
        for (lambda, c) in modified_macdonald_full(mu)?.terms() {
            *sums.entry(lambda.clone()).or_insert_with(CoefQT::zero) += c * &scalar;
        }
    }
    let terms = sums
        .into_iter()
        .map(|(l, s)| Ok((l, s.div_poly(&common)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFunc::from_schur_terms(n, terms))
}

/// `omega(Delta'_{s_nu} e_n |_{t=0})[X(1-q)]`.
pub fn lhs_nu(nu: &Partition, n: usize) -> Result<SymFunc> {
    if nu.is_empty() {
        return Err(Error::InvalidPartition("lhs_nu needs |nu| >= 1".into()));
    }
    let d = delta_prime_t0(&SymFunc::schur(nu), n)?;
    Ok(d.omega().plethysm_scale(&AlphabetTransform::times_one_minus_q()))
}

#[cfg(test)]
mod tests;
