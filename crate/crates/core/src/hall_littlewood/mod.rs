//! Kostka-Foulkes polynomials, Hall-Littlewood functions and modified
//! Macdonald polynomials.
//!
//! Kostka-Foulkes polynomials come from the charge statistic on semistandard
//! tableaux. `P_mu` is obtained by inverting the unitriangular system
//! `s_l = sum_r K_{l,r}(q) P_r`.

mod charge;
mod fillings;

pub use charge::{charge, reading_word, ssyt};
pub use fillings::{full_limit, modified_macdonald_full, set_full_limit};

use crate::cache::Memo;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::qfield::{qpoch, CoefQT};
use crate::symfunc::{table, AlphabetTransform, Basis, SymFunc};
use num_bigint::BigInt;
use std::sync::Arc;

/// All `K_{l,m}(q)` for one degree, indexed like `partitions_of(n, None)`.
pub struct KostkaFoulkesTable {
    pub degree: usize,
    pub parts: Vec<Partition>,
    entries: Vec<Vec<CoefQT>>,
}

impl KostkaFoulkesTable {
    fn build(n: usize) -> Self {
        let parts = partitions_of(n, None);
        let entries = parts
            .iter()
            .map(|l| {
                parts
                    .iter()
                    .map(|m| {
                        if !l.dominates(m).expect("same size") {
                            return CoefQT::zero();
                        }
                        let mut by_charge: Vec<i64> = Vec::new();
                        for t in ssyt(l, m) {
                            let c = charge(&reading_word(&t));
                            if by_charge.len() <= c {
                                by_charge.resize(c + 1, 0);
                            }
                            by_charge[c] += 1;
                        }
                        by_charge
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| k != 0)
                            .map(|(e, &k)| CoefQT::monomial(k, e as i64, 0))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        KostkaFoulkesTable { degree: n, parts, entries }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> &CoefQT {
        let t = table(self.degree);
        &self.entries[t.idx(lambda)][t.idx(mu)]
    }

    pub(crate) fn at(&self, l: usize, m: usize) -> &CoefQT {
        &self.entries[l][m]
    }
}

static KF: Memo<usize, KostkaFoulkesTable> = Memo::new();
static P_TABLE: Memo<usize, Vec<SymFunc>> = Memo::new();

pub fn kostka_foulkes_table(n: usize) -> Arc<KostkaFoulkesTable> {
    KF.get_or_build(&n, || KostkaFoulkesTable::build(n))
}

/// `K_{lambda,mu}(q)`, the charge generating function over SSYT.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<CoefQT> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(kostka_foulkes_table(lambda.size()).get(lambda, mu).clone())
}

/// `P_mu` for every `mu` of degree `n`, in table order.
fn p_table(n: usize) -> Arc<Vec<SymFunc>> {
    P_TABLE.get_or_build(&n, || {
        let kf = kostka_foulkes_table(n);
        let len = kf.parts.len();
        let mut ps: Vec<Option<SymFunc>> = vec![None; len];
        // K_{l,r} vanishes unless r <= l, and r <= l comes later in the order
        for l in (0..len).rev() {
            let mut f = SymFunc::schur(&kf.parts[l]);
            for r in l + 1..len {
                let k = kf.at(l, r);
                if !k.is_zero() {
                    f = &f - &ps[r].as_ref().expect("built").scale(k);
                }
            }
            ps[l] = Some(f);
        }
        ps.into_iter().map(|f| f.expect("built")).collect()
    })
}

/// Hall-Littlewood `P_mu[X;q]`, or `P_mu[X;1/q]` when `inverse_q` is set.
pub fn hl_p(mu: &Partition, inverse_q: bool) -> SymFunc {
    let n = mu.size();
    let f = p_table(n)[table(n).idx(mu)].clone();
    if inverse_q {
        f.map_coeffs(CoefQT::invert_q)
    } else {
        f
    }
}

/// `b_mu(q) = prod_i (q;q)_{m_i(mu)}`.
pub fn b_mu(mu: &Partition) -> CoefQT {
    mu.multiplicities().values().map(|&m| qpoch(m)).product()
}

/// Hall-Littlewood `Q_mu = b_mu(q) P_mu`.
pub fn hl_q(mu: &Partition) -> SymFunc {
    hl_p(mu, false).scale(&b_mu(mu))
}

/// Transformed Hall-Littlewood `H_mu[X;q] = Q_mu[X/(1-q);q]`.
pub fn transformed_h(mu: &Partition) -> SymFunc {
    hl_q(mu).plethysm_scale(&AlphabetTransform::over_one_minus_q())
}

/// `q^{n(mu)} K_{lambda,mu}(1/q)`.
pub fn cocharge_kostka(lambda: &Partition, mu: &Partition) -> Result<CoefQT> {
    Ok(kostka_foulkes(lambda, mu)?.invert_q() * CoefQT::q_pow(mu.nstat() as i64))
}

/// Modified Macdonald polynomial at `t = 0`: `sum_l K~_{l,mu}(q) s_l`.
pub fn modified_macdonald_t0(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let terms = partitions_of(n, None)
        .into_iter()
        .map(|l| {
            let c = cocharge_kostka(&l, mu).expect("same size");
            (l, c)
        })
        .collect::<Vec<_>>();
    SymFunc::from_schur_terms(n, terms)
}

/// The `t = 0` values of the scalars in the `e_n` expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T0Specializations {
    /// `B_mu(0,q) = (1 - q^l)/(1 - q)`.
    pub b: CoefQT,
    /// `Pi'_mu(0,q) = (q;q)_{l-1}`.
    pub pi_prime: CoefQT,
    /// `w_mu(0,q)` from the closed form.
    pub w: CoefQT,
    /// `w_mu(0,q)` from the cell product.
    pub w_cells: CoefQT,
}

pub fn t0_specializations(mu: &Partition) -> Result<T0Specializations> {
    if mu.is_empty() {
        return Err(Error::InvalidPartition("needs a nonempty partition".into()));
    }
    let n = mu.size() as i64;
    let l = mu.len();
    let b = CoefQT::one_minus_q_pow(l as i64)
        .checked_div(&CoefQT::one_minus_q_pow(1))
        .expect("1-q is nonzero");
    let pi_prime = qpoch(l - 1);
    let mults = mu.multiplicities();
    let tri: i64 = mults.values().map(|&m| (m * (m + 1) / 2) as i64).sum();
    let sign = if (n - l as i64) % 2 == 0 { 1 } else { -1 };
    let w = CoefQT::monomial(sign, 2 * mu.nstat() as i64 + n - tri, 0) * b_mu(mu);
    let w_cells = mu
        .cell_stats()
        .iter()
        .map(|c| {
            let leg = c.leg as i64;
            let base = CoefQT::q_pow(leg);
            if c.arm == 0 {
                base * CoefQT::one_minus_q_pow(leg + 1)
            } else {
                base * CoefQT::monomial(-1, leg + 1, 0)
            }
        })
        .product();
    Ok(T0Specializations { b, pi_prime, w, w_cells })
}

/// Both sides of the Hall-Littlewood Cauchy identity
/// `sum_mu P_mu[X] Q_mu[Y] = h_n[XY(1-q)]` as matrices in the tensor
/// monomial basis, indexed by `partitions_of(n, None)`.
pub fn cauchy_kernel_sides(n: usize) -> (Vec<Vec<CoefQT>>, Vec<Vec<CoefQT>>) {
    let parts = partitions_of(n, None);
    let len = parts.len();
    let to_m = |f: &SymFunc| -> Vec<CoefQT> {
        let m = f.to_basis(Basis::Monomial);
        parts.iter().map(|p| m.get(p).cloned().unwrap_or_else(CoefQT::zero)).collect()
    };
    let mut lhs = vec![vec![CoefQT::zero(); len]; len];
    for mu in &parts {
        let pm = to_m(&hl_p(mu, false));
        let qm = to_m(&hl_q(mu));
        for a in 0..len {
            for b in 0..len {
                lhs[a][b] += &pm[a] * &qm[b];
            }
        }
    }
    let t = table(n);
    let mut rhs = vec![vec![CoefQT::zero(); len]; len];
    for (r, rho) in parts.iter().enumerate() {
        let pm = to_m(&SymFunc::from_basis(Basis::Power, rho));
        let weight: CoefQT = rho.parts().iter().map(|&k| CoefQT::one_minus_q_pow(k as i64)).product::<CoefQT>()
            * CoefQT::from_bigint(t.z[r].clone()).inv().expect("z is nonzero");
        for a in 0..len {
            for b in 0..len {
                rhs[a][b] += &(&pm[a] * &pm[b]) * &weight;
            }
        }
    }
    (lhs, rhs)
}

/// `sum_l s_l[X(1-q)] K_{l,mu}(q)`, which equals `Q_mu`.
pub fn q_via_schur_plethysm(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let tr = AlphabetTransform::times_one_minus_q();
    let mut acc = SymFunc::zero(n);
    for l in partitions_of(n, None) {
        let k = kostka_foulkes(&l, mu).expect("same size");
        if !k.is_zero() {
            acc += &SymFunc::schur(&l).plethysm_scale(&tr).scale(&k);
        }
    }
    acc
}

/// Right side of `P_mu(X;1/q) = (-1)^l q^{sum C(m_i+1,2)} / prod (q;q)_{m_i} * Q_mu(X;1/q)`.
pub fn p_inverse_via_q(mu: &Partition) -> SymFunc {
    let tri: i64 = mu.multiplicities().values().map(|&m| (m * (m + 1) / 2) as i64).sum();
    let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
    let factor = CoefQT::monomial(sign, tri, 0) * b_mu(mu).inv().expect("nonzero");
    hl_q(mu).map_coeffs(CoefQT::invert_q).scale(&factor)
}

/// `H_rho` at the alphabet `1 - q^{j-1}` and the product it should equal,
/// `q^{n(rho)} prod_{s=1}^{l(rho)} (1 - q^{j-s})`.
pub fn reciprocity_sides(rho: &Partition, j: usize) -> (CoefQT, CoefQT) {
    let alphabet = CoefQT::one_minus_q_pow(j as i64 - 1);
    let lhs = transformed_h(rho).evaluate(&AlphabetTransform::evaluate_at(alphabet));
    let rhs = (1..=rho.len())
        .map(|s| CoefQT::one_minus_q_pow(j as i64 - s as i64))
        .product::<CoefQT>()
        * CoefQT::q_pow(rho.nstat() as i64);
    (lhs, rhs)
}

/// Ordinary Kostka number recovered as `K_{l,m}(1)`.
pub fn kostka_at_one(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    let k = kostka_foulkes(lambda, mu)?;
    Ok(k.q_coeffs().expect("polynomial").iter().sum())
}

#[cfg(test)]
mod tests;
