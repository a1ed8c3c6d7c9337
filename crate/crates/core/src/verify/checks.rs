//! Drivers for each registered identity.

use super::{int_param, partition_param, usize_param, IdentityReport, Params, Status, Witness};
use crate::delta_ops::{
    delta_full, delta_prime_t0, ghry_sides, lhs_expansion_thm41, lhs_hook_closed, lhs_nu, remmel_coeff,
    coefficient_route, rhs_hook, rhs_nu, schur_principal_eval, shifted_cauchy, shifted_cauchy_target,
    span_dimension_report, CauchyVariant, HookParams,
};
use crate::error::Result;
use crate::hall_littlewood::t0_specializations;
use crate::parking::delta_side_combinatorial;
use crate::partition::Partition;
use crate::qfield::{qbinom, qpoch, CoefQT};
use crate::symfunc::{AlphabetTransform, SymFunc};

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `sum_{i=0}^{top} (-1)^i q^{C(i,2)} [k+2, i] [base - i, l]`.
fn alternating_sum(k: i64, base: i64, l: i64, top: i64) -> CoefQT {
    (0..=top)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            CoefQT::monomial(sign, binom2(i), 0) * qbinom(k + 2, i) * qbinom(base - i, l)
        })
        .sum()
}

/// Requires `k + 2 <= l <= m + 1`; skipped otherwise.
pub fn check_prop31(m: i64, k: i64, l: i64) -> IdentityReport {
    if k < 0 || !(k + 2 <= l && l <= m + 1) {
        return IdentityReport::skipped();
    }
    let lhs = alternating_sum(k, m + 1, l, (k + 2).min(m + 1 - l));
    let rhs = CoefQT::q_pow((k + 2) * (m + 1 - l)) * qbinom(m - k - 1, l - 2 - k);
    IdentityReport::compare_scalars(&lhs, &rhs)
}

/// Any `m, k, l >= 0`.
pub fn check_cor32(m: i64, k: i64, l: i64) -> IdentityReport {
    if m < 0 || k < 0 || l < 0 {
        return IdentityReport::skipped();
    }
    let lhs = alternating_sum(k, m + l, l, (k + 2).min(m));
    let rhs = CoefQT::q_pow((k + 2) * m) * qbinom(m + l - (k + 2), l - (k + 2));
    IdentityReport::compare_scalars(&lhs, &rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop33Part {
    /// products `prod_{j=2}^{l} (1 - q^{i-j+1})`
    A,
    /// products `prod_{j=2}^{l} (1 - q^{i+j-1})`
    B,
}

pub(super) fn prop33_sides(part: Prop33Part, hp: &HookParams, l: i64) -> (CoefQT, CoefQT) {
    let (k, m) = (hp.k as i64, hp.m as i64);
    let lhs = (1..=hp.n as i64)
        .map(|i| {
            let c = remmel_coeff(i, hp);
            if c.is_zero() {
                return c;
            }
            let prod: CoefQT = (2..=l)
                .map(|j| match part {
                    Prop33Part::A => CoefQT::one_minus_q_pow(i - j + 1),
                    Prop33Part::B => CoefQT::one_minus_q_pow(i + j - 1),
                })
                .product();
            c * prod
        })
        .sum();
    let poch = qpoch(l.max(0) as usize);
    let rhs = match part {
        Prop33Part::A => {
            CoefQT::q_pow(m + binom2(k + 2) - (k + 2) * l + 1) * qbinom(l - 2, k) * qbinom(m - 1, l - 2) * poch
        }
        Prop33Part::B => {
            CoefQT::q_pow(m + binom2(k + 1)) * qbinom(m - 1, k) * qbinom(m + l - (k + 2), m) * poch
        }
    };
    (lhs, rhs)
}

/// Requires `k + 2 <= l <= m + 1 <= n`; skipped otherwise.
pub fn check_prop33(part: Prop33Part, k: i64, m: i64, n: i64, l: i64) -> IdentityReport {
    if k < 0 || !(k + 2 <= l && l <= m + 1 && m + 1 <= n) {
        return IdentityReport::skipped();
    }
    let hp = HookParams::new(k as usize, m as usize, n as usize).expect("implied by the range");
    let (lhs, rhs) = prop33_sides(part, &hp, l);
    IdentityReport::compare_scalars(&lhs, &rhs)
}

fn hook_params(p: &Params) -> Result<Option<HookParams>> {
    let (k, m, n) = (usize_param(p, "k")?, usize_param(p, "m")?, usize_param(p, "n")?);
    Ok(HookParams::new(k, m, n).ok())
}

/// Places the scalar equation with index `j` on the Schur function of the hook
/// of length `j` in degree `n`, so a witness names `j` through its shape.
fn scalar_system(n: usize, sides: impl Fn(usize) -> (CoefQT, CoefQT)) -> IdentityReport {
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for j in 1..=n {
        let (a, b) = sides(j);
        let hook = Partition::hook(n + 1 - j, j - 1);
        lhs.push((hook.clone(), a));
        rhs.push((hook, b));
    }
    IdentityReport::compare(&SymFunc::from_schur_terms(n, lhs), &SymFunc::from_schur_terms(n, rhs))
}

pub(super) fn run_prop31(p: &Params) -> Result<IdentityReport> {
    Ok(check_prop31(int_param(p, "m")?, int_param(p, "k")?, int_param(p, "l")?))
}

pub(super) fn run_cor32(p: &Params) -> Result<IdentityReport> {
    Ok(check_cor32(int_param(p, "m")?, int_param(p, "k")?, int_param(p, "l")?))
}

fn run_prop33(part: Prop33Part, p: &Params) -> Result<IdentityReport> {
    Ok(check_prop33(
        part,
        int_param(p, "k")?,
        int_param(p, "m")?,
        int_param(p, "n")?,
        int_param(p, "l")?,
    ))
}

pub(super) fn run_prop33a(p: &Params) -> Result<IdentityReport> {
    run_prop33(Prop33Part::A, p)
}

pub(super) fn run_prop33b(p: &Params) -> Result<IdentityReport> {
    run_prop33(Prop33Part::B, p)
}

/// Every `1 <= j <= n` of the part-(a) equations, as required by comparing
/// coefficients of `P_mu[X;q]` with `l(mu) = j`.
pub(super) fn run_eq13_system(p: &Params) -> Result<IdentityReport> {
    let Some(hp) = hook_params(p)? else {
        return Ok(IdentityReport::skipped());
    };
    Ok(scalar_system(hp.n, |j| prop33_sides(Prop33Part::A, &hp, j as i64)))
}

fn eq17(p: &Params, in_hypothesis: bool) -> Result<IdentityReport> {
    let Some(hp) = hook_params(p)? else {
        return Ok(IdentityReport::skipped());
    };
    let l = int_param(p, "l")?;
    let inside = hp.k as i64 + 2 <= l && l <= hp.m as i64 + 1;
    if l < 1 || l > hp.n as i64 || inside != in_hypothesis {
        return Ok(IdentityReport::skipped());
    }
    let (lhs, rhs) = prop33_sides(Prop33Part::B, &hp, l);
    Ok(IdentityReport::compare_scalars(&lhs, &rhs))
}

/// Part (b) equations with `k + 2 <= l <= m + 1`.
pub(super) fn run_eq17(p: &Params) -> Result<IdentityReport> {
    eq17(p, true)
}

/// Part (b) equations with `1 <= l <= n` outside `k + 2 <= l <= m + 1`.
pub(super) fn run_eq17_extended(p: &Params) -> Result<IdentityReport> {
    eq17(p, false)
}

/// Closed form against the `P_mu[X;q]` expansion, then against the shifted
/// Cauchy route.
pub(super) fn run_eq10(p: &Params) -> Result<IdentityReport> {
    let Some(hp) = hook_params(p)? else {
        return Ok(IdentityReport::skipped());
    };
    let closed = lhs_hook_closed(&hp);
    let report = IdentityReport::compare(&closed, &rhs_hook(&hp));
    if report.status != Status::Equal {
        return Ok(report);
    }
    Ok(IdentityReport::compare(&closed, &coefficient_route(&hp)))
}

fn cauchy(p: &Params, variant: CauchyVariant) -> Result<IdentityReport> {
    let (n, i) = (usize_param(p, "n")?, usize_param(p, "i")?);
    if n == 0 || i == 0 || i > n {
        return Ok(IdentityReport::skipped());
    }
    Ok(IdentityReport::compare(
        &shifted_cauchy(n, i, variant)?,
        &shifted_cauchy_target(n, i),
    ))
}

pub(super) fn run_eq12(p: &Params) -> Result<IdentityReport> {
    cauchy(p, CauchyVariant::Direct)
}

pub(super) fn run_eq16(p: &Params) -> Result<IdentityReport> {
    cauchy(p, CauchyVariant::Inverse)
}

fn nu_and_n(p: &Params) -> Result<Option<(Partition, usize)>> {
    let (nu, n) = (partition_param(p, "nu")?, usize_param(p, "n")?);
    Ok((!nu.is_empty() && n >= 1).then_some((nu, n)))
}

pub(super) fn run_thm41(p: &Params) -> Result<IdentityReport> {
    let Some((nu, n)) = nu_and_n(p)? else {
        return Ok(IdentityReport::skipped());
    };
    Ok(IdentityReport::compare(&lhs_nu(&nu, n)?, &lhs_expansion_thm41(&nu, n)?))
}

/// The general expansion at a hook against the hook closed form, then the
/// scalar `q^m s_nu[(1-q^{l-1})/(1-q)] = q^{m+C(k+1,2)} [m-1,k] [m+l-(k+2),m]`
/// for every length `1 <= l <= n`.
pub(super) fn run_cor42(p: &Params) -> Result<IdentityReport> {
    let Some(hp) = hook_params(p)? else {
        return Ok(IdentityReport::skipped());
    };
    let nu = hp.nu();
    let report = IdentityReport::compare(&lhs_expansion_thm41(&nu, hp.n)?, &lhs_hook_closed(&hp));
    if report.status != Status::Equal {
        return Ok(report);
    }
    let (k, m) = (hp.k as i64, hp.m as i64);
    let mut evals = Vec::with_capacity(hp.n);
    for l in 1..=hp.n {
        evals.push(schur_principal_eval(&nu, l)?.direct);
    }
    Ok(scalar_system(hp.n, |l| {
        let lhs = CoefQT::q_pow(m) * &evals[l - 1];
        let rhs = CoefQT::q_pow(m + binom2(k + 1)) * qbinom(m - 1, k) * qbinom(m + l as i64 - (k + 2), m);
        (lhs, rhs)
    }))
}

pub(super) fn run_thm43(p: &Params) -> Result<IdentityReport> {
    let (nu, j) = (partition_param(p, "nu")?, usize_param(p, "j")?);
    if nu.is_empty() || j == 0 {
        return Ok(IdentityReport::skipped());
    }
    let e = schur_principal_eval(&nu, j)?;
    Ok(IdentityReport::compare_scalars(&e.direct, &e.via_charge))
}

pub(super) fn run_thm44(p: &Params) -> Result<IdentityReport> {
    let Some((nu, n)) = nu_and_n(p)? else {
        return Ok(IdentityReport::skipped());
    };
    Ok(IdentityReport::compare_hook_only(&lhs_nu(&nu, n)?, &rhs_nu(&nu, n)?))
}

pub(super) fn run_ghry23(p: &Params) -> Result<IdentityReport> {
    let (n, k) = (usize_param(p, "n")?, usize_param(p, "k")?);
    if k == 0 || k > n {
        return Ok(IdentityReport::skipped());
    }
    let (l, r) = ghry_sides(n, k)?;
    Ok(IdentityReport::compare_hook_only(&l, &r))
}

/// `h_n[X(1-u)] = (1-u) sum_s (-u)^s s_{(n-s,1^s)}` at `u = q^i`.
pub(super) fn run_hook_support(p: &Params) -> Result<IdentityReport> {
    let (n, i) = (usize_param(p, "n")?, usize_param(p, "i")?);
    if n == 0 || i == 0 {
        return Ok(IdentityReport::skipped());
    }
    let u = CoefQT::q_pow(i as i64);
    let via = SymFunc::complete(n).plethysm_scale(&AlphabetTransform::scale_by(CoefQT::one() - &u));
    Ok(IdentityReport::compare_hook_only(&via, &SymFunc::hn_times_one_minus_u(n, &u)))
}

fn n_and_k(p: &Params) -> Result<Option<(usize, usize)>> {
    let (n, k) = (usize_param(p, "n")?, usize_param(p, "k")?);
    Ok((k >= 1 && k <= n).then_some((n, k)))
}

pub(super) fn run_deltaconj_t0(p: &Params) -> Result<IdentityReport> {
    let Some((n, k)) = n_and_k(p)? else {
        return Ok(IdentityReport::skipped());
    };
    let comb = delta_side_combinatorial(n, k, true)?;
    let op = delta_prime_t0(&SymFunc::elementary(k - 1), n)?;
    Ok(IdentityReport::compare(&op, &comb))
}

pub(super) fn run_deltaconj_q0(p: &Params) -> Result<IdentityReport> {
    let Some((n, k)) = n_and_k(p)? else {
        return Ok(IdentityReport::skipped());
    };
    let at_q0 = |f: SymFunc| f.try_map_coeffs(|c| c.subs_q(&CoefQT::zero()));
    let comb = at_q0(delta_side_combinatorial(n, k, false)?)?;
    let op = at_q0(delta_full(&SymFunc::elementary(k - 1), n, true)?)?;
    Ok(IdentityReport::compare(&op, &comb))
}

pub(super) fn run_wmu_consistency(p: &Params) -> Result<IdentityReport> {
    let mu = partition_param(p, "mu")?;
    if mu.is_empty() {
        return Ok(IdentityReport::skipped());
    }
    let sp = t0_specializations(&mu)?;
    Ok(IdentityReport::compare_scalars(&sp.w_cells, &sp.w))
}

/// Renders the rank against the number of partitions of `n`; equal when the
/// rank exceeds `n`.
pub(super) fn run_span_dim(p: &Params) -> Result<IdentityReport> {
    let n = usize_param(p, "n")?;
    let nu_max = match p.get("nu_max") {
        Some(_) => usize_param(p, "nu_max")?,
        None => n,
    };
    if n == 0 || nu_max == 0 {
        return Ok(IdentityReport::skipped());
    }
    let r = span_dimension_report(n, nu_max)?;
    let rank = CoefQT::from_int(r.rank as i64);
    let parts = CoefQT::from_int(r.partitions as i64);
    let mut report = IdentityReport::compare_scalars(&rank, &parts);
    if r.rank > n {
        report.status = Status::Equal;
        report.witness = None;
    } else {
        report.status = Status::Mismatch;
        report.witness = Some(Witness {
            partition: "[]".into(),
            lhs: r.rank.to_string(),
            rhs: format!("rank must exceed n={n}"),
        });
    }
    Ok(report)
}
