use super::*;
use crate::partition::partitions_of;
use proptest::prelude::*;
use std::collections::HashMap;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn c(s: &str) -> CoefQT {
    s.parse().unwrap()
}

fn sf(s: &str) -> SymFunc {
    s.parse().unwrap()
}

/// Integer polynomials in `nvars` variables, keyed by exponent vector.
type Poly = HashMap<Vec<usize>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn poly_one(nvars: usize) -> Poly {
    Poly::from([(vec![0; nvars], 1)])
}

/// All exponent vectors of total degree `d` in `nvars` variables.
fn compositions(d: usize, nvars: usize) -> Vec<Vec<usize>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(d - first, nvars - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn oracle_p(k: usize, nvars: usize) -> Poly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = k;
            (e, 1)
        })
        .collect()
}

fn oracle_h(k: usize, nvars: usize) -> Poly {
    compositions(k, nvars).into_iter().map(|e| (e, 1)).collect()
}

fn oracle_e(k: usize, nvars: usize) -> Poly {
    compositions(k, nvars)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .map(|e| (e, 1))
        .collect()
}

/// Schur polynomial by enumerating semistandard fillings row by row.
fn oracle_s(lambda: &Partition, nvars: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    let mut out = Poly::new();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, nvars: usize, out: &mut Poly) {
        if k == cells.len() {
            let mut e = vec![0; nvars];
            for row in grid.iter() {
                for &v in row {
                    if v > 0 {
                        e[v - 1] += 1;
                    }
                }
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=nvars {
            grid[i][j] = v;
            go(k + 1, cells, grid, nvars, out);
        }
        grid[i][j] = 0;
    }
    go(0, &cells, &mut grid, nvars, &mut out);
    out
}

fn oracle_basis(basis: Basis, mu: &Partition, nvars: usize) -> Poly {
    let mult = |f: &dyn Fn(usize, usize) -> Poly| {
        mu.parts()
            .iter()
            .fold(poly_one(nvars), |acc, &k| poly_mul(&acc, &f(k, nvars)))
    };
    match basis {
        Basis::Power => mult(&oracle_p),
        Basis::Complete => mult(&oracle_h),
        Basis::Elementary => mult(&oracle_e),
        Basis::Schur => oracle_s(mu, nvars),
        Basis::Monomial => {
            let mut e = mu.parts().to_vec();
            e.resize(nvars, 0);
            Poly::from([(e, 1)])
        }
    }
}

#[test]
fn monomial_expansions_match_brute_force() {
    for n in 1..=6 {
        for mu in partitions_of(n, None) {
            for basis in Basis::ALL {
                let poly = oracle_basis(basis, &mu, n);
                let got = SymFunc::from_basis(basis, &mu).to_basis(Basis::Monomial);
                for lambda in partitions_of(n, None) {
                    let mut e = lambda.parts().to_vec();
                    e.resize(n, 0);
                    let want = CoefQT::from_int(poly.get(&e).copied().unwrap_or(0));
                    let have = got.get(&lambda).cloned().unwrap_or_else(CoefQT::zero);
                    assert_eq!(have, want, "{}{} at m{}", basis.prefix(), mu, lambda);
                }
            }
        }
    }
}

#[test]
fn conversion_examples() {
    let s11 = SymFunc::schur(&p(&[1, 1]));
    let half = CoefQT::from_ratio(1, 2).unwrap();
    assert_eq!(
        s11.basis_convert(Basis::Power),
        vec![(p(&[2]), -half.clone()), (p(&[1, 1]), half)]
    );
    assert_eq!(SymFunc::from_basis(Basis::Complete, &p(&[2])), SymFunc::schur(&p(&[2])));
    assert_eq!(SymFunc::from_basis(Basis::Elementary, &p(&[2])), s11);
}

#[test]
fn multiply_examples() {
    let s1 = SymFunc::schur(&p(&[1]));
    assert_eq!(s1.multiply(&s1).unwrap(), sf("s[2] + s[1,1]"));
    assert!(s1.multiply(&SymFunc::zero(3)).unwrap().is_zero());
    let h1 = SymFunc::complete(1);
    let lhs = h1.multiply(&h1).unwrap();
    let rhs = &SymFunc::complete(2) + &SymFunc::from_basis(Basis::Monomial, &p(&[1, 1]));
    assert_eq!(lhs.to_basis(Basis::Monomial), rhs.to_basis(Basis::Monomial));
    let big = SymFunc::complete(6);
    assert!(matches!(big.multiply(&big), Err(Error::DegreeLimit { .. })));
}

#[test]
fn omega_examples() {
    let s21 = SymFunc::schur(&p(&[2, 1]));
    assert_eq!(s21.omega(), s21);
    for n in 1..=4 {
        assert_eq!(SymFunc::complete(n).omega(), SymFunc::elementary(n));
        let hn = SymFunc::from_basis(Basis::Complete, &Partition::row(n));
        let en = SymFunc::from_basis(Basis::Elementary, &Partition::row(n));
        assert_eq!(hn.omega(), en);
    }
}

#[test]
fn hall_inner_examples() {
    let s2 = SymFunc::schur(&p(&[2]));
    let s11 = SymFunc::schur(&p(&[1, 1]));
    assert!(s2.hall_inner(&s2).is_one());
    assert!(s2.hall_inner(&s11).is_zero());
    let p2 = SymFunc::power(2);
    assert_eq!(p2.hall_inner(&p2), CoefQT::from_int(2));
}

#[test]
fn h_and_m_are_dual() {
    for n in 1..=6 {
        for a in partitions_of(n, None) {
            let h = SymFunc::from_basis(Basis::Complete, &a);
            for b in partitions_of(n, None) {
                let m = SymFunc::from_basis(Basis::Monomial, &b);
                let want = if a == b { CoefQT::one() } else { CoefQT::zero() };
                assert_eq!(h.hall_inner(&m), want);
            }
        }
    }
}

#[test]
fn transform_examples() {
    let h1 = SymFunc::complete(1);
    assert_eq!(
        h1.plethysm_scale(&AlphabetTransform::times_one_minus_q()),
        SymFunc::schur(&p(&[1])).scale(&c("1 - q"))
    );
    let s21 = SymFunc::schur(&p(&[2, 1]));
    assert_eq!(s21.evaluate(&AlphabetTransform::evaluate_at(c("1 + q"))), c("q + q^2"));
    let one_minus = CoefQT::one_minus_q_pow(3);
    let base = h1.plethysm_scale(&AlphabetTransform::scale_by(one_minus.clone()));
    assert_eq!(base.scale(&one_minus.inv().unwrap()), SymFunc::schur(&p(&[1])));
}

#[test]
fn hook_expansion_matches_transform() {
    for n in 1..=8 {
        for i in 1..=3 {
            let u = CoefQT::q_pow(i);
            let direct = SymFunc::hn_times_one_minus_u(n, &u);
            let via = SymFunc::complete(n).plethysm_scale(&AlphabetTransform::scale_by(CoefQT::one() - &u));
            assert_eq!(direct, via, "n={n} i={i}");
            assert!(direct.is_hook_only());
        }
    }
    assert_eq!(SymFunc::hn_times_one_minus_u(1, &CoefQT::q()), SymFunc::schur(&p(&[1])).scale(&c("1-q")));
    assert_eq!(
        SymFunc::hn_times_one_minus_u(2, &CoefQT::t()),
        sf("s[2] - t*s[1,1]").scale(&c("1 - t"))
    );
}

#[test]
fn hook_only_examples() {
    assert!(!SymFunc::schur(&p(&[2, 2])).is_hook_only());
    assert!(SymFunc::zero(4).is_hook_only());
}

#[test]
fn render_and_parse() {
    let f = sf("s[3,1]*(q+1) + s[2,2]*(-q^2)");
    assert_eq!(f.to_string(), "s[3,1]*(q + 1) + s[2,2]*(-q^2)");
    assert_eq!(sf(&f.to_string()), f);
    assert!(sf("0").is_zero());
    assert_eq!(sf("s[]"), SymFunc::one());
    assert_eq!(sf("p[1,1] - 2*p[2]/2"), sf("s[1,1]*2"));
    assert_eq!(sf("-h[2]"), -SymFunc::complete(2));
    assert!("s[2] + s[1]".parse::<SymFunc>().is_err());
    assert!("s[1,2]".parse::<SymFunc>().is_err());
    assert!("s[2]*s[1]".parse::<SymFunc>().is_err());
    assert!("".parse::<SymFunc>().is_err());
}

#[test]
fn characters_exposed() {
    assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    assert!(kostka_number(&p(&[2]), &p(&[1])).is_err());
}

fn arb_coef() -> impl Strategy<Value = CoefQT> {
    (-3i64..=3, 0i64..=2, 0i64..=1).prop_map(|(a, qe, te)| CoefQT::monomial(a, qe, te))
}

fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
    (1usize..=6).prop_flat_map(|n| {
        let count = partitions_of(n, None).len();
        proptest::collection::vec(arb_coef(), count).prop_map(move |coefs| {
            SymFunc::from_schur_terms(n, partitions_of(n, None).into_iter().zip(coefs))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_round_trips(f in arb_symfunc()) {
        for basis in Basis::ALL {
            let back = SymFunc::from_expansion(basis, f.degree(), f.basis_convert(basis));
            prop_assert_eq!(&back, &f);
        }
    }

    #[test]
    fn omega_is_involution(f in arb_symfunc()) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn identity_transform_is_identity(f in arb_symfunc()) {
        prop_assert_eq!(f.plethysm_scale(&AlphabetTransform::identity()), f);
    }

    #[test]
    fn scale_transforms_compose(f in arb_symfunc()) {
        let there = f.plethysm_scale(&AlphabetTransform::times_one_minus_q());
        prop_assert_eq!(there.plethysm_scale(&AlphabetTransform::over_one_minus_q()), f);
    }

    #[test]
    fn render_parses_back(f in arb_symfunc()) {
        prop_assert_eq!(f.to_string().parse::<SymFunc>().unwrap(), f);
    }
}
