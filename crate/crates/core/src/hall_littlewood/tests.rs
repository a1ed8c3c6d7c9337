use super::*;
use crate::symfunc::kostka_number;
use num_rational::BigRational;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn c(s: &str) -> CoefQT {
    s.parse().unwrap()
}

fn sf(s: &str) -> SymFunc {
    s.parse().unwrap()
}

#[test]
fn kostka_foulkes_examples() {
    assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[2, 1])).unwrap(), CoefQT::one());
    assert_eq!(kostka_foulkes(&p(&[2]), &p(&[1, 1])).unwrap(), CoefQT::q());
    assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), c("q + q^2"));
    assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
    for n in 1..=7 {
        for mu in partitions_of(n, None) {
            let want = CoefQT::q_pow(mu.nstat() as i64);
            assert_eq!(kostka_foulkes(&Partition::row(n), &mu).unwrap(), want);
        }
    }
}

#[test]
fn kostka_foulkes_structure() {
    for n in 1..=7 {
        let parts = partitions_of(n, None);
        for l in &parts {
            for m in &parts {
                let k = kostka_foulkes(l, m).unwrap();
                assert!(k.is_nonnegative_polynomial() || k.is_zero());
                if !l.dominates(m).unwrap() {
                    assert!(k.is_zero(), "{l} {m}");
                }
                if l == m {
                    assert!(k.is_one());
                }
                assert_eq!(kostka_at_one(l, m).unwrap(), BigInt::from(kostka_number(l, m).unwrap()));
            }
        }
    }
}

#[test]
fn hl_p_examples() {
    assert_eq!(hl_p(&p(&[1]), false), sf("s[1]"));
    assert_eq!(hl_p(&p(&[1, 1]), false), sf("s[1,1]"));
    assert_eq!(hl_p(&p(&[2]), false), sf("s[2] - q*s[1,1]"));
    for n in 1..=5 {
        for mu in partitions_of(n, None) {
            let at_zero = hl_p(&mu, false).try_map_coeffs(|x| x.subs_q(&CoefQT::zero())).unwrap();
            assert_eq!(at_zero, SymFunc::schur(&mu));
        }
    }
    assert_eq!(hl_p(&p(&[2]), true), sf("s[2] - q^-1*s[1,1]"));
}

#[test]
fn hl_q_and_cauchy() {
    assert_eq!(hl_q(&p(&[1])), sf("(1-q)*s[1]"));
    for n in 1..=4 {
        let (l, r) = cauchy_kernel_sides(n);
        assert_eq!(l, r, "n={n}");
    }
}

#[test]
fn q_two_ways_and_inverse_relation() {
    for n in 1..=4 {
        for mu in partitions_of(n, None) {
            assert_eq!(q_via_schur_plethysm(&mu), hl_q(&mu), "{mu}");
            assert_eq!(p_inverse_via_q(&mu), hl_p(&mu, true), "{mu}");
        }
    }
}

#[test]
fn transformed_h_examples() {
    assert_eq!(transformed_h(&p(&[1])), sf("s[1]"));
    for n in 1..=4 {
        for rho in partitions_of(n, None) {
            assert_eq!(transformed_h(&rho).degree(), n);
            for j in 1..=6 {
                let (l, r) = reciprocity_sides(&rho, j);
                assert_eq!(l, r, "rho={rho} j={j}");
            }
        }
    }
}

#[test]
fn modified_t0_examples() {
    assert_eq!(modified_macdonald_t0(&p(&[1])), sf("s[1]"));
    assert_eq!(modified_macdonald_t0(&p(&[1, 1])), sf("s[2] + q*s[1,1]"));
    for n in 1..=6 {
        for mu in partitions_of(n, None) {
            let h = modified_macdonald_t0(&mu);
            for (l, coef) in h.terms() {
                let one = BigRational::from_integer(1.into());
                let at_one = coef.eval(&one, &one).unwrap();
                assert_eq!(at_one, BigRational::from_integer(kostka_number(l, &mu).unwrap().into()));
            }
        }
    }
}

#[test]
fn t0_specialization_examples() {
    let s = t0_specializations(&p(&[1])).unwrap();
    assert_eq!((s.b.clone(), s.pi_prime.clone(), s.w.clone()), (CoefQT::one(), CoefQT::one(), c("1 - q")));
    assert_eq!(t0_specializations(&p(&[1, 1])).unwrap().b, c("1 + q"));
    assert!(t0_specializations(&Partition::empty()).is_err());
    for n in 1..=6 {
        for mu in partitions_of(n, None) {
            let s = t0_specializations(&mu).unwrap();
            assert_eq!(s.w, s.w_cells, "{mu}");
        }
    }
}

#[test]
fn full_macdonald_examples() {
    assert_eq!(modified_macdonald_full(&p(&[1])).unwrap(), sf("s[1]"));
    assert_eq!(modified_macdonald_full(&p(&[2])).unwrap(), sf("s[2] + q*s[1,1]"));
    assert_eq!(modified_macdonald_full(&p(&[1, 1])).unwrap(), sf("s[2] + t*s[1,1]"));
    assert_eq!(
        modified_macdonald_full(&p(&[2, 1])).unwrap(),
        sf("s[3] + (q+t)*s[2,1] + q*t*s[1,1,1]")
    );
    assert!(modified_macdonald_full(&Partition::row(full_limit() + 1)).is_err());
}

#[test]
fn full_macdonald_specializations() {
    let swap = |x: &CoefQT| x.subs(&CoefQT::t(), &CoefQT::q()).unwrap();
    for n in 1..=4 {
        for mu in partitions_of(n, None) {
            let full = modified_macdonald_full(&mu).unwrap();
            let qzero = full.try_map_coeffs(|x| x.subs(&CoefQT::zero(), &CoefQT::q())).unwrap();
            assert_eq!(qzero, modified_macdonald_t0(&mu), "{mu}");
            let tzero = full.try_map_coeffs(|x| x.subs_t(&CoefQT::zero())).unwrap();
            assert_eq!(tzero, modified_macdonald_t0(&mu.conjugate()), "{mu}");
            let dual = modified_macdonald_full(&mu.conjugate()).unwrap().map_coeffs(swap);
            assert_eq!(full, dual, "{mu}");
        }
    }
}
