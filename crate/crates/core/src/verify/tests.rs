use super::*;
use crate::qfield::qbinom;

fn c(s: &str) -> CoefQT {
    s.parse().unwrap()
}

fn check(id: &str, params: &str) -> IdentityReport {
    run_check(&Check {
        id: id.into(),
        params: parse_params(params).unwrap(),
    })
    .unwrap()
}

#[test]
fn params_split_outside_brackets() {
    let p = parse_params("k=1, m=3,nu=[2,1,1],n=5").unwrap();
    assert_eq!(p["nu"], "[2,1,1]");
    assert_eq!(p["k"], "1");
    assert_eq!(p.len(), 4);
    assert!(parse_params("").unwrap().is_empty());
    assert!(parse_params("k").is_err());
}

#[test]
fn prop31_examples() {
    let r = check_prop31(2, 0, 2);
    assert_eq!(r.status, Status::Equal);
    assert_eq!(r.rhs_render.parse::<SymFunc>().unwrap(), SymFunc::constant(c("q^2")));
    // l = m + 1: the right side has exponent 0
    for k in 0..4 {
        assert_eq!(check_prop31(k + 3, k, k + 4).status, Status::Equal);
    }
    assert_eq!(check_prop31(3, 2, 3).status, Status::Skipped);
}

#[test]
fn cor32_examples() {
    assert_eq!(check_cor32(0, 0, 2).status, Status::Equal);
    for m in 0..4 {
        for k in 0..3 {
            let r = check_cor32(m, k, k + 2);
            assert_eq!(r.status, Status::Equal);
            assert_eq!(r.rhs_render.parse::<SymFunc>().unwrap(), SymFunc::constant(CoefQT::q_pow((k + 2) * m)));
        }
    }
}

#[test]
fn cor32_agrees_with_prop31_after_substitution() {
    for m in 0..5i64 {
        for k in 0..4i64 {
            for l in k + 2..k + 6 {
                let cor = check_cor32(m, k, l);
                let prop = check_prop31(m - 1 + l, k, l);
                assert_eq!(cor.lhs_render, prop.lhs_render, "m={m} k={k} l={l}");
                assert_eq!(cor.rhs_render, prop.rhs_render, "m={m} k={k} l={l}");
            }
        }
    }
}

#[test]
fn cor32_fails_below_its_source_range() {
    // m + l < k + 2: the left side is a nonzero truncated alternating sum while
    // the right side carries a vanishing binomial
    let r = check_cor32(0, 0, 0);
    assert_eq!(r.status, Status::Mismatch);
    assert_eq!(r.witness.unwrap().lhs, "1");
    for m in 0..6i64 {
        for k in 0..6i64 {
            for l in 0..8i64 {
                let expect = if m + l < k + 2 { Status::Mismatch } else { Status::Equal };
                assert_eq!(check_cor32(m, k, l).status, expect, "m={m} k={k} l={l}");
            }
        }
    }
}

#[test]
fn prop33_examples() {
    assert_eq!(check_prop33(Prop33Part::B, 0, 1, 2, 2).status, Status::Equal);
    assert_eq!(check_prop33(Prop33Part::A, 0, 1, 2, 2).status, Status::Equal);
    assert_eq!(check_prop33(Prop33Part::A, 0, 1, 3, 3).status, Status::Skipped);
    // beyond l = m + 1 both sides of part (a) vanish
    let hp = crate::delta_ops::HookParams::new(1, 3, 6).unwrap();
    let (l, r) = checks::prop33_sides(Prop33Part::A, &hp, 5);
    assert!(l.is_zero() && r.is_zero());
    assert!(qbinom(2, 3).is_zero());
}

#[test]
fn registry_and_suites() {
    assert!(matches!(
        run_check(&Check::new("nope", &[])),
        Err(Error::UnknownIdentity(_))
    ));
    assert!(run_suite(&[]).unwrap().is_empty());
    assert!(run_suite(&[Check::new("nope", &[])]).is_err());
    assert!(suite("nope", None).is_err());
    for (name, _, _) in SUITES {
        let checks = suite(name, Some(3)).unwrap();
        assert!(checks.iter().all(|c| runner(&c.id).is_ok()), "{name}");
    }
    let ids: std::collections::BTreeSet<&str> = IDENTITIES.iter().map(|e| e.0).collect();
    assert_eq!(ids.len(), IDENTITIES.len());
}

#[test]
fn hook_suite_small() {
    let reports = run_suite(&suite("hook", Some(5)).unwrap()).unwrap();
    let (eq, mm, _) = tally(&reports);
    assert_eq!(mm, 0, "{:?}", reports.iter().find(|r| r.status == Status::Mismatch));
    assert!(eq > 0);
}

#[test]
fn single_checks() {
    assert_eq!(check("thm41", "nu=[2,1],n=4").status, Status::Equal);
    assert_eq!(check("thm44", "nu=[2,1],n=4").status, Status::Equal);
    assert_eq!(check("thm43", "nu=[3,1],j=5").status, Status::Equal);
    assert_eq!(check("eq13_system", "k=1,m=3,n=5").status, Status::Equal);
    assert_eq!(check("eq17_extended", "k=1,m=2,n=5,l=1").status, Status::Equal);
    assert_eq!(check("eq17_extended", "k=1,m=2,n=5,l=3").status, Status::Skipped);
    assert_eq!(check("eq17", "k=1,m=2,n=5,l=3").status, Status::Equal);
    assert_eq!(check("eq12", "n=4,i=2").status, Status::Equal);
    assert_eq!(check("eq16", "n=4,i=4").status, Status::Equal);
    assert_eq!(check("hook_support", "n=5,i=2").status, Status::Equal);
    assert_eq!(check("wmu_consistency", "mu=[3,2,2,1]").status, Status::Equal);
    assert_eq!(check("deltaconj_t0", "n=4,k=2").status, Status::Equal);
    assert_eq!(check("deltaconj_q0", "n=3,k=2").status, Status::Equal);
    assert_eq!(check("eq10", "k=0,m=4,n=3").status, Status::Skipped);
    // p(3) = 3, so the rank cannot exceed n here
    let span = check("span_dim", "n=3");
    assert_eq!(span.status, Status::Mismatch);
    assert_eq!(span.rhs_render.parse::<SymFunc>().unwrap(), SymFunc::constant(CoefQT::from_int(3)));
    assert!(run_check(&Check::new("thm41", &[("n", "3".into())])).is_err());
}

#[test]
fn reports_are_reproducible_and_well_formed() {
    let checks = suite("qbinom", Some(6)).unwrap();
    let strip = |mut v: Vec<IdentityReport>| {
        v.iter_mut().for_each(|r| r.elapsed_ms = 0);
        v
    };
    let a = strip(run_suite(&checks).unwrap());
    let b = strip(run_suite(&checks).unwrap());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    for r in &a {
        assert_eq!(r.status == Status::Mismatch, r.witness.is_some());
        r.lhs_render.parse::<SymFunc>().unwrap();
        r.rhs_render.parse::<SymFunc>().unwrap();
        let back: IdentityReport = serde_json::from_str(&serde_json::to_string(r).unwrap()).unwrap();
        assert_eq!(&back, r);
    }
    let json = serde_json::to_value(&a[0]).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["elapsed_ms", "identity_id", "lhs_render", "params", "rhs_render", "status", "witness"]
    );
}
