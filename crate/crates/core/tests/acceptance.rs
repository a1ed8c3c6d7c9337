//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use deltaq_core::hall_littlewood::{cauchy_kernel_sides, kostka_at_one, kostka_foulkes_table};
use deltaq_core::parking::{enumerate_paths, llt_sum};
use deltaq_core::partition::partitions_of;
use deltaq_core::symfunc::kostka_number;
use deltaq_core::verify::{self, run_suite, Check, IdentityReport, Status};
use deltaq_core::{Basis, SymFunc};
use num_bigint::BigInt;
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[IdentityReport]) -> Self {
        let (eq, mm, sk) = verify::tally(reports);
        let mut detail = format!("{eq} equal, {mm} mismatch, {sk} skipped");
        if let Some(r) = reports.iter().find(|r| r.status == Status::Mismatch) {
            let at: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let w = r.witness.as_ref().expect("mismatches carry a witness");
            detail.push_str(&format!("; first at {}: {} vs {}", at.join(","), w.lhs, w.rhs));
        }
        Outcome {
            pass: mm == 0 && eq > 0,
            detail,
        }
    }
}

fn checks(id: &str, points: impl IntoIterator<Item = Vec<(&'static str, String)>>) -> Vec<Check> {
    points.into_iter().map(|p| Check::new(id, &p)).collect()
}

fn reports(all: Vec<Check>) -> Outcome {
    Outcome::from_reports(&run_suite(&all).expect("registered ids"))
}

fn s(x: impl ToString) -> String {
    x.to_string()
}

fn prop31() -> Outcome {
    let pts = (0..=10i64).flat_map(|m| {
        (0..=m).flat_map(move |k| (k + 2..=m + 1).map(move |l| vec![("m", s(m)), ("k", s(k)), ("l", s(l))]))
    });
    reports(checks("prop31", pts))
}

fn cor32() -> Outcome {
    let pts = (0..=8i64)
        .flat_map(|m| (0..=8i64).flat_map(move |k| (0..=10i64).map(move |l| vec![("m", s(m)), ("k", s(k)), ("l", s(l))])));
    let out = run_suite(&checks("cor32", pts)).expect("registered ids");
    let mut o = Outcome::from_reports(&out);
    let outside = out
        .iter()
        .filter(|r| r.status == Status::Mismatch)
        .all(|r| {
            let get = |k: &str| r.params.get(k).map_or(0, |v| v.parse::<i64>().unwrap());
            get("m") + get("l") < get("k") + 2
        });
    o.detail.push_str(&format!("; every mismatch has m+l < k+2: {outside}"));
    o
}

fn prop33() -> Outcome {
    reports(verify::suite("hookscalar", Some(12)).unwrap())
}

fn cauchy() -> Outcome {
    reports(verify::suite("cauchy", Some(7)).unwrap())
}

fn hook_params(n_max: usize, k_min: usize) -> Vec<Vec<(&'static str, String)>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for m in 1..n {
            for k in k_min..m {
                out.push(vec![("k", s(k)), ("m", s(m)), ("n", s(n))]);
            }
        }
    }
    out
}

fn nu_points(n_max: usize, nu_max: impl Fn(usize) -> usize) -> Vec<Vec<(&'static str, String)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for size in 1..=nu_max(n) {
            for nu in partitions_of(size, None) {
                out.push(vec![("nu", s(&nu)), ("n", s(n))]);
            }
        }
    }
    out
}

fn eq10() -> Outcome {
    reports(checks("eq10", hook_params(6, 1)))
}

fn thm41() -> Outcome {
    reports(checks("thm41", nu_points(5, |n| n - 1)))
}

fn cor42() -> Outcome {
    reports(checks("cor42", hook_params(5, 0)))
}

fn thm43() -> Outcome {
    reports(verify::suite("principal", Some(6)).unwrap())
}

fn thm44() -> Outcome {
    reports(checks("thm44", nu_points(5, |n| n)))
}

fn ghry() -> Outcome {
    let pts = (1..=6).flat_map(|n| (1..=n).map(move |k| vec![("n", s(n)), ("k", s(k))]));
    reports(checks("ghry23", pts))
}

fn hook_expansion() -> Outcome {
    reports(verify::suite("plethysm", Some(8)).unwrap())
}

fn delta_t0() -> Outcome {
    reports(verify::suite("t0-delta", Some(6)).unwrap())
}

fn delta_q0() -> Outcome {
    reports(verify::suite("q0-delta", Some(5)).unwrap())
}

fn llt_symmetry() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for d in enumerate_paths(n) {
            if let Err(e) = llt_sum(&d) {
                return Outcome {
                    pass: false,
                    detail: format!("path {d}: {e}"),
                };
            }
            count += 1;
        }
    }
    Outcome {
        pass: true,
        detail: format!("{count} paths symmetric"),
    }
}

fn span() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for n in [4, 5] {
        let r = run_suite(&[Check::new("span_dim", &[("n", s(n))])]).unwrap().remove(0);
        pass &= r.status == Status::Equal;
        detail.push(format!("n={n}: rank {} vs p(n) {}", r.lhs_render, r.rhs_render));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn round_trips() -> Outcome {
    let mut count = 0;
    for n in 0..=8 {
        for lambda in partitions_of(n, None) {
            for from in Basis::ALL {
                let f = SymFunc::from_basis(from, &lambda);
                for via in Basis::ALL {
                    let g = SymFunc::from_expansion(via, n, f.basis_convert(via));
                    let back = g.to_basis(from);
                    let ok = back.len() == 1 && back.get(&lambda).is_some_and(|c| c.is_one());
                    if g != f || !ok {
                        return Outcome {
                            pass: false,
                            detail: format!("{}{lambda} via {}", from.prefix(), via.prefix()),
                        };
                    }
                    count += 1;
                }
            }
        }
    }
    Outcome {
        pass: true,
        detail: format!("{count} conversions"),
    }
}

fn kostka_foulkes() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        let table = kostka_foulkes_table(n);
        for lambda in &table.parts {
            for mu in &table.parts {
                let k = table.get(lambda, mu);
                let kostka = kostka_number(lambda, mu).unwrap();
                let ok = k.is_nonnegative_polynomial()
                    && (kostka != 0 || k.is_zero())
                    && (lambda != mu || k.is_one())
                    && kostka_at_one(lambda, mu).unwrap() == BigInt::from(kostka);
                if !ok {
                    return Outcome {
                        pass: false,
                        detail: format!("K[{lambda},{mu}] = {k}"),
                    };
                }
                count += 1;
            }
        }
    }
    Outcome {
        pass: true,
        detail: format!("{count} entries nonnegative, unitriangular, K(1) = Kostka"),
    }
}

fn cauchy_kernel() -> Outcome {
    for n in 1..=5 {
        let (l, r) = cauchy_kernel_sides(n);
        if l != r {
            return Outcome {
                pass: false,
                detail: format!("n={n}"),
            };
        }
    }
    Outcome {
        pass: true,
        detail: "n = 1..5".into(),
    }
}

fn w_mu() -> Outcome {
    reports(verify::suite("infra", Some(6)).unwrap().into_iter().filter(|c| c.id == "wmu_consistency").collect())
}

type Criterion = (&'static str, u64, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    ("alternating q-binomial sum, k+2 <= l <= m+1 <= 11", 10, prop31),
    ("shifted alternating sum (prop31 at m-1+l), 0 <= m,k <= 8, 0 <= l <= 10", 10, cor32),
    ("hook scalar products, linear system and extension sweep at n = 12", 30, prop33),
    ("shifted Cauchy direct and inverse forms, 1 <= i <= n <= 7", 120, cauchy),
    ("hook closed form vs both routes, 1 <= k < m < n <= 6", 300, eq10),
    ("Delta_{s_nu} e_n expansion, 1 <= |nu| <= n-1, n <= 5", 300, thm41),
    ("hook specialization and scalar system, n <= 5", 300, cor42),
    ("principal specialization, |nu| <= 6, 1 <= j <= 8", 60, thm43),
    ("hook-only support of Delta_{s_nu} e_n, 1 <= |nu| <= n <= 5", 300, thm44),
    ("two Delta_{e_k} e_n forms agree with hook support, 1 <= k <= n <= 6", 300, ghry),
    ("hook expansion of h_n[X(1-u)], n <= 8, u = q, q^2, q^3", 300, hook_expansion),
    ("Delta conjecture at t = 0, 1 <= k <= n <= 6", 600, delta_t0),
    ("Delta conjecture at q = 0, 1 <= k <= n <= 5", 600, delta_q0),
    ("LLT symmetry, n <= 6", 600, llt_symmetry),
    ("span rank exceeds n, n = 4, 5", 600, span),
    ("basis round trips, degree <= 8", 600, round_trips),
    ("Kostka-Foulkes positivity and unitriangularity, n <= 8", 600, kostka_foulkes),
    ("Hall-Littlewood Cauchy kernel, n <= 5", 600, cauchy_kernel),
    ("w_mu at t = 0, cell and closed forms agree, n <= 6", 600, w_mu),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (name, limit, run) in CRITERIA {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let pass = outcome.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{} {name} [{:.2}s / {limit}s{}] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over time" },
            outcome.detail
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
