//! Named parameter sweeps over the registry.

use super::Check;
use crate::error::{Error, Result};
use crate::partition::partitions_of;

/// `(name, default size bound, what it sweeps)`.
pub const SUITES: &[(&str, usize, &str)] = &[
    ("qbinom", 11, "prop31 with m+1 <= N; cor32 with m,k <= N-3, l <= N-1"),
    ("hookscalar", 12, "prop33a/b, eq13_system, eq17 and eq17_extended at n = N"),
    ("cauchy", 7, "eq12 and eq16 for 1 <= i <= n <= N"),
    ("hook", 6, "eq10 and cor42 for 1 <= k < m < n <= N; ghry23 for 1 <= k <= n <= N"),
    ("general", 5, "thm41 and thm44 for 1 <= |nu| <= n-1, n <= N"),
    ("principal", 6, "thm43 for 1 <= |nu| <= N, 1 <= j <= 8"),
    ("plethysm", 8, "hook_support for n <= N, u in q, q^2, q^3"),
    ("t0-delta", 6, "deltaconj_t0 for 1 <= k <= n <= N"),
    ("q0-delta", 5, "deltaconj_q0 for 1 <= k <= n <= N"),
    ("infra", 6, "wmu_consistency for |mu| <= N; span_dim for n = 4, 5"),
];

fn s(x: impl ToString) -> String {
    x.to_string()
}

/// Expand a suite name into checks; `nmax` overrides the default bound.
/// `all` concatenates every suite at its default.
pub fn suite(name: &str, nmax: Option<usize>) -> Result<Vec<Check>> {
    if name == "all" {
        let mut out = Vec::new();
        for (n, _, _) in SUITES {
            out.extend(suite(n, None)?);
        }
        return Ok(out);
    }
    let &(_, default, _) = SUITES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::InvalidParams(format!("unknown suite `{name}`")))?;
    let big = nmax.unwrap_or(default);
    let mut out = Vec::new();
    match name {
        "qbinom" => {
            for m in 0..big {
                for k in 0..=m {
                    for l in k + 2..=m + 1 {
                        out.push(Check::new("prop31", &[("m", s(m)), ("k", s(k)), ("l", s(l))]));
                    }
                }
            }
            let top = big.saturating_sub(3);
            for m in 0..=top {
                for k in 0..=top {
                    for l in 0..big {
                        out.push(Check::new("cor32", &[("m", s(m)), ("k", s(k)), ("l", s(l))]));
                    }
                }
            }
        }
        "hookscalar" => {
            let n = big;
            for m in 1..n {
                for k in 0..m {
                    let base = [("k", s(k)), ("m", s(m)), ("n", s(n))];
                    for l in k + 2..=m + 1 {
                        for id in ["prop33a", "prop33b", "eq17"] {
                            let mut p = base.to_vec();
                            p.push(("l", s(l)));
                            out.push(Check::new(id, &p));
                        }
                    }
                    if k >= 1 {
                        out.push(Check::new("eq13_system", &base));
                        for l in (1..=n).filter(|&l| l < k + 2 || l > m + 1) {
                            let mut p = base.to_vec();
                            p.push(("l", s(l)));
                            out.push(Check::new("eq17_extended", &p));
                        }
                    }
                }
            }
        }
        "cauchy" => {
            for n in 1..=big {
                for i in 1..=n {
                    for id in ["eq12", "eq16"] {
                        out.push(Check::new(id, &[("n", s(n)), ("i", s(i))]));
                    }
                }
            }
        }
        "hook" => {
            for n in 3..=big {
                for m in 2..n {
                    for k in 1..m {
                        for id in ["eq10", "cor42"] {
                            out.push(Check::new(id, &[("k", s(k)), ("m", s(m)), ("n", s(n))]));
                        }
                    }
                }
            }
            for n in 1..=big {
                for k in 1..=n {
                    out.push(Check::new("ghry23", &[("n", s(n)), ("k", s(k))]));
                }
            }
        }
        "general" => {
            for n in 2..=big {
                for size in 1..n {
                    for nu in partitions_of(size, None) {
                        for id in ["thm41", "thm44"] {
                            out.push(Check::new(id, &[("nu", s(&nu)), ("n", s(n))]));
                        }
                    }
                }
            }
        }
        "principal" => {
            for size in 1..=big {
                for nu in partitions_of(size, None) {
                    for j in 1..=8 {
                        out.push(Check::new("thm43", &[("nu", s(&nu)), ("j", s(j))]));
                    }
                }
            }
        }
        "plethysm" => {
            for n in 1..=big {
                for i in 1..=3 {
                    out.push(Check::new("hook_support", &[("n", s(n)), ("i", s(i))]));
                }
            }
        }
        "t0-delta" | "q0-delta" => {
            let id = if name == "t0-delta" { "deltaconj_t0" } else { "deltaconj_q0" };
            for n in 1..=big {
                for k in 1..=n {
                    out.push(Check::new(id, &[("n", s(n)), ("k", s(k))]));
                }
            }
        }
        "infra" => {
            for n in 1..=big {
                for mu in partitions_of(n, None) {
                    out.push(Check::new("wmu_consistency", &[("mu", s(&mu))]));
                }
            }
            for n in [4, 5] {
                out.push(Check::new("span_dim", &[("n", s(n))]));
            }
        }
        _ => unreachable!("listed in SUITES"),
    }
    Ok(out)
}
