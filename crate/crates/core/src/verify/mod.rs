//! Identity registry and verification drivers.
//!
//! Every registered identity is a named check over string parameters that
//! evaluates two sides exactly and reports equality, a mismatch with its first
//! differing coefficient, or a skip when the parameters fall outside the
//! identity's hypotheses.

mod checks;
mod suites;

pub use checks::{check_cor32, check_prop31, check_prop33, Prop33Part};
pub use suites::{suite, SUITES};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qfield::CoefQT;
use crate::symfunc::SymFunc;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

/// Identity parameters as written on the command line.
pub type Params = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equal => "equal",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
        })
    }
}

/// First Schur coefficient where the two sides differ; scalars use `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub partition: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: Params,
    pub status: Status,
    pub lhs_render: String,
    pub rhs_render: String,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    /// Parameters outside the identity's hypotheses.
    fn skipped() -> Self {
        IdentityReport {
            identity_id: String::new(),
            params: Params::new(),
            status: Status::Skipped,
            lhs_render: "0".into(),
            rhs_render: "0".into(),
            witness: None,
            elapsed_ms: 0,
        }
    }

    fn compare(lhs: &SymFunc, rhs: &SymFunc) -> Self {
        let witness = lhs.first_difference(rhs).map(|(p, l, r)| Witness {
            partition: p.to_string(),
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        Self::from_parts(lhs, rhs, witness)
    }

    fn compare_scalars(lhs: &CoefQT, rhs: &CoefQT) -> Self {
        Self::compare(&SymFunc::constant(lhs.clone()), &SymFunc::constant(rhs.clone()))
    }

    /// Equal sides that must also be supported on hooks only.
    fn compare_hook_only(lhs: &SymFunc, rhs: &SymFunc) -> Self {
        let mut report = Self::compare(lhs, rhs);
        if report.status == Status::Equal {
            if let Some((p, c)) = lhs.terms().iter().find(|(p, _)| !p.is_hook()) {
                report.status = Status::Mismatch;
                report.witness = Some(Witness {
                    partition: p.to_string(),
                    lhs: c.to_string(),
                    rhs: "non-hook term".into(),
                });
            }
        }
        report
    }

    fn from_parts(lhs: &SymFunc, rhs: &SymFunc, witness: Option<Witness>) -> Self {
        IdentityReport {
            identity_id: String::new(),
            params: Params::new(),
            status: if witness.is_none() { Status::Equal } else { Status::Mismatch },
            lhs_render: lhs.to_string(),
            rhs_render: rhs.to_string(),
            witness,
            elapsed_ms: 0,
        }
    }

    /// One-line summary for terminals.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{:<8} {} {}", self.status, self.identity_id, params.join(","));
        if let (Status::Mismatch, Some(w)) = (self.status, &self.witness) {
            line.push_str(&format!("  at {}: {} vs {}", w.partition, w.lhs, w.rhs));
        }
        line
    }
}

/// One identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub params: Params,
}

impl Check {
    pub fn new(id: &str, params: &[(&str, String)]) -> Self {
        Check {
            id: id.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

/// Split `k=1,m=3,nu=[2,1]` into parameters; commas inside brackets stay.
pub fn parse_params(s: &str) -> Result<Params> {
    let mut out = Params::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&s[start..]);
    for piece in pieces.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| Error::InvalidParams(format!("expected key=value, got `{piece}`")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

pub(crate) fn int_param(p: &Params, key: &str) -> Result<i64> {
    p.get(key)
        .ok_or_else(|| Error::InvalidParams(format!("missing parameter `{key}`")))?
        .parse()
        .map_err(|_| Error::InvalidParams(format!("parameter `{key}` must be an integer")))
}

pub(crate) fn usize_param(p: &Params, key: &str) -> Result<usize> {
    let v = int_param(p, key)?;
    usize::try_from(v).map_err(|_| Error::InvalidParams(format!("parameter `{key}` must be nonnegative")))
}

pub(crate) fn partition_param(p: &Params, key: &str) -> Result<Partition> {
    p.get(key)
        .ok_or_else(|| Error::InvalidParams(format!("missing parameter `{key}`")))?
        .parse()
}

type Runner = fn(&Params) -> Result<IdentityReport>;

/// Registered identity ids with their drivers.
pub const IDENTITIES: &[(&str, Runner)] = &[
    ("prop31", checks::run_prop31),
    ("cor32", checks::run_cor32),
    ("prop33a", checks::run_prop33a),
    ("prop33b", checks::run_prop33b),
    ("eq13_system", checks::run_eq13_system),
    ("eq17", checks::run_eq17),
    ("eq17_extended", checks::run_eq17_extended),
    ("eq10", checks::run_eq10),
    ("eq12", checks::run_eq12),
    ("eq16", checks::run_eq16),
    ("thm41", checks::run_thm41),
    ("cor42", checks::run_cor42),
    ("thm43", checks::run_thm43),
    ("thm44", checks::run_thm44),
    ("ghry23", checks::run_ghry23),
    ("hook_support", checks::run_hook_support),
    ("deltaconj_t0", checks::run_deltaconj_t0),
    ("deltaconj_q0", checks::run_deltaconj_q0),
    ("wmu_consistency", checks::run_wmu_consistency),
    ("span_dim", checks::run_span_dim),
];

fn runner(id: &str) -> Result<Runner> {
    IDENTITIES
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, r)| *r)
        .ok_or_else(|| Error::UnknownIdentity(id.into()))
}

/// Run one identity. Parameter errors propagate; failed hypotheses skip.
pub fn run_check(check: &Check) -> Result<IdentityReport> {
    let run = runner(&check.id)?;
    let start = Instant::now();
    let mut report = run(&check.params)?;
    report.identity_id = check.id.clone();
    report.params = check.params.clone();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Run every check concurrently; reports come back in input order.
pub fn run_suite(checks: &[Check]) -> Result<Vec<IdentityReport>> {
    for c in checks {
        runner(&c.id)?;
    }
    checks.par_iter().map(run_check).collect()
}

/// `(equal, mismatch, skipped)` counts.
pub fn tally(reports: &[IdentityReport]) -> (usize, usize, usize) {
    reports.iter().fold((0, 0, 0), |(e, m, s), r| match r.status {
        Status::Equal => (e + 1, m, s),
        Status::Mismatch => (e, m + 1, s),
        Status::Skipped => (e, m, s + 1),
    })
}

#[cfg(test)]
mod tests;
