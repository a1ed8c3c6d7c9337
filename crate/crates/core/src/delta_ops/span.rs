//! Rank of the span of `{Delta_{s_nu} e_n}` over `Q(q,t)`.

use super::delta_full;
use crate::error::Result;
use crate::partition::partitions_of;
use crate::qfield::poly::{GcdRing, Poly2};
use crate::qfield::CoefQT;
use crate::symfunc::SymFunc;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub n: usize,
    pub nu_size_max: usize,
    /// number of `nu` with `1 <= |nu| <= nu_size_max`
    pub count_nu: usize,
    pub rank: usize,
    /// number of partitions of `n`, the ambient dimension
    pub partitions: usize,
}

/// Evaluation points tried before falling back to exact elimination.
const POINTS: [(i64, i64); 3] = [(3, 7), (5, 11), (13, 2)];

pub fn span_dimension_report(n: usize, nu_size_max: usize) -> Result<SpanReport> {
    let basis = partitions_of(n, None);
    let mut rows: Vec<Vec<CoefQT>> = Vec::new();
    for size in 1..=nu_size_max {
        for nu in partitions_of(size, None) {
            let f = delta_full(&SymFunc::schur(&nu), n, false)?;
            rows.push(basis.iter().map(|l| f.coeff(l)).collect());
        }
    }
    Ok(SpanReport {
        n,
        nu_size_max,
        count_nu: rows.len(),
        rank: exact_rank(&rows),
        partitions: basis.len(),
    })
}

/// Rank over `Q(q,t)`. A rank found at a rational point is a lower bound and is
/// exact once it reaches the matrix size; otherwise eliminate exactly.
pub(crate) fn exact_rank(rows: &[Vec<CoefQT>]) -> usize {
    let full = rows.len().min(rows.first().map_or(0, Vec::len));
    let mut best = 0;
    for (q, t) in POINTS {
        let (q, t) = (BigRational::from_integer(q.into()), BigRational::from_integer(t.into()));
        let evaluated: Option<Vec<Vec<BigRational>>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.eval(&q, &t).ok()).collect())
            .collect();
        if let Some(m) = evaluated {
            best = best.max(rational_rank(m));
            if best == full {
                return best;
            }
        }
    }
    bareiss_rank(rows)
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let d = &f * &m[rank][c];
                m[r][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination over `Z[q,t]` after clearing denominators row by row.
fn bareiss_rank(rows: &[Vec<CoefQT>]) -> usize {
    let mut m: Vec<Vec<Poly2>> = rows
        .iter()
        .map(|r| {
            let mut den = Poly2::one();
            for c in r {
                if !c.denominator().is_one() {
                    den = den.mul(c.denominator());
                }
            }
            r.iter()
                .map(|c| c.numerator().mul(&den.div_exact(c.denominator()).expect("factor of product")))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = Poly2::one();
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                let v = m[rank][col].mul(&m[r][c]).sub(&m[r][col].mul(&m[rank][c]));
                m[r][c] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][col] = Poly2::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CoefQT {
        s.parse().unwrap()
    }

    #[test]
    fn bareiss_agrees_with_point_rank() {
        // second row is (q+t) times the first; third is independent
        let rows = vec![
            vec![c("1"), c("q"), c("t/(1-q)")],
            vec![c("q+t"), c("q^2+q*t"), c("(q*t+t^2)/(1-q)")],
            vec![c("1"), c("t"), c("q")],
        ];
        assert_eq!(bareiss_rank(&rows), 2);
        assert_eq!(exact_rank(&rows), 2);
        let id: Vec<Vec<CoefQT>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { CoefQT::one() } else { CoefQT::zero() }).collect())
            .collect();
        assert_eq!(bareiss_rank(&id), 3);
        assert_eq!(exact_rank(&[]), 0);
    }
}
