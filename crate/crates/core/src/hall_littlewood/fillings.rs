//! Two-parameter modified Macdonald polynomials from the inv/maj fillings
//! formula.
//!
//! Diagrams here are French: row 0 is the bottom row of length `mu_1`, and the
//! cell south of `(r, c)` is `(r - 1, c)`.

use crate::cache::Memo;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::qfield::CoefQT;
use crate::symfunc::{Basis, SymFunc};
use std::sync::atomic::{AtomicUsize, Ordering};

static FULL_LIMIT: AtomicUsize = AtomicUsize::new(6);
static FULL: Memo<Partition, SymFunc> = Memo::new();

/// Largest `|mu|` accepted by [`modified_macdonald_full`].
pub fn full_limit() -> usize {
    FULL_LIMIT.load(Ordering::Relaxed)
}

pub fn set_full_limit(n: usize) {
    FULL_LIMIT.store(n, Ordering::Relaxed);
}

struct Shape {
    /// index of the cell directly south, if any
    south: Vec<Option<usize>>,
    arm: Vec<usize>,
    leg: Vec<usize>,
    /// attacking pairs `(a, b)` with `a` before `b` in reading order
    attacks: Vec<(usize, usize)>,
}

impl Shape {
    fn new(mu: &Partition) -> Self {
        let rows = mu.len();
        // reading order: rows top to bottom, left to right
        let mut cells = Vec::new();
        for r in (0..rows).rev() {
            for c in 0..mu.part(r) {
                cells.push((r, c));
            }
        }
        let pos = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        let south = cells.iter().map(|&(r, c)| if r == 0 { None } else { pos(r - 1, c) }).collect();
        let conj = mu.conjugate();
        let arm = cells.iter().map(|&(r, c)| mu.part(r) - c - 1).collect();
        let leg = cells.iter().map(|&(r, c)| conj.part(c) - r - 1).collect();
        let mut attacks = Vec::new();
        for a in 0..cells.len() {
            for b in a + 1..cells.len() {
                let ((ra, ca), (rb, cb)) = (cells[a], cells[b]);
                // same row, or `a` one row up and strictly right of `b`
                if ra == rb || (ra == rb + 1 && ca > cb) {
                    attacks.push((a, b));
                }
            }
        }
        Shape {
            south,
            arm,
            leg,
            attacks,
        }
    }

    /// `(inv, maj)` of a filling given in reading order.
    fn stats(&self, f: &[usize]) -> (i64, i64) {
        let mut inv = self.attacks.iter().filter(|&&(a, b)| f[a] > f[b]).count() as i64;
        let mut maj = 0i64;
        for (u, s) in self.south.iter().enumerate() {
            if let Some(s) = *s {
                if f[u] > f[s] {
                    maj += self.leg[u] as i64 + 1;
                    inv -= self.arm[u] as i64;
                }
            }
        }
        (inv, maj)
    }
}

/// `H~_mu(X;q,t)` in the Schur basis.
pub fn modified_macdonald_full(mu: &Partition) -> Result<SymFunc> {
    let n = mu.size();
    if n > full_limit() {
        return Err(Error::DegreeLimit {
            degree: n,
            limit: full_limit(),
        });
    }
    Ok((*FULL.get_or_build(mu, || build(mu))).clone())
}

fn build(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let shape = Shape::new(mu);
    let mut m_terms = Vec::new();
    for lambda in partitions_of(n, None) {
        // content lambda: letter i+1 appears lambda_i times
        let mut word: Vec<usize> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i + 1, k))
            .collect();
        let mut weights: Vec<Vec<i64>> = Vec::new();
        loop {
            let (inv, maj) = shape.stats(&word);
            let inv = usize::try_from(inv).expect("inv is nonnegative");
            let maj = maj as usize;
            if weights.len() <= maj {
                weights.resize(maj + 1, Vec::new());
            }
            if weights[maj].len() <= inv {
                weights[maj].resize(inv + 1, 0);
            }
            weights[maj][inv] += 1;
            if !next_permutation(&mut word) {
                break;
            }
        }
        let coef: CoefQT = weights
            .iter()
            .enumerate()
            .flat_map(|(te, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(move |(qe, &k)| CoefQT::monomial(k, qe as i64, te as i64))
            })
            .sum();
        m_terms.push((lambda, coef));
    }
    SymFunc::from_expansion(Basis::Monomial, n, m_terms)
}

/// Lexicographic successor of a multiset permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
