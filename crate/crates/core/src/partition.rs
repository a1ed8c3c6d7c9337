//! Integer partitions and their cell statistics.
//!
//! Diagrams are in English notation, 0-indexed: row 0 is the longest row and
//! the cell `(i, j)` sits in row `i`, column `j`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Statistics of one cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStat {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub content: i64,
    pub hook: usize,
}

impl Partition {
    /// Build from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(a, 1^b)`; requires `a >= 1`.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1, "hook needs an arm of length >= 1");
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `mu_i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_hook(&self) -> bool {
        self.parts.len() <= 1 || self.parts[1] == 1
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `n(mu) = sum (i-1) mu_i` with 1-indexed rows.
    pub fn nstat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn cell_stats(&self) -> Vec<CellStat> {
        let conj = self.conjugate();
        let mut cells = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                cells.push(CellStat {
                    row: i,
                    col: j,
                    arm,
                    leg,
                    content: j as i64 - i as i64,
                    hook: arm + leg + 1,
                });
            }
        }
        cells
    }

    /// Dominance order `self >= other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `z_mu = prod_i i^{m_i} m_i!`, the centralizer order.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (&i, &m) in &self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// `(-1)^{|mu| - l(mu)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Union of parts (the power-sum product index).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

/// All partitions of `n`, optionally of exactly the given length, in reverse
/// lexicographic order (`[n]` first, `[1^n]` last).
pub fn partitions_of(n: usize, length: Option<usize>) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, length: Option<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            if length.is_none_or(|l| l == cur.len()) {
                out.push(Partition { parts: cur.clone() });
            }
            return;
        }
        if let Some(l) = length {
            // need at most l - len more parts, each <= max
            let slots = l.saturating_sub(cur.len());
            if slots == 0 || slots * max < rest {
                return;
            }
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            go(rest - first, first, cur, length, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), length, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1,1]`, `3,1,1`, `[]` and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(s);
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{s}: {e}")))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}
