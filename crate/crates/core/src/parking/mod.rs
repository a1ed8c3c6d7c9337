//! Dyck paths, parking functions and their statistics, per-path LLT sums and
//! the combinatorial side of the Delta conjecture at `t = 0` and `q = 0`.
//!
//! Rows are indexed bottom to top from 0. A path is stored only through its
//! area sequence; the horizontal offsets `u_i = i - a_i` are always derived.

mod llt;

pub use llt::{
    delta_side_combinatorial, delta_side_with_mode, haglund_factor, llt_sum, llt_sum_with_mode, HaglundFactor,
    QuasiMode,
};

use crate::error::{Error, Result};
use std::fmt;

/// A Dyck path of size `n` given by its area sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    area_seq: Vec<usize>,
}

impl DyckPath {
    /// Requires `a_1 = 0` and `a_{i+1} <= a_i + 1`.
    pub fn new(area_seq: Vec<usize>) -> Result<Self> {
        if area_seq.is_empty() {
            return Err(Error::InvalidParams("a Dyck path needs at least one row".into()));
        }
        if area_seq[0] != 0 {
            return Err(Error::InvalidParams(format!("area sequence must start at 0: {area_seq:?}")));
        }
        if area_seq.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidParams(format!("area sequence jumps by more than 1: {area_seq:?}")));
        }
        Ok(DyckPath { area_seq })
    }

    pub fn area_seq(&self) -> &[usize] {
        &self.area_seq
    }

    pub fn size(&self) -> usize {
        self.area_seq.len()
    }

    pub fn area(&self) -> usize {
        self.area_seq.iter().sum()
    }

    /// Horizontal offset of each north step, weakly increasing.
    pub fn offsets(&self) -> Vec<usize> {
        self.area_seq.iter().enumerate().map(|(i, a)| i - a).collect()
    }

    /// Rows `i >= 1` with `u_{i-1} = u_i`, i.e. `a_i = a_{i-1} + 1`.
    pub fn double_rises(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.area_seq[i] == self.area_seq[i - 1] + 1)
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.area_seq))
    }
}

/// All Dyck paths of size `n` in lexicographic order of area sequences.
pub fn enumerate_paths(n: usize) -> Vec<DyckPath> {
    fn extend(seq: &mut Vec<usize>, n: usize, out: &mut Vec<DyckPath>) {
        if seq.len() == n {
            out.push(DyckPath { area_seq: seq.clone() });
            return;
        }
        let top = seq.last().map_or(0, |a| a + 1);
        for a in 0..=top {
            seq.push(a);
            extend(seq, n, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut Vec::with_capacity(n), n, &mut out);
    }
    out
}

/// A labelling of the north steps of a Dyck path by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction {
    path: DyckPath,
    cars: Vec<usize>,
}

impl ParkingFunction {
    /// Requires `cars` to be a permutation of `1..=n` increasing along every
    /// north segment.
    pub fn new(path: DyckPath, cars: Vec<usize>) -> Result<Self> {
        let n = path.size();
        if cars.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: cars.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &c in &cars {
            if c == 0 || c > n || seen[c] {
                return Err(Error::InvalidParams(format!("cars are not a permutation of 1..={n}: {cars:?}")));
            }
            seen[c] = true;
        }
        if path.double_rises().iter().any(|&i| cars[i] < cars[i - 1]) {
            return Err(Error::InvalidParams(format!("cars must increase along north segments: {cars:?}")));
        }
        Ok(ParkingFunction { path, cars })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn cars(&self) -> &[usize] {
        &self.cars
    }

    pub fn size(&self) -> usize {
        self.cars.len()
    }

    pub fn area(&self) -> usize {
        self.path.area()
    }

    pub fn dinv(&self) -> usize {
        let (c, a) = (&self.cars, &self.path.area_seq);
        let mut d = 0;
        for j in 0..c.len() {
            for i in 0..j {
                if (c[i] < c[j] && a[i] == a[j]) || (c[i] > c[j] && a[i] == a[j] + 1) {
                    d += 1;
                }
            }
        }
        d
    }

    /// Cars read by decreasing area, right to left among equal areas.
    pub fn word(&self) -> Vec<usize> {
        let a = &self.path.area_seq;
        let mut rows: Vec<usize> = (0..self.size()).collect();
        rows.sort_by(|&i, &j| a[j].cmp(&a[i]).then(j.cmp(&i)));
        rows.into_iter().map(|i| self.cars[i]).collect()
    }

    /// Composition of the descent set of the inverse word: `i` is a descent
    /// when `i + 1` appears before `i` in the word.
    pub fn ides(&self) -> Vec<usize> {
        let word = self.word();
        let mut pos = vec![0; word.len() + 1];
        for (p, &c) in word.iter().enumerate() {
            pos[c] = p;
        }
        let mut comp = Vec::new();
        let mut last = 0;
        for i in 1..word.len() {
            if pos[i + 1] < pos[i] {
                comp.push(i - last);
                last = i;
            }
        }
        comp.push(word.len() - last);
        comp
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cars {} areas {}", join(&self.cars), self.path)
    }
}

fn join(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", items.join(","))
}

/// Parking functions on `path`, cars in lexicographic order.
pub fn enumerate_pfs_on(path: &DyckPath) -> Vec<ParkingFunction> {
    fn fill(
        path: &DyckPath,
        rise: &[bool],
        cars: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<ParkingFunction>,
    ) {
        let n = path.size();
        let i = cars.len();
        if i == n {
            out.push(ParkingFunction {
                path: path.clone(),
                cars: cars.clone(),
            });
            return;
        }
        let lo = if rise[i] { cars[i - 1] + 1 } else { 1 };
        for c in lo..=n {
            if used[c] {
                continue;
            }
            used[c] = true;
            cars.push(c);
            fill(path, rise, cars, used, out);
            cars.pop();
            used[c] = false;
        }
    }
    let n = path.size();
    let mut rise = vec![false; n];
    for i in path.double_rises() {
        rise[i] = true;
    }
    let mut out = Vec::new();
    fill(path, &rise, &mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
    out
}

/// Every parking function of size `n`, grouped by path in path order.
pub fn enumerate_pfs(n: usize) -> Vec<ParkingFunction> {
    enumerate_paths(n).iter().flat_map(enumerate_pfs_on).collect()
}
