//! Per-degree change-of-basis tables: symmetric group characters, centralizer
//! orders and Kostka numbers. Built once per degree and shared read-only.

use crate::partition::{partitions_of, Partition};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Arc;
use crate::cache::Memo;

pub(crate) struct DegreeTable {
    /// Partitions of `n` in reverse lexicographic order.
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chars[l][r]` is the irreducible character `chi^l` on cycle type `r`.
    pub chars: Vec<Vec<i64>>,
    pub z: Vec<BigInt>,
    /// `kostka[l][m]`: number of SSYT of shape `l` and content `m`.
    pub kostka: Vec<Vec<i64>>,
    /// `conj[i]` is the index of the conjugate of `parts[i]`.
    pub conj: Vec<usize>,
}

impl DegreeTable {
    fn build(n: usize) -> Self {
        let parts = partitions_of(n, None);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mn = HashMap::new();
        let chars = parts
            .iter()
            .map(|l| parts.iter().map(|r| character(l.parts(), r.parts(), &mut mn)).collect())
            .collect();
        let z = parts.iter().map(Partition::z_value).collect();
        let mut km = HashMap::new();
        let kostka = parts
            .iter()
            .map(|l| parts.iter().map(|m| kostka_rec(l.parts(), m.parts(), &mut km)).collect())
            .collect();
        let conj = parts.iter().map(|p| index[&p.conjugate()]).collect();
        DegreeTable {
            parts,
            index,
            chars,
            z,
            kostka,
            conj,
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

static TABLES: Memo<usize, DegreeTable> = Memo::new();

pub(crate) fn table(n: usize) -> Arc<DegreeTable> {
    TABLES.get_or_build(&n, || DegreeTable::build(n))
}

/// Murnaghan-Nakayama on beta-sets: remove rim hooks of length `rho[0]`,
/// then recurse on the rest of `rho`.
fn character(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let r = rho[0];
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        // beads strictly between nb and b give the leg length
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&shape, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Count SSYT of shape `lambda` and content `mu` by peeling off the largest
/// letter as a horizontal strip.
fn kostka_rec(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_last() else {
        return i64::from(lambda.is_empty());
    };
    if lambda.len() > mu.len() {
        return 0;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut inner = vec![0usize; lambda.len()];
    strips(lambda, 0, r, &mut inner, &mut |nu| {
        let trimmed: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerate `nu` with `lambda / nu` a horizontal strip of size `left`.
fn strips(lambda: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == lambda.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    let hi = lambda[i];
    for v in (lo..=hi).rev() {
        let taken = hi - v;
        if taken > left {
            break;
        }
        nu[i] = v;
        strips(lambda, i + 1, left - taken, nu, f);
    }
}
