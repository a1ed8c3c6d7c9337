//! Semistandard tableaux and the charge statistic.

use crate::partition::Partition;

/// A tableau as its rows (English notation, top row first).
pub type Tableau = Vec<Vec<usize>>;

/// All SSYT of shape `lambda` with content `mu` (letter `i+1` used `mu_i` times).
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    if lambda.size() != mu.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Tableau = vec![Vec::new(); lambda.len()];
    fill(lambda, mu.parts(), 0, &mut rows, &mut out);
    out
}

/// Place letter `letter+1` as a horizontal strip on top of `rows`.
fn fill(lambda: &Partition, mu: &[usize], letter: usize, rows: &mut Tableau, out: &mut Vec<Tableau>) {
    if letter == mu.len() {
        out.push(rows.clone());
        return;
    }
    let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
    let mut add = vec![0usize; rows.len()];
    strip(lambda, &shape, 0, mu[letter], &mut add, &mut |add| {
        for (r, &k) in add.iter().enumerate() {
            rows[r].extend(std::iter::repeat_n(letter + 1, k));
        }
        fill(lambda, mu, letter + 1, rows, out);
        for (r, &k) in add.iter().enumerate() {
            let len = rows[r].len();
            rows[r].truncate(len - k);
        }
    });
}

/// Choose how many boxes to add per row so the new shape stays inside
/// `lambda` and the added boxes form a horizontal strip.
fn strip(lambda: &Partition, shape: &[usize], r: usize, left: usize, add: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if r == shape.len() {
        if left == 0 {
            f(add);
        }
        return;
    }
    // new row length may not exceed the old length of the row above
    let cap = if r == 0 { lambda.part(0) } else { shape[r - 1].min(lambda.part(r)) };
    let room = cap.saturating_sub(shape[r]);
    for k in 0..=room.min(left) {
        add[r] = k;
        strip(lambda, shape, r + 1, left - k, add, f);
    }
    add[r] = 0;
}

/// Rows read bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are extracted by scanning leftward, cyclically, for
/// `1, 2, ...`; the index rises by one each time the scan wraps around.
pub fn charge(word: &[usize]) -> usize {
    let len = word.len();
    let mut used = vec![false; len];
    let mut remaining = len;
    let mut total = 0;
    while remaining > 0 {
        let top = (0..len).filter(|&i| !used[i]).map(|i| word[i]).max().expect("nonempty");
        let mut pos = (0..len).rev().find(|&i| !used[i] && word[i] == 1).expect("content is a partition");
        used[pos] = true;
        remaining -= 1;
        let mut index = 0;
        for letter in 2..=top {
            let mut p = pos;
            loop {
                if p == 0 {
                    p = len - 1;
                    index += 1;
                } else {
                    p -= 1;
                }
                if !used[p] && word[p] == letter {
                    break;
                }
            }
            total += index;
            used[p] = true;
            remaining -= 1;
            pos = p;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(charge(&[1, 2, 3]), 3);
    }

    #[test]
    fn ssyt_counts() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(ssyt(&p(&[2, 1]), &p(&[1, 1, 1])).len(), 2);
        assert_eq!(ssyt(&p(&[3, 1]), &p(&[2, 1, 1])).len(), 2);
        assert_eq!(ssyt(&p(&[2, 2]), &p(&[2, 2])), vec![vec![vec![1, 1], vec![2, 2]]]);
        assert!(ssyt(&p(&[1, 1]), &p(&[2])).is_empty());
    }
}
