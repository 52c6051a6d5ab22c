//! Smith normal form over the integers with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::abs_big;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one, i.e. the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form_i64(m: &[Vec<i64>]) -> SmithForm {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    smith_normal_form(big)
}

/// Diagonalises `a` by unimodular row and column operations, always
/// pivoting on an entry of least absolute value.
pub fn smith_normal_form(mut a: Vec<Vec<BigInt>>) -> SmithForm {
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();

    for t in 0..nr.min(nc) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                return SmithForm { invariant_factors: factors };
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut remainder = false;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[t];
                for (x, y) in tail[0].iter_mut().zip(pivot_row).skip(t) {
                    *x -= &q * y;
                }
                remainder |= !a[i][t].is_zero();
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                remainder |= !a[t][j].is_zero();
            }
            if remainder {
                continue;
            }

            // Row t and column t are clear; enforce divisibility of the rest.
            let p = a[t][t].clone();
            let bad = (t + 1..nr).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]).skip(t) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(abs_big(&a[t][t]));
    }
    SmithForm { invariant_factors: factors }
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Puts a direct sum of cyclic groups `⊕ Z/d_k` into invariant-factor form.
pub fn normalize_torsion(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let diag: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::from(orders[i]) } else { BigInt::zero() }).collect())
        .collect();
    smith_normal_form(diag)
        .torsion()
        .iter()
        .map(|d| u64::try_from(d).expect("torsion order exceeds u64"))
        .collect()
}
