//! Exact field arithmetic and dense Gaussian elimination.
//!
//! Two fields are provided: the rationals (arbitrary precision) and
//! `GF(p)`. Every routine pivots on the first nonzero entry scanning rows
//! top to bottom, so results are deterministic for fixed input.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Stable textual form, used in reports.
    fn render(&self, a: &Self::Elem) -> String;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// `GF(p)` with elements stored as canonical residues `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// The caller guarantees `p` is prime; see [`crate::homology::CoefficientRing::prime`].
    pub fn new(p: u64) -> Self {
        assert!(p >= 2);
        PrimeField { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

pub type Matrix<E> = Vec<Vec<E>>;

/// Converts a small integer matrix into field entries.
pub fn lift_matrix<F: Field>(f: &F, m: &[Vec<i64>]) -> Matrix<F::Elem> {
    m.iter().map(|row| row.iter().map(|&x| f.from_i64(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in row order.
pub fn rref<F: Field>(f: &F, rows: &mut Matrix<F::Elem>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut rows = m.to_vec();
    rref(f, &mut rows).len()
}

/// Basis of `{x : M x = 0}` for an `nrows × ncols` matrix, one vector per
/// free column in increasing column order.
pub fn nullspace<F: Field>(f: &F, m: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut rows = m.to_vec();
    let pivots = rref(f, &mut rows);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.neg(&row[free]);
            }
            v
        })
        .collect()
}

/// Solves `Σ x_k · columns[k] = target`, free variables set to zero.
pub fn solve<F: Field>(f: &F, columns: &[Vec<F::Elem>], target: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = target.len();
    let k = columns.len();
    let mut rows: Matrix<F::Elem> = (0..n)
        .map(|i| {
            let mut row: Vec<F::Elem> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    if n == 0 {
        return Some(vec![f.zero(); k]);
    }
    let pivots = rref(f, &mut rows);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![f.zero(); k];
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

/// Incrementally grown echelon basis of a subspace.
pub struct EchelonBasis<'a, F: Field> {
    field: &'a F,
    // (pivot column, row normalised to 1 at the pivot)
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<'a, F: Field> EchelonBasis<'a, F> {
    pub fn new(field: &'a F) -> Self {
        EchelonBasis { field, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [F::Elem]) {
        let f = self.field;
        for (pc, row) in &self.rows {
            if f.is_zero(&v[*pc]) {
                continue;
            }
            let factor = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
    }

    /// Adds `v` if it is independent of the current span; reports whether it was.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[pc]) {
                continue;
            }
            let factor = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        self.rows.push((pc, w));
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }
}

/// Exact rational rank of an integer matrix.
///
/// Fraction-free elimination in `i128` with each row divided by its content;
/// falls back to arbitrary-precision rationals on overflow.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    small_integer_rank(m).unwrap_or_else(|| rank(&Rationals, &lift_matrix(&Rationals, m)))
}

fn small_integer_rank(m: &[Vec<i64>]) -> Option<usize> {
    let mut rows: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in rest.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let mut content = 0i128;
            for (x, &y) in row.iter_mut().zip(pivot).skip(c) {
                *x = pivot[c].checked_mul(*x)?.checked_sub(a.checked_mul(y)?)?;
                content = num_integer::gcd(content, *x);
            }
            if content > 1 {
                for x in row.iter_mut().skip(c) {
                    *x /= content;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Some(r)
}

pub(crate) fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}
