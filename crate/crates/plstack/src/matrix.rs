//! Sparse integer matrices and Smith normal form.

use std::collections::BTreeMap;

use crate::num::IntScalar;

/// A sparse integer matrix with explicit bounds; reads outside the bounds
/// panic rather than zero-fill.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        let mut m = Matrix::new(nr, nc);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        self.entries.get(&(r, c)).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut t = Matrix::new(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.set(c, r, v.clone());
        }
        t
    }

    pub fn multiply(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::new(self.rows, other.cols);
        for (i, k, a) in self.iter() {
            for j in 0..other.cols {
                let b = other.get(k, j);
                if !b.is_zero() {
                    out.add_to(i, j, a.clone() * b);
                }
            }
        }
        out
    }

    /// Smith normal form: the invariant factors `d_1 | d_2 | … | d_r`.
    pub fn smith_normal_form(&self) -> SnfResult<T> {
        let mut work: Vec<Vec<T>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        let factors = snf_in_place(&mut work);
        SnfResult {
            rank: factors.len(),
            invariant_factors: factors,
        }
    }

    pub fn rank(&self) -> usize {
        self.smith_normal_form().rank
    }
}

/// Invariant factors of an integer matrix, with `d_i | d_{i+1}` and all
/// factors >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub invariant_factors: Vec<T>,
    pub rank: usize,
}

impl<T: IntScalar> SnfResult<T> {
    /// Invariant factors strictly greater than one (the torsion part).
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > T::one())
            .cloned()
            .collect()
    }
}

/// Classical elimination with smallest-pivot selection to moderate entry
/// growth. Deterministic: ties break on row-major position.
fn snf_in_place<T: IntScalar>(a: &mut [Vec<T>]) -> Vec<T> {
    let nr = a.len();
    let nc = if nr == 0 { 0 } else { a[0].len() };
    let mut factors = Vec::new();
    let mut k = 0;

    while k < nr.min(nc) {
        let Some((pi, pj)) = smallest_nonzero(a, k) else {
            break;
        };
        swap_rows(a, k, pi);
        swap_cols(a, k, pj);

        loop {
            // shrink the pivot with a Euclidean step whenever something in
            // its row or column is not a multiple of it
            if let Some(i) = (k + 1..nr).find(|&i| !(a[i][k].clone() % a[k][k].clone()).is_zero())
            {
                let q = a[i][k].clone() / a[k][k].clone();
                row_sub(a, i, k, &q);
                swap_rows(a, k, i);
                continue;
            }
            if let Some(j) = (k + 1..nc).find(|&j| !(a[k][j].clone() % a[k][k].clone()).is_zero())
            {
                let q = a[k][j].clone() / a[k][k].clone();
                col_sub(a, j, k, &q);
                swap_cols(a, k, j);
                continue;
            }
            // clear the column and row (all entries are exact multiples now)
            for i in k + 1..nr {
                if !a[i][k].is_zero() {
                    let q = a[i][k].clone() / a[k][k].clone();
                    row_sub(a, i, k, &q);
                }
            }
            for j in k + 1..nc {
                if !a[k][j].is_zero() {
                    let q = a[k][j].clone() / a[k][k].clone();
                    col_sub(a, j, k, &q);
                }
            }
            // enforce divisibility into the remaining block
            let offender = (k + 1..nr)
                .flat_map(|i| (k + 1..nc).map(move |j| (i, j)))
                .find(|&(i, j)| !(a[i][j].clone() % a[k][k].clone()).is_zero());
            match offender {
                Some((i, _)) => {
                    // fold row i into row k and restart the reduction
                    let (dst, src) = two_rows(a, k, i);
                    for (d, s) in dst.iter_mut().zip(src.iter()).skip(k) {
                        *d = d.clone() + s.clone();
                    }
                }
                None => break,
            }
        }

        let d = a[k][k].clone().abs();
        debug_assert!(!d.is_zero());
        factors.push(d);
        k += 1;
    }

    debug_assert!(factors
        .windows(2)
        .all(|w| (w[1].clone() % w[0].clone()).is_zero()));
    factors
}

fn smallest_nonzero<T: IntScalar>(a: &[Vec<T>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((m, _, _)) if *m <= mag => {}
                _ => best = Some((mag, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_rows<T>(a: &mut [Vec<T>], i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
    }
}

fn swap_cols<T>(a: &mut [Vec<T>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Disjoint mutable/shared access to rows `i` and `j`, `i != j`.
fn two_rows<T>(a: &mut [Vec<T>], i: usize, j: usize) -> (&mut Vec<T>, &Vec<T>) {
    assert_ne!(i, j);
    if i < j {
        let (lo, hi) = a.split_at_mut(j);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&mut hi[0], &lo[j])
    }
}

/// row_i -= q * row_k
fn row_sub<T: IntScalar>(a: &mut [Vec<T>], i: usize, k: usize, q: &T) {
    let (dst, src) = two_rows(a, i, k);
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d = d.clone() - s.clone() * q.clone();
    }
}

/// col_j -= q * col_k
fn col_sub<T: IntScalar>(a: &mut [Vec<T>], j: usize, k: usize, q: &T) {
    for row in a.iter_mut() {
        let v = row[k].clone() * q.clone();
        row[j] = row[j].clone() - v;
    }
}
