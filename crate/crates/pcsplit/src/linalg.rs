//! Dense exact linear algebra over the rationals.
//!
//! Matrices here are small (at most a few dozen rows), so plain rational
//! Gauss–Jordan with deterministic pivoting is both fast enough and simple to
//! audit. Ranks and kernels are exact; nothing in this module rounds.

use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::{One, Zero};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Rat>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        debug_assert!(data.iter().all(|r| r.len() == cols));
        QMatrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn is_skew(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if self.data[i][j] != -self.data[j][i].clone() {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.data[j][i].clone())
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        QMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                if !self.data[i][k].is_zero() && !other.data[k][j].is_zero() {
                    acc += &self.data[i][k] * &other.data[k][j];
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix::from_fn(self.rows, self.cols, |i, j| {
            &self.data[i][j] + &other.data[i][j]
        })
    }

    pub fn scale(&self, s: &Rat) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self.data[i][j] * s)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in &mut m[row] {
                *x = &*x * &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..self.cols {
                        let delta = &factor * &m[row][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (QMatrix::from_rows(m), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row_idx, &col) in pivots.iter().enumerate() {
                v[col] = Some(row_idx);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row_idx) = slot {
                    vec[col] = -r.data[*row_idx][free].clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if self.rows != self.cols {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let mut aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.data[i][j].clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularMatrix);
        }
        aug = r;
        Ok(QMatrix::from_fn(n, n, |i, j| aug.data[i][j + n].clone()))
    }
}

/// Incrementally maintained row space, used to accumulate spans of kernels.
#[derive(Debug, Clone, Default)]
pub struct RowSpan {
    rows: Vec<Vec<Rat>>, // kept in reduced echelon form
}

impl RowSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    let delta = &factor * r;
                    *x = &*x - &delta;
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip();
        for x in &mut v {
            *x = &*x * &inv;
        }
        // Reduce existing rows against the new one, keep rows sorted by lead.
        for row in &mut self.rows {
            if !row[lead].is_zero() {
                let factor = row[lead].clone();
                for (x, nv) in row.iter_mut().zip(&v) {
                    let delta = &factor * nv;
                    *x = &*x - &delta;
                }
            }
        }
        let pos = self
            .rows
            .partition_point(|row| row.iter().position(|x| !x.is_zero()).unwrap() < lead);
        self.rows.insert(pos, v);
        true
    }

    /// Does the span contain `v`?
    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    let delta = &factor * r;
                    *x = &*x - &delta;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel_of_singular_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        let img = a.mul_vec(&ker[0]);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn row_span_accumulates() {
        let mut s = RowSpan::new();
        assert!(s.insert(vec![rat(1), rat(2), rat(0)]));
        assert!(s.insert(vec![rat(0), rat(1), rat(1)]));
        assert!(!s.insert(vec![rat(1), rat(3), rat(1)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat(2), rat(5), rat(1)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn skew_detection() {
        assert!(m(&[&[0, 3], &[-3, 0]]).is_skew());
        assert!(!m(&[&[0, 3], &[3, 0]]).is_skew());
        assert!(!m(&[&[1, 0], &[0, 0]]).is_skew());
    }
}
