//! Dense non-negative matrices.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::vector::lq_norm;

/// A finite dense matrix with finite non-negative entries, stored row-major.
///
/// Indices are zero-based. `col_support = Some(k0)` records that every column
/// with index `>= k0` is identically zero, i.e. `a[j][k] = 0` for `k >= k0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonNegMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    col_support: Option<usize>,
}

impl NonNegMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let expected = rows * cols;
        if data.len() != expected {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                expected,
                got: data.len(),
            });
        }
        if let Some(i) = data.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidEntry {
                row: i / cols,
                col: i % cols,
                value: data[i],
            });
        }
        Ok(Self {
            rows,
            cols,
            data,
            col_support: None,
        })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (j, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::RaggedRow {
                    row: j,
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for k in 0..cols {
                data.push(f(j, k));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |j, k| if j == k { 1.0 } else { 0.0 })
    }

    /// Attaches a column-support bound `k0` (count of leading columns that
    /// may be non-zero). Fails if some entry beyond it is non-zero.
    pub fn with_col_support(mut self, k0: usize) -> Result<Self> {
        if k0 == 0 || k0 > self.cols {
            return Err(Error::InvalidColSupport {
                support: k0,
                cols: self.cols,
            });
        }
        for j in 0..self.rows {
            for k in k0..self.cols {
                if self.get(j, k) != 0.0 {
                    return Err(Error::ColSupportViolation {
                        row: j,
                        col: k,
                        support: k0,
                    });
                }
            }
        }
        self.col_support = Some(k0);
        Ok(self)
    }

    pub fn col_support(&self) -> Option<usize> {
        self.col_support
    }

    /// Smallest `k0 >= 1` such that all columns from `k0` on are zero.
    pub fn effective_col_support(&self) -> usize {
        (0..self.cols)
            .rev()
            .find(|&k| (0..self.rows).any(|j| self.get(j, k) != 0.0))
            .map_or(1, |k| k + 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.data[j * self.cols + k]
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.cols..(j + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        (0..self.rows).map(|j| self.get(j, k)).collect()
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    /// `A x`. Panics if `x.len() != cols`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        self.row_iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `A^t w`. Panics if `w.len() != rows`.
    pub fn apply_transpose(&self, w: &[f64]) -> Vec<f64> {
        assert_eq!(w.len(), self.rows, "vector length must equal row count");
        let mut out = vec![0.0; self.cols];
        for (r, &wj) in self.row_iter().zip(w) {
            if wj == 0.0 {
                continue;
            }
            for (o, a) in out.iter_mut().zip(r) {
                *o += a * wj;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for k in 0..self.cols {
            for j in 0..self.rows {
                data.push(self.get(j, k));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
            col_support: None,
        }
    }

    /// `c A` for `c >= 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        let mut m = Self::new(
            self.rows,
            self.cols,
            self.data.iter().map(|a| c * a).collect(),
        )?;
        m.col_support = self.col_support;
        Ok(m)
    }

    /// `S_k = sum_j a[j][k]` for every column.
    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.cols)
            .map(|k| (0..self.rows).map(|j| self.get(j, k)).sum())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.row_iter().map(|r| r.iter().sum()).collect()
    }

    pub fn column_q_norms(&self, q: Exponent) -> Vec<f64> {
        (0..self.cols)
            .map(|k| lq_norm(&self.column(k), q))
            .collect()
    }

    pub fn row_q_norms(&self, q: Exponent) -> Vec<f64> {
        self.row_iter().map(|r| lq_norm(r, q)).collect()
    }
}

/// Position and value of the first maximum (smallest index on ties).
pub(crate) fn argmax(v: &[f64]) -> (usize, f64) {
    v.iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, &x)| {
            if x > bv {
                (i, x)
            } else {
                (bi, bv)
            }
        })
}
