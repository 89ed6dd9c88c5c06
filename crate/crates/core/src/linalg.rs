//! Small dense matrices over the Gaussian integers.

use crate::exact_state::GaussianInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GaussianInt::ZERO; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianInt) -> Self {
        let data = (0..rows * cols).map(|n| f(n / cols, n % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> GaussianInt {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: GaussianInt) {
        self.data[r * self.cols + c] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(GaussianInt::ZERO, |acc, k| acc + self.get(r, k) * rhs.get(k, c))
        })
    }

    pub fn scale(&self, s: GaussianInt) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> GaussianInt {
        (0..self.rows.min(self.cols)).fold(GaussianInt::ZERO, |acc, i| acc + self.get(i, i))
    }

    /// Rank by fraction-free (Bareiss) elimination.
    ///
    /// After each pivot step every remaining entry is a minor of the input,
    /// so the division by the previous pivot is exact in `Z[i]`.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut prev = GaussianInt::ONE;
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(pivot_row) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != rank {
                for c in 0..a.cols {
                    a.data.swap(pivot_row * a.cols + c, rank * a.cols + c);
                }
            }
            let pivot = a.get(rank, col);
            for r in rank + 1..a.rows {
                let lead = a.get(r, col);
                for c in col + 1..a.cols {
                    let num = pivot * a.get(r, c) - lead * a.get(rank, c);
                    let q = num
                        .div_exact(prev)
                        .expect("Bareiss step produced an inexact quotient");
                    a.set(r, c, q);
                }
                a.set(r, col, GaussianInt::ZERO);
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}
