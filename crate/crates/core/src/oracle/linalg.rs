//! Dense matrices over the rationals.
//!
//! Entries are arbitrary precision so no rank or kernel computation can be
//! corrupted by overflow. Ranks use fraction-free (Bareiss) elimination on
//! integer rows; kernels and solves use reduced row echelon form.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer rows; every row must have the same length `cols`.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&v| Q::from_integer(v.into())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn column(&self, c: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |r, _| self[(r, c)].clone())
    }

    /// Side-by-side concatenation; all blocks must share a row count.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack row mismatch");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out[(r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    /// Block diagonal sum.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out[(r, c)] = a[(r, c)].clone();
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out[(a.rows + r, a.cols + c)] = b[(r, c)].clone();
            }
        }
        out
    }

    /// Rank by fraction-free elimination over the integers.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|r| self.integer_row(r)).collect();
        bareiss_rank(&mut a, self.cols)
    }

    // Row scaled by the lcm of its denominators.
    fn integer_row(&self, r: usize) -> Vec<BigInt> {
        let row = &self.data[r * self.cols..(r + 1) * self.cols];
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        row.iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a[(row, col)].recip();
            for c in col..a.cols {
                let v = &a[(row, c)] * &inv;
                a[(row, c)] = v;
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in col..a.cols {
                    if a[(row, c)].is_zero() {
                        continue;
                    }
                    let v = &a[(r, c)] - &factor * &a[(row, c)];
                    a[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the null space as columns, one per free variable.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Q::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -r[(prow, f)].clone();
            }
        }
        basis
    }

    /// Solves `self * x = rhs`, returning `None` when inconsistent.
    ///
    /// When `self` has dependent columns the free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve row mismatch");
        let (r, pivots) = Matrix::hstack(&[self, rhs]).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = r[(prow, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Indices of standard basis vectors completing the column space to
    /// the whole ambient space.
    pub fn complement_of_column_space(&self) -> Vec<usize> {
        let id = Matrix::identity(self.rows);
        let (_, pivots) = Matrix::hstack(&[self, &id]).rref();
        pivots
            .into_iter()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect()
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }
}

/// Row echelon rank of an integer matrix with Bareiss' exact divisions.
#[allow(clippy::needless_range_loop)]
pub fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            let lead = a[r][col].clone();
            for c in col + 1..cols {
                let v = (&a[r][c] * &pivot - &lead * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;

    fn index(&self, (r, c): (usize, usize)) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    if rhs[(k, c)].is_zero() {
                        continue;
                    }
                    let v = &out[(r, c)] + a * &rhs[(k, c)];
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}
