//! Dense matrices over exact rational scalars.
//!
//! Sizes here are "desk scale" (dimensions in the tens), so everything is a
//! dense row-major `Vec` and the algorithms are the classical cubic ones.
//! Row reduction is exact Gauss–Jordan with leading-one normalization; ranks,
//! kernels, and solvability are therefore exact, never thresholded.
//!
//! Conventions used throughout the crate:
//! * matrices act on column vectors, so a map from an `n`-dimensional space
//!   to an `m`-dimensional one is stored as an `m x n` matrix;
//! * [`Matrix::kernel_basis`] returns its basis vectors as the *columns* of
//!   the result;
//! * all routines are deterministic: pivots are chosen by first nonzero
//!   entry, never by magnitude.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{format_scalar, Scalar};
use crate::{Error, Result};

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Zero matrix of the given shape. Either dimension may be zero.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::Shape {
                    op: "from_rows",
                    detail: format!("row {i} has {} entries, expected {ncols}", r.len()),
                });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix by evaluating `f` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Column `c` as an owned vector.
    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row-major flattening of all entries.
    pub fn to_vec_rowmajor(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Builds an `rows x 1` column matrix from a vector.
    pub fn column(v: Vec<Scalar>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    /// Keeps only the listed columns, in the given order.
    /// The contiguous block of `row_len x col_len` entries starting at
    /// `(row_start, col_start)`.
    pub fn submatrix(
        &self,
        row_start: usize,
        row_len: usize,
        col_start: usize,
        col_len: usize,
    ) -> Matrix {
        assert!(row_start + row_len <= self.rows && col_start + col_len <= self.cols);
        Matrix::from_fn(row_len, col_len, |r, c| {
            self.at(row_start + r, col_start + c).clone()
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self.at(r, idx[c]).clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape("add", other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape("sub", other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// Matrix product `self * other` (apply `other` first when matrices act
    /// on column vectors).
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "mul",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                op: "apply",
                detail: format!("vector of length {} against {} columns", v.len(), self.cols),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Scalar::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    /// Horizontal stack `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Shape {
                op: "hstack",
                detail: format!("{} rows vs {} rows", self.rows, other.rows),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    /// Vertical stack, `self` on top.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Shape {
                op: "vstack",
                detail: format!("{} cols vs {} cols", self.cols, other.cols),
            });
        }
        Ok(Matrix::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        }))
    }

    /// Block-diagonal assembly of the given matrices.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    *out.at_mut(r0 + r, c0 + c) = b.at(r, c).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Sum of diagonal entries; the matrix must be square.
    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape {
                op: "trace",
                detail: format!("{}x{}", self.rows, self.cols),
            });
        }
        Ok((0..self.rows).fold(Scalar::zero(), |acc, i| acc + self.at(i, i)))
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// The result has leading ones, zeros above and below each pivot, and the
    /// pivot columns listed in increasing order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..m.cols {
            // Find the first row at or below `lead` with a nonzero entry.
            let Some(p) = (lead..m.rows).find(|&r| !m.at(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.at(lead, c).recip();
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.at(r, c).is_zero() {
                    let f = m.at(r, c).clone();
                    m.row_axpy(r, lead, &-f);
                }
            }
            pivots.push(c);
            lead += 1;
            if lead == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{ v : self * v = 0 }`, returned as the
    /// columns of a `cols x nullity` matrix.
    ///
    /// The basis is the canonical one obtained by setting each free variable
    /// to 1 in turn (free columns in increasing order), so the result is
    /// deterministic.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zero(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            *out.at_mut(f, k) = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                *out.at_mut(p, k) = -r.at(i, f).clone();
            }
        }
        out
    }

    /// Basis of the left kernel `{ w : w * self = 0 }`, returned as the rows
    /// of a `(rows - rank) x rows` matrix.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Columns of `self` that form a basis of the column space (the pivot
    /// columns of the row reduction), in increasing column order.
    pub fn column_space_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Solves `self * x = rhs` for all columns of `rhs` simultaneously.
    ///
    /// Returns `None` if any column is inconsistent. Free variables are set
    /// to zero, so the particular solution is deterministic.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(
            self.rows,
            rhs.rows(),
            "solve_matrix: lhs has {} rows, rhs has {}",
            self.rows,
            rhs.rows()
        );
        let aug = self.hstack(rhs).expect("row counts checked above");
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None; // a pivot landed in the right-hand block
        }
        let mut x = Matrix::zero(self.cols, rhs.cols());
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols() {
                *x.at_mut(p, c) = r.at(i, self.cols + c).clone();
            }
        }
        Some(x)
    }

    /// Solves `self * x = b` for a single right-hand side.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let rhs = Matrix::column(b.to_vec());
        self.solve_matrix(&rhs).map(|x| x.col(0))
    }

    /// Two-sided inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.rows))?;
        // Solvability of AX = I for square A already forces invertibility.
        Some(x)
    }

    fn same_shape(&self, op: &'static str, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                op,
                detail: format!(
                    "{}x{} vs {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).clone();
            *self.at_mut(r, c) = v * k;
        }
    }

    /// row[dst] += k * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(src, c).clone();
            *self.at_mut(dst, c) += v * k;
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
