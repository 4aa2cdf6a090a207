//! Exact dense linear algebra over Q and F_p.
//!
//! Everything here is fraction-free-exact: Gauss–Jordan elimination with an
//! accumulated transform, deterministic linear solvers (free variables pinned
//! to zero), rank factorization, and the group inverse computed through it.
//! Matrices with zero rows or columns are legal values; they show up as the
//! factors of the zero matrix.

use crate::scalar::{FieldKind, Scalar};
use std::fmt;

/// Dense row-major matrix over a fixed scalar field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldKind,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldKind, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        assert!(
            entries.iter().all(|e| e.field() == field),
            "entry field mismatch"
        );
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldKind) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldKind) -> Self {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldKind,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, field, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).neg()
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, self.field, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// The submatrix made of the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), self.field, |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(row, j).mul(factor);
            self.set(row, j, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(target, j).sub(&factor.mul(self.get(source, j)));
            self.set(target, j, v);
        }
    }

    /// Reduced row echelon form with the row operations accumulated into an
    /// invertible transform, so `transform * self == reduced`.
    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(self.rows, self.field);
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !reduced.get(r, col).is_zero()) else {
                continue;
            };
            reduced.swap_rows(row, pivot_row);
            transform.swap_rows(row, pivot_row);
            let scale = reduced
                .get(row, col)
                .inv()
                .expect("pivot is nonzero by selection");
            reduced.scale_row(row, &scale);
            transform.scale_row(row, &scale);
            for r in 0..self.rows {
                if r != row && !reduced.get(r, col).is_zero() {
                    let factor = reduced.get(r, col).clone();
                    reduced.subtract_scaled_row(r, row, &factor);
                    transform.subtract_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A particular solution `X` of `self * X = rhs`, or `None` when the
    /// system is inconsistent. Free variables are set to zero, which makes
    /// the answer deterministic.
    pub fn solve_right(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let r = self.rref();
        let c = r.transform.mul(rhs);
        // Rows of the reduced system below the rank are all-zero on the left;
        // any nonzero right-hand side there means inconsistency.
        for i in r.rank..self.rows {
            for j in 0..rhs.cols {
                if !c.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols, self.field);
        for (i, &pivot_col) in r.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pivot_col, j, c.get(i, j).clone());
            }
        }
        Some(x)
    }

    /// A particular solution `X` of `X * self = rhs`, via the transpose.
    pub fn solve_left(&self, rhs: &Matrix) -> Option<Matrix> {
        self.transpose()
            .solve_right(&rhs.transpose())
            .map(|x| x.transpose())
    }

    /// Inverse of a square matrix, or `None` when singular. The 0x0 matrix is
    /// its own inverse.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse needs a square matrix");
        let r = self.rref();
        if r.rank == self.rows {
            Some(r.transform)
        } else {
            None
        }
    }

    /// Full-rank factorization `self = left * right` with `left` the pivot
    /// columns of `self` and `right` the nonzero rows of the RREF. The zero
    /// matrix factors through rank 0 (empty factors).
    pub fn rank_factorization(&self) -> RankFactorization {
        let r = self.rref();
        let left = self.select_columns(&r.pivots);
        let right = Matrix::from_fn(r.rank, self.cols, self.field, |i, j| {
            r.reduced.get(i, j).clone()
        });
        debug_assert_eq!(left.mul(&right), *self);
        RankFactorization { left, right }
    }

    /// Group inverse: the unique `Y` with `AYA = A`, `YAY = Y`, `AY = YA`.
    /// Exists iff rank(A) = rank(A^2); computed as `L (RL)^-2 R` from a rank
    /// factorization `A = LR`. The axioms are re-verified before returning.
    pub fn group_inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "group inverse needs a square matrix");
        let f = self.rank_factorization();
        let core = f.right.mul(&f.left);
        let core_inv = core.inverse()?;
        let y = f.left.mul(&core_inv).mul(&core_inv).mul(&f.right);
        assert_eq!(self.mul(&y).mul(self), *self);
        assert_eq!(y.mul(self).mul(&y), y);
        assert_eq!(self.mul(&y), y.mul(self));
        Some(y)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of Gauss–Jordan elimination.
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

/// `left * right` full-rank factorization; the common dimension is the rank.
pub struct RankFactorization {
    pub left: Matrix,
    pub right: Matrix,
}

impl RankFactorization {
    pub fn rank(&self) -> usize {
        self.left.cols()
    }
}
