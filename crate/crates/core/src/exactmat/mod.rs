//! Dense matrices over a prime field.
//!
//! Conventions used throughout the crate:
//!
//! * A matrix `M` with `n` rows and `p` columns is the operator
//!   `F^p -> F^n`, acting on column vectors.
//! * The vectorization `vec(M)` is row-major: coordinate `i * p + j` holds
//!   entry `(i, j)`. Every canonical form of a matrix space is taken with
//!   respect to this embedding.
//! * Indices are 0-based in the API. The text format and the CLI use
//!   1-based positions only where they say so ([`Matrix::matrix_unit`]).

pub mod bits;

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::gf::{Elem, FieldCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index ({row}, {col}) out of range for a {nrows}x{ncols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        nrows: usize,
        ncols: usize,
    },
    #[error("range out of bounds: rows {rows:?}, cols {cols:?} in a {nrows}x{ncols} matrix")]
    RangeOutOfBounds {
        rows: Range<usize>,
        cols: Range<usize>,
        nrows: usize,
        ncols: usize,
    },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}

/// Dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Elem>,
    field: FieldCtx,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<F_{}>[{}]", self.field.q(), self)
    }
}

/// The text format: rows separated by `;`, entries by whitespace.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.ncols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: FieldCtx, nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
            field,
        }
    }

    pub fn identity(field: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod q.
    pub fn from_vec(
        field: FieldCtx,
        nrows: usize,
        ncols: usize,
        data: Vec<Elem>,
    ) -> Result<Self, MatrixError> {
        if data.len() != nrows * ncols {
            return Err(MatrixError::ShapeMismatch(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                data.len()
            )));
        }
        let q = field.q();
        let data = data.into_iter().map(|x| x % q).collect();
        Ok(Matrix {
            nrows,
            ncols,
            data,
            field,
        })
    }

    /// Builds a matrix from signed integer rows; entries are reduced mod q.
    pub fn from_rows(field: FieldCtx, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::ShapeMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| field.reduce(x)))
            .collect();
        Ok(Matrix {
            nrows,
            ncols,
            data,
            field,
        })
    }

    /// Parses the text format, e.g. `"1 0; 0 1"`.
    pub fn parse(field: FieldCtx, text: &str) -> Result<Self, MatrixError> {
        let rows = text
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<i64>()
                            .map_err(|_| MatrixError::Parse(format!("bad entry {tok:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.iter().any(Vec::is_empty) {
            return Err(MatrixError::Parse(format!("empty row in {text:?}")));
        }
        Self::from_rows(field, &rows)
            .map_err(|_| MatrixError::Parse(format!("rows of unequal length in {text:?}")))
    }

    /// Column vector (an `n x 1` matrix).
    pub fn column(field: FieldCtx, v: &[Elem]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec()).expect("length matches")
    }

    /// Row vector (a `1 x p` matrix).
    pub fn row(field: FieldCtx, v: &[Elem]) -> Self {
        Self::from_vec(field, 1, v.len(), v.to_vec()).expect("length matches")
    }

    /// The matrix unit `E_{i,j}` with 1-based position `(i, j)`.
    pub fn matrix_unit(
        field: FieldCtx,
        nrows: usize,
        ncols: usize,
        i: usize,
        j: usize,
    ) -> Result<Self, MatrixError> {
        if i == 0 || j == 0 || i > nrows || j > ncols {
            return Err(MatrixError::IndexOutOfRange {
                row: i,
                col: j,
                nrows,
                ncols,
            });
        }
        let mut m = Self::zeros(field, nrows, ncols);
        m.set(i - 1, j - 1, 1);
        Ok(m)
    }

    /// The operator `f ⊗ y : x ↦ f(x) y`, i.e. the outer product `y f`
    /// of the column `y` (length n) with the row `f` (length p).
    pub fn rank_one(field: FieldCtx, f: &[Elem], y: &[Elem]) -> Self {
        let mut m = Self::zeros(field, y.len(), f.len());
        for (i, &yi) in y.iter().enumerate() {
            for (j, &fj) in f.iter().enumerate() {
                m.set(i, j, field.mul(yi, fj));
            }
        }
        m
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    #[inline]
    pub fn field(&self) -> FieldCtx {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        debug_assert!(v < self.field.q());
        self.data[i * self.ncols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[Elem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<Elem> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    /// Row-major vectorization.
    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Elem> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.shape() != other.shape() || self.field != other.field {
            return Err(MatrixError::ShapeMismatch(format!(
                "{}x{} over F_{} vs {}x{} over F_{}",
                self.nrows,
                self.ncols,
                self.field.q(),
                other.nrows,
                other.ncols,
                other.field.q()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same_shape(other)?;
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_same_shape(other)?;
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { data, ..*self }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.ncols != other.nrows || self.field != other.field {
            return Err(MatrixError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    let v = f.mul_add(out.get(i, j), a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M x` for a column vector given as a slice.
    pub fn apply(&self, x: &[Elem]) -> Result<Vec<Elem>, MatrixError> {
        if x.len() != self.ncols {
            return Err(MatrixError::ShapeMismatch(format!(
                "vector of length {} for a {}x{} matrix",
                x.len(),
                self.nrows,
                self.ncols
            )));
        }
        let f = self.field;
        Ok((0..self.nrows)
            .map(|i| {
                self.row_slice(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect())
    }

    /// Row vector times matrix, `Y^T M`.
    pub fn apply_left(&self, y: &[Elem]) -> Result<Vec<Elem>, MatrixError> {
        self.transpose().apply(y)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (nrows, ncols) = self.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(pr) = (r..nrows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..ncols {
                    self.data.swap(pr * ncols + j, r * ncols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..ncols {
                    let v = f.mul(self.get(r, j), inv);
                    self.set(r, j, v);
                }
            }
            for i in 0..nrows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..ncols {
                    let v = f.mul_add(self.get(i, j), neg, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.field.is_binary() && self.ncols <= 64 {
            let mut rows: Vec<u64> = (0..self.nrows)
                .map(|i| {
                    self.row_slice(i)
                        .iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, &x)| acc | ((x as u64) << j))
                })
                .collect();
            return bits::rank_rows(&mut rows);
        }
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column of the RREF.
    pub fn right_kernel(&self) -> Vec<Vec<Elem>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.ncols];
                x[free] = 1;
                for (k, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(k, free));
                }
                x
            })
            .collect()
    }

    /// Basis of `{Y : Y^T M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<Elem>> {
        self.transpose().right_kernel()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        aug.block(0..n, n..2 * n).ok()
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }

    /// The submatrix on the given 0-based row and column ranges.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Result<Matrix, MatrixError> {
        if rows.start > rows.end
            || cols.start > cols.end
            || rows.end > self.nrows
            || cols.end > self.ncols
        {
            return Err(MatrixError::RangeOutOfBounds {
                rows,
                cols,
                nrows: self.nrows,
                ncols: self.ncols,
            });
        }
        let mut out = Self::zeros(self.field, rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out.set(oi, oj, self.get(i, j));
            }
        }
        Ok(out)
    }

    fn border_check(&self) -> Result<(), MatrixError> {
        if self.nrows == 0 || self.ncols == 0 {
            return Err(MatrixError::RangeOutOfBounds {
                rows: 0..self.nrows,
                cols: 0..self.ncols,
                nrows: self.nrows,
                ncols: self.ncols,
            });
        }
        Ok(())
    }

    /// `K(M)`: the top-left `(n-1) x (p-1)` block.
    pub fn k_block(&self) -> Result<Matrix, MatrixError> {
        self.border_check()?;
        self.block(0..self.nrows - 1, 0..self.ncols - 1)
    }

    /// `C(M)`: the last column without its bottom entry.
    pub fn c_block(&self) -> Result<Matrix, MatrixError> {
        self.border_check()?;
        self.block(0..self.nrows - 1, self.ncols - 1..self.ncols)
    }

    /// `H(M)`: the first `n-1` rows.
    pub fn h_block(&self) -> Result<Matrix, MatrixError> {
        self.border_check()?;
        self.block(0..self.nrows - 1, 0..self.ncols)
    }

    /// `R(M)`: the last row.
    pub fn r_block(&self) -> Result<Matrix, MatrixError> {
        self.border_check()?;
        self.block(self.nrows - 1..self.nrows, 0..self.ncols)
    }
}

/// The trace pairing `tr(v u)` of `u` (n x p) with `v` (p x n).
pub fn trace_pair(u: &Matrix, v: &Matrix) -> Result<Elem, MatrixError> {
    if u.nrows() != v.ncols() || u.ncols() != v.nrows() || u.field() != v.field() {
        return Err(MatrixError::ShapeMismatch(format!(
            "trace pairing needs n x p and p x n, got {}x{} and {}x{}",
            u.nrows(),
            u.ncols(),
            v.nrows(),
            v.ncols()
        )));
    }
    let f = u.field();
    let mut acc = 0;
    for i in 0..u.nrows() {
        for j in 0..u.ncols() {
            acc = f.mul_add(acc, v.get(j, i), u.get(i, j));
        }
    }
    Ok(acc)
}

/// Dot product of two equal-length vectors.
pub fn dot(field: FieldCtx, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.mul_add(acc, x, y))
}

/// Scales a nonzero vector so that its first nonzero coordinate is 1.
/// The zero vector is returned unchanged.
pub fn normalize_projective(field: FieldCtx, v: &[Elem]) -> Vec<Elem> {
    match v.iter().find(|&&x| x != 0) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|&x| field.mul(x, inv)).collect()
        }
    }
}

/// All vectors of `F_q^len` in lexicographic order.
pub fn all_vectors(field: FieldCtx, len: usize) -> impl Iterator<Item = Vec<Elem>> {
    let q = field.q();
    let mut next = Some(vec![0; len]);
    std::iter::from_fn(move || {
        let out = next.take()?;
        let mut succ = out.clone();
        for k in (0..len).rev() {
            if succ[k] + 1 < q {
                succ[k] += 1;
                next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(out)
    })
}

/// One representative per line of `F_q^len` (first nonzero coordinate 1),
/// in lexicographic order.
pub fn projective_points(field: FieldCtx, len: usize) -> impl Iterator<Item = Vec<Elem>> {
    all_vectors(field, len).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}
