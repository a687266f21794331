//! Linear and affine subspaces of `Mat_{n,p}(F_q)` in canonical form.
//!
//! A linear space is stored as the reduced row echelon basis of the
//! vectorizations of its elements. An affine space stores its direction and
//! a representative whose coordinates vanish on every pivot column of the
//! direction. Both forms are unique, so equality of spaces is plain
//! structural equality.

use std::fmt;

use thiserror::Error;

use crate::exactmat::{Matrix, MatrixError};
use crate::gf::{Elem, FieldCtx};

/// Default bound on `q^dim` for anything that enumerates elements.
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration of {count} elements exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u64 },
    #[error("transformation matrix is not invertible")]
    SingularTransform,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("space file: {0}")]
    Format(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Number of elements of a `dim`-dimensional space, checked against `cap`.
pub fn checked_count(q: u32, dim: usize, cap: u64) -> Result<u64, SpaceError> {
    let count = (q as u128)
        .checked_pow(dim as u32)
        .unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(SpaceError::CapExceeded { count, cap });
    }
    Ok(count as u64)
}

/// A linear subspace of `Mat_{n,p}(F_q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMatrixSpace {
    n: usize,
    p: usize,
    /// `dim x np`, in reduced row echelon form.
    coords: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearMatrixSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearMatrixSpace({}x{} over F_{}, dim {}: [{}])",
            self.n,
            self.p,
            self.field().q(),
            self.dim(),
            self.coords
        )
    }
}

impl LinearMatrixSpace {
    /// Canonicalizes an arbitrary set of vectorized generators (rows).
    pub(crate) fn from_coordinate_rows(n: usize, p: usize, rows: Matrix) -> Self {
        debug_assert_eq!(rows.ncols(), n * p);
        let (reduced, pivots) = rows.rref();
        let coords = reduced
            .block(0..pivots.len(), 0..n * p)
            .expect("rank rows exist");
        LinearMatrixSpace {
            n,
            p,
            coords,
            pivots,
        }
    }

    /// Wraps rows already known to be in reduced row echelon form.
    pub(crate) fn from_rref_unchecked(
        n: usize,
        p: usize,
        coords: Matrix,
        pivots: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(coords.rref().0, coords);
        LinearMatrixSpace {
            n,
            p,
            coords,
            pivots,
        }
    }

    pub fn zero(field: FieldCtx, n: usize, p: usize) -> Self {
        LinearMatrixSpace {
            n,
            p,
            coords: Matrix::zeros(field, 0, n * p),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldCtx, n: usize, p: usize) -> Self {
        LinearMatrixSpace {
            n,
            p,
            coords: Matrix::identity(field, n * p),
            pivots: (0..n * p).collect(),
        }
    }

    /// Canonical linear span of the generators.
    pub fn span(
        field: FieldCtx,
        n: usize,
        p: usize,
        generators: &[Matrix],
    ) -> Result<Self, SpaceError> {
        let mut data = Vec::with_capacity(generators.len() * n * p);
        for g in generators {
            if g.shape() != (n, p) || g.field() != field {
                return Err(SpaceError::ShapeMismatch(format!(
                    "generator {}x{} over F_{} in a space of {n}x{p} over F_{}",
                    g.nrows(),
                    g.ncols(),
                    g.field().q(),
                    field.q()
                )));
            }
            data.extend_from_slice(g.as_slice());
        }
        let rows = Matrix::from_vec(field, generators.len(), n * p, data)?;
        Ok(Self::from_coordinate_rows(n, p, rows))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.p)
    }

    #[inline]
    pub fn field(&self) -> FieldCtx {
        self.coords.field()
    }

    /// Vectorized basis, one row per basis element, in RREF.
    pub fn coords(&self) -> &Matrix {
        &self.coords
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The `k`-th canonical basis element as an `n x p` matrix.
    pub fn basis_element(&self, k: usize) -> Matrix {
        Matrix::from_vec(self.field(), self.n, self.p, self.coords.row_slice(k).to_vec())
            .expect("row has length np")
    }

    pub fn basis(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|k| self.basis_element(k)).collect()
    }

    fn check_member_shape(&self, m: &Matrix) -> Result<(), SpaceError> {
        if m.shape() != (self.n, self.p) || m.field() != self.field() {
            return Err(SpaceError::ShapeMismatch(format!(
                "{}x{} matrix over F_{} against a {}x{} space over F_{}",
                m.nrows(),
                m.ncols(),
                m.field().q(),
                self.n,
                self.p,
                self.field().q()
            )));
        }
        Ok(())
    }

    /// Reduces a vectorized matrix modulo the space, zeroing every pivot
    /// coordinate.
    pub(crate) fn reduce(&self, v: &mut [Elem]) {
        let f = self.field();
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in v.iter_mut().zip(self.coords.row_slice(k)) {
                *x = f.mul_add(*x, neg, b);
            }
        }
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool, SpaceError> {
        self.check_member_shape(m)?;
        let mut v = m.as_slice().to_vec();
        self.reduce(&mut v);
        Ok(v.iter().all(|&x| x == 0))
    }

    /// Coordinates of `m` in the canonical basis, `None` if `m` is outside.
    pub fn coordinates(&self, m: &Matrix) -> Result<Option<Vec<Elem>>, SpaceError> {
        if !self.contains(m)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&pc| m.as_slice()[pc]).collect()))
    }

    pub fn is_subspace_of(&self, other: &LinearMatrixSpace) -> Result<bool, SpaceError> {
        for b in self.basis() {
            if !other.contains(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn elements(&self, cap: u64) -> Result<Elements, SpaceError> {
        AffineMatrixSpace::linear(self.clone()).into_elements(cap)
    }

    pub fn max_rank(&self, cap: u64) -> Result<usize, SpaceError> {
        AffineMatrixSpace::linear(self.clone()).max_rank(cap)
    }

    /// The image `{P M Q : M in self}`.
    pub fn transform(&self, left: &Matrix, right: &Matrix) -> Result<Self, SpaceError> {
        check_transform(self.n, self.p, self.field(), left, right)?;
        let images = self
            .basis()
            .iter()
            .map(|b| left.mul(b)?.mul(right))
            .collect::<Result<Vec<_>, _>>()?;
        Self::span(self.field(), self.n, self.p, &images)
    }

    /// Matrices `Σ c_k B_k` of the space whose columns all lie in `span{y}`,
    /// obtained by solving the `p(n-1)` linear constraints on `c`.
    pub fn s_sub_y(&self, y: &[Elem]) -> Result<Self, SpaceError> {
        let (n, p) = (self.n, self.p);
        let f = self.field();
        if y.len() != n {
            return Err(SpaceError::ShapeMismatch(format!(
                "vector of length {} for {n}x{p} matrices",
                y.len()
            )));
        }
        let Some(r) = y.iter().position(|&x| x != 0) else {
            return Err(SpaceError::ZeroVector);
        };
        let d = self.dim();
        // Row (i, j), i != r: entry k is B_k[i,j] y_r - B_k[r,j] y_i.
        let mut constraints = Vec::with_capacity((n - 1) * p * d);
        for i in (0..n).filter(|&i| i != r) {
            for j in 0..p {
                for k in 0..d {
                    let row = self.coords.row_slice(k);
                    let a = f.mul(row[i * p + j], y[r]);
                    let b = f.mul(row[r * p + j], y[i]);
                    constraints.push(f.sub(a, b));
                }
            }
        }
        let system = Matrix::from_vec(f, (n - 1) * p, d, constraints)?;
        let solutions = system.right_kernel();
        let mut data = Vec::with_capacity(solutions.len() * n * p);
        for c in &solutions {
            let mut v = vec![0; n * p];
            for (k, &ck) in c.iter().enumerate() {
                if ck == 0 {
                    continue;
                }
                for (x, &b) in v.iter_mut().zip(self.coords.row_slice(k)) {
                    *x = f.mul_add(*x, ck, b);
                }
            }
            data.extend(v);
        }
        let rows = Matrix::from_vec(f, solutions.len(), n * p, data)?;
        Ok(Self::from_coordinate_rows(n, p, rows))
    }
}

fn check_transform(
    n: usize,
    p: usize,
    field: FieldCtx,
    left: &Matrix,
    right: &Matrix,
) -> Result<(), SpaceError> {
    if left.shape() != (n, n) || right.shape() != (p, p) {
        return Err(SpaceError::ShapeMismatch(format!(
            "transform of {n}x{p} matrices needs {n}x{n} and {p}x{p} factors"
        )));
    }
    if left.field() != field || right.field() != field {
        return Err(SpaceError::ShapeMismatch("field mismatch".into()));
    }
    if !left.is_invertible() || !right.is_invertible() {
        return Err(SpaceError::SingularTransform);
    }
    Ok(())
}

/// An affine subspace `point + direction` of `Mat_{n,p}(F_q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMatrixSpace {
    point: Matrix,
    direction: LinearMatrixSpace,
}

impl fmt::Debug for AffineMatrixSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineMatrixSpace([{}] + {:?})", self.point, self.direction)
    }
}

/// The space file format: a header `n p q dim`, then the point, then one
/// line per direction basis element.
impl fmt::Display for AffineMatrixSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, p) = self.shape();
        writeln!(f, "{} {} {} {}", n, p, self.field().q(), self.dim())?;
        writeln!(f, "{}", self.point)?;
        for b in self.direction.basis() {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

impl AffineMatrixSpace {
    pub fn new(point: Matrix, direction: LinearMatrixSpace) -> Result<Self, SpaceError> {
        direction.check_member_shape(&point)?;
        let (n, p) = direction.shape();
        let mut v = point.into_vec();
        direction.reduce(&mut v);
        let point = Matrix::from_vec(direction.field(), n, p, v)?;
        Ok(AffineMatrixSpace { point, direction })
    }

    pub fn linear(direction: LinearMatrixSpace) -> Self {
        let (n, p) = direction.shape();
        AffineMatrixSpace {
            point: Matrix::zeros(direction.field(), n, p),
            direction,
        }
    }

    pub fn point(&self) -> &Matrix {
        &self.point
    }

    pub fn direction(&self) -> &LinearMatrixSpace {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.direction.shape()
    }

    pub fn field(&self) -> FieldCtx {
        self.direction.field()
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool, SpaceError> {
        self.direction.check_member_shape(m)?;
        self.direction.contains(&m.sub(&self.point)?)
    }

    /// Whether the zero matrix lies in the space.
    pub fn is_linear(&self) -> bool {
        self.point.is_zero()
    }

    pub fn elements(&self, cap: u64) -> Result<Elements, SpaceError> {
        self.clone().into_elements(cap)
    }

    pub fn into_elements(self, cap: u64) -> Result<Elements, SpaceError> {
        let total = checked_count(self.field().q(), self.dim(), cap)?;
        Ok(Elements {
            current: self.point.as_slice().to_vec(),
            coeffs: vec![0; self.dim()],
            remaining: total,
            space: self,
        })
    }

    /// Largest rank among the elements, stopping early once `min(n, p)` is
    /// reached.
    pub fn max_rank(&self, cap: u64) -> Result<usize, SpaceError> {
        let (n, p) = self.shape();
        let ceiling = n.min(p);
        let mut best = 0;
        for m in self.elements(cap)? {
            best = best.max(m.rank());
            if best == ceiling {
                break;
            }
        }
        Ok(best)
    }

    pub fn transform(&self, left: &Matrix, right: &Matrix) -> Result<Self, SpaceError> {
        let direction = self.direction.transform(left, right)?;
        let point = left.mul(&self.point)?.mul(right)?;
        Self::new(point, direction)
    }

    /// The transposed space in `Mat_{p,n}`.
    pub fn transpose(&self) -> Self {
        let (n, p) = self.shape();
        let gens: Vec<Matrix> = self.direction.basis().iter().map(Matrix::transpose).collect();
        let direction =
            LinearMatrixSpace::span(self.field(), p, n, &gens).expect("shapes agree");
        Self::new(self.point.transpose(), direction).expect("shapes agree")
    }

    /// Parses the space file format. Blank lines and lines starting with
    /// `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, SpaceError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| SpaceError::Format("missing header line".into()))?;
        let nums = header
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SpaceError::Format(format!("bad header {header:?}")))?;
        let [n, p, q, dim] = nums[..] else {
            return Err(SpaceError::Format(format!(
                "header must be \"n p q dim\", got {header:?}"
            )));
        };
        let (n, p, dim) = (n as usize, p as usize, dim as usize);
        let field = FieldCtx::new(q).map_err(|e| SpaceError::Format(e.to_string()))?;
        let read_matrix = |line: Option<&str>, what: &str| -> Result<Matrix, SpaceError> {
            let line = line.ok_or_else(|| SpaceError::Format(format!("missing {what}")))?;
            let m = Matrix::parse(field, line)?;
            if m.shape() != (n, p) {
                return Err(SpaceError::Format(format!(
                    "{what} is {}x{}, expected {n}x{p}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            Ok(m)
        };
        let point = read_matrix(lines.next(), "point")?;
        let basis = (0..dim)
            .map(|k| read_matrix(lines.next(), &format!("basis element {}", k + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(extra) = lines.next() {
            return Err(SpaceError::Format(format!("unexpected trailing line {extra:?}")));
        }
        let direction = LinearMatrixSpace::span(field, n, p, &basis)?;
        if direction.dim() != dim {
            return Err(SpaceError::Format(format!(
                "declared dim {dim} but the basis spans dimension {}",
                direction.dim()
            )));
        }
        Self::new(point, direction)
    }
}

/// Iterator over all elements of an affine space, in odometer order of the
/// basis coefficients.
pub struct Elements {
    space: AffineMatrixSpace,
    coeffs: Vec<Elem>,
    current: Vec<Elem>,
    remaining: u64,
}

impl Iterator for Elements {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let (n, p) = self.space.shape();
        let f = self.space.field();
        let out = Matrix::from_vec(f, n, p, self.current.clone()).expect("length np");
        // Advance: increment the lowest coefficient, carrying as needed, and
        // update `current` by the matching basis rows.
        let q = f.q();
        let coords = self.space.direction.coords();
        for k in 0..self.coeffs.len() {
            let row = coords.row_slice(k);
            if self.coeffs[k] + 1 < q {
                self.coeffs[k] += 1;
                for (x, &b) in self.current.iter_mut().zip(row) {
                    *x = f.add(*x, b);
                }
                break;
            }
            // Wrap to zero: subtract (q-1) * row, i.e. add row once more.
            self.coeffs[k] = 0;
            for (x, &b) in self.current.iter_mut().zip(row) {
                *x = f.add(*x, b);
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn f(q: u32) -> FieldCtx {
        FieldCtx::new(q).unwrap()
    }

    fn unit(field: FieldCtx, n: usize, p: usize, i: usize, j: usize) -> Matrix {
        Matrix::matrix_unit(field, n, p, i, j).unwrap()
    }

    pub(crate) fn exceptional() -> AffineMatrixSpace {
        let f2 = f(2);
        let dir = LinearMatrixSpace::span(
            f2,
            2,
            2,
            &[
                Matrix::parse(f2, "0 1; 0 0").unwrap(),
                Matrix::parse(f2, "1 0; 0 1").unwrap(),
            ],
        )
        .unwrap();
        AffineMatrixSpace::new(Matrix::parse(f2, "1 0; 0 0").unwrap(), dir).unwrap()
    }

    #[test]
    fn span_examples() {
        let f2 = f(2);
        assert_eq!(LinearMatrixSpace::span(f2, 2, 2, &[]).unwrap().dim(), 0);
        let e11 = unit(f2, 2, 2, 1, 1);
        assert_eq!(
            LinearMatrixSpace::span(f2, 2, 2, &[e11.clone(), e11]).unwrap().dim(),
            1
        );
        let f3 = f(3);
        let all: Vec<_> = (1..=2)
            .flat_map(|i| (1..=2).map(move |j| unit(f3, 2, 2, i, j)))
            .collect();
        let s = LinearMatrixSpace::span(f3, 2, 2, &all).unwrap();
        assert_eq!(s, LinearMatrixSpace::full(f3, 2, 2));
        assert!(LinearMatrixSpace::span(f3, 2, 3, &all).is_err());
    }

    #[test]
    fn span_is_order_insensitive() {
        let f5 = f(5);
        let a = Matrix::parse(f5, "1 2; 3 4").unwrap();
        let b = Matrix::parse(f5, "0 1; 1 0").unwrap();
        let s1 = LinearMatrixSpace::span(f5, 2, 2, &[a.clone(), b.clone()]).unwrap();
        let s2 = LinearMatrixSpace::span(f5, 2, 2, &[b.clone(), a.add(&b).unwrap()]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(LinearMatrixSpace::span(f5, 2, 2, &s1.basis()).unwrap(), s1);
    }

    #[test]
    fn affine_canonical_representative() {
        let f3 = f(3);
        let l = LinearMatrixSpace::span(
            f3,
            2,
            2,
            &[Matrix::parse(f3, "1 1; 0 2").unwrap(), unit(f3, 2, 2, 2, 1)],
        )
        .unwrap();
        let zero = AffineMatrixSpace::new(Matrix::zeros(f3, 2, 2), l.clone()).unwrap();
        for b in l.elements(DEFAULT_CAP).unwrap() {
            assert_eq!(AffineMatrixSpace::new(b, l.clone()).unwrap(), zero);
        }
        let e11 = unit(f3, 2, 2, 1, 1);
        let line = LinearMatrixSpace::span(f3, 2, 2, std::slice::from_ref(&e11)).unwrap();
        assert!(AffineMatrixSpace::new(e11, line).unwrap().is_linear());
    }

    #[test]
    fn exceptional_space_basics() {
        let s = exceptional();
        assert!(!s.is_linear());
        assert_eq!(s.dim(), 2);
        assert!(!s.contains(&Matrix::zeros(f(2), 2, 2)).unwrap());
        let elems: HashSet<Matrix> = s.elements(DEFAULT_CAP).unwrap().collect();
        let f2 = f(2);
        let expected: HashSet<Matrix> = ["1 0; 0 0", "1 1; 0 0", "0 0; 0 1", "0 1; 0 1"]
            .iter()
            .map(|t| Matrix::parse(f2, t).unwrap())
            .collect();
        assert_eq!(elems, expected);
        assert_eq!(s.max_rank(DEFAULT_CAP).unwrap(), 1);
    }

    #[test]
    fn max_rank_examples() {
        let f2 = f(2);
        assert_eq!(LinearMatrixSpace::zero(f2, 2, 2).max_rank(DEFAULT_CAP).unwrap(), 0);
        assert_eq!(LinearMatrixSpace::full(f2, 2, 2).max_rank(DEFAULT_CAP).unwrap(), 2);
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let f3 = f(3);
        let s = LinearMatrixSpace::span(
            f3,
            2,
            2,
            &[unit(f3, 2, 2, 1, 1), unit(f3, 2, 2, 1, 2), unit(f3, 2, 2, 2, 2)],
        )
        .unwrap();
        let elems: Vec<_> = s.elements(DEFAULT_CAP).unwrap().collect();
        assert_eq!(elems.len(), 27);
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 27);
        assert!(elems.iter().all(|m| s.contains(m).unwrap()));
        let point = AffineMatrixSpace::new(unit(f3, 2, 2, 2, 1), LinearMatrixSpace::zero(f3, 2, 2))
            .unwrap();
        let only: Vec<_> = point.elements(DEFAULT_CAP).unwrap().collect();
        assert_eq!(only, vec![unit(f3, 2, 2, 2, 1)]);
    }

    #[test]
    fn cap_is_enforced() {
        let f5 = f(5);
        let s = LinearMatrixSpace::full(f5, 3, 3);
        assert!(matches!(
            s.elements(1 << 10),
            Err(SpaceError::CapExceeded { .. })
        ));
        assert!(matches!(s.max_rank(100), Err(SpaceError::CapExceeded { .. })));
    }

    #[test]
    fn transform_examples() {
        let f2 = f(2);
        let first_row_zero = LinearMatrixSpace::span(
            f2,
            2,
            2,
            &[unit(f2, 2, 2, 2, 1), unit(f2, 2, 2, 2, 2)],
        )
        .unwrap();
        let i2 = Matrix::identity(f2, 2);
        assert_eq!(first_row_zero.transform(&i2, &i2).unwrap(), first_row_zero);
        let swap = Matrix::parse(f2, "0 1; 1 0").unwrap();
        let second_row_zero = LinearMatrixSpace::span(
            f2,
            2,
            2,
            &[unit(f2, 2, 2, 1, 1), unit(f2, 2, 2, 1, 2)],
        )
        .unwrap();
        assert_eq!(first_row_zero.transform(&swap, &i2).unwrap(), second_row_zero);
        let singular = Matrix::parse(f2, "1 1; 1 1").unwrap();
        assert_eq!(
            first_row_zero.transform(&singular, &i2),
            Err(SpaceError::SingularTransform)
        );
    }

    #[test]
    fn s_sub_y_examples() {
        let f3 = f(3);
        let full = LinearMatrixSpace::full(f3, 2, 3);
        assert_eq!(full.s_sub_y(&[1, 0]).unwrap().dim(), 3);
        let first_row_zero = LinearMatrixSpace::span(
            f3,
            2,
            3,
            &(1..=3).map(|j| unit(f3, 2, 3, 2, j)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(first_row_zero.s_sub_y(&[1, 0]).unwrap().dim(), 0);
        assert_eq!(full.s_sub_y(&[0, 0]), Err(SpaceError::ZeroVector));

        let s = exceptional().direction().clone();
        let sy = s.s_sub_y(&[1, 0]).unwrap();
        let f2 = f(2);
        assert_eq!(
            sy,
            LinearMatrixSpace::span(f2, 2, 2, &[unit(f2, 2, 2, 1, 2)]).unwrap()
        );
    }

    #[test]
    fn space_file_round_trip() {
        let s = exceptional();
        let text = s.to_string();
        assert_eq!(text, "2 2 2 2\n0 0; 0 1\n1 0; 0 1\n0 1; 0 0\n");
        assert_eq!(AffineMatrixSpace::parse(&text).unwrap(), s);
        let commented = format!("# comment\n\n{text}# trailer\n");
        assert_eq!(AffineMatrixSpace::parse(&commented).unwrap(), s);
        assert!(AffineMatrixSpace::parse("2 2 2 2\n1 0; 0 0\n1 0; 0 1\n").is_err());
        assert!(AffineMatrixSpace::parse("2 2 2 2\n1 0; 0 0\n1 0; 0 1\n1 0; 0 1\n").is_err());
        assert!(AffineMatrixSpace::parse("2 2 4 0\n0 0; 0 0\n").is_err());
    }
}
