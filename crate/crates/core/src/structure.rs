//! Structural results on matrix spaces: the classification of spaces of
//! rank-at-most-one operators, the border completion and extraction lemmas,
//! and the outcome classifier for maximal singular affine spaces.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactmat::{all_vectors, normalize_projective, Matrix, MatrixError};
use crate::gf::{Elem, FieldCtx};
use crate::spaces::{checked_count, AffineMatrixSpace, LinearMatrixSpace, SpaceError};

// ---------------------------------------------------------------------------
// Rank-one spaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SchurKind {
    /// Every element is `y f` for one fixed row `f`, with `y` ranging over `V_0`.
    FixedForm,
    /// Every element is `y f` for one fixed column `y`, with `f` ranging over `U'_0`.
    FixedVector,
    /// One-dimensional: both descriptions apply.
    Both,
    Zero,
    NotRankOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurClassification {
    pub kind: SchurKind,
    pub witness_f: Option<Vec<Elem>>,
    pub witness_y: Option<Vec<Elem>>,
    /// `V_0` as `n x 1` columns for `FixedForm`, `U'_0` as `1 x p` rows for
    /// `FixedVector`.
    pub complement_space: Option<LinearMatrixSpace>,
    pub rank2_certificate: Option<Matrix>,
}

impl SchurClassification {
    /// Rebuilds the classified space from its witnesses. `None` for
    /// `NotRankOne`.
    pub fn reconstruct(&self, field: FieldCtx, n: usize, p: usize) -> Option<LinearMatrixSpace> {
        let gens: Vec<Matrix> = match self.kind {
            SchurKind::Zero => Vec::new(),
            SchurKind::NotRankOne => return None,
            SchurKind::Both => vec![Matrix::rank_one(
                field,
                self.witness_f.as_ref()?,
                self.witness_y.as_ref()?,
            )],
            SchurKind::FixedForm => {
                let f = self.witness_f.as_ref()?;
                self.complement_space
                    .as_ref()?
                    .basis()
                    .iter()
                    .map(|col| Matrix::rank_one(field, f, col.as_slice()))
                    .collect()
            }
            SchurKind::FixedVector => {
                let y = self.witness_y.as_ref()?;
                self.complement_space
                    .as_ref()?
                    .basis()
                    .iter()
                    .map(|row| Matrix::rank_one(field, row.as_slice(), y))
                    .collect()
            }
        };
        LinearMatrixSpace::span(field, n, p, &gens).ok()
    }
}

fn first_nonzero(v: &[Elem]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

/// Whether `v` lies on the line spanned by `dir`, where `dir` is normalized
/// with a 1 at position `lead`.
fn on_line(field: FieldCtx, v: &[Elem], dir: &[Elem], lead: usize) -> bool {
    let c = v[lead];
    v.iter().zip(dir).all(|(&a, &b)| a == field.mul(c, b))
}

/// Classifies a linear space whose elements should all have rank at most 1.
///
/// A nonzero basis element `u₀ = y f` proposes the fixed column `y` and the
/// fixed row `f`; each is tested against every basis element. When both
/// tests fail a rank-2 element is produced explicitly.
pub fn classify_rank_one_space(space: &LinearMatrixSpace) -> SchurClassification {
    let field = space.field();
    let (n, p) = space.shape();
    let not_rank_one = |cert: Matrix| SchurClassification {
        kind: SchurKind::NotRankOne,
        witness_f: None,
        witness_y: None,
        complement_space: None,
        rank2_certificate: Some(cert),
    };
    if space.dim() == 0 {
        return SchurClassification {
            kind: SchurKind::Zero,
            witness_f: None,
            witness_y: None,
            complement_space: None,
            rank2_certificate: None,
        };
    }
    let basis = space.basis();
    let u0 = &basis[0];
    if u0.rank() >= 2 {
        return not_rank_one(u0.clone());
    }
    let col_idx = (0..p)
        .find(|&j| u0.col_vec(j).iter().any(|&x| x != 0))
        .expect("nonzero basis element");
    let row_idx = (0..n)
        .find(|&i| u0.row_slice(i).iter().any(|&x| x != 0))
        .expect("nonzero basis element");
    let y = normalize_projective(field, &u0.col_vec(col_idx));
    let f = normalize_projective(field, u0.row_slice(row_idx));
    let y_lead = first_nonzero(&y).unwrap();
    let f_lead = first_nonzero(&f).unwrap();

    let columns_on_y = |b: &Matrix| (0..p).all(|j| on_line(field, &b.col_vec(j), &y, y_lead));
    let rows_on_f = |b: &Matrix| (0..n).all(|i| on_line(field, b.row_slice(i), &f, f_lead));

    let bad_col = basis.iter().position(|b| !columns_on_y(b));
    let bad_row = basis.iter().position(|b| !rows_on_f(b));

    match (bad_col, bad_row) {
        (None, None) => SchurClassification {
            kind: SchurKind::Both,
            witness_f: Some(f),
            witness_y: Some(y),
            complement_space: None,
            rank2_certificate: None,
        },
        (None, Some(_)) => {
            // b = y g with g = row `y_lead` of b.
            let rows: Vec<Matrix> = basis
                .iter()
                .map(|b| Matrix::row(field, b.row_slice(y_lead)))
                .collect();
            SchurClassification {
                kind: SchurKind::FixedVector,
                witness_f: None,
                witness_y: Some(y),
                complement_space: Some(
                    LinearMatrixSpace::span(field, 1, p, &rows).expect("1 x p rows"),
                ),
                rank2_certificate: None,
            }
        }
        (Some(_), None) => {
            // b = v f with v = column `f_lead` of b.
            let cols: Vec<Matrix> = basis
                .iter()
                .map(|b| Matrix::column(field, &b.col_vec(f_lead)))
                .collect();
            SchurClassification {
                kind: SchurKind::FixedForm,
                witness_f: Some(f),
                witness_y: None,
                complement_space: Some(
                    LinearMatrixSpace::span(field, n, 1, &cols).expect("n x 1 columns"),
                ),
                rank2_certificate: None,
            }
        }
        (Some(i), Some(j)) => {
            if let Some(b) = basis.iter().find(|b| b.rank() >= 2) {
                return not_rank_one(b.clone());
            }
            let (bi, bj) = (&basis[i], &basis[j]);
            let candidates = [u0.add(bi), u0.add(bj), bi.add(bj)];
            let cert = candidates
                .into_iter()
                .map(|c| c.expect("same shape"))
                .find(|c| c.rank() >= 2)
                .expect("rank-one elements sharing neither column nor row space sum to rank 2");
            not_rank_one(cert)
        }
    }
}

// ---------------------------------------------------------------------------
// Substitution lemma
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstitutionError {
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("first row and first column disagree on the corner entry")]
    CornerMismatch,
    #[error("no completion of rank n exists for this border")]
    NoCompletion,
}

/// Whether a border admits a full-rank completion: first row and first
/// column both nonzero, or `n < p` and the first row nonzero.
pub fn substitution_hypothesis(first_row: &[Elem], first_col: &[Elem], n: usize, p: usize) -> bool {
    let row_nz = first_row.iter().any(|&x| x != 0);
    let col_nz = first_col.iter().any(|&x| x != 0);
    (row_nz && col_nz) || (n < p && row_nz)
}

/// Invertible matrix whose first column is `v` (nonzero), completed with
/// standard basis columns.
fn basis_with_first_column(field: FieldCtx, v: &[Elem]) -> Matrix {
    let m = v.len();
    let k = first_nonzero(v).expect("nonzero");
    let mut out = Matrix::zeros(field, m, m);
    for (i, &x) in v.iter().enumerate() {
        out.set(i, 0, x);
    }
    for (col, j) in (0..m).filter(|&j| j != k).enumerate() {
        out.set(j, col + 1, 1);
    }
    out
}

/// Fills the lower-right `(n-1) x (p-1)` block so that the matrix with the
/// given first row and first column has rank `n`.
///
/// The border is first brought to the form `c₀ = e₁`, `l₀ = e₁ᵀ` by
/// invertible changes of basis on the last `n-1` rows and `p-1` columns.
/// There a fixed block works:
///
/// * `c₀ = 0` or `l₀ = 0` (corner nonzero): `[I_{n-1} 0]`;
/// * both nonzero: `diag(0, I_{n-2})` padded with zero columns;
/// * `n < p`, first column zero: `[0 | I_{n-1} | 0]`.
///
/// The block is then mapped back through the inverse change of basis.
pub fn complete_to_full_rank(
    field: FieldCtx,
    first_row: &[Elem],
    first_col: &[Elem],
    n: usize,
    p: usize,
) -> Result<Matrix, SubstitutionError> {
    if n == 0 || n > p {
        return Err(SubstitutionError::Shape(format!("need 0 < n <= p, got n={n}, p={p}")));
    }
    if first_row.len() != p || first_col.len() != n {
        return Err(SubstitutionError::Shape(format!(
            "first row has length {}, first column {}; expected {p} and {n}",
            first_row.len(),
            first_col.len()
        )));
    }
    if first_row[0] != first_col[0] {
        return Err(SubstitutionError::CornerMismatch);
    }
    if !substitution_hypothesis(first_row, first_col, n, p) {
        return Err(SubstitutionError::NoCompletion);
    }
    let a = first_row[0];
    let c0 = &first_col[1..];
    let l0 = &first_row[1..];
    let c0_zero = c0.iter().all(|&x| x == 0);
    let l0_zero = l0.iter().all(|&x| x == 0);

    let mut reduced = Matrix::zeros(field, n - 1, p - 1);
    if (c0_zero || l0_zero) && a != 0 {
        for i in 0..n - 1 {
            reduced.set(i, i, 1);
        }
    } else if !c0_zero && !l0_zero {
        for i in 1..n - 1 {
            reduced.set(i, i, 1);
        }
    } else {
        // n < p, first column zero, first row nonzero.
        debug_assert!(n < p && a == 0 && c0_zero && !l0_zero);
        for i in 0..n - 1 {
            reduced.set(i, i + 1, 1);
        }
    }

    let left = if c0_zero {
        Matrix::identity(field, n - 1)
    } else {
        basis_with_first_column(field, c0)
    };
    let right = if l0_zero {
        Matrix::identity(field, p - 1)
    } else {
        basis_with_first_column(field, l0).transpose()
    };
    let block = left
        .mul(&reduced)
        .and_then(|m| m.mul(&right))
        .expect("conformable");

    let mut out = Matrix::zeros(field, n, p);
    for (j, &x) in first_row.iter().enumerate() {
        out.set(0, j, x);
    }
    for (i, &x) in first_col.iter().enumerate() {
        out.set(i, 0, x);
    }
    for i in 0..n - 1 {
        for j in 0..p - 1 {
            out.set(i + 1, j + 1, block.get(i, j));
        }
    }
    debug_assert_eq!(out.rank(), n);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Extraction lemma
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtractionCheck {
    /// `rank A < n` and `rank (A + E_{n,p}) < n`.
    pub hypothesis_holds: bool,
    /// `rank K(A) < n - 1`.
    pub conclusion_holds: bool,
}

impl ExtractionCheck {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }
}

pub fn extraction_check(a: &Matrix) -> Result<ExtractionCheck, MatrixError> {
    let (n, p) = a.shape();
    let corner = Matrix::matrix_unit(a.field(), n, p, n, p)?;
    let hypothesis_holds = a.rank() < n && a.add(&corner)?.rank() < n;
    let conclusion_holds = a.k_block()?.rank() + 1 < n;
    Ok(ExtractionCheck {
        hypothesis_holds,
        conclusion_holds,
    })
}

// ---------------------------------------------------------------------------
// Maximal singular spaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OutcomeStatus {
    HasFullRank,
    BelowMaxDim,
    Classified,
    TheoremViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    /// `Y ≠ 0` with `Yᵀ M = 0` on the whole space: every range lies in the
    /// hyperplane `ker Yᵀ`.
    LeftKernelVector(Vec<Elem>),
    /// `x ≠ 0` with `M x = 0` on the whole space (square case only).
    RightKernelVector(Vec<Elem>),
    /// `n = p = q = 2` and the space is not linear.
    ExceptionalF2,
}

impl Witness {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Witness::LeftKernelVector(_) => "left",
            Witness::RightKernelVector(_) => "right",
            Witness::ExceptionalF2 => "exceptional_f2",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Elem]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Witness::LeftKernelVector(y) => write!(f, "LeftKernelVector [{}]", join(y)),
            Witness::RightKernelVector(x) => write!(f, "RightKernelVector [{}]", join(x)),
            Witness::ExceptionalF2 => f.write_str("ExceptionalF2"),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Witness", 2)?;
        match self {
            Witness::LeftKernelVector(v) => {
                st.serialize_field("kind", "LeftKernelVector")?;
                st.serialize_field("vector", v)?;
            }
            Witness::RightKernelVector(v) => {
                st.serialize_field("kind", "RightKernelVector")?;
                st.serialize_field("vector", v)?;
            }
            Witness::ExceptionalF2 => {
                st.serialize_field("kind", "ExceptionalF2")?;
                st.serialize_field("vector", &Option::<Vec<Elem>>::None)?;
            }
        }
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DieudonneOutcome {
    pub status: OutcomeStatus,
    pub n: usize,
    pub p: usize,
    pub q: u32,
    pub dim: usize,
    pub max_rank_found: usize,
    pub witnesses: Vec<Witness>,
}

impl DieudonneOutcome {
    /// Witness kinds present, e.g. `"left+right"`; `"none"` when empty.
    pub fn kind_signature(&self) -> String {
        let mut kinds: Vec<&str> = self.witnesses.iter().map(Witness::kind_name).collect();
        kinds.dedup();
        if kinds.is_empty() {
            "none".to_string()
        } else {
            kinds.join("+")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification needs n <= p, got n={n}, p={p}")]
    ShapeError { n: usize, p: usize },
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// All projective vectors in the span of `basis`, normalized and sorted.
fn projective_span(field: FieldCtx, basis: &[Vec<Elem>], cap: u64) -> Result<Vec<Vec<Elem>>, SpaceError> {
    let Some(len) = basis.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    checked_count(field.q(), basis.len(), cap)?;
    let mut out: Vec<Vec<Elem>> = all_vectors(field, basis.len())
        .filter(|c| c.iter().find(|&&x| x != 0) == Some(&1))
        .map(|c| {
            let mut v = vec![0; len];
            for (ck, b) in c.iter().zip(basis) {
                for (x, &bx) in v.iter_mut().zip(b) {
                    *x = field.mul_add(*x, *ck, bx);
                }
            }
            normalize_projective(field, &v)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Common left-kernel vectors `Y` (projective, sorted) of every matrix in
/// the affine space, from one linear system on the point and basis.
pub fn left_kernel_witnesses(space: &AffineMatrixSpace, cap: u64) -> Result<Vec<Vec<Elem>>, SpaceError> {
    let (n, p) = space.shape();
    let f = space.field();
    let mats: Vec<Matrix> = std::iter::once(space.point().clone())
        .chain(space.direction().basis())
        .collect();
    let mut stacked = Matrix::zeros(f, n, p * mats.len());
    for (k, m) in mats.iter().enumerate() {
        for i in 0..n {
            for j in 0..p {
                stacked.set(i, k * p + j, m.get(i, j));
            }
        }
    }
    projective_span(f, &stacked.left_kernel(), cap)
}

/// Common right-kernel vectors `x` (projective, sorted).
pub fn right_kernel_witnesses(space: &AffineMatrixSpace, cap: u64) -> Result<Vec<Vec<Elem>>, SpaceError> {
    let (n, p) = space.shape();
    let f = space.field();
    let mats: Vec<Matrix> = std::iter::once(space.point().clone())
        .chain(space.direction().basis())
        .collect();
    let mut stacked = Matrix::zeros(f, n * mats.len(), p);
    for (k, m) in mats.iter().enumerate() {
        for i in 0..n {
            for j in 0..p {
                stacked.set(k * n + i, j, m.get(i, j));
            }
        }
    }
    projective_span(f, &stacked.right_kernel(), cap)
}

/// Classifies an affine space of `n x p` matrices (`n <= p`) against the
/// dimension bound `p(n-1)` for spaces without rank-`n` elements, reporting
/// every applicable witness when the bound is attained.
pub fn classify_singular_space(
    space: &AffineMatrixSpace,
    cap: u64,
) -> Result<DieudonneOutcome, ClassifyError> {
    let (n, p) = space.shape();
    if n > p {
        return Err(ClassifyError::ShapeError { n, p });
    }
    let max_rank = space.max_rank(cap)?;
    let q = space.field().q();
    let dim = space.dim();
    let mut outcome = DieudonneOutcome {
        status: OutcomeStatus::HasFullRank,
        n,
        p,
        q,
        dim,
        max_rank_found: max_rank,
        witnesses: Vec::new(),
    };
    if max_rank == n {
        return Ok(outcome);
    }
    let bound = p * (n - 1);
    if dim < bound {
        outcome.status = OutcomeStatus::BelowMaxDim;
        return Ok(outcome);
    }
    let mut witnesses: Vec<Witness> = left_kernel_witnesses(space, cap)?
        .into_iter()
        .map(Witness::LeftKernelVector)
        .collect();
    if n == p {
        witnesses.extend(
            right_kernel_witnesses(space, cap)?
                .into_iter()
                .map(Witness::RightKernelVector),
        );
        if n == 2 && q == 2 && !space.is_linear() {
            witnesses.push(Witness::ExceptionalF2);
        }
    }
    outcome.status = if dim == bound && !witnesses.is_empty() {
        OutcomeStatus::Classified
    } else {
        OutcomeStatus::TheoremViolation
    };
    outcome.witnesses = witnesses;
    Ok(outcome)
}

/// The affine space of upper-triangular `2 x 2` matrices over `F_2` with
/// trace 1.
pub fn exceptional_space() -> AffineMatrixSpace {
    let f2 = FieldCtx::f2();
    let direction = LinearMatrixSpace::span(
        f2,
        2,
        2,
        &[
            Matrix::parse(f2, "0 1; 0 0").expect("literal"),
            Matrix::parse(f2, "1 0; 0 1").expect("literal"),
        ],
    )
    .expect("2x2 generators");
    AffineMatrixSpace::new(Matrix::parse(f2, "1 0; 0 0").expect("literal"), direction)
        .expect("2x2 point")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::DEFAULT_CAP;

    fn f(q: u32) -> FieldCtx {
        FieldCtx::new(q).unwrap()
    }

    fn unit(field: FieldCtx, n: usize, p: usize, i: usize, j: usize) -> Matrix {
        Matrix::matrix_unit(field, n, p, i, j).unwrap()
    }

    fn span(field: FieldCtx, n: usize, p: usize, gens: &[Matrix]) -> LinearMatrixSpace {
        LinearMatrixSpace::span(field, n, p, gens).unwrap()
    }

    #[test]
    fn schur_examples() {
        let f2 = f(2);
        let first_col = span(f2, 2, 2, &[unit(f2, 2, 2, 1, 1), unit(f2, 2, 2, 2, 1)]);
        let c = classify_rank_one_space(&first_col);
        assert_eq!(c.kind, SchurKind::FixedForm);
        assert_eq!(c.witness_f, Some(vec![1, 0]));
        assert_eq!(
            c.complement_space,
            Some(LinearMatrixSpace::full(f2, 2, 1))
        );
        assert_eq!(c.reconstruct(f2, 2, 2), Some(first_col));

        let first_row = span(f2, 2, 2, &[unit(f2, 2, 2, 1, 1), unit(f2, 2, 2, 1, 2)]);
        let c = classify_rank_one_space(&first_row);
        assert_eq!(c.kind, SchurKind::FixedVector);
        assert_eq!(c.witness_y, Some(vec![1, 0]));
        assert_eq!(c.reconstruct(f2, 2, 2), Some(first_row));

        let diag = span(f2, 2, 2, &[unit(f2, 2, 2, 1, 1), unit(f2, 2, 2, 2, 2)]);
        let c = classify_rank_one_space(&diag);
        assert_eq!(c.kind, SchurKind::NotRankOne);
        assert_eq!(c.rank2_certificate, Some(Matrix::identity(f2, 2)));

        let line = span(f2, 2, 2, &[unit(f2, 2, 2, 1, 1)]);
        let c = classify_rank_one_space(&line);
        assert_eq!(c.kind, SchurKind::Both);
        assert_eq!(c.reconstruct(f2, 2, 2), Some(line));

        let c = classify_rank_one_space(&LinearMatrixSpace::zero(f2, 2, 2));
        assert_eq!(c.kind, SchurKind::Zero);
    }

    #[test]
    fn schur_certificate_from_sums() {
        // y f, y' f, y f' with all basis elements rank one.
        let f3 = f(3);
        let s = span(
            f3,
            3,
            3,
            &[unit(f3, 3, 3, 1, 1), unit(f3, 3, 3, 2, 1), unit(f3, 3, 3, 1, 2)],
        );
        let c = classify_rank_one_space(&s);
        assert_eq!(c.kind, SchurKind::NotRankOne);
        let cert = c.rank2_certificate.unwrap();
        assert!(cert.rank() >= 2);
        assert!(s.contains(&cert).unwrap());
    }

    #[test]
    fn substitution_examples() {
        let f2 = f(2);
        let m = complete_to_full_rank(f2, &[1, 0], &[1, 0], 2, 2).unwrap();
        assert_eq!(m, Matrix::identity(f2, 2));

        let f3 = f(3);
        let m = complete_to_full_rank(f3, &[0, 1, 0], &[0, 0], 2, 3).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.row_slice(0), &[0, 1, 0]);
        assert_eq!(m.col_vec(0), vec![0, 0]);
        assert_eq!(m, Matrix::parse(f3, "0 1 0; 0 0 1").unwrap());

        assert_eq!(
            complete_to_full_rank(f2, &[0, 0], &[0, 1], 2, 2),
            Err(SubstitutionError::NoCompletion)
        );
        assert_eq!(
            complete_to_full_rank(f2, &[1, 0], &[0, 1], 2, 2),
            Err(SubstitutionError::CornerMismatch)
        );
        assert!(matches!(
            complete_to_full_rank(f2, &[1, 0], &[1, 0, 0], 3, 2),
            Err(SubstitutionError::Shape(_))
        ));
    }

    #[test]
    fn substitution_both_borders_nonzero() {
        let f5 = f(5);
        let m = complete_to_full_rank(f5, &[0, 3, 4], &[0, 2, 1], 3, 3).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.row_slice(0), &[0, 3, 4]);
        assert_eq!(m.col_vec(0), vec![0, 2, 1]);
    }

    #[test]
    fn extraction_examples() {
        let f2 = f(2);
        let zero = extraction_check(&Matrix::zeros(f2, 2, 2)).unwrap();
        assert!(zero.hypothesis_holds && zero.conclusion_holds);
        let e11 = extraction_check(&unit(f2, 2, 2, 1, 1)).unwrap();
        assert!(!e11.hypothesis_holds);
        assert!(e11.implication_holds());
    }

    #[test]
    fn classify_first_row_zero() {
        let f3 = f(3);
        let s = AffineMatrixSpace::linear(span(
            f3,
            2,
            2,
            &[unit(f3, 2, 2, 2, 1), unit(f3, 2, 2, 2, 2)],
        ));
        let out = classify_singular_space(&s, DEFAULT_CAP).unwrap();
        assert_eq!(out.status, OutcomeStatus::Classified);
        assert_eq!(out.witnesses, vec![Witness::LeftKernelVector(vec![1, 0])]);
        assert_eq!(out.kind_signature(), "left");
    }

    #[test]
    fn classify_exceptional() {
        let out = classify_singular_space(&exceptional_space(), DEFAULT_CAP).unwrap();
        assert_eq!(out.status, OutcomeStatus::Classified);
        assert_eq!(out.max_rank_found, 1);
        assert_eq!(out.witnesses, vec![Witness::ExceptionalF2]);
    }

    #[test]
    fn classify_common_kernel() {
        let f2 = f(2);
        let s = AffineMatrixSpace::linear(span(
            f2,
            2,
            2,
            &[unit(f2, 2, 2, 1, 2), unit(f2, 2, 2, 2, 2)],
        ));
        let out = classify_singular_space(&s, DEFAULT_CAP).unwrap();
        assert_eq!(out.status, OutcomeStatus::Classified);
        assert_eq!(out.witnesses, vec![Witness::RightKernelVector(vec![1, 0])]);
    }

    #[test]
    fn classify_other_statuses() {
        let f2 = f(2);
        let full = AffineMatrixSpace::linear(LinearMatrixSpace::full(f2, 2, 2));
        assert_eq!(
            classify_singular_space(&full, DEFAULT_CAP).unwrap().status,
            OutcomeStatus::HasFullRank
        );
        let line = AffineMatrixSpace::linear(span(f2, 2, 2, &[unit(f2, 2, 2, 1, 1)]));
        assert_eq!(
            classify_singular_space(&line, DEFAULT_CAP).unwrap().status,
            OutcomeStatus::BelowMaxDim
        );
        let tall = AffineMatrixSpace::linear(LinearMatrixSpace::zero(f2, 3, 2));
        assert_eq!(
            classify_singular_space(&tall, DEFAULT_CAP),
            Err(ClassifyError::ShapeError { n: 3, p: 2 })
        );
    }
}
