//! Trace duality for matrix spaces.
//!
//! For a linear space `S ⊆ Mat_{n,p}` (operators `F^p -> F^n`) the trace
//! orthogonal complement `S^⊥ ⊆ Mat_{p,n}` collects every `v` with
//! `tr(v u) = 0` for all `u ∈ S`. Each `y ∈ F^n` gives an evaluation
//! operator `ŷ : v ↦ v y` from `S^⊥` to `F^p`, and the rank of `ŷ` is tied
//! to the operators of `S` whose range lies in `span{y}`:
//!
//! ```text
//! rank(ŷ) = p - dim S_(y)
//! ```

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactmat::{projective_points, Matrix};
use crate::gf::Elem;
use crate::spaces::{checked_count, LinearMatrixSpace, SpaceError};

/// The trace orthogonal complement, computed as the null space of the
/// `dim(S) x np` pairing matrix.
pub fn orthogonal(space: &LinearMatrixSpace) -> LinearMatrixSpace {
    let (n, p) = space.shape();
    let f = space.field();
    let d = space.dim();
    // Coordinate j*n + i of vec(v) pairs with entry (i, j) of u.
    let mut pairing = Matrix::zeros(f, d, n * p);
    for k in 0..d {
        let u = space.coords().row_slice(k);
        for i in 0..n {
            for j in 0..p {
                pairing.set(k, j * n + i, u[i * p + j]);
            }
        }
    }
    let kernel = pairing.right_kernel();
    let data: Vec<Elem> = kernel.iter().flatten().copied().collect();
    let rows = Matrix::from_vec(f, kernel.len(), n * p, data).expect("rows of length np");
    LinearMatrixSpace::from_coordinate_rows(p, n, rows)
}

/// The evaluation operator `ŷ` on a complement `S^⊥`, as a `p x dim(S^⊥)`
/// matrix whose `j`-th column is `B_j y` for the `j`-th canonical basis
/// element `B_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationOperator {
    y: Vec<Elem>,
    matrix: Matrix,
}

impl EvaluationOperator {
    pub fn y(&self) -> &[Elem] {
        &self.y
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Linear forms on `F^p` vanishing on the image of the operator.
    pub fn image_annihilator(&self) -> Vec<Vec<Elem>> {
        self.matrix.left_kernel()
    }
}

pub fn evaluation_operator(
    complement: &LinearMatrixSpace,
    y: &[Elem],
) -> Result<EvaluationOperator, SpaceError> {
    // Elements of the complement are p x n.
    let (p, n) = complement.shape();
    if y.len() != n {
        return Err(SpaceError::ShapeMismatch(format!(
            "vector of length {} for operators on F^{n}",
            y.len()
        )));
    }
    let f = complement.field();
    let d = complement.dim();
    let mut matrix = Matrix::zeros(f, p, d);
    for (j, b) in complement.basis().iter().enumerate() {
        for (i, v) in b.apply(y)?.into_iter().enumerate() {
            matrix.set(i, j, v);
        }
    }
    Ok(EvaluationOperator {
        y: y.to_vec(),
        matrix,
    })
}

/// `S_(y)` recovered from the dual side: `(im ŷ)° ⊗ y`.
pub fn s_sub_y_via_duality(
    space: &LinearMatrixSpace,
    y: &[Elem],
) -> Result<LinearMatrixSpace, SpaceError> {
    if y.iter().all(|&x| x == 0) {
        return Err(SpaceError::ZeroVector);
    }
    let (n, p) = space.shape();
    let f = space.field();
    let yhat = evaluation_operator(&orthogonal(space), y)?;
    let gens: Vec<Matrix> = yhat
        .image_annihilator()
        .iter()
        .map(|form| Matrix::rank_one(f, form, y))
        .collect();
    LinearMatrixSpace::span(f, n, p, &gens)
}

/// Both sides of the rank identity for one vector `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankIdentity {
    pub rank_yhat: usize,
    pub dim_s_sub_y: usize,
    pub p: usize,
}

impl RankIdentity {
    pub fn holds(&self) -> bool {
        self.rank_yhat + self.dim_s_sub_y == self.p
    }
}

pub fn rank_identity_report(
    space: &LinearMatrixSpace,
    y: &[Elem],
) -> Result<RankIdentity, SpaceError> {
    rank_identity_with(space, &orthogonal(space), y)
}

fn rank_identity_with(
    space: &LinearMatrixSpace,
    complement: &LinearMatrixSpace,
    y: &[Elem],
) -> Result<RankIdentity, SpaceError> {
    let dim_s_sub_y = space.s_sub_y(y)?.dim();
    let rank_yhat = evaluation_operator(complement, y)?.rank();
    Ok(RankIdentity {
        rank_yhat,
        dim_s_sub_y,
        p: space.shape().1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub y: Vec<Elem>,
    pub rank_yhat: usize,
    pub dim_s_sub_y: usize,
}

/// Ranks of `ŷ` over one representative `y` per projective class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualSpectrum {
    pub p: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl DualSpectrum {
    /// Multiset of ranks as `rank -> multiplicity`.
    pub fn ranks(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.rank_yhat).or_insert(0) += 1;
        }
        out
    }

    /// Whether every `dim S_(y)` lies in `{0, p-1, p}` and every `rank ŷ` in
    /// `{0, 1, p}`.
    pub fn has_extremal_shape(&self) -> bool {
        let p = self.p;
        self.entries.iter().all(|e| {
            [0, p.saturating_sub(1), p].contains(&e.dim_s_sub_y)
                && [0, 1, p].contains(&e.rank_yhat)
        })
    }

    pub fn rank_identity_holds(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.rank_yhat + e.dim_s_sub_y == self.p)
    }
}

pub fn dual_rank_spectrum(space: &LinearMatrixSpace, cap: u64) -> Result<DualSpectrum, SpaceError> {
    let (n, p) = space.shape();
    let f = space.field();
    checked_count(f.q(), n, cap)?;
    let complement = orthogonal(space);
    let entries = projective_points(f, n)
        .map(|y| {
            let r = rank_identity_with(space, &complement, &y)?;
            Ok(SpectrumEntry {
                y,
                rank_yhat: r.rank_yhat,
                dim_s_sub_y: r.dim_s_sub_y,
            })
        })
        .collect::<Result<Vec<_>, SpaceError>>()?;
    Ok(DualSpectrum { p, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::trace_pair;
    use crate::gf::FieldCtx;
    use crate::spaces::DEFAULT_CAP;

    fn f(q: u32) -> FieldCtx {
        FieldCtx::new(q).unwrap()
    }

    fn first_row_zero(field: FieldCtx) -> LinearMatrixSpace {
        LinearMatrixSpace::span(
            field,
            2,
            2,
            &[
                Matrix::matrix_unit(field, 2, 2, 2, 1).unwrap(),
                Matrix::matrix_unit(field, 2, 2, 2, 2).unwrap(),
            ],
        )
        .unwrap()
    }

    fn exceptional_direction() -> LinearMatrixSpace {
        let f2 = f(2);
        LinearMatrixSpace::span(
            f2,
            2,
            2,
            &[
                Matrix::parse(f2, "0 1; 0 0").unwrap(),
                Matrix::parse(f2, "1 0; 0 1").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orthogonal_extremes() {
        let f3 = f(3);
        assert_eq!(
            orthogonal(&LinearMatrixSpace::full(f3, 2, 3)),
            LinearMatrixSpace::zero(f3, 3, 2)
        );
        assert_eq!(
            orthogonal(&LinearMatrixSpace::zero(f3, 2, 3)),
            LinearMatrixSpace::full(f3, 3, 2)
        );
    }

    #[test]
    fn orthogonal_of_first_row_zero_matches_brute_force() {
        let f2 = f(2);
        let s = first_row_zero(f2);
        let perp = orthogonal(&s);
        let expected = LinearMatrixSpace::span(
            f2,
            2,
            2,
            &[
                Matrix::matrix_unit(f2, 2, 2, 1, 1).unwrap(),
                Matrix::matrix_unit(f2, 2, 2, 2, 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(perp, expected);
        // Brute force over all 16 candidates.
        let brute: Vec<Matrix> = LinearMatrixSpace::full(f2, 2, 2)
            .elements(DEFAULT_CAP)
            .unwrap()
            .filter(|v| s.basis().iter().all(|u| trace_pair(u, v).unwrap() == 0))
            .collect();
        assert_eq!(brute.len(), 4);
        assert!(brute.iter().all(|v| perp.contains(v).unwrap()));
    }

    #[test]
    fn evaluation_operator_edges() {
        let f3 = f(3);
        let perp = LinearMatrixSpace::full(f3, 3, 2);
        let zero = evaluation_operator(&perp, &[0, 0]).unwrap();
        assert_eq!(zero.rank(), 0);
        assert_eq!(zero.matrix().shape(), (3, 6));
        let empty = evaluation_operator(&LinearMatrixSpace::zero(f3, 3, 2), &[1, 2]).unwrap();
        assert_eq!(empty.matrix().ncols(), 0);
        assert_eq!(empty.rank(), 0);
        assert!(evaluation_operator(&perp, &[1, 0, 0]).is_err());
    }

    #[test]
    fn rank_identity_examples() {
        let f5 = f(5);
        let full = rank_identity_report(&LinearMatrixSpace::full(f5, 2, 3), &[1, 4]).unwrap();
        assert_eq!((full.rank_yhat, full.dim_s_sub_y), (0, 3));
        let zero = rank_identity_report(&LinearMatrixSpace::zero(f5, 2, 3), &[1, 4]).unwrap();
        assert_eq!((zero.rank_yhat, zero.dim_s_sub_y), (3, 0));
        let exc = rank_identity_report(&exceptional_direction(), &[1, 0]).unwrap();
        assert_eq!((exc.rank_yhat, exc.dim_s_sub_y), (1, 1));
        assert!(rank_identity_report(&exceptional_direction(), &[0, 0]).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let f2 = f(2);
        let full = dual_rank_spectrum(&LinearMatrixSpace::full(f2, 2, 2), DEFAULT_CAP).unwrap();
        assert_eq!(full.entries.len(), 3);
        assert!(full.entries.iter().all(|e| e.rank_yhat == 0));
        let exc = dual_rank_spectrum(&exceptional_direction(), DEFAULT_CAP).unwrap();
        assert_eq!(exc.entries.len(), 3);
        assert!(exc.rank_identity_holds());
        // y = e1: S_(y) = span{E12}. y = e2: S_(y) = 0. y = e1+e2: S_(y) = 0,
        // since no element of S has both rows equal and nonzero.
        let by_y: Vec<_> = exc
            .entries
            .iter()
            .map(|e| (e.y.clone(), e.dim_s_sub_y, e.rank_yhat))
            .collect();
        assert_eq!(
            by_y,
            vec![(vec![0, 1], 0, 2), (vec![1, 0], 1, 1), (vec![1, 1], 0, 2)]
        );
        assert!(dual_rank_spectrum(&LinearMatrixSpace::full(f2, 30, 1), 1 << 10).is_err());
    }

    #[test]
    fn duality_route_agrees_on_first_row_zero() {
        for q in [2, 3, 5] {
            let s = first_row_zero(f(q));
            for y in projective_points(f(q), 2) {
                assert_eq!(s.s_sub_y(&y).unwrap(), s_sub_y_via_duality(&s, &y).unwrap());
            }
        }
    }
}
