//! Subspaces of `F_q^m` by reduced row echelon profile.
//!
//! A `d`-dimensional subspace has a unique RREF basis, determined by its
//! pivot columns `c_1 < ... < c_d` and the entries of row `k` at the
//! non-pivot columns to the right of `c_k`. Iterating every pivot set and
//! every filling of those free entries visits each subspace exactly once.

use crate::exactmat::Matrix;
use crate::gf::{Elem, FieldCtx};
use crate::spaces::{AffineMatrixSpace, LinearMatrixSpace};

/// Number of `d`-dimensional subspaces of `F_q^m`.
pub fn gaussian_binomial(m: usize, d: usize, q: u32) -> u128 {
    if d > m {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= q.pow((m - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `d`-subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..d).rev().find(|&i| cur[i] < m - d + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// One RREF pivot profile.
#[derive(Debug, Clone)]
pub(crate) struct Profile {
    pub pivots: Vec<usize>,
    /// `(row, column)` of every free entry; entry `i` takes base-q digit `i`
    /// of the filling index.
    pub free: Vec<(usize, usize)>,
    /// Columns without a pivot; coset representatives live on these.
    pub nonpivot: Vec<usize>,
}

impl Profile {
    pub fn new(m: usize, pivots: Vec<usize>) -> Self {
        let is_pivot = |c: usize| pivots.contains(&c);
        let free = pivots
            .iter()
            .enumerate()
            .flat_map(|(k, &pc)| (pc + 1..m).filter(|&c| !is_pivot(c)).map(move |c| (k, c)))
            .collect();
        let nonpivot = (0..m).filter(|&c| !is_pivot(c)).collect();
        Profile {
            pivots,
            free,
            nonpivot,
        }
    }

    pub fn fillings(&self, q: u32) -> u64 {
        (q as u64).pow(self.free.len() as u32)
    }

    /// RREF coordinate rows for filling index `t`.
    pub fn direction_rows(&self, field: FieldCtx, m: usize, mut t: u64) -> Vec<Vec<Elem>> {
        let q = field.q() as u64;
        let mut rows: Vec<Vec<Elem>> = self
            .pivots
            .iter()
            .map(|&pc| {
                let mut r = vec![0; m];
                r[pc] = 1;
                r
            })
            .collect();
        for &(k, c) in &self.free {
            rows[k][c] = (t % q) as Elem;
            t /= q;
        }
        rows
    }

    /// Coset representative for code `code`, supported on non-pivot columns.
    pub fn coset_point(&self, field: FieldCtx, m: usize, mut code: u64) -> Vec<Elem> {
        let q = field.q() as u64;
        let mut v = vec![0; m];
        for &c in &self.nonpivot {
            v[c] = (code % q) as Elem;
            code /= q;
        }
        v
    }

    pub fn cosets(&self, q: u32) -> u64 {
        (q as u64).pow(self.nonpivot.len() as u32)
    }
}

pub(crate) fn profiles(m: usize, d: usize) -> Vec<Profile> {
    combinations(m, d)
        .into_iter()
        .map(|pivots| Profile::new(m, pivots))
        .collect()
}

pub(crate) fn direction_space(
    field: FieldCtx,
    n: usize,
    p: usize,
    profile: &Profile,
    rows: Vec<Vec<Elem>>,
) -> LinearMatrixSpace {
    let m = n * p;
    let d = rows.len();
    let coords = Matrix::from_vec(field, d, m, rows.into_iter().flatten().collect())
        .expect("d rows of length np");
    LinearMatrixSpace::from_rref_unchecked(n, p, coords, profile.pivots.clone())
}

/// Every `d`-dimensional linear subspace of `Mat_{n,p}(F_q)`, once each.
pub fn enumerate_linear_subspaces(
    field: FieldCtx,
    n: usize,
    p: usize,
    d: usize,
) -> impl Iterator<Item = LinearMatrixSpace> {
    let m = n * p;
    profiles(m, d).into_iter().flat_map(move |profile| {
        (0..profile.fillings(field.q())).map(move |t| {
            let rows = profile.direction_rows(field, m, t);
            direction_space(field, n, p, &profile, rows)
        })
    })
}

/// Every `d`-dimensional affine subspace of `Mat_{n,p}(F_q)`, once each:
/// each direction paired with its `q^(np-d)` canonical coset points.
pub fn enumerate_affine_spaces(
    field: FieldCtx,
    n: usize,
    p: usize,
    d: usize,
) -> impl Iterator<Item = AffineMatrixSpace> {
    let m = n * p;
    profiles(m, d).into_iter().flat_map(move |profile| {
        let profile = std::rc::Rc::new(profile);
        (0..profile.fillings(field.q())).flat_map(move |t| {
            let rows = profile.direction_rows(field, m, t);
            let dir = direction_space(field, n, p, &profile, rows);
            let profile = profile.clone();
            (0..profile.cosets(field.q())).map(move |code| {
                let point = Matrix::from_vec(field, n, p, profile.coset_point(field, m, code))
                    .expect("length np");
                AffineMatrixSpace::new(point, dir.clone()).expect("shapes agree")
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 0, 3), 1);
        assert_eq!(gaussian_binomial(4, 4, 3), 1);
        assert_eq!(gaussian_binomial(9, 6, 2), 788_035);
    }

    #[test]
    fn linear_stream_sizes() {
        let f2 = FieldCtx::f2();
        assert_eq!(enumerate_linear_subspaces(f2, 2, 2, 0).count(), 1);
        assert_eq!(enumerate_linear_subspaces(f2, 2, 2, 4).count(), 1);
        assert_eq!(enumerate_linear_subspaces(f2, 2, 2, 2).count(), 35);
    }

    #[test]
    fn affine_stream_is_duplicate_free() {
        let f2 = FieldCtx::f2();
        for d in 0..=4 {
            let spaces: Vec<_> = enumerate_affine_spaces(f2, 2, 2, d).collect();
            assert!(spaces.iter().all(|s| s.dim() == d));
            let set: HashSet<_> = spaces.iter().cloned().collect();
            assert_eq!(set.len(), spaces.len());
            let expected = gaussian_binomial(4, d, 2) * 2u128.pow((4 - d) as u32);
            assert_eq!(spaces.len() as u128, expected);
        }
        assert_eq!(enumerate_affine_spaces(f2, 2, 2, 3).count(), 30);
    }
}
