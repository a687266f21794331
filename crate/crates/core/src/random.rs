//! Seeded random objects for property checks and the CLI's `--seed`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmat::Matrix;
use crate::gf::{Elem, FieldCtx};
use crate::spaces::LinearMatrixSpace;

/// Deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vector<R: Rng>(rng: &mut R, field: FieldCtx, len: usize) -> Vec<Elem> {
    (0..len).map(|_| rng.gen_range(0..field.q())).collect()
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, field: FieldCtx, len: usize) -> Vec<Elem> {
    loop {
        let v = vector(rng, field, len);
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, field: FieldCtx, n: usize, p: usize) -> Matrix {
    Matrix::from_vec(field, n, p, vector(rng, field, n * p)).expect("length np")
}

pub fn invertible<R: Rng>(rng: &mut R, field: FieldCtx, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A linear space of exactly dimension `dim`, grown from random generators.
pub fn linear_space<R: Rng>(
    rng: &mut R,
    field: FieldCtx,
    n: usize,
    p: usize,
    dim: usize,
) -> LinearMatrixSpace {
    assert!(dim <= n * p, "dimension {dim} exceeds {}", n * p);
    let mut gens = Vec::with_capacity(dim);
    let mut space = LinearMatrixSpace::zero(field, n, p);
    while space.dim() < dim {
        let m = matrix(rng, field, n, p);
        if !space.contains(&m).expect("shape") {
            gens.push(m);
            space = LinearMatrixSpace::span(field, n, p, &gens).expect("shape");
        }
    }
    space
}

/// A linear space of uniformly random dimension in `0..=np`.
pub fn any_linear_space<R: Rng>(rng: &mut R, field: FieldCtx, n: usize, p: usize) -> LinearMatrixSpace {
    let dim = rng.gen_range(0..=n * p);
    linear_space(rng, field, n, p, dim)
}
