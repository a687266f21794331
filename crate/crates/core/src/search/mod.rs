//! Exhaustive verification of the dimension bound and the equality-case
//! classification for small `(n, p, q)`.
//!
//! Every affine space of the target dimension is visited once: directions by
//! RREF pivot profile and free-entry filling, then every canonical coset
//! point. Work is cut into units of consecutive fillings within one profile;
//! units are scanned independently and their partial reports merged with an
//! associative, commutative merge, so the report does not depend on the
//! number of workers.
//!
//! Over `F_2` the scan runs on bit masks of the vectorized matrices, walking
//! each coset in Gray-code order and reading ranks from a lookup table.

mod enumerate;
mod exec;
mod report;

use std::ops::ControlFlow;
use std::time::Instant;

use thiserror::Error;

pub use enumerate::{enumerate_affine_spaces, enumerate_linear_subspaces, gaussian_binomial};
pub use exec::Execution;
pub use report::{ScanMode, VerificationReport, Violation};

use crate::duality::dual_rank_spectrum;
use crate::exactmat::bits::{mask_rank, RankTable};
use crate::exactmat::Matrix;
use crate::gf::{Elem, FieldCtx, FieldError};
use crate::spaces::{AffineMatrixSpace, DEFAULT_CAP};
use crate::structure::{
    classify_singular_space, left_kernel_witnesses, right_kernel_witnesses, OutcomeStatus, Witness,
};
use enumerate::{direction_space, profiles, Profile};
use report::Partial;

/// Parameter sets accepted by the verifiers.
pub const SUPPORTED_PARAMS: [(usize, usize, u32); 5] =
    [(2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 2, 5), (3, 3, 2)];

/// Fillings per work unit.
const UNIT_FILLINGS: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("parameters (n={n}, p={p}, q={q}) are outside the supported budget table")]
    BudgetExceeded { n: usize, p: usize, q: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Which per-space kernel the scanner uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Kernel {
    /// Bit-packed masks over `F_2` when the shape allows it, generic otherwise.
    #[default]
    Auto,
    /// Always the generic dense-matrix path.
    Generic,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanConfig {
    pub execution: Execution,
    pub kernel: Kernel,
}

impl ScanConfig {
    pub fn with_execution(execution: Execution) -> Self {
        ScanConfig {
            execution,
            ..Default::default()
        }
    }
}

/// The property a falsification run tests on each singular space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// The space contains a rank-`n` matrix.
    ContainsFullRank,
    /// A common left-kernel vector, or (square case) a common right-kernel
    /// vector, exists.
    KernelWitness,
    /// A kernel witness exists or the space is the non-linear
    /// `n = p = q = 2` exception.
    TheoremOutcome,
}

// ---------------------------------------------------------------------------
// Hashing of canonical forms
// ---------------------------------------------------------------------------

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    splitmix64(h ^ x)
}

fn direction_hash(dim: usize, rows: impl Iterator<Item = u64>) -> u64 {
    rows.fold(splitmix64(dim as u64), mix)
}

/// `Σ v_i q^i`; over `F_2` this is the bit mask of the vector.
fn vec_code(v: &[Elem], q: u32) -> u64 {
    v.iter()
        .rev()
        .fold(0u64, |acc, &x| acc.wrapping_mul(q as u64).wrapping_add(x as u64))
}

// ---------------------------------------------------------------------------
// Scanner
// ---------------------------------------------------------------------------

struct Unit {
    profile: usize,
    start: u64,
    end: u64,
}

struct ScanContext {
    field: FieldCtx,
    n: usize,
    p: usize,
    profiles: Vec<Profile>,
    binary: Option<Option<RankTable>>,
}

impl ScanContext {
    fn new(field: FieldCtx, n: usize, p: usize, d: usize, kernel: Kernel) -> Self {
        let m = n * p;
        let binary = (kernel == Kernel::Auto && field.is_binary() && m <= 64 && n <= 8)
            .then(|| RankTable::new(n, p));
        ScanContext {
            field,
            n,
            p,
            profiles: profiles(m, d),
            binary,
        }
    }

    fn units(&self) -> Vec<Unit> {
        let mut units = Vec::new();
        for (i, prof) in self.profiles.iter().enumerate() {
            let total = prof.fillings(self.field.q());
            let mut start = 0;
            while start < total {
                let end = (start + UNIT_FILLINGS).min(total);
                units.push(Unit {
                    profile: i,
                    start,
                    end,
                });
                start = end;
            }
        }
        units
    }

    /// Visits every space of the unit with its hash and, when the space has
    /// no rank-`n` element, the space itself.
    fn scan_unit<F>(&self, unit: &Unit, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(u64, Option<AffineMatrixSpace>) -> ControlFlow<()>,
    {
        match &self.binary {
            Some(table) => self.scan_unit_binary(unit, table.as_ref(), visit),
            None => self.scan_unit_generic(unit, visit),
        }
    }

    fn scan_unit_generic<F>(&self, unit: &Unit, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(u64, Option<AffineMatrixSpace>) -> ControlFlow<()>,
    {
        let (f, n, p) = (self.field, self.n, self.p);
        let m = n * p;
        let q = f.q();
        let profile = &self.profiles[unit.profile];
        for t in unit.start..unit.end {
            let rows = profile.direction_rows(f, m, t);
            let hdir = direction_hash(rows.len(), rows.iter().map(|r| vec_code(r, q)));
            let dir = direction_space(f, n, p, profile, rows);
            for code in 0..profile.cosets(q) {
                let point = profile.coset_point(f, m, code);
                let h = mix(hdir, vec_code(&point, q));
                let point = Matrix::from_vec(f, n, p, point).expect("length np");
                let space = AffineMatrixSpace::new(point, dir.clone()).expect("shapes agree");
                let has_full = space
                    .elements(u64::MAX)
                    .expect("uncapped")
                    .any(|e| e.rank() >= n);
                visit(h, (!has_full).then_some(space))?;
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_unit_binary<F>(
        &self,
        unit: &Unit,
        table: Option<&RankTable>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(u64, Option<AffineMatrixSpace>) -> ControlFlow<()>,
    {
        let (n, p) = (self.n, self.p);
        let profile = &self.profiles[unit.profile];
        let d = profile.pivots.len();
        let rank = |mask: u64| match table {
            Some(t) => t.rank(mask),
            None => mask_rank(mask, n, p),
        };
        let cosets = 1u64 << profile.nonpivot.len();
        let mut rows = vec![0u64; d];
        for t in unit.start..unit.end {
            for (r, &pc) in rows.iter_mut().zip(&profile.pivots) {
                *r = 1 << pc;
            }
            for (idx, &(k, c)) in profile.free.iter().enumerate() {
                if (t >> idx) & 1 == 1 {
                    rows[k] |= 1 << c;
                }
            }
            let hdir = direction_hash(d, rows.iter().copied());
            for code in 0..cosets {
                let mut point = 0u64;
                for (bit, &c) in profile.nonpivot.iter().enumerate() {
                    point |= ((code >> bit) & 1) << c;
                }
                let h = mix(hdir, point);
                let mut cur = point;
                let mut has_full = rank(cur) == n;
                let mut i = 1u64;
                while !has_full && i < (1u64 << d) {
                    cur ^= rows[i.trailing_zeros() as usize];
                    has_full = rank(cur) == n;
                    i += 1;
                }
                let singular = (!has_full).then(|| self.materialize_binary(profile, &rows, point));
                visit(h, singular)?;
            }
        }
        ControlFlow::Continue(())
    }

    fn materialize_binary(&self, profile: &Profile, rows: &[u64], point: u64) -> AffineMatrixSpace {
        let (f, n, p) = (self.field, self.n, self.p);
        let m = n * p;
        let unpack = |mask: u64| -> Vec<Elem> { (0..m).map(|i| ((mask >> i) & 1) as Elem).collect() };
        let dir = direction_space(f, n, p, profile, rows.iter().map(|&r| unpack(r)).collect());
        let point = Matrix::from_vec(f, n, p, unpack(point)).expect("length np");
        AffineMatrixSpace::new(point, dir).expect("shapes agree")
    }
}

fn check_budget(n: usize, p: usize, q: u32) -> Result<FieldCtx, SearchError> {
    if !SUPPORTED_PARAMS.contains(&(n, p, q)) {
        return Err(SearchError::BudgetExceeded { n, p, q });
    }
    Ok(FieldCtx::new(q)?)
}

fn violation(space: &AffineMatrixSpace, reason: impl Into<String>) -> Violation {
    Violation {
        space: space.to_string(),
        reason: reason.into(),
    }
}

/// Records one singular space of the equality scan: classification,
/// witness histogram and the dual rank spectrum of its direction.
fn record_equality_case(acc: &mut Partial, space: &AffineMatrixSpace) {
    let outcome = match classify_singular_space(space, DEFAULT_CAP) {
        Ok(o) => o,
        Err(e) => {
            acc.violations.push(violation(space, format!("classification failed: {e}")));
            return;
        }
    };
    *acc.histogram.entry(outcome.kind_signature()).or_insert(0) += 1;
    if outcome.status != OutcomeStatus::Classified {
        acc.violations
            .push(violation(space, format!("status {:?}", outcome.status)));
    }
    if outcome.witnesses.contains(&Witness::ExceptionalF2) {
        acc.exceptional_spaces.push(space.to_string());
    }
    match dual_rank_spectrum(space.direction(), DEFAULT_CAP) {
        Ok(spectrum) => {
            acc.spectrum_checks += spectrum.entries.len() as u64;
            if !spectrum.rank_identity_holds() {
                acc.violations.push(violation(space, "rank identity fails"));
            }
            if !spectrum.has_extremal_shape() {
                acc.violations
                    .push(violation(space, "dual rank spectrum outside {0, 1, p}"));
            }
        }
        Err(e) => acc
            .violations
            .push(violation(space, format!("spectrum failed: {e}"))),
    }
}

/// Runs one scan without the budget check.
pub fn verify_with(
    mode: ScanMode,
    field: FieldCtx,
    n: usize,
    p: usize,
    config: ScanConfig,
) -> VerificationReport {
    let started = Instant::now();
    let target_dim = match mode {
        ScanMode::Bound => p * (n - 1) + 1,
        ScanMode::Equality => p * (n - 1),
    };
    let ctx = ScanContext::new(field, n, p, target_dim, config.kernel);
    let units = ctx.units();
    let partial = config.execution.map_reduce(
        &units,
        |unit| {
            let mut acc = Partial::default();
            let _ = ctx.scan_unit(unit, &mut |h, singular| {
                acc.spaces_scanned += 1;
                acc.checksum = acc.checksum.wrapping_add(h);
                if let Some(space) = singular {
                    acc.singular_spaces_found += 1;
                    match mode {
                        ScanMode::Bound => acc
                            .violations
                            .push(violation(&space, "no rank-n element above the bound")),
                        ScanMode::Equality => record_equality_case(&mut acc, &space),
                    }
                }
                ControlFlow::Continue(())
            });
            acc
        },
        Partial::merge,
    );
    VerificationReport::from_partial(
        mode,
        (n, p, field.q(), target_dim),
        partial,
        started.elapsed().as_millis() as u64,
    )
}

/// Scans every affine space of dimension `p(n-1) + 1` for a rank-`n`
/// element.
pub fn verify_dimension_bound(
    n: usize,
    p: usize,
    q: u32,
    execution: Execution,
) -> Result<VerificationReport, SearchError> {
    let field = check_budget(n, p, q)?;
    Ok(verify_with(
        ScanMode::Bound,
        field,
        n,
        p,
        ScanConfig::with_execution(execution),
    ))
}

/// Scans every affine space of dimension `p(n-1)` and classifies the
/// singular ones.
pub fn verify_equality_classification(
    n: usize,
    p: usize,
    q: u32,
    execution: Execution,
) -> Result<VerificationReport, SearchError> {
    let field = check_budget(n, p, q)?;
    Ok(verify_with(
        ScanMode::Equality,
        field,
        n,
        p,
        ScanConfig::with_execution(execution),
    ))
}

fn violates(claim: Claim, space: &AffineMatrixSpace) -> bool {
    let (n, p) = space.shape();
    let has_kernel_witness = || {
        let left = left_kernel_witnesses(space, DEFAULT_CAP).is_ok_and(|w| !w.is_empty());
        left || (n == p && right_kernel_witnesses(space, DEFAULT_CAP).is_ok_and(|w| !w.is_empty()))
    };
    match claim {
        Claim::ContainsFullRank => true,
        Claim::KernelWitness => !has_kernel_witness(),
        Claim::TheoremOutcome => {
            let exceptional = n == 2 && p == 2 && space.field().q() == 2 && !space.is_linear();
            !exceptional && !has_kernel_witness()
        }
    }
}

/// The first space of dimension `d`, in enumeration order, with no rank-`n`
/// element that also violates `claim`.
pub fn find_counterexample(
    field: FieldCtx,
    n: usize,
    p: usize,
    d: usize,
    claim: Claim,
    execution: Execution,
) -> Option<AffineMatrixSpace> {
    if d > n * p {
        return None;
    }
    let ctx = ScanContext::new(field, n, p, d, Kernel::Auto);
    let units = ctx.units();
    execution.find_map_first(&units, |unit| {
        let mut found = None;
        let _ = ctx.scan_unit(unit, &mut |_, singular| match singular {
            Some(space) if violates(claim, &space) => {
                found = Some(space);
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        });
        found
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::exceptional_space;

    #[test]
    fn vec_code_is_the_bit_mask_over_f2() {
        assert_eq!(vec_code(&[1, 0, 1, 1], 2), 0b1101);
        assert_eq!(vec_code(&[2, 1], 3), 2 + 3);
    }

    #[test]
    fn units_cover_every_filling() {
        let ctx = ScanContext::new(FieldCtx::f2(), 3, 3, 6, Kernel::Auto);
        let total: u64 = ctx.units().iter().map(|u| u.end - u.start).sum();
        assert_eq!(total as u128, gaussian_binomial(9, 6, 2));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            verify_dimension_bound(3, 3, 3, Execution::Sequential).unwrap_err(),
            SearchError::BudgetExceeded { n: 3, p: 3, q: 3 }
        );
    }

    #[test]
    fn bound_222() {
        let r = verify_dimension_bound(2, 2, 2, Execution::Sequential).unwrap();
        assert_eq!(r.spaces_scanned, 30);
        assert!(r.passed());
    }

    #[test]
    fn counterexamples() {
        let f2 = FieldCtx::f2();
        let seq = Execution::Sequential;
        assert!(find_counterexample(f2, 2, 2, 3, Claim::ContainsFullRank, seq).is_none());
        assert!(find_counterexample(f2, 2, 3, 3, Claim::TheoremOutcome, seq).is_none());
        assert!(find_counterexample(f2, 2, 2, 2, Claim::TheoremOutcome, seq).is_none());
        let found = find_counterexample(f2, 2, 2, 2, Claim::KernelWitness, seq).unwrap();
        assert!(!found.is_linear());
        assert_eq!(found.max_rank(DEFAULT_CAP).unwrap(), 1);
        // Equivalent to the exceptional space under some (P, Q).
        let gl2: Vec<Matrix> = crate::exactmat::all_vectors(f2, 4)
            .map(|v| Matrix::from_vec(f2, 2, 2, v).unwrap())
            .filter(Matrix::is_invertible)
            .collect();
        let exc = exceptional_space();
        assert!(gl2
            .iter()
            .any(|a| gl2.iter().any(|b| exc.transform(a, b).unwrap() == found)));
    }
}
