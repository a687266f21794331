use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// All spaces of dimension `p(n-1) + 1` must contain a rank-`n` matrix.
    Bound,
    /// All singular spaces of dimension `p(n-1)` must carry a witness.
    Equality,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    /// The offending space in the space file format.
    pub space: String,
    pub reason: String,
}

/// Per-unit partial results. Merging is associative and commutative.
#[derive(Debug, Clone, Default)]
pub(crate) struct Partial {
    pub spaces_scanned: u64,
    pub singular_spaces_found: u64,
    pub spectrum_checks: u64,
    pub checksum: u64,
    pub histogram: BTreeMap<String, u64>,
    pub exceptional_spaces: Vec<String>,
    pub violations: Vec<Violation>,
}

impl Partial {
    pub fn merge(mut self, other: Partial) -> Partial {
        self.spaces_scanned += other.spaces_scanned;
        self.singular_spaces_found += other.singular_spaces_found;
        self.spectrum_checks += other.spectrum_checks;
        self.checksum = self.checksum.wrapping_add(other.checksum);
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += v;
        }
        self.exceptional_spaces.extend(other.exceptional_spaces);
        self.violations.extend(other.violations);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: ScanMode,
    pub n: usize,
    pub p: usize,
    pub q: u32,
    pub target_dim: usize,
    pub spaces_scanned: u64,
    pub singular_spaces_found: u64,
    /// Witness-kind combination of each classified singular space.
    pub outcome_histogram: BTreeMap<String, u64>,
    /// Number of `(space, y)` pairs whose dual rank data was checked.
    pub spectrum_checks: u64,
    /// Canonical forms of the spaces flagged `ExceptionalF2`, sorted.
    pub exceptional_spaces: Vec<String>,
    pub violations: Vec<Violation>,
    /// Order-independent digest of every scanned canonical form.
    pub checksum: String,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub(crate) fn from_partial(
        mode: ScanMode,
        (n, p, q, target_dim): (usize, usize, u32, usize),
        mut partial: Partial,
        wall_time_ms: u64,
    ) -> Self {
        partial.exceptional_spaces.sort();
        partial.violations.sort();
        VerificationReport {
            mode,
            n,
            p,
            q,
            target_dim,
            spaces_scanned: partial.spaces_scanned,
            singular_spaces_found: partial.singular_spaces_found,
            outcome_histogram: partial.histogram,
            spectrum_checks: partial.spectrum_checks,
            exceptional_spaces: partial.exceptional_spaces,
            violations: partial.violations,
            checksum: format!("{:016x}", partial.checksum),
            wall_time_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The report with timing zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            ScanMode::Bound => "bound",
            ScanMode::Equality => "equality",
        };
        writeln!(f, "mode: {mode}")?;
        writeln!(f, "n: {}  p: {}  q: {}  dim: {}", self.n, self.p, self.q, self.target_dim)?;
        writeln!(f, "spaces_scanned: {}", self.spaces_scanned)?;
        writeln!(f, "singular_spaces_found: {}", self.singular_spaces_found)?;
        if self.mode == ScanMode::Equality {
            writeln!(f, "outcome_histogram:")?;
            for (k, v) in &self.outcome_histogram {
                writeln!(f, "  {k}: {v}")?;
            }
            writeln!(f, "spectrum_checks: {}", self.spectrum_checks)?;
            writeln!(f, "exceptional_spaces: {}", self.exceptional_spaces.len())?;
        }
        writeln!(f, "checksum: {}", self.checksum)?;
        writeln!(f, "wall_time_ms: {}", self.wall_time_ms)?;
        writeln!(f, "violations: {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.reason, v.space.trim_end().replace('\n', " | "))?;
        }
        Ok(())
    }
}
