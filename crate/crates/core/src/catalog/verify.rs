//! Checking catalog entries against their closed forms.

use super::{Catalog, CatalogEntry};
use crate::error::Result;
use crate::series::{sum_identity, Convergence, EvalReport, MAX_POLY_DIGITS};

/// Outcome of verifying one entry.
#[derive(Clone, Debug)]
pub struct Verification {
    pub report: EvalReport,
    /// Precision actually used; polynomial-rate entries are capped.
    pub digits: u32,
    pub requested_digits: u32,
    pub passed: bool,
}

impl Verification {
    pub fn capped(&self) -> bool {
        self.digits < self.requested_digits
    }
}

/// Sums `entry` and applies the pass rule: residual within the combined
/// error bounds and below `10^(5 - digits)`.
pub fn verify_entry(entry: &CatalogEntry, digits: u32, max_terms: usize) -> Result<Verification> {
    let s = &entry.def.series;
    let used = if s.convergence == Convergence::Polynomial && s.has_harmonics() {
        digits.min(MAX_POLY_DIGITS)
    } else {
        digits
    };
    let report = sum_identity(&entry.def, used, max_terms)?;
    let passed = report.passes(used as i64 - 5);
    Ok(Verification {
        report,
        digits: used,
        requested_digits: digits,
        passed,
    })
}

/// Looks up `id` and verifies it.
pub fn verify_identity(catalog: &Catalog, id: &str, digits: u32, max_terms: usize) -> Result<Verification> {
    verify_entry(catalog.get(id)?, digits, max_terms)
}
