//! Dispatch to a summation method and comparison against a closed form.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Signed;

use super::def::{Convergence, IdentityDef, RatioLimit, SeriesDef, TargetTerm, ZetaConst};
use super::engine::{sum_geometric, Method, SeriesSum};
use super::polytail::sum_polynomial_tail;
use super::tail::sum_algebraic;
use crate::error::{Error, Result};
use crate::numeric::rational::log10_abs;
use crate::numeric::{zeta_with_bound, BigReal};

/// Sums a series with the method its ratio limit calls for.
pub fn sum_series(def: &SeriesDef, digits: u32, max_terms: usize) -> Result<SeriesSum> {
    if def.convergence == Convergence::Polynomial && def.has_harmonics() {
        return sum_polynomial_tail(def, digits);
    }
    match def.ratio_limit() {
        RatioLimit::Geometric(_) => sum_geometric(def, digits, max_terms),
        RatioLimit::Unit if !def.has_harmonics() => sum_algebraic(def, digits, max_terms),
        RatioLimit::Unit => Err(Error::NonConvergence { ratio: 1.0, terms: 0 }),
        RatioLimit::Divergent(r) => Err(Error::NonConvergence {
            ratio: 10f64.powf(log10_abs(&r)),
            terms: 0,
        }),
    }
}

/// Result of evaluating a series against a reference value.
#[derive(Clone, Debug)]
pub struct EvalReport {
    pub id: String,
    pub value: BigReal,
    pub error_bound: BigReal,
    pub terms_used: usize,
    pub rate_digits_per_term: f64,
    pub target_value: BigReal,
    /// Uncertainty of `target_value` itself.
    pub target_error: BigReal,
    /// `|value - target_value|`
    pub residual: BigReal,
    pub digits: u32,
    pub method: Method,
}

impl EvalReport {
    pub fn new(id: impl Into<String>, sum: SeriesSum, target_value: BigReal, target_error: BigReal, digits: u32) -> Self {
        let residual = (&sum.value - &target_value).abs();
        EvalReport {
            id: id.into(),
            value: sum.value,
            error_bound: sum.error_bound,
            terms_used: sum.terms_used,
            rate_digits_per_term: sum.rate,
            target_value,
            target_error,
            residual,
            digits,
            method: sum.method,
        }
    }

    /// Residual within the combined error bounds.
    pub fn within_bounds(&self) -> bool {
        self.residual <= &self.error_bound + &self.target_error
    }

    /// `within_bounds` and `residual <= 10^-tol_digits`.
    pub fn passes(&self, tol_digits: i64) -> bool {
        self.within_bounds() && self.residual <= BigReal::pow10(-tol_digits, self.residual.digits().max(16))
    }

    pub fn log10_residual(&self) -> f64 {
        self.residual.log10_abs()
    }
}

type ZetaCache = HashMap<(u32, u32), (BigReal, BigReal)>;

static ZETA_CACHE: Mutex<Option<ZetaCache>> = Mutex::new(None);

/// ζ(s) and its remainder bound, memoized by `(s, digits)`.
pub fn cached_zeta(s: u32, digits: u32) -> (BigReal, BigReal) {
    if let Some(v) = ZETA_CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .get(&(s, digits))
    {
        return v.clone();
    }
    let v = zeta_with_bound(s, digits);
    ZETA_CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert((s, digits), v.clone());
    v
}

/// Value of `Σ coeff · constant` and a bound on its error.
pub fn target_value(target: &[TargetTerm], digits: u32) -> (BigReal, BigReal) {
    let mut value = BigReal::zero(digits);
    let mut err = BigReal::zero(digits);
    for t in target {
        let (v, e) = match t.constant.argument() {
            Some(s) => cached_zeta(s, digits),
            None => (BigReal::one(digits), BigReal::zero(digits)),
        };
        value = value + v.mul_rational(&t.coeff);
        err = err + e.mul_rational(&t.coeff.abs());
    }
    (value, err)
}

/// Sums the series of `def` and compares it with its target.
pub fn sum_identity(def: &IdentityDef, digits: u32, max_terms: usize) -> Result<EvalReport> {
    let sum = sum_series(&def.series, digits, max_terms)?;
    let w = sum.value.digits().max(digits);
    let (tv, te) = target_value(&def.target, w);
    Ok(EvalReport::new(def.id.clone(), sum, tv, te, digits))
}

/// True if any target term involves ζ.
pub fn target_uses_zeta(target: &[TargetTerm]) -> bool {
    target.iter().any(|t| t.constant != ZetaConst::One)
}
