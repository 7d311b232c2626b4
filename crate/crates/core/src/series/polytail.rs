//! Direct summation plus an integral estimate of the tail, for series whose
//! terms decay like a power of `k` times harmonic numbers.
//!
//! The tail `Σ_{k≥N} f(k)` is replaced by the midpoint-rule expansion
//! `∫_{N-1/2}^∞ f(x) dx + f'(N-1/2)/24`, where `f` continues the summand to
//! real `x` through `H_k^(1)(x0) = ψ(k+x0+1) - ψ(x0+1)` and
//! `H_k^(2)(x0) = ψ'(x0+1) - ψ'(k+x0+1)`. Everything past the direct sum is
//! computed in double precision, which caps the certified accuracy.

use num_traits::ToPrimitive;

use super::def::{HarmonicArg, HarmonicFactor, SeriesDef};
use super::engine::{rounding_allowance, Method, SeriesSum, TermStream};
use crate::error::{Error, Result};
use crate::numeric::rational::as_integer;
use crate::numeric::reference::EULER_GAMMA;
use crate::numeric::{BigReal, Poly};

/// Largest number of digits this method claims.
pub const MAX_POLY_DIGITS: u32 = 12;

/// Terms summed exactly before the tail estimate.
pub const POLY_CUTOFF: usize = 10_000;

const WORK_DIGITS: u32 = 30;

/// Simpson panels for the tail integral in `v = ln(x / x0)`.
const PANELS: usize = 4000;

/// Integration range in `v`; the integrand decays at least like `e^-v`.
const V_MAX: f64 = 50.0;

pub fn sum_polynomial_tail(def: &SeriesDef, digits: u32) -> Result<SeriesSum> {
    if digits > MAX_POLY_DIGITS {
        return Err(Error::DigitsTooHigh {
            requested: digits,
            max: MAX_POLY_DIGITS,
        });
    }
    let f = ContinuousSummand::new(def)?;
    let mut stream = TermStream::new(def, WORK_DIGITS)?;
    let mut head = BigReal::zero(WORK_DIGITS);
    let mut max_log = f64::NEG_INFINITY;
    for _ in 0..POLY_CUTOFF {
        let t = stream.next_term()?;
        max_log = max_log.max(t.log10_abs());
        head = head + t;
    }
    let x0 = POLY_CUTOFF as f64 - 0.5;
    let integral = simpson_log(&f, x0);
    let delta = x0 * 1e-3;
    let deriv = (f.eval(x0 + delta) - f.eval(x0 - delta)) / (2.0 * delta);
    let tail = integral + deriv / 24.0;
    let bound = (deriv / 24.0).abs() + 1e-14 * integral.abs();

    Ok(SeriesSum {
        value: head + BigReal::from_f64(tail, WORK_DIGITS),
        error_bound: BigReal::from_f64(bound, WORK_DIGITS) + rounding_allowance(POLY_CUTOFF, max_log, WORK_DIGITS),
        terms_used: POLY_CUTOFF,
        rate: 0.0,
        method: Method::PolynomialTail,
    })
}

fn simpson_log(f: &ContinuousSummand, x0: f64) -> f64 {
    let h = V_MAX / PANELS as f64;
    let g = |v: f64| {
        let x = x0 * v.exp();
        f.eval(x) * x
    };
    let mut acc = g(0.0) + g(V_MAX);
    for i in 1..PANELS {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * g(i as f64 * h);
    }
    acc * h / 3.0
}

struct ContinuousTerm {
    num: Vec<f64>,
    den: Vec<f64>,
    /// (order, x0, ψ(x0+1) or ψ'(x0+1))
    harmonic: Vec<(u32, f64, f64)>,
}

struct ContinuousSummand {
    terms: Vec<ContinuousTerm>,
}

impl ContinuousSummand {
    fn new(def: &SeriesDef) -> Result<Self> {
        let unsupported = |why: &str| Error::InvalidArgument(format!("polynomial tail: {why}"));
        if def.z != crate::numeric::int(1) || !def.poch_num.is_empty() || !def.poch_den.is_empty() {
            return Err(unsupported("needs z = 1 and no Pochhammer factors"));
        }
        let mut terms = Vec::new();
        for t in &def.terms {
            let dn = t.num.degree().unwrap_or(0);
            let dd = t.den.degree().unwrap_or(0);
            if !t.num.is_zero() && dd < dn + 2 {
                return Err(unsupported("each term must decay at least like k^-2"));
            }
            let mut harmonic = Vec::new();
            for h in &t.harmonic {
                harmonic.push(continuous_harmonic(h).ok_or_else(|| {
                    unsupported("harmonic factors must be H_k with a nonnegative integer offset")
                })?);
            }
            terms.push(ContinuousTerm {
                num: to_f64(&t.num),
                den: to_f64(&t.den),
                harmonic,
            });
        }
        Ok(ContinuousSummand { terms })
    }

    fn eval(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let mut v = horner(&t.num, x) / horner(&t.den, x);
                for &(ell, x0, base) in &t.harmonic {
                    v *= match ell {
                        1 => digamma(x + x0 + 1.0) - base,
                        _ => base - trigamma(x + x0 + 1.0),
                    };
                }
                v
            })
            .sum()
    }
}

fn continuous_harmonic(h: &HarmonicFactor) -> Option<(u32, f64, f64)> {
    if h.arg != HarmonicArg::K {
        return None;
    }
    let x0 = as_integer(&h.x)?.to_u64()?;
    let base = match h.ell {
        1 => -EULER_GAMMA + (1..=x0).map(|i| 1.0 / i as f64).sum::<f64>(),
        2 => std::f64::consts::PI.powi(2) / 6.0 - (1..=x0).map(|i| 1.0 / (i * i) as f64).sum::<f64>(),
        _ => return None,
    };
    Some((h.ell, x0 as f64, base))
}

fn to_f64(p: &Poly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(0.0)).collect()
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// ψ(y) for `y ≥ 10`, asymptotic series.
fn digamma(y: f64) -> f64 {
    let y2 = 1.0 / (y * y);
    y.ln() - 0.5 / y - y2 * (1.0 / 12.0 - y2 * (1.0 / 120.0 - y2 * (1.0 / 252.0 - y2 / 240.0)))
}

/// ψ'(y) for `y ≥ 10`, asymptotic series.
fn trigamma(y: f64) -> f64 {
    let inv = 1.0 / y;
    let y2 = inv * inv;
    inv + 0.5 * y2 + inv * y2 * (1.0 / 6.0 - y2 * (1.0 / 30.0 - y2 * (1.0 / 42.0 - y2 / 30.0)))
}

/// Whether `sum_polynomial_tail` accepts the series.
pub fn supports_polynomial_tail(def: &SeriesDef) -> bool {
    ContinuousSummand::new(def).is_ok()
}
