//! Central-difference derivatives with one Richardson step.

use num_traits::{One, Signed};

use super::cases::SpecializationCase;
use super::family::MAX_TERMS;
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, gen_harmonic, int, pochhammer, BigReal, Rational};
use crate::series::{sum_series, target_value, SeriesDef};

/// Step `h = 10^(-digits/4)`.
pub fn stencil_step(digits: u32) -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits / 4))
}

/// `10^(-digits/2)`
pub fn stencil_tolerance(digits: u32) -> BigReal {
    BigReal::pow10(-((digits / 2) as i64), digits)
}

/// A derivative estimate and the gap between its two Richardson levels.
#[derive(Clone, Debug)]
pub struct Stencil {
    pub value: BigReal,
    pub gap: BigReal,
}

/// Five-point derivative of order 1 or 2 of `f` at `t0`, extrapolated once
/// from steps `h` and `2h`.
pub fn stencil<F>(f: F, t0: &Rational, h: &Rational, order: u32, w: u32) -> Result<Stencil>
where
    F: Fn(&Rational) -> Result<BigReal>,
{
    let at = |j: i64| f(&(t0 + h * int(j)));
    let (m4, m2, m1, p1, p2, p4) = (at(-4)?, at(-2)?, at(-1)?, at(1)?, at(2)?, at(4)?);
    let hr = BigReal::from_rational(h, w);
    let (dh, d2h) = match order {
        1 => {
            let dh = (&m2 - &m1.mul_i64(8) + p1.mul_i64(8) - &p2) / hr.mul_i64(12);
            let d2h = (&m4 - &m2.mul_i64(8) + p2.mul_i64(8) - &p4) / hr.mul_i64(24);
            (dh, d2h)
        }
        2 => {
            let c = at(0)?.mul_i64(30);
            let h2 = hr.square();
            let dh = (m1.mul_i64(16) - &m2 - &c + p1.mul_i64(16) - &p2) / h2.mul_i64(12);
            let d2h = (m2.mul_i64(16) - &m4 - &c + p2.mul_i64(16) - &p4) / h2.mul_i64(48);
            (dh, d2h)
        }
        _ => return Err(Error::InvalidArgument(format!("stencil order {order} is not 1 or 2"))),
    };
    let gap = (&dh - &d2h).abs();
    let value = (dh.mul_i64(16) - d2h).div_i64(15);
    Ok(Stencil { value, gap })
}

/// Outcome of comparing two derivatives.
#[derive(Clone, Debug)]
pub struct DerivativeReport {
    pub label: String,
    pub order: u32,
    pub left: BigReal,
    pub right: BigReal,
    pub residual: BigReal,
    pub tolerance: BigReal,
    /// Largest disagreement between Richardson levels.
    pub gap: BigReal,
    pub passed: bool,
}

impl DerivativeReport {
    fn new(label: String, order: u32, left: Stencil, right: BigReal, right_gap: BigReal, tolerance: BigReal) -> Self {
        let residual = (&left.value - &right).abs();
        let gap = if left.gap > right_gap { left.gap } else { right_gap };
        let passed = residual <= tolerance;
        DerivativeReport {
            label,
            order,
            left: left.value,
            right,
            residual,
            tolerance,
            gap,
            passed,
        }
    }

    pub fn log10_residual(&self) -> f64 {
        self.residual.log10_abs()
    }
}

fn side_value(def: &SeriesDef, w: u32) -> Result<BigReal> {
    Ok(sum_series(def, w, MAX_TERMS)?.value)
}

fn ensure_stable(s: &Stencil, tol: &BigReal) -> Result<()> {
    if s.gap > *tol {
        return Err(Error::StencilUnstable {
            log10_gap: s.gap.log10_abs(),
        });
    }
    Ok(())
}

/// Sample orders for the Pochhammer check.
pub const POCHHAMMER_ORDERS: [u64; 3] = [1, 5, 20];

/// Stencil derivative of `x ↦ (x)_n` against `(x0)_n · H_n(x0 - 1)`, with
/// the tolerance taken relative to the exact value.
pub fn check_pochhammer_derivative(x0: &Rational, n: u64, digits: u32) -> Result<DerivativeReport> {
    let h = stencil_step(digits);
    let exact = pochhammer(x0, n) * gen_harmonic(n, 1, &(x0 - int(1)))?;
    let mag = crate::numeric::rational::log10_abs(&exact).max(0.0);
    let w = digits + 20 + mag.ceil() as u32 + digits / 2;
    let s = stencil(|x| Ok(BigReal::from_rational(&pochhammer(x, n), w)), x0, &h, 1, w)?;
    let scale = exact.abs().max(Rational::one());
    let tol = stencil_tolerance(digits).mul_rational(&scale);
    ensure_stable(&s, &tol)?;
    let label = format!("D (x)_{n} at x={}", format_rational(x0));
    Ok(DerivativeReport::new(
        label,
        1,
        s,
        BigReal::from_rational(&exact, w),
        BigReal::zero(w),
        tol,
    ))
}

/// First-derivative stencils of both sides of `case` at `t0` compared
/// within `10^(-digits/2)`; also checks the Pochhammer derivative rule at
/// `t0` for the orders in [`POCHHAMMER_ORDERS`].
pub fn check_derivative(case: SpecializationCase, t0: &Rational, digits: u32) -> Result<DerivativeReport> {
    let h = stencil_step(digits);
    let margin = &h * int(4);
    case.check_interior(&(t0 - &margin))?;
    case.check_interior(&(t0 + &margin))?;
    let w = digits + 10;
    let tol = stencil_tolerance(digits);
    let l = stencil(|t| side_value(&case.left(t), w), t0, &h, 1, w)?;
    let r = stencil(|t| side_value(&case.right(t), w), t0, &h, 1, w)?;
    ensure_stable(&l, &tol)?;
    ensure_stable(&r, &tol)?;
    let mut report = DerivativeReport::new(
        format!("D {}({}={})", case.id(), case.param().name(), format_rational(t0)),
        1,
        l,
        r.value,
        r.gap,
        tol,
    );
    for n in POCHHAMMER_ORDERS {
        report.passed &= check_pochhammer_derivative(t0, n, digits)?.passed;
    }
    Ok(report)
}

/// Derivative of the left side at `t = 1` against the linked catalog
/// entry, as given by [`SpecializationCase::derivative_link`].
pub fn check_derivative_link(case: SpecializationCase, digits: u32) -> Result<DerivativeReport> {
    let link = case.derivative_link();
    let catalog = Catalog::builtin();
    let entry = catalog.get(link.entry)?;
    let h = stencil_step(digits);
    let w = digits + 10;
    let tol = stencil_tolerance(digits);
    let one = int(1);
    let l = stencil(|t| side_value(&case.left(t), w), &one, &h, link.order, w)?;
    ensure_stable(&l, &tol)?;
    let (value, err) = target_value(&entry.def.target, w);
    let right = value.mul_rational(&link.factor);
    let prime = if link.order == 1 { "'" } else { "''" };
    Ok(DerivativeReport::new(
        format!("{}: L{prime}(1) = {} * {}", case.id(), format_rational(&link.factor), link.entry),
        link.order,
        l,
        right,
        err,
        tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn pochhammer_fifth_at_one() {
        let r = check_pochhammer_derivative(&int(1), 5, 40).unwrap();
        assert!(r.passed);
        assert!((&r.right - &BigReal::from_i64(274, 40)).abs().log10_abs() < -30.0);
    }

    #[test]
    fn pochhammer_rule_up_to_twenty() {
        for x in [rat(1, 2), int(1), rat(3, 2)] {
            for n in 0..=20 {
                let r = check_pochhammer_derivative(&x, n, 60).unwrap();
                assert!(r.passed, "x={x} n={n}: {}", r.log10_residual());
            }
        }
    }

    #[test]
    fn second_derivative_of_cubic() {
        let w = 50;
        let f = |x: &Rational| Ok(BigReal::from_rational(&(x * x * x), w));
        let s = stencil(f, &rat(1, 3), &stencil_step(40), 2, w).unwrap();
        assert!((&s.value - &BigReal::from_i64(2, w)).abs().log10_abs() < -25.0);
    }

    #[test]
    fn derivative_matches_on_both_sides() {
        let r = check_derivative(SpecializationCase::Aa, &rat(9, 10), 60).unwrap();
        assert!(r.passed, "{}", r.log10_residual());
    }

    #[test]
    fn ll_second_derivative_links_to_entry() {
        let r = check_derivative_link(SpecializationCase::Ll, 40).unwrap();
        assert!(r.passed, "{}: {}", r.label, r.log10_residual());
    }
}
