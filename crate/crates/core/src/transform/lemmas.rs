//! Numeric checks of the dominating bounds behind uniform convergence.

use super::cases::FreeParam;
use super::family::MAX_TERMS;
use super::weights::lin;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, rat, ref_pi, ref_zeta, BigReal, Poly, Rational};
use crate::series::{partial_sum, sum_series, PochFactor, SeriesDef, SummandTerm};

/// Working precision of the lemma checks.
pub const LEMMA_DIGITS: u32 = 30;
/// Slack added to infinite-sum bounds.
pub const LEMMA_SLACK: i64 = -20;
/// Partial sums are checked up to this index.
pub const PARTIAL_N: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    /// `Σ (b)_k / ((1+k)^2 (3-b)_k) ≤ ζ(2)` on `(1/2, 3/2)`.
    One,
    /// `Σ_{k≤n} b(2-b)/((b+k)(2-b+k)) ≤ 9π²/8` on `(1/2, 3/2)`.
    Two,
    /// `Σ (2-c+2k)(3-2c)² / ((1+2k)²(3-2c+2k)²) ≤ Σ 18/(1+2k)³` on `(3/4, 5/4)`.
    Three,
    /// `Σ_{k≤n} (3/2-c)(c-1/2)/((3/2-c+k)(c-1/2+k)) ≤ 9π²/8` on `(3/4, 5/4)`.
    Four,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [Lemma::One, Lemma::Two, Lemma::Three, Lemma::Four];

    pub fn from_number(n: u32) -> Result<Self> {
        match n {
            1 => Ok(Lemma::One),
            2 => Ok(Lemma::Two),
            3 => Ok(Lemma::Three),
            4 => Ok(Lemma::Four),
            _ => Err(Error::InvalidArgument(format!("lemma {n} is not 1..4"))),
        }
    }

    pub fn number(self) -> u32 {
        self as u32 + 1
    }

    pub fn param(self) -> FreeParam {
        match self {
            Lemma::One | Lemma::Two => FreeParam::B,
            Lemma::Three | Lemma::Four => FreeParam::C,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Lemma::One => "g(b) <= zeta(2)",
            Lemma::Two => "s_n(b) <= 9 pi^2 / 8 for n <= 10^4",
            Lemma::Three => "g(c) <= 63/4 zeta(3)",
            Lemma::Four => "t_n(c) <= 9 pi^2 / 8 for n <= 10^4",
        }
    }

    /// Bounded quantity at `t`. The partial-sum lemmas have positive terms,
    /// so the largest partial sum up to `n` is the one at `n`.
    fn value(self, t: &Rational) -> Result<BigReal> {
        let d = LEMMA_DIGITS;
        let k = |x: Rational| PochFactor::k(x);
        match self {
            Lemma::One => {
                let def = SeriesDef::new(
                    int(1),
                    vec![k(t.clone())],
                    vec![k(int(3) - t)],
                    vec![SummandTerm::rational(Poly::one(), lin(int(1), 1).pow(2))],
                )
                .inferred();
                Ok(sum_series(&def, d, MAX_TERMS)?.value)
            }
            Lemma::Two => {
                let num = Poly::constant(t * (int(2) - t));
                let den = &lin(t.clone(), 1) * &lin(int(2) - t, 1);
                let def = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(num, den)]).inferred();
                partial_sum(&def, PARTIAL_N + 1, d)
            }
            Lemma::Three => {
                let u = int(3) - int(2) * t;
                let num = lin(int(2) - t, 2).scale(&(&u * &u));
                let den = &lin(int(1), 2).pow(2) * &lin(u, 2).pow(2);
                let def = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(num, den)]).inferred();
                Ok(sum_series(&def, d, MAX_TERMS)?.value)
            }
            Lemma::Four => {
                let (x, y) = (rat(3, 2) - t, t - rat(1, 2));
                let num = Poly::constant(&x * &y);
                let den = &lin(x, 1) * &lin(y, 1);
                let def = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(num, den)]).inferred();
                partial_sum(&def, PARTIAL_N + 1, d)
            }
        }
    }

    /// The dominating constant, including slack for infinite sums.
    fn bound(self) -> BigReal {
        let d = LEMMA_DIGITS;
        let slack = BigReal::pow10(LEMMA_SLACK, d);
        match self {
            Lemma::One => ref_zeta(2, d) + slack,
            Lemma::Three => ref_zeta(3, d).mul_rational(&rat(63, 4)) + slack,
            Lemma::Two | Lemma::Four => ref_pi(d).square().mul_rational(&rat(9, 8)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LemmaPoint {
    pub t: Rational,
    pub value: BigReal,
    pub bound: BigReal,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub points: Vec<LemmaPoint>,
    pub passed: bool,
}

impl LemmaReport {
    pub fn label(&self) -> String {
        format!("lemma-{}", self.lemma.number())
    }
}

/// Checks `lemma` at `samples` equispaced interior points.
pub fn check_lemma_bounds(lemma: Lemma, samples: usize) -> Result<LemmaReport> {
    if samples < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 samples, got {samples}")));
    }
    let (lo, hi) = lemma.param().interval();
    let n = samples as i64 + 1;
    let bound = lemma.bound();
    let mut points = Vec::with_capacity(samples);
    for i in 1..n {
        let t = &lo + (&hi - &lo) * rat(i, n);
        let value = lemma.value(&t)?;
        let holds = value <= bound;
        points.push(LemmaPoint {
            t,
            value,
            bound: bound.clone(),
            holds,
        });
    }
    let passed = points.iter().all(|p| p.holds);
    Ok(LemmaReport { lemma, points, passed })
}

impl std::fmt::Display for LemmaPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "t = {}: {} <= {}",
            format_rational(&self.t),
            self.value.to_sig_string(12),
            self.bound.to_sig_string(12)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_four_hold_at_five_points() {
        for l in Lemma::ALL {
            let r = check_lemma_bounds(l, 5).unwrap();
            assert_eq!(r.points.len(), 5);
            assert!(r.passed, "{l:?}: {:?}", r.points.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn first_lemma_is_tight_at_the_top() {
        // (b)_k/(3-b)_k → 1 as b → 3/2
        let v = Lemma::One.value(&rat(149, 100)).unwrap();
        let z2 = ref_zeta(2, LEMMA_DIGITS);
        assert!(v <= z2);
        assert!((&z2 - &v).to_f64() < 0.1);
    }

    #[test]
    fn too_few_samples() {
        assert!(check_lemma_bounds(Lemma::One, 2).is_err());
    }
}
