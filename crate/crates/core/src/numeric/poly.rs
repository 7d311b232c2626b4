//! Dense univariate polynomials in the summation index with exact rational
//! coefficients, stored in ascending powers.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{int, Rational};

/// Largest integer we are willing to screen for roots one by one.
const ROOT_SCREEN_LIMIT: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 k`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    /// Product of the linear factors `c0 + c1 k`.
    pub fn from_linear_factors<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a (Rational, Rational)>,
    {
        factors
            .into_iter()
            .fold(Poly::one(), |acc, (c0, c1)| &acc * &Poly::linear(c0.clone(), c1.clone()))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at(&self, k: u64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(k)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.0.iter().map(|c| c * s).collect())
    }

    /// `p(k + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        // Horner in polynomial arithmetic: p(k + c) = (...(a_n (k+c) + a_{n-1})(k+c) ...)
        let step = Poly::linear(c.clone(), Rational::one());
        self.0.iter().rev().fold(Poly::zero(), |acc, a| {
            &(&acc * &step) + &Poly::constant(a.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Cauchy bound: every complex root satisfies `|r| <= 1 + max |a_i / a_n|`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().abs();
        if self.0.len() <= 1 {
            return Rational::zero();
        }
        let max = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max
    }

    /// Smallest `k >= 0` with `p(k) = 0`, if any. Integers beyond the Cauchy
    /// bound cannot be roots, so the screen is exhaustive.
    pub fn first_nonnegative_integer_root(&self) -> Result<Option<u64>, String> {
        if self.is_zero() {
            return Ok(Some(0));
        }
        let bound = self.root_bound().ceil().to_integer();
        let bound = bound.to_u64().unwrap_or(u64::MAX);
        if bound > ROOT_SCREEN_LIMIT {
            return Err(format!(
                "root bound {bound} exceeds the screening limit {ROOT_SCREEN_LIMIT}"
            ));
        }
        Ok((0..=bound).find(|&k| self.eval_at(k).is_zero()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + rhs.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;

    #[test]
    fn horner_and_shift() {
        let p = Poly::from_ints(&[77, 250, 205]);
        assert_eq!(p.eval_at(0), int(77));
        assert_eq!(p.eval_at(1), int(532));
        let shifted = p.shift(&int(1));
        for k in 0..10 {
            assert_eq!(shifted.eval_at(k), p.eval_at(k + 1));
        }
        let half = p.shift(&rat(1, 2));
        assert_eq!(half.eval(&int(0)), p.eval(&rat(1, 2)));
    }

    #[test]
    fn trims_and_multiplies() {
        let p = Poly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        let q = Poly::from_linear_factors(&[(int(1), int(1)), (int(1), int(2))]);
        assert_eq!(q, Poly::from_ints(&[1, 3, 2]));
        assert_eq!((&q - &q).degree(), None);
    }

    #[test]
    fn root_screen() {
        // 1 - k vanishes at k = 1.
        assert_eq!(Poly::from_ints(&[1, -1]).first_nonnegative_integer_root(), Ok(Some(1)));
        assert_eq!(Poly::from_ints(&[1, 3, 2]).first_nonnegative_integer_root(), Ok(None));
        // (k - 7/2)(k - 12)
        let p = Poly::from_linear_factors(&[(rat(-7, 2), int(1)), (int(-12), int(1))]);
        assert_eq!(p.first_nonnegative_integer_root(), Ok(Some(12)));
        assert_eq!(Poly::one().first_nonnegative_integer_root(), Ok(None));
    }
}
