//! Independent reference values for π and ζ(s).
//!
//! Neither oracle shares code with the series engine: π comes from Machin's
//! arctangent formula and ζ(s) from Euler–Maclaurin summation carried out in
//! exact rational arithmetic, so the only rounding is the final conversion.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bigreal::BigReal;
use super::rational::{int, log10_abs, powu, Rational};

/// Digits carried beyond the requested precision inside the oracles.
const ORACLE_GUARD: u32 = 10;

/// π to `digits` significant digits.
pub fn ref_pi(digits: u32) -> BigReal {
    let w = digits.max(1) + ORACLE_GUARD;
    let pi = atan_inv(5, w).mul_i64(16) - atan_inv(239, w).mul_i64(4);
    pi.with_digits(digits.max(1))
}

/// `atan(1/x)` by its alternating Taylor series; the truncation error is
/// below the first omitted term, which is below `10^-w`.
fn atan_inv(x: i64, w: u32) -> BigReal {
    let x2 = x * x;
    let eps = BigReal::pow10(-(w as i64) - 2, w);
    let mut power = BigReal::one(w).div_i64(x);
    let mut sum = BigReal::zero(w);
    let mut j = 0i64;
    while power.abs() > eps {
        let term = power.div_i64(2 * j + 1);
        sum = if j % 2 == 0 { sum + term } else { sum - term };
        power = power.div_i64(x2);
        j += 1;
    }
    sum
}

/// ζ(s) for integer `s >= 2`, correct to `digits` digits.
pub fn ref_zeta(s: u32, digits: u32) -> BigReal {
    zeta_with_bound(s, digits).0
}

/// ζ(s) together with a bound on the Euler–Maclaurin remainder.
///
/// With cutoff `N`,
/// `ζ(s) = Σ_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2 + Σ_j B_2j/(2j)! (s)_{2j-1} N^(-s-2j+1) + R`,
/// and `|R|` is below the first omitted correction term.
pub fn zeta_with_bound(s: u32, digits: u32) -> (BigReal, BigReal) {
    assert!(s >= 2, "ref_zeta needs s >= 2");
    let w = digits + ORACLE_GUARD;
    let n = 2 * digits as i64 + 10;
    let nr = int(n);

    let mut head = BigReal::zero(w);
    for k in 1..n {
        head = head + BigReal::from_rational(&powu(&int(k), s).recip(), w);
    }

    let n_pow_s = powu(&nr, s);
    let mut tail = &nr / (&n_pow_s * int(s as i64 - 1)) + (&n_pow_s * int(2)).recip();

    let cutoff = -(digits as f64) - 5.0;
    // (s)_{2j-1} N^(-s-2j+1), advanced two steps per correction term.
    let mut rising = int(s as i64);
    let mut npow = n_pow_s.clone() * &nr;
    let mut factorial = int(2);
    let mut j = 1usize;
    let bound = loop {
        let b = bernoulli(2 * j);
        let term = &b / &factorial * &rising / &npow;
        if log10_abs(&term) < cutoff {
            break term.abs();
        }
        tail += term;
        let m = (2 * j) as i64;
        rising = rising * int(s as i64 + m - 1) * int(s as i64 + m);
        npow = npow * &nr * &nr;
        factorial = factorial * int(m + 1) * int(m + 2);
        j += 1;
    };

    let value = head + BigReal::from_rational(&tail, w);
    let rounding = BigReal::pow10(-(w as i64) + 2, w);
    (
        value.with_digits(digits),
        (BigReal::from_rational(&bound, w) + rounding).with_digits(digits),
    )
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_m` (with `B_1 = -1/2`), from the recurrence
/// `Σ_{j=0..m} C(m+1, j) B_j = 0`. Results are cached across calls.
pub fn bernoulli(m: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= m {
        let n = cache.len();
        if n > 1 && n % 2 == 1 {
            cache.push(Rational::zero());
            continue;
        }
        // C(n+1, j) for j = 0..n-1, built incrementally.
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        cache.push(-acc / int(n as i64 + 1));
    }
    cache[m].clone()
}

/// Euler's constant γ, for double-precision work.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(20), rat(-174611, 330));
    }

    #[test]
    fn pi_digits() {
        assert_eq!(ref_pi(5).to_sig_string(5), "3.1416");
        assert_eq!(ref_pi(21).to_sig_string(21), "3.14159265358979323846");
        let pi100 = "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117068";
        assert_eq!(ref_pi(100).to_sig_string(100), pi100);
    }

    #[test]
    fn zeta3_thirty_digits() {
        assert_eq!(
            ref_zeta(3, 30).to_sig_string(30),
            "1.20205690315959428539973816151"
        );
    }

    #[test]
    fn zeta_even_values_against_pi() {
        let d = 60;
        let pi = ref_pi(d + 5);
        let z2 = pi.square().div_i64(6).with_digits(d);
        let z4 = pi.powu(4).div_i64(90).with_digits(d);
        let tol = BigReal::pow10(-(d as i64) + 1, d);
        assert!((ref_zeta(2, d) - z2).abs() < tol);
        assert!((ref_zeta(4, d) - z4).abs() < tol);
    }

    #[test]
    fn zeta_stable_under_more_digits() {
        for s in [3, 5] {
            let a = ref_zeta(s, 40);
            let b = ref_zeta(s, 60);
            assert!((a - b).abs() < BigReal::pow10(-40, 60));
        }
    }

    #[test]
    fn remainder_bound_is_tiny() {
        let (_, bound) = zeta_with_bound(5, 50);
        assert!(bound < BigReal::pow10(-54, 50));
    }
}
