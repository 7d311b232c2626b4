//! Exact rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` from machine integers. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or a bare integer `"p"`. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let parse = |t: &str| -> Result<BigInt, String> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{s}` is not a rational of the form p/q"));
        }
        t.parse::<BigInt>().map_err(|e| e.to_string())
    };
    let num = parse(num)?;
    let den = parse(den)?;
    if den.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` form; the denominator is always written.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `log10 |r|` in double precision, robust for numerators and denominators
/// far outside the `f64` range.
pub fn log10_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    log10_bigint(r.numer()) - log10_bigint(r.denom())
}

pub(crate) fn log10_bigint(n: &BigInt) -> f64 {
    let mag = n.abs();
    let bits = mag.bits();
    if bits <= 64 {
        let v: u64 = mag.try_into().expect("fits in u64");
        return (v as f64).log10();
    }
    let shift = bits - 64;
    let top: u64 = (&mag >> shift).try_into().expect("fits in u64");
    (top as f64).log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// Non-negative integer power.
pub fn powu(r: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// `Some(k)` when `r` is an integer.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// True when `r` is an integer `<= 0`, i.e. a pole of `1/(r)_k` for large k.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-1/1024").unwrap(), rat(-1, 1024));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("77").unwrap(), int(77));
        assert_eq!(format_rational(&int(77)), "77/1");
        assert_eq!(format_rational(&rat(-45, 8)), "-45/8");
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/-").is_err());
    }

    #[test]
    fn log10_of_huge_rationals() {
        let big = Rational::new(BigInt::from(10).pow(400u32), BigInt::from(3));
        assert!((log10_abs(&big) - (400.0 - 3f64.log10())).abs() < 1e-9);
        assert!((log10_abs(&rat(1, 1024)) + 1024f64.log10()).abs() < 1e-12);
    }

    #[test]
    fn nonpositive_integers() {
        assert!(is_nonpositive_integer(&int(0)));
        assert!(is_nonpositive_integer(&int(-3)));
        assert!(!is_nonpositive_integer(&rat(-1, 2)));
        assert!(!is_nonpositive_integer(&int(1)));
    }
}
