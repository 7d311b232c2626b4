//! Arbitrary-precision binary floating point.
//!
//! A [`BigReal`] is `mant * 2^exp` where the mantissa is kept to roughly
//! `digits * log2(10)` bits. Every operation rounds its result to nearest at
//! the smaller precision of its operands.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{log10_bigint, Rational};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Extra bits carried below the last significant decimal digit.
const SLACK_BITS: u64 = 8;

/// Alignment bits kept below the result precision during addition.
const ADD_GUARD_BITS: i64 = 32;

pub(crate) fn digits_to_bits(digits: u32) -> u64 {
    (digits as f64 * LOG2_10).ceil() as u64 + SLACK_BITS
}

#[derive(Clone, Debug)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    digits: u32,
}

impl BigReal {
    pub fn zero(digits: u32) -> Self {
        BigReal {
            mant: BigInt::zero(),
            exp: 0,
            digits,
        }
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), digits)
    }

    pub fn from_bigint(v: &BigInt, digits: u32) -> Self {
        BigReal {
            mant: v.clone(),
            exp: 0,
            digits,
        }
        .normalize()
    }

    /// Rounds `r` to the working precision.
    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let num = BigReal {
            mant: r.numer().clone(),
            exp: 0,
            digits: u32::MAX,
        };
        let den = BigReal {
            mant: r.denom().clone(),
            exp: 0,
            digits: u32::MAX,
        };
        div_at(&num, &den, digits)
    }

    /// Exact conversion of a finite double, then rounded to `digits`.
    pub fn from_f64(v: f64, digits: u32) -> Self {
        assert!(v.is_finite(), "BigReal::from_f64 on non-finite value");
        if v == 0.0 {
            return Self::zero(digits);
        }
        let bits = v.to_bits();
        let negative = bits >> 63 == 1;
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let mut m = BigInt::from(mant);
        if negative {
            m = -m;
        }
        BigReal {
            mant: m,
            exp,
            digits,
        }
        .normalize()
    }

    /// `10^e`.
    pub fn pow10(e: i64, digits: u32) -> Self {
        let p = BigInt::from(10).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Self::from_bigint(&p, digits)
        } else {
            Self::from_rational(&Rational::new(BigInt::one(), p), digits)
        }
    }

    /// `10^x` for a real exponent; accurate to double precision only.
    pub fn from_log10(x: f64, digits: u32) -> Self {
        if x == f64::NEG_INFINITY {
            return Self::zero(digits);
        }
        let whole = x.floor();
        let frac = 10f64.powf(x - whole);
        Self::from_f64(frac, digits) * Self::pow10(whole as i64, digits)
    }

    /// Parses a plain decimal literal such as `-1.2020569` or `5e-3`.
    pub fn parse_decimal(s: &str, digits: u32) -> Option<Self> {
        let s = s.trim();
        let (body, exp10) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
            None => (s, 0),
        };
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let all = format!("{int_part}{frac_part}");
        if !all.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut n: BigInt = all.parse().ok()?;
        if neg {
            n = -n;
        }
        let scale = exp10 - frac_part.len() as i64;
        let pow = BigInt::from(10).pow(scale.unsigned_abs() as u32);
        let r = if scale >= 0 {
            Rational::from_integer(n * pow)
        } else {
            Rational::new(n, pow)
        };
        Some(Self::from_rational(&r, digits))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Same value at a different precision (rounded when lowering).
    pub fn with_digits(&self, digits: u32) -> Self {
        BigReal {
            mant: self.mant.clone(),
            exp: self.exp,
            digits,
        }
        .normalize()
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigReal {
            mant: self.mant.abs(),
            exp: self.exp,
            digits: self.digits,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if self.is_zero() || r.is_zero() {
            return Self::zero(self.digits);
        }
        let num = BigReal {
            mant: &self.mant * r.numer(),
            exp: self.exp,
            digits: u32::MAX,
        };
        let den = BigReal {
            mant: r.denom().clone(),
            exp: 0,
            digits: u32::MAX,
        };
        div_at(&num, &den, self.digits)
    }

    pub fn div_rational(&self, r: &Rational) -> Self {
        assert!(!r.is_zero(), "BigReal division by zero");
        self.mul_rational(&r.recip())
    }

    pub fn mul_i64(&self, v: i64) -> Self {
        BigReal {
            mant: &self.mant * v,
            exp: self.exp,
            digits: self.digits,
        }
        .normalize()
    }

    pub fn div_i64(&self, v: i64) -> Self {
        assert!(v != 0, "BigReal division by zero");
        let den = BigReal {
            mant: BigInt::from(v),
            exp: 0,
            digits: u32::MAX,
        };
        div_at(self, &den, self.digits)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one(self.digits);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (top, e2) = if bits > 64 {
            let shift = bits - 64;
            ((&self.mant >> shift).to_f64().unwrap_or(0.0), self.exp + shift as i64)
        } else {
            (self.mant.to_f64().unwrap_or(0.0), self.exp)
        };
        let e2 = e2.clamp(-2000, 2000) as i32;
        top * 2f64.powi(e2)
    }

    /// `log10 |self|`; `-inf` for zero. Works far outside the `f64` range.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        log10_bigint(&self.mant) + self.exp as f64 * std::f64::consts::LOG10_2
    }

    /// Position just above the leading bit: `|self|` lies in `[2^(top-1), 2^top)`.
    fn top_bit(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    fn normalize(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        if self.digits == u32::MAX {
            return self;
        }
        let prec = digits_to_bits(self.digits);
        let bits = self.mant.bits();
        if bits > prec {
            let shift = bits - prec;
            let negative = self.mant.is_negative();
            let half = BigInt::one() << (shift - 1);
            let mut mag = (self.mant.abs() + half) >> shift;
            if negative {
                mag = -mag;
            }
            self.mant = mag;
            self.exp += shift as i64;
        }
        self
    }

    /// Decimal digits of `|self|` rounded to `sig` significant figures,
    /// together with the decimal exponent of the leading digit.
    fn decimal_parts(&self, sig: usize) -> (String, i64) {
        let sig = sig.max(1);
        let mut e10 = self.log10_abs().floor() as i64;
        let mag = self.mant.abs();
        for _ in 0..4 {
            let scale = sig as i64 - 1 - e10;
            let mut num = mag.clone();
            let mut den = BigInt::one();
            let p = BigInt::from(10).pow(scale.unsigned_abs() as u32);
            if scale >= 0 {
                num *= p;
            } else {
                den *= p;
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            let n: BigInt = (num * 2 + &den) / (den * 2);
            let s = n.to_string();
            match s.len().cmp(&sig) {
                Ordering::Equal => return (s, e10),
                Ordering::Greater => e10 += 1,
                Ordering::Less => e10 -= 1,
            }
        }
        unreachable!("decimal exponent estimate failed to settle")
    }

    /// Rounded to `sig` significant digits; positional notation for moderate
    /// exponents, scientific otherwise.
    pub fn to_sig_string(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (ds, e10) = self.decimal_parts(sig);
        let sign = if self.signum() < 0 { "-" } else { "" };
        if (-5..sig as i64).contains(&e10) {
            let body = if e10 >= 0 {
                let split = e10 as usize + 1;
                if split >= ds.len() {
                    ds.clone()
                } else {
                    format!("{}.{}", &ds[..split], &ds[split..])
                }
            } else {
                format!("0.{}{}", "0".repeat((-e10 - 1) as usize), ds)
            };
            format!("{sign}{body}")
        } else {
            format!("{sign}{}", sci(&ds, e10))
        }
    }

    /// Always scientific, e.g. `1.23e-98`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (ds, e10) = self.decimal_parts(sig);
        let sign = if self.signum() < 0 { "-" } else { "" };
        format!("{sign}{}", sci(&ds, e10))
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let mag = match self.top_bit().cmp(&other.top_bit()) {
            Ordering::Equal => {
                let e = self.exp.min(other.exp);
                let a = self.mant.abs() << (self.exp - e) as u64;
                let b = other.mant.abs() << (other.exp - e) as u64;
                a.cmp(&b)
            }
            o => o,
        };
        if sa < 0 {
            mag.reverse()
        } else {
            mag
        }
    }
}

fn sci(ds: &str, e10: i64) -> String {
    if ds.len() == 1 {
        format!("{ds}e{e10}")
    } else {
        format!("{}.{}e{e10}", &ds[..1], &ds[1..])
    }
}

fn shift_mant(m: &BigInt, by: i64) -> BigInt {
    if by >= 0 {
        m << by as u64
    } else {
        m >> (-by) as u64
    }
}

fn add_at(a: &BigReal, b: &BigReal, negate_b: bool, digits: u32) -> BigReal {
    if b.is_zero() {
        return a.with_digits(digits);
    }
    if a.is_zero() {
        let r = b.with_digits(digits);
        return if negate_b { -r } else { r };
    }
    let prec = digits_to_bits(digits) as i64;
    let top = a.top_bit().max(b.top_bit());
    let floor = top - prec - ADD_GUARD_BITS;
    let e = a.exp.min(b.exp).max(floor);
    let ma = shift_mant(&a.mant, a.exp - e);
    let mut mb = shift_mant(&b.mant, b.exp - e);
    if negate_b {
        mb = -mb;
    }
    BigReal {
        mant: ma + mb,
        exp: e,
        digits,
    }
    .normalize()
}

fn mul_at(a: &BigReal, b: &BigReal, digits: u32) -> BigReal {
    BigReal {
        mant: &a.mant * &b.mant,
        exp: a.exp + b.exp,
        digits,
    }
    .normalize()
}

fn div_at(a: &BigReal, b: &BigReal, digits: u32) -> BigReal {
    assert!(!b.is_zero(), "BigReal division by zero");
    if a.is_zero() {
        return BigReal::zero(digits);
    }
    let prec = digits_to_bits(digits) as i64;
    let shift = (prec + ADD_GUARD_BITS + b.mant.bits() as i64 - a.mant.bits() as i64).max(0);
    let q = (&a.mant << shift as u64) / &b.mant;
    BigReal {
        mant: q,
        exp: a.exp - b.exp - shift,
        digits,
    }
    .normalize()
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let digits = self.digits.min(rhs.digits);
                $body(self, rhs, digits)
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b, d| add_at(a, b, false, d));
binop!(Sub, sub, |a, b, d| add_at(a, b, true, d));
binop!(Mul, mul, mul_at);
binop!(Div, div, div_at);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(mut self) -> BigReal {
        self.mant = -self.mant;
        self
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -self.clone()
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.digits as usize);
        f.write_str(&self.to_sig_string(sig))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn rational_round_trip_to_working_precision() {
        let third = BigReal::from_rational(&rat(1, 3), 50);
        assert_eq!(
            third.to_sig_string(20),
            "0.33333333333333333333"
        );
        let x = BigReal::from_rational(&rat(-45, 8), 30);
        assert_eq!(x.to_sig_string(10), "-5.625000000");
    }

    #[test]
    fn formatting() {
        let v = BigReal::from_i64(52, 30);
        assert_eq!(v.to_sig_string(5), "52.000");
        assert_eq!(v.to_sig_string(2), "52");
        let tiny = BigReal::pow10(-98, 30).mul_i64(3);
        assert_eq!(tiny.to_sci_string(3), "3.00e-98");
        assert_eq!(tiny.to_sig_string(3), "3.00e-98");
        let r = BigReal::from_rational(&rat(31416, 10000), 30);
        assert_eq!(r.to_sig_string(3), "3.14");
        assert_eq!(BigReal::from_i64(999, 10).to_sig_string(2), "1.0e3");
    }

    #[test]
    fn parse_decimal_literals() {
        let v = BigReal::parse_decimal("1.5e2", 20).unwrap();
        assert_eq!(v, BigReal::from_i64(150, 20));
        let w = BigReal::parse_decimal("-0.125", 20).unwrap();
        assert_eq!(w, BigReal::from_rational(&rat(-1, 8), 20));
        assert!(BigReal::parse_decimal("abc", 20).is_none());
    }

    #[test]
    fn mixed_precision_uses_smaller() {
        let a = BigReal::from_rational(&rat(1, 7), 100);
        let b = BigReal::from_rational(&rat(1, 7), 20);
        assert_eq!((&a + &b).digits(), 20);
        assert_eq!((&a * &b).digits(), 20);
    }

    #[test]
    fn log10_and_f64() {
        let v = BigReal::pow10(-3000, 40).mul_i64(5);
        assert!((v.log10_abs() - (-3000.0 + 5f64.log10())).abs() < 1e-9);
        assert_eq!(BigReal::from_f64(0.75, 20).to_f64(), 0.75);
        assert!((BigReal::from_log10(2.5, 30).to_f64() - 10f64.powf(2.5)).abs() < 1e-9);
    }

    #[test]
    fn ordering() {
        let a = BigReal::from_rational(&rat(1, 3), 40);
        let b = BigReal::from_rational(&rat(1, 2), 40);
        assert!(a < b);
        assert!(-&b < -&a);
        assert!(BigReal::zero(10) < a);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn arithmetic_matches_exact_rationals(a in small_rational(), b in small_rational()) {
            let digits = 60;
            let ra = BigReal::from_rational(&a, digits);
            let rb = BigReal::from_rational(&b, digits);
            let tol = BigReal::pow10(-55, digits);
            let check = |got: BigReal, want: Rational| {
                let want = BigReal::from_rational(&want, digits);
                let scale = want.abs() + BigReal::one(digits);
                (got - &want).abs() <= &tol * &scale
            };
            prop_assert!(check(&ra + &rb, &a + &b));
            prop_assert!(check(&ra - &rb, &a - &b));
            prop_assert!(check(&ra * &rb, &a * &b));
            if !b.is_zero() {
                prop_assert!(check(&ra / &rb, &a / &b));
            }
        }
    }
}
