//! Seeded linear congruential generator for reproducible parameter draws.
//!
//! `state ← state · 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//! output `state >> 33`. The first output follows one step from the seed.
//! A rational in `[lo, hi]` draws its denominator `q = 1 + next % 64`, then
//! its numerator uniformly from `ceil(lo·q) ..= floor(hi·q)`.

use num_traits::ToPrimitive;

use crate::numeric::Rational;

pub const MULTIPLIER: u64 = 6364136223846793005;
pub const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state >> 33
    }

    /// Rational in `[lo, hi]` with denominator at most 64.
    pub fn rational(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let q = 1 + (self.next_u64() % 64) as i64;
        let qr = Rational::from_integer(q.into());
        let lo_n = (lo * &qr).ceil().to_integer().to_i64().expect("bounds fit in i64");
        let hi_n = (hi * &qr).floor().to_integer().to_i64().expect("bounds fit in i64");
        let span = (hi_n - lo_n + 1) as u64;
        let p = lo_n + (self.next_u64() % span) as i64;
        Rational::new(p.into(), q.into())
    }
}
