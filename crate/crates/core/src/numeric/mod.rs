//! Exact and arbitrary-precision arithmetic.

pub mod bigreal;
pub mod poly;
pub mod rational;
pub mod reference;
pub mod special;

pub use bigreal::BigReal;
pub use poly::Poly;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use reference::{ref_pi, ref_zeta, zeta_with_bound};
pub use special::{gen_harmonic, pochhammer, HarmonicState};
