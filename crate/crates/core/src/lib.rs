//! High-precision summation and verification of hypergeometric series for
//! ζ(3), ζ(4) and ζ(5).
//!
//! The crate is layered:
//!
//! * [`numeric`]: exact rationals, a precision-tagged binary float, Pochhammer
//!   symbols, harmonic numbers, and independent π / ζ oracles.
//! * [`series`]: declarative series definitions and the summation engine.
//! * [`catalog`]: the built-in identities, JSON import/export, verification.
//! * [`transform`]: checks of the parameterized transformations, their
//!   specializations, derivatives in a free parameter, and convergence bounds.

pub mod error;
pub mod numeric;
pub mod series;
pub mod catalog;
pub mod transform;

pub use error::{Error, Result};
