//! Series definitions and the summation engine.

pub mod def;
pub mod engine;
pub mod polytail;
pub mod report;
pub mod tail;

pub use def::{
    Convergence, HarmonicArg, HarmonicFactor, IdentityDef, PochFactor, PochIndex, RatioLimit, SeriesDef,
    SummandTerm, TargetDisplay, TargetTerm, ZetaConst,
};
pub use engine::{estimate_rate, guard_digits, partial_sum, sum_geometric, term_profile, Method, SeriesSum};
pub use polytail::{sum_polynomial_tail, MAX_POLY_DIGITS, POLY_CUTOFF};
pub use report::{sum_identity, sum_series, target_value, EvalReport};
pub use tail::sum_algebraic;
