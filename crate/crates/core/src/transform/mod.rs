//! Checks of the transformations behind the identities: three
//! nonterminating families, the terminating `₉F₈` relation, one-parameter
//! specializations, their derivatives, and the convergence bounds.

mod cases;
mod f98;
mod family;
mod lcg;
mod lemmas;
mod stencil;
mod weights;

pub use cases::{check_specialization, DerivativeLink, FreeParam, SpecializationCase};
pub use f98::{check_f98_exact, draw_f98, f98_sweep, F98Params, F98Sweep, MAX_N};
pub use family::{check_transform, domain_margin, family_lhs, family_rhs, params_label, Family, MAX_TERMS};
pub use lcg::Lcg;
pub use lemmas::{check_lemma_bounds, Lemma, LemmaPoint, LemmaReport};
pub use stencil::{
    check_derivative, check_derivative_link, check_pochhammer_derivative, stencil, stencil_step, stencil_tolerance,
    DerivativeReport, Stencil,
};
pub use weights::{alpha, beta, omega, weight_a, weight_b, weight_e, weight_f, Params, Weight, WeightTerm};

use crate::error::{Error, Result};
use crate::numeric::{int, rat};

/// A seeded interior point for `family`: `a ∈ [1, 3]`, `b..e ∈ [1/4, 2]`,
/// redrawn until the domain margin holds and no denominator vanishes.
pub fn draw_family_params(family: Family, rng: &mut Lcg) -> Result<Params> {
    for _ in 0..10_000 {
        let a = rng.rational(&int(1), &int(3));
        let [b, c, d, e] = std::array::from_fn(|_| rng.rational(&rat(1, 4), &int(2)));
        let p = Params::new(a, b, c, d, e);
        if p.s() < domain_margin() {
            continue;
        }
        match family_lhs(family, &p).and_then(|_| family_rhs(family, &p)) {
            Ok(_) => return Ok(p),
            Err(Error::DegenerateParameters(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidArgument("no admissible parameter draw".into()))
}

/// `count` seeded interior points for `family`.
pub fn family_points(family: Family, seed: u64, count: usize) -> Result<Vec<Params>> {
    let mut rng = Lcg::new(seed);
    (0..count).map(|_| draw_family_params(family, &mut rng)).collect()
}
