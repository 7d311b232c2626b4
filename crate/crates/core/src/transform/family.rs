//! The three nonterminating transformations and their numeric check.

use std::fmt;
use std::str::FromStr;

use super::weights::{alpha, beta, lin, omega, Params};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, rat, Rational};
use crate::series::{sum_series, EvalReport, PochFactor, SeriesDef, SummandTerm};

/// Term cap used for every side of every transformation check.
pub const MAX_TERMS: usize = 100_000;

/// Smallest admissible `1 + 2a - b - c - d - e`.
pub fn domain_margin() -> Rational {
    rat(1, 10)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `z = -1`, weight `α_k`
    AA,
    /// `z = -1`, weight `β_k`
    BB,
    /// `z = 1`, weight `ω_k`
    TH,
    /// The terminating well-poised `₉F₈` transformation.
    F98,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::AA, Family::BB, Family::TH, Family::F98];

    pub fn name(self) -> &'static str {
        match self {
            Family::AA => "AA",
            Family::BB => "BB",
            Family::TH => "TH",
            Family::F98 => "F98",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::F98 => &["a", "b", "c", "d", "e", "f", "g", "n"],
            _ => &["a", "b", "c", "d", "e"],
        }
    }

    pub fn domain_constraint(self) -> &'static str {
        match self {
            Family::F98 => "2 + 3a = b + c + d + e + f + g - n with n a natural number",
            _ => "1 + 2a - b - c - d - e > 0",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}` (expected AA, BB, TH or F98)")))
    }
}

fn k(x: Rational) -> PochFactor {
    PochFactor::k(x)
}

fn k2(x: Rational) -> PochFactor {
    PochFactor::two_k(x)
}

fn check_domain(p: &Params) -> Result<()> {
    let s = p.s();
    if s < domain_margin() {
        return Err(Error::DomainViolation(format!(
            "1 + 2a - b - c - d - e = {} is below the margin {}",
            format_rational(&s),
            format_rational(&domain_margin())
        )));
    }
    Ok(())
}

fn screened(def: SeriesDef) -> Result<SeriesDef> {
    let def = def.inferred();
    def.validate().map_err(Error::DegenerateParameters)?;
    Ok(def)
}

/// Left side: the fast series carrying the family weight.
pub fn family_lhs(family: Family, p: &Params) -> Result<SeriesDef> {
    check_domain(p)?;
    let Params { a, b, c, d, e } = p;
    let one = |x: &Rational| int(1) + a - x;
    let opp = |x: &Rational, y: &Rational| int(1) + a - x - y;
    let s = p.s();
    let def = match family {
        Family::AA => SeriesDef::new(
            int(-1),
            vec![
                k(b.clone()),
                k(c.clone()),
                k(d.clone()),
                k(e.clone()),
                k(opp(b, c)),
                k(opp(b, d)),
                k(opp(b, e)),
                k(opp(c, d)),
                k(opp(c, e)),
                k(opp(d, e)),
            ],
            vec![k2(one(b)), k2(one(c)), k2(one(d)), k2(one(e)), k2(s)],
            alpha(p).to_summands(),
        ),
        Family::BB => SeriesDef::new(
            int(-1),
            vec![k(c.clone()), k(d.clone()), k(e.clone()), k(opp(b, c)), k(opp(b, d)), k(opp(b, e))],
            vec![k(one(c)), k(one(d)), k(one(e)), k(s), k2(one(b))],
            beta(p).to_summands(),
        ),
        Family::TH => SeriesDef::new(
            int(1),
            vec![
                k(c.clone()),
                k(e.clone()),
                k(opp(b, c)),
                k(opp(b, e)),
                k(opp(c, d)),
                k(opp(d, e)),
                k2(opp(b, d)),
            ],
            vec![k(one(c)), k(one(e)), k2(one(b)), k2(one(d)), k2(s)],
            omega(p).to_summands(),
        ),
        Family::F98 => return Err(Error::InvalidArgument("F98 is terminating; use the exact check".into())),
    };
    screened(def)
}

/// Right side, shared by all three families:
/// `Σ (a + 2k) Π_{x ∈ b,c,d,e} (x)_k / (1 + a - x)_k`.
pub fn family_rhs(family: Family, p: &Params) -> Result<SeriesDef> {
    if family == Family::F98 {
        return Err(Error::InvalidArgument("F98 is terminating; use the exact check".into()));
    }
    check_domain(p)?;
    let one = |x: &Rational| int(1) + &p.a - x;
    let def = SeriesDef::new(
        int(1),
        vec![k(p.b.clone()), k(p.c.clone()), k(p.d.clone()), k(p.e.clone())],
        vec![k(one(&p.b)), k(one(&p.c)), k(one(&p.d)), k(one(&p.e))],
        vec![SummandTerm::poly(lin(p.a.clone(), 2))],
    );
    screened(def)
}

pub fn params_label(p: &Params) -> String {
    p.to_array().iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Sums both sides at `digits`; the report's value is the left side and its
/// target the right side.
pub fn check_transform(family: Family, p: &Params, digits: u32) -> Result<EvalReport> {
    let lhs = family_lhs(family, p)?;
    let rhs = family_rhs(family, p)?;
    let left = sum_series(&lhs, digits, MAX_TERMS)?;
    let right = sum_series(&rhs, digits, MAX_TERMS)?;
    let label = format!("{family}({})", params_label(p));
    Ok(EvalReport::new(label, left, right.value, right.error_bound, digits))
}
