//! One-parameter specializations of the transformations.

use std::fmt;
use std::str::FromStr;

use super::family::{Family, MAX_TERMS};
use super::weights::{lin, weight_a, weight_b, weight_e, weight_f, Params, Weight, WeightTerm};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, rat, Poly, Rational};
use crate::series::{sum_series, EvalReport, PochFactor, SeriesDef};

/// The free parameter of a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeParam {
    /// Interval `(1/2, 3/2)`.
    B,
    /// Interval `(3/4, 5/4)`.
    C,
}

impl FreeParam {
    pub fn name(self) -> &'static str {
        match self {
            FreeParam::B => "b",
            FreeParam::C => "c",
        }
    }

    pub fn interval(self) -> (Rational, Rational) {
        match self {
            FreeParam::B => (rat(1, 2), rat(3, 2)),
            FreeParam::C => (rat(3, 4), rat(5, 4)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecializationCase {
    Aa,
    Dd,
    Gg,
    Hh,
    Ii,
    Kk,
    Lla,
    Ll,
    Tha,
    Thc,
    The,
    Tho,
}

/// How the derivative of a case's left side at the central point `t = 1`
/// relates to a catalog entry: `L^(order)(1) = factor · value(entry)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeLink {
    pub order: u32,
    pub entry: &'static str,
    pub factor: Rational,
}

fn k(x: Rational) -> PochFactor {
    PochFactor::k(x)
}

fn k2(x: Rational) -> PochFactor {
    PochFactor::two_k(x)
}

fn side(z: Rational, num: Vec<PochFactor>, den: Vec<PochFactor>, w: Weight) -> SeriesDef {
    SeriesDef::new(z, num, den, w.to_summands()).inferred()
}

fn frac(c: Rational, num: Vec<Poly>, den: Vec<Poly>) -> Weight {
    Weight(vec![WeightTerm::new(c, num, den)])
}

/// `c0 - t` as a constant
fn m(c0: Rational, t: &Rational) -> Rational {
    c0 - t
}

fn one_k() -> Poly {
    lin(int(1), 1)
}

fn one_2k() -> Poly {
    lin(int(1), 2)
}

/// `2/(1+k)^2 · (t)_k/(3-t)_k`
fn r_aa(t: &Rational) -> SeriesDef {
    side(
        int(1),
        vec![k(t.clone())],
        vec![k(m(int(3), t))],
        frac(int(2), vec![], vec![one_k(), one_k()]),
    )
}

/// `2/(1+k) · (t)_k(2-t)_k/((3-t)_k(1+t)_k)`
fn r_dd(t: &Rational) -> SeriesDef {
    side(
        int(1),
        vec![k(t.clone()), k(m(int(2), t))],
        vec![k(m(int(3), t)), k(int(1) + t)],
        frac(int(2), vec![], vec![one_k()]),
    )
}

/// `(3+4k)/((1+k)(1+2k))`
fn w_34() -> Weight {
    frac(int(1), vec![lin(int(3), 4)], vec![one_k(), one_2k()])
}

fn l_gg(c: &Rational) -> SeriesDef {
    let quad = Poly::new(vec![int(9) - int(4) * c, int(20) - int(6) * c, int(10)]);
    side(
        rat(-1, 4),
        vec![k(c.clone()), k(m(int(2), c)), k(int(1)).pow(3)],
        vec![k(m(rat(3, 2), c)), k(m(rat(5, 2), c)), k(rat(3, 2)).pow(3)],
        frac(int(1), vec![quad], vec![lin(int(3) - int(2) * c, 2)]),
    )
}

fn r_gg(c: &Rational) -> SeriesDef {
    side(int(1), vec![k(c.clone()), k(int(1))], vec![k(m(rat(5, 2), c)), k(rat(3, 2))], w_34())
}

fn l_kk(c: &Rational) -> SeriesDef {
    let w = Weight(vec![
        WeightTerm::new(int(1), vec![lin(int(3), 4)], vec![]),
        WeightTerm::new(int(2), vec![lin(c.clone(), 1), lin(m(int(2), c), 1)], vec![one_2k()]),
    ]);
    side(
        rat(-1, 4),
        vec![k(c.clone()).pow(2), k(m(int(2), c)).pow(2), k(int(1))],
        vec![k(m(rat(5, 2), c)), k(rat(1, 2) + c), k(rat(1, 2)), k(rat(3, 2)).pow(2)],
        w,
    )
}

fn r_kk(c: &Rational) -> SeriesDef {
    side(
        int(1),
        vec![k(c.clone()), k(m(int(2), c))],
        vec![k(m(rat(5, 2), c)), k(rat(1, 2) + c)],
        w_34(),
    )
}

fn r_lla(c: &Rational) -> SeriesDef {
    side(
        int(1),
        vec![k(m(rat(3, 2), c)), k(c - rat(1, 2))],
        vec![k(rat(1, 2) + c), k(m(rat(5, 2), c))],
        frac(int(4), vec![], vec![one_2k()]),
    )
}

impl SpecializationCase {
    pub const ALL: [SpecializationCase; 12] = [
        SpecializationCase::Aa,
        SpecializationCase::Dd,
        SpecializationCase::Gg,
        SpecializationCase::Hh,
        SpecializationCase::Ii,
        SpecializationCase::Kk,
        SpecializationCase::Lla,
        SpecializationCase::Ll,
        SpecializationCase::Tha,
        SpecializationCase::Thc,
        SpecializationCase::The,
        SpecializationCase::Tho,
    ];

    pub fn id(self) -> &'static str {
        use SpecializationCase::*;
        match self {
            Aa => "wei-aa",
            Dd => "wei-dd",
            Gg => "wei-gg",
            Hh => "wei-hh",
            Ii => "wei-ii",
            Kk => "wei-kk",
            Lla => "wei-lla",
            Ll => "wei-ll",
            Tha => "wei-tha",
            Thc => "wei-thc",
            The => "wei-the",
            Tho => "wei-tho",
        }
    }

    pub fn param(self) -> FreeParam {
        use SpecializationCase::*;
        match self {
            Aa | Dd | Thc | Tho => FreeParam::B,
            _ => FreeParam::C,
        }
    }

    pub fn interval(self) -> (Rational, Rational) {
        self.param().interval()
    }

    /// Errors unless `t` lies strictly inside the interval.
    pub fn check_interior(self, t: &Rational) -> Result<()> {
        let (lo, hi) = self.interval();
        if *t <= lo || *t >= hi {
            return Err(Error::DomainViolation(format!(
                "{} = {} is outside ({}, {}) for {}",
                self.param().name(),
                format_rational(t),
                format_rational(&lo),
                format_rational(&hi),
                self.id()
            )));
        }
        Ok(())
    }

    /// `samples` equispaced points strictly inside the interval.
    pub fn interior_points(self, samples: usize) -> Vec<Rational> {
        let (lo, hi) = self.interval();
        let n = samples as i64 + 1;
        (1..n).map(|i| &lo + (&hi - &lo) * rat(i, n)).collect()
    }

    pub fn left(self, t: &Rational) -> SeriesDef {
        use SpecializationCase::*;
        match self {
            Aa => side(
                rat(-1, 64),
                vec![k(t.clone()), k(m(int(2), t)).pow(3), k(int(1)).pow(3)],
                vec![k2(m(int(2), t)), k2(m(int(3), t)), k(rat(3, 2)).pow(3)],
                weight_a(t),
            ),
            Dd => side(
                rat(-1, 64),
                vec![k(t.clone()).pow(3), k(m(int(2), t)).pow(3), k(int(1))],
                vec![k2(int(1) + t), k2(m(int(3), t)), k(rat(1, 2)), k(rat(3, 2)).pow(2)],
                weight_b(t),
            ),
            Gg | Ii => l_gg(t),
            Hh => r_gg(t),
            Kk | Ll => l_kk(t),
            Lla => r_kk(t),
            Tha => side(
                rat(1, 4),
                vec![k(int(1)), k(t.clone()), k(m(int(2), t)).pow(2)],
                vec![k(rat(3, 2)), k(m(int(3), t)), k2(m(int(2), t))],
                weight_e(t),
            ),
            Thc => side(
                rat(1, 4),
                vec![k(int(1)), k(m(int(2), t)).pow(2)],
                vec![k(rat(3, 2)), k2(m(int(3), t))],
                weight_f(t),
            ),
            The => {
                let q = || lin(m(int(2), t), 1);
                let w = Weight(vec![
                    WeightTerm::new(int(1), vec![lin(t.clone(), 1), lin(m(int(3), t), 3)], vec![one_2k()]),
                    WeightTerm::new(
                        rat(1, 8),
                        vec![lin(int(2) + t, 3), q(), q(), q()],
                        vec![one_k(), one_k(), one_k()],
                    ),
                ]);
                side(
                    int(1),
                    vec![k(t.clone()).pow(3), k(m(int(2), t)).pow(3)],
                    vec![k(m(int(3), t)), k(int(1) + t), k2(int(2)).pow(2)],
                    w,
                )
            }
            Tho => {
                let w = Weight(vec![
                    WeightTerm::new(int(1), vec![lin(int(2), 3)], vec![one_k(), one_2k()]),
                    WeightTerm::new(
                        rat(3, 2),
                        vec![lin(t.clone(), 1), lin(m(int(2), t), 1)],
                        vec![one_k(), lin(int(1) + t, 2), lin(m(int(3), t), 2)],
                    ),
                ]);
                side(
                    int(1),
                    vec![k(t.clone()).pow(2), k(m(int(2), t)).pow(2)],
                    vec![k2(m(int(3), t)), k2(int(1) + t)],
                    w,
                )
            }
        }
    }

    pub fn right(self, t: &Rational) -> SeriesDef {
        use SpecializationCase::*;
        match self {
            Aa | Thc => r_aa(t),
            Dd | The | Tho => r_dd(t),
            Gg => r_gg(t),
            Hh => {
                let c = t;
                side(
                    int(1),
                    vec![k(m(rat(3, 2), c)).pow(2)],
                    vec![k(m(rat(5, 2), c)).pow(2)],
                    frac(
                        int(4) / (int(3) - int(2) * c),
                        vec![lin(m(int(2), c), 2)],
                        vec![one_2k(), one_2k()],
                    ),
                )
            }
            Ii => side(
                int(1),
                vec![k(m(rat(3, 2), t))],
                vec![k(m(rat(5, 2), t))],
                frac(
                    int(4),
                    vec![lin(m(int(2), t), 2)],
                    vec![one_2k(), one_2k(), lin(int(3) - int(2) * t, 2)],
                ),
            ),
            Kk => r_kk(t),
            Lla | Ll => r_lla(t),
            Tha => r_aa(t),
        }
    }

    /// Family and parameters this case comes from, with
    /// `family side = scale · case side` termwise. The two cases derived
    /// from the terminating transformation have none.
    pub fn pinned(self, t: &Rational) -> Option<(Family, Params, Rational)> {
        use SpecializationCase::*;
        let t = t.clone();
        let one = int(1);
        let half = rat(1, 2);
        let p = |a: Rational, b, c, d, e| Params::new(a, b, c, d, e);
        Some(match self {
            Aa => (Family::AA, p(int(2), t, one.clone(), one.clone(), one), int(1)),
            Dd => (Family::AA, p(int(2), t.clone(), int(2) - t, one.clone(), one), int(1)),
            Gg | Ii => (Family::BB, p(rat(3, 2), half.clone(), t, one.clone(), one), half),
            Kk | Ll => (Family::BB, p(rat(3, 2), half.clone(), t.clone(), int(2) - t, one), half),
            Tha => (Family::TH, p(int(2), one.clone(), t, one.clone(), one), int(1)),
            Thc => (Family::TH, p(int(2), t, one.clone(), one.clone(), one), int(1)),
            The => (Family::TH, p(int(2), one.clone(), t.clone(), one, int(2) - t), int(1)),
            Tho => (Family::TH, p(int(2), t.clone(), one.clone(), int(2) - t, one), int(1)),
            Hh | Lla => return None,
        })
    }

    pub fn derivative_link(self) -> DerivativeLink {
        use SpecializationCase::*;
        let (order, entry, factor) = match self {
            Aa => (1, "intermediate-wei-cc", rat(1, 16)),
            Dd => (2, "intermediate-wei-ff", rat(1, 64)),
            Gg | Hh | Ii => (1, "intermediate-wei-jj", int(2)),
            Kk | Lla | Ll => (2, "intermediate-wei-mm", int(2)),
            Tha => (1, "intermediate-wei-thb", rat(1, 8)),
            Thc => (1, "intermediate-wei-thd", rat(1, 8)),
            The => (2, "intermediate-wei-thf", rat(-1, 4)),
            Tho => (2, "intermediate-wei-thp", rat(1, 4)),
        };
        DerivativeLink { order, entry, factor }
    }
}

impl fmt::Display for SpecializationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SpecializationCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        SpecializationCase::ALL
            .into_iter()
            .find(|c| c.id() == s || c.id().trim_start_matches("wei-") == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown specialization case `{s}`")))
    }
}

/// Sums both sides of `case` at `t`.
pub fn check_specialization(case: SpecializationCase, t: &Rational, digits: u32) -> Result<EvalReport> {
    case.check_interior(t)?;
    let l = case.left(t);
    let r = case.right(t);
    for d in [&l, &r] {
        d.validate().map_err(Error::DegenerateParameters)?;
    }
    let left = sum_series(&l, digits, MAX_TERMS)?;
    let right = sum_series(&r, digits, MAX_TERMS)?;
    let label = format!("{}({}={})", case.id(), case.param().name(), format_rational(t));
    Ok(EvalReport::new(label, left, right.value, right.error_bound, digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;
    use num_traits::Zero;

    fn probes(case: SpecializationCase) -> Vec<Rational> {
        match case.param() {
            FreeParam::B => vec![rat(9, 10), rat(21, 20), int(1)],
            FreeParam::C => vec![rat(9, 10), rat(21, 20), int(1)],
        }
    }

    #[test]
    fn pinned_families_match_termwise() {
        use crate::transform::family::{family_lhs, family_rhs};
        for case in SpecializationCase::ALL {
            for t in probes(case) {
                let Some((fam, p, scale)) = case.pinned(&t) else { continue };
                let fl = family_lhs(fam, &p).unwrap();
                let fr = family_rhs(fam, &p).unwrap();
                let (cl, cr) = (case.left(&t), case.right(&t));
                for n in 0..6 {
                    let a = cl.exact_term(n).unwrap();
                    if !a.is_zero() {
                        assert_eq!(fl.exact_term(n).unwrap() / a, scale, "{case} left k={n} t={t}");
                    }
                    let b = cr.exact_term(n).unwrap();
                    if !b.is_zero() && !matches!(case, SpecializationCase::Ii | SpecializationCase::Ll) {
                        assert_eq!(fr.exact_term(n).unwrap() / b, scale, "{case} right k={n} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn sample_points_hold() {
        let r = check_specialization(SpecializationCase::Aa, &rat(3, 4), 40).unwrap();
        assert!(r.passes(35), "{}", r.log10_residual());
        let r = check_specialization(SpecializationCase::Hh, &int(1), 40).unwrap();
        assert!(r.passes(35), "{}", r.log10_residual());
        let c = rat(5, 4) - rat(1, 100);
        let r = check_specialization(SpecializationCase::Ll, &c, 40).unwrap();
        assert!(r.passes(35), "{}", r.log10_residual());
    }

    #[test]
    fn boundary_is_rejected() {
        assert!(matches!(
            check_specialization(SpecializationCase::Gg, &rat(3, 4), 20),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            check_specialization(SpecializationCase::Aa, &int(2), 20),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn ids_parse() {
        for c in SpecializationCase::ALL {
            assert_eq!(c.id().parse::<SpecializationCase>().unwrap(), c);
        }
        assert_eq!("tho".parse::<SpecializationCase>().unwrap(), SpecializationCase::Tho);
    }
}
