//! Declarative description of a series `Σ_k z^k Π(num)_k / Π(den)_k · s(k)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::{as_integer, int, is_nonpositive_integer, powu, Rational};
use crate::numeric::special::{gen_harmonic, pochhammer};
use crate::numeric::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PochIndex {
    /// `(base)_k`
    K,
    /// `(base)_{2k}`
    TwoK,
}

/// `(base)_{index}^power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PochFactor {
    pub base: Rational,
    pub index: PochIndex,
    pub power: u32,
}

impl PochFactor {
    pub fn new(base: Rational, index: PochIndex, power: u32) -> Self {
        PochFactor { base, index, power }
    }

    pub fn k(base: Rational) -> Self {
        Self::new(base, PochIndex::K, 1)
    }

    pub fn two_k(base: Rational) -> Self {
        Self::new(base, PochIndex::TwoK, 1)
    }

    pub fn pow(mut self, power: u32) -> Self {
        self.power = power;
        self
    }

    /// Ratio between consecutive indices as a polynomial in `k`:
    /// `(base+k)^p` or `((base+2k)(base+2k+1))^p`.
    pub fn step_poly(&self) -> Poly {
        let one = Rational::one();
        let step = match self.index {
            PochIndex::K => Poly::linear(self.base.clone(), one),
            PochIndex::TwoK => Poly::from_linear_factors(&[
                (self.base.clone(), int(2)),
                (&self.base + &one, int(2)),
            ]),
        };
        step.pow(self.power)
    }

    /// Exact value at summation index `k`.
    pub fn value(&self, k: u64) -> Rational {
        let n = match self.index {
            PochIndex::K => k,
            PochIndex::TwoK => 2 * k,
        };
        powu(&pochhammer(&self.base, n), self.power)
    }

    /// Whether the factor vanishes for some index.
    pub fn can_vanish(&self) -> bool {
        is_nonpositive_integer(&self.base)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HarmonicArg {
    /// `H_k`
    K,
    /// `H_{1+2k}`
    OnePlusTwoK,
}

/// `H_{arg}^{(ell)}(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HarmonicFactor {
    pub ell: u32,
    pub arg: HarmonicArg,
    pub x: Rational,
}

impl HarmonicFactor {
    pub fn new(ell: u32, arg: HarmonicArg, x: Rational) -> Self {
        HarmonicFactor { ell, arg, x }
    }

    pub fn h_k(ell: u32) -> Self {
        Self::new(ell, HarmonicArg::K, Rational::zero())
    }

    pub fn h_odd(ell: u32) -> Self {
        Self::new(ell, HarmonicArg::OnePlusTwoK, Rational::zero())
    }

    pub fn upper(&self, k: u64) -> u64 {
        match self.arg {
            HarmonicArg::K => k,
            HarmonicArg::OnePlusTwoK => 2 * k + 1,
        }
    }

    pub fn value(&self, k: u64) -> Result<Rational> {
        gen_harmonic(self.upper(k), self.ell, &self.x)
    }
}

/// `num(k)/den(k) · Π harmonic`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SummandTerm {
    pub num: Poly,
    pub den: Poly,
    pub harmonic: Vec<HarmonicFactor>,
}

impl SummandTerm {
    pub fn new(num: Poly, den: Poly, harmonic: Vec<HarmonicFactor>) -> Self {
        SummandTerm { num, den, harmonic }
    }

    pub fn rational(num: Poly, den: Poly) -> Self {
        Self::new(num, den, Vec::new())
    }

    pub fn poly(num: Poly) -> Self {
        Self::rational(num, Poly::one())
    }

    pub fn with(mut self, h: HarmonicFactor) -> Self {
        self.harmonic.push(h);
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone(), self.harmonic.clone())
    }

    pub fn exact_value(&self, k: u64) -> Result<Rational> {
        let d = self.den.eval_at(k);
        if d.is_zero() {
            return Err(Error::Pole(format!("summand denominator vanishes at k = {k}")));
        }
        let mut v = self.num.eval_at(k) / d;
        for h in &self.harmonic {
            v *= h.value(k)?;
        }
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convergence {
    Geometric,
    Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDef {
    pub z: Rational,
    pub poch_num: Vec<PochFactor>,
    pub poch_den: Vec<PochFactor>,
    pub terms: Vec<SummandTerm>,
    pub convergence: Convergence,
}

/// Limit of `|t_{k+1}/t_k|` classified for the engine.
#[derive(Clone, Debug, PartialEq)]
pub enum RatioLimit {
    /// The ratio tends to this value, of modulus below one.
    Geometric(Rational),
    /// The ratio tends to one.
    Unit,
    Divergent(Rational),
}

impl SeriesDef {
    pub fn new(z: Rational, poch_num: Vec<PochFactor>, poch_den: Vec<PochFactor>, terms: Vec<SummandTerm>) -> Self {
        SeriesDef {
            z,
            poch_num,
            poch_den,
            terms,
            convergence: Convergence::Geometric,
        }
    }

    pub fn polynomial(mut self) -> Self {
        self.convergence = Convergence::Polynomial;
        self
    }

    /// Sets the convergence flag from the ratio limit.
    pub fn inferred(mut self) -> Self {
        if self.ratio_limit() == RatioLimit::Unit {
            self.convergence = Convergence::Polynomial;
        }
        self
    }

    /// `z · Π num steps` and `Π den steps`, so that
    /// `prefactor(k+1) = prefactor(k) · num(k)/den(k)`.
    pub fn step_polys(&self) -> (Poly, Poly) {
        let num = self
            .poch_num
            .iter()
            .fold(Poly::constant(self.z.clone()), |acc, f| &acc * &f.step_poly());
        let den = self
            .poch_den
            .iter()
            .fold(Poly::one(), |acc, f| &acc * &f.step_poly());
        (num, den)
    }

    pub fn ratio_limit(&self) -> RatioLimit {
        let (num, den) = self.step_polys();
        let (Some(dn), Some(dd)) = (num.degree(), den.degree()) else {
            return RatioLimit::Geometric(Rational::zero());
        };
        if dn < dd {
            return RatioLimit::Geometric(Rational::zero());
        }
        if dn > dd {
            return RatioLimit::Divergent(num.leading() / den.leading());
        }
        let r = num.leading() / den.leading();
        let m = r.abs();
        if m < Rational::one() {
            RatioLimit::Geometric(r)
        } else if m == Rational::one() {
            RatioLimit::Unit
        } else {
            RatioLimit::Divergent(r)
        }
    }

    pub fn has_harmonics(&self) -> bool {
        self.terms.iter().any(|t| !t.harmonic.is_empty())
    }

    /// Structural checks: nonvanishing denominators, admissible harmonic
    /// factors, and agreement of the convergence flag with the ratio limit.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.terms.is_empty() {
            return Err("summand has no terms".into());
        }
        for f in &self.poch_den {
            if f.can_vanish() {
                return Err(format!("denominator Pochhammer base {} is a nonpositive integer", f.base));
            }
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.den.is_zero() {
                return Err(format!("term {i}: zero denominator polynomial"));
            }
            match t.den.first_nonnegative_integer_root() {
                Ok(Some(k)) => {
                    return Err(format!("term {i}: denominator polynomial vanishes at k = {k}"))
                }
                Ok(None) => {}
                Err(e) => return Err(format!("term {i}: {e}")),
            }
            for h in &t.harmonic {
                if !(1..=2).contains(&h.ell) {
                    return Err(format!("term {i}: harmonic order {} is not 1 or 2", h.ell));
                }
                if let Some(n) = as_integer(&h.x) {
                    if n < num_bigint::BigInt::zero() {
                        return Err(format!("term {i}: harmonic offset {} hits a pole", h.x));
                    }
                }
            }
        }
        match (self.ratio_limit(), self.convergence) {
            (RatioLimit::Geometric(_), Convergence::Geometric) => Ok(()),
            (RatioLimit::Unit, Convergence::Polynomial) => Ok(()),
            (RatioLimit::Unit, Convergence::Geometric) => {
                Err("term ratio tends to 1 but the series is flagged geometric".into())
            }
            (RatioLimit::Geometric(r), Convergence::Polynomial) => Err(format!(
                "term ratio tends to {r}, so the series is not of polynomial type"
            )),
            (RatioLimit::Divergent(r), _) => Err(format!("term ratio tends to {r}; the series diverges")),
        }
    }

    /// Exact `t_k` from the definition; independent of the engine's
    /// incremental updates.
    pub fn exact_term(&self, k: u64) -> Result<Rational> {
        let mut pre = powu(&self.z, k as u32);
        for f in &self.poch_num {
            pre *= f.value(k);
        }
        for f in &self.poch_den {
            let v = f.value(k);
            if v.is_zero() {
                return Err(Error::Pole(format!("({})_n vanishes in a denominator", f.base)));
            }
            pre /= v;
        }
        if pre.is_zero() {
            return Ok(pre);
        }
        let mut s = Rational::zero();
        for t in &self.terms {
            s += t.exact_value(k)?;
        }
        Ok(pre * s)
    }

    /// Exact partial sum `Σ_{k<n} t_k`.
    pub fn exact_partial_sum(&self, n: u64) -> Result<Rational> {
        (0..n).try_fold(Rational::zero(), |acc, k| Ok(acc + self.exact_term(k)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZetaConst {
    Zeta3,
    Zeta4,
    Zeta5,
    One,
}

impl ZetaConst {
    pub fn argument(self) -> Option<u32> {
        match self {
            ZetaConst::Zeta3 => Some(3),
            ZetaConst::Zeta4 => Some(4),
            ZetaConst::Zeta5 => Some(5),
            ZetaConst::One => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ZetaConst::Zeta3 => "zeta3",
            ZetaConst::Zeta4 => "zeta4",
            ZetaConst::Zeta5 => "zeta5",
            ZetaConst::One => "one",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetTerm {
    pub constant: ZetaConst,
    pub coeff: Rational,
}

impl TargetTerm {
    pub fn new(constant: ZetaConst, coeff: Rational) -> Self {
        TargetTerm { constant, coeff }
    }
}

/// Human-readable form such as `48/1 zeta4 - 32/1 zeta3`.
pub struct TargetDisplay<'a>(pub &'a [TargetTerm]);

impl fmt::Display for TargetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            match (t.constant, c.is_one()) {
                (ZetaConst::One, _) => write!(f, "{c}")?,
                (k, true) => write!(f, "{}", k.name())?,
                (k, false) => write!(f, "{c} {}", k.name())?,
            }
        }
        Ok(())
    }
}

/// A series together with the closed form it is claimed to equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityDef {
    pub id: String,
    pub series: SeriesDef,
    pub target: Vec<TargetTerm>,
    /// Free-form label naming the identity.
    pub label: String,
}

impl IdentityDef {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.id.trim().is_empty() {
            return Err("empty id".into());
        }
        if self.target.is_empty() {
            return Err("target combination is empty".into());
        }
        self.series.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;

    fn az() -> SeriesDef {
        SeriesDef::new(
            rat(-1, 1024),
            vec![PochFactor::k(int(1)).pow(5)],
            vec![PochFactor::k(rat(3, 2)).pow(5)],
            vec![SummandTerm::poly(Poly::from_ints(&[77, 250, 205]))],
        )
    }

    #[test]
    fn step_polys_reproduce_exact_terms() {
        let s = az();
        let (num, den) = s.step_polys();
        for k in 0..8u64 {
            let pre_k = s.exact_term(k).unwrap() / Poly::from_ints(&[77, 250, 205]).eval_at(k);
            let pre_k1 = s.exact_term(k + 1).unwrap() / Poly::from_ints(&[77, 250, 205]).eval_at(k + 1);
            assert_eq!(pre_k1 / pre_k, num.eval_at(k) / den.eval_at(k));
        }
        assert_eq!(s.exact_term(0).unwrap(), int(77));
    }

    #[test]
    fn two_k_step() {
        let f = PochFactor::two_k(rat(1, 3));
        for k in 0..6 {
            assert_eq!(f.value(k + 1) / f.value(k), f.step_poly().eval_at(k));
        }
    }

    #[test]
    fn ratio_limits() {
        assert_eq!(az().ratio_limit(), RatioLimit::Geometric(rat(-1, 1024)));
        let quarter = SeriesDef::new(
            int(-1),
            vec![PochFactor::k(int(1)).pow(2)],
            vec![PochFactor::two_k(int(2))],
            vec![SummandTerm::poly(Poly::one())],
        );
        assert_eq!(quarter.ratio_limit(), RatioLimit::Geometric(rat(-1, 4)));
        let slow = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(Poly::one(), Poly::from_ints(&[1, 2, 1]))]);
        assert_eq!(slow.ratio_limit(), RatioLimit::Unit);
        assert!(slow.validate().is_err());
        assert!(slow.clone().polynomial().validate().is_ok());
    }

    #[test]
    fn rejects_denominator_roots() {
        let mut s = az();
        s.terms = vec![SummandTerm::rational(Poly::one(), Poly::from_ints(&[1, -1]))];
        let err = s.validate().unwrap_err();
        assert!(err.contains("k = 1"), "{err}");
    }

    #[test]
    fn target_display() {
        let t = [
            TargetTerm::new(ZetaConst::Zeta4, int(48)),
            TargetTerm::new(ZetaConst::Zeta3, int(-32)),
        ];
        assert_eq!(TargetDisplay(&t).to_string(), "48 zeta4 - 32 zeta3");
    }
}
