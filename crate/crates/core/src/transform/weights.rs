//! Summand weights as exact rational functions of `k`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{int, rat, Poly, Rational};
use crate::series::SummandTerm;

/// `c0 + c1·k`
pub fn lin(c0: Rational, c1: i64) -> Poly {
    Poly::linear(c0, int(c1))
}

/// `coeff · Π num / Π den`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTerm {
    pub coeff: Rational,
    pub num: Vec<Poly>,
    pub den: Vec<Poly>,
}

impl WeightTerm {
    pub fn new(coeff: Rational, num: Vec<Poly>, den: Vec<Poly>) -> Self {
        WeightTerm { coeff, num, den }
    }

    pub fn eval(&self, k: &Rational) -> Result<Rational> {
        let mut d = Rational::one();
        for p in &self.den {
            d *= p.eval(k);
        }
        if d.is_zero() {
            return Err(Error::DegenerateParameters(format!("weight denominator vanishes at k = {k}")));
        }
        let n = self.num.iter().fold(self.coeff.clone(), |acc, p| acc * p.eval(k));
        Ok(n / d)
    }

    pub fn to_summand(&self) -> SummandTerm {
        let num = self.num.iter().fold(Poly::constant(self.coeff.clone()), |acc, p| &acc * p);
        let den = self.den.iter().fold(Poly::one(), |acc, p| &acc * p);
        SummandTerm::rational(num, den)
    }
}

/// A sum of [`WeightTerm`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<WeightTerm>);

impl Weight {
    /// Exact value at a rational `k`; fails if any denominator vanishes.
    pub fn eval(&self, k: &Rational) -> Result<Rational> {
        self.0.iter().try_fold(Rational::zero(), |acc, t| Ok(acc + t.eval(k)?))
    }

    pub fn eval_at(&self, k: u64) -> Result<Rational> {
        self.eval(&int(k as i64))
    }

    pub fn to_summands(&self) -> Vec<SummandTerm> {
        self.0.iter().map(WeightTerm::to_summand).collect()
    }

    /// Multiplies every term by `c`.
    pub fn scaled(mut self, c: &Rational) -> Self {
        for t in &mut self.0 {
            t.coeff *= c.clone();
        }
        self
    }
}

fn term(num: Vec<Poly>, den: Vec<Poly>) -> WeightTerm {
    WeightTerm::new(Rational::one(), num, den)
}

/// Five transformation parameters `(a, b, c, d, e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
}

impl Params {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational) -> Self {
        Params { a, b, c, d, e }
    }

    pub fn from_array(p: [Rational; 5]) -> Self {
        let [a, b, c, d, e] = p;
        Params { a, b, c, d, e }
    }

    pub fn to_array(&self) -> [Rational; 5] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone(), self.e.clone()]
    }

    /// `1 + 2a - b - c - d - e`
    pub fn s(&self) -> Rational {
        int(1) + int(2) * &self.a - &self.b - &self.c - &self.d - &self.e
    }

    /// `1 + a - x - y`
    fn opp(&self, x: &Rational, y: &Rational) -> Rational {
        int(1) + &self.a - x - y
    }

    /// `1 + a - x`
    fn one(&self, x: &Rational) -> Rational {
        int(1) + &self.a - x
    }
}

/// Weight of the `-1/1024` transformation.
pub fn alpha(p: &Params) -> Weight {
    let Params { a, b, c, d, e } = p;
    let s = p.s();
    let t1 = term(
        vec![lin(int(1) + int(2) * a - b - c - d, 3), lin(a - e, 2)],
        vec![lin(s.clone(), 2)],
    );
    let t2 = term(
        vec![
            lin(e.clone(), 1),
            lin(p.opp(b, c), 1),
            lin(p.opp(b, d), 1),
            lin(p.opp(c, d), 1),
            lin(int(2) + int(2) * a - b - d - e, 3),
        ],
        vec![lin(p.one(b), 2), lin(p.one(d), 2), lin(s.clone(), 2), lin(int(1) + &s, 2)],
    );
    let t3 = term(
        vec![
            lin(c.clone(), 1),
            lin(e.clone(), 1),
            lin(p.opp(b, c), 1),
            lin(p.opp(b, d), 1),
            lin(p.opp(b, e), 1),
            lin(p.opp(c, d), 1),
            lin(p.opp(d, e), 1),
        ],
        vec![
            lin(p.one(b), 2),
            lin(p.one(c), 2),
            lin(p.one(d), 2),
            lin(p.one(e), 2),
            lin(s.clone(), 2),
            lin(int(1) + &s, 2),
        ],
    );
    Weight(vec![t1, t2, t3])
}

/// Weight of the `-1/4` transformation.
pub fn beta(p: &Params) -> Weight {
    let Params { a, b, c, d, e } = p;
    let s = p.s();
    let t1 = term(
        vec![lin(int(1) + int(2) * a - b - c - d, 2), lin(a - e, 1)],
        vec![lin(s.clone(), 1)],
    );
    let t2 = term(
        vec![lin(p.opp(b, c), 1), lin(p.opp(b, d), 1), lin(e.clone(), 1)],
        vec![lin(p.one(b), 2), lin(s, 1)],
    );
    Weight(vec![t1, t2])
}

/// Weight of the `1/16` transformation.
pub fn omega(p: &Params) -> Weight {
    let Params { a, b, c, d, e } = p;
    let s = p.s();
    let t1 = term(
        vec![lin(int(1) + int(2) * a - b - c - d, 3), lin(a - e, 1)],
        vec![lin(s.clone(), 2)],
    );
    let t2 = term(
        vec![
            lin(e.clone(), 1),
            lin(p.opp(b, c), 1),
            lin(p.opp(c, d), 1),
            lin(p.opp(b, d), 2),
            lin(int(2) + int(2) * a - b - d - e, 3),
        ],
        vec![lin(p.one(b), 2), lin(p.one(d), 2), lin(s.clone(), 2), lin(int(1) + &s, 2)],
    );
    Weight(vec![t1, t2])
}

fn two_minus(x: &Rational, c0: i64) -> Rational {
    int(c0) - x
}

/// `A_k(b)`
pub fn weight_a(b: &Rational) -> Weight {
    let k1 = || lin(int(1), 1);
    let q = || lin(two_minus(b, 2), 1);
    let r = || lin(two_minus(b, 2), 2);
    let u = || lin(two_minus(b, 3), 2);
    Weight(vec![
        term(vec![lin(int(1), 2), lin(two_minus(b, 3), 3)], vec![r()]),
        WeightTerm::new(
            rat(1, 2),
            vec![k1(), lin(two_minus(b, 4), 3), q(), q()],
            vec![r(), u(), u()],
        ),
        WeightTerm::new(rat(1, 8), vec![k1(), q(), q(), q()], vec![r(), u(), u()]),
    ])
}

/// `B_k(b)`
pub fn weight_b(b: &Rational) -> Weight {
    let bk = || lin(b.clone(), 1);
    let q = || lin(two_minus(b, 2), 1);
    Weight(vec![
        term(vec![lin(int(2), 3)], vec![]),
        WeightTerm::new(
            rat(1, 4),
            vec![bk(), q(), lin(two_minus(b, 4), 3)],
            vec![lin(int(1), 2), lin(two_minus(b, 3), 2)],
        ),
        WeightTerm::new(
            rat(1, 8),
            vec![bk(), q(), q(), q()],
            vec![lin(int(1), 2), lin(int(1) + b, 2), lin(two_minus(b, 3), 2)],
        ),
    ])
}

/// `E_k(c)`
pub fn weight_e(c: &Rational) -> Weight {
    let q = || lin(two_minus(c, 2), 1);
    Weight(vec![
        term(vec![lin(two_minus(c, 3), 3)], vec![lin(int(1), 2), lin(two_minus(c, 2), 2)]),
        WeightTerm::new(
            rat(3, 4),
            vec![q(), q()],
            vec![lin(int(1), 1), lin(two_minus(c, 2), 2), lin(two_minus(c, 3), 2)],
        ),
    ])
}

/// `F_k(b)`
pub fn weight_f(b: &Rational) -> Weight {
    let u = || lin(two_minus(b, 3), 2);
    Weight(vec![
        term(vec![lin(two_minus(b, 3), 3)], vec![lin(int(1), 1), lin(two_minus(b, 2), 2)]),
        WeightTerm::new(
            rat(1, 2),
            vec![lin(two_minus(b, 2), 1), lin(two_minus(b, 4), 3)],
            vec![lin(int(1), 1), u(), u()],
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    fn sample_params() -> Vec<Params> {
        vec![
            Params::new(r(2, 1), r(1, 1), r(1, 1), r(1, 1), r(1, 1)),
            Params::new(r(5, 2), r(3, 4), r(7, 5), r(1, 3), r(9, 8)),
            Params::new(r(17, 7), r(11, 10), r(2, 3), r(5, 4), r(1, 2)),
        ]
    }

    fn ks() -> Vec<Rational> {
        vec![r(0, 1), r(1, 1), r(7, 1), r(1, 3), r(-5, 7)]
    }

    // Closed forms written out directly, independent of the term lists.
    fn alpha_direct(p: &Params, k: &Rational) -> Rational {
        let Params { a, b, c, d, e } = p.clone();
        let one = int(1);
        let two = int(2);
        let s = &one + &two * &a - &b - &c - &d - &e;
        let t1 = (&one + &two * &a - &b - &c - &d + int(3) * k) * (&a - &e + &two * k) / (&s + &two * k);
        let t2 = (&e + k) * (&one + &a - &b - &c + k) / ((&one + &a - &b + &two * k) * (&one + &a - &d + &two * k))
            * (&one + &a - &b - &d + k)
            * (&one + &a - &c - &d + k)
            * (&two + &two * &a - &b - &d - &e + int(3) * k)
            / ((&s + &two * k) * (&one + &s + &two * k));
        let t3 = (&c + k) * (&e + k) * (&one + &a - &b - &c + k) * (&one + &a - &b - &d + k)
            / ((&one + &a - &b + &two * k)
                * (&one + &a - &c + &two * k)
                * (&one + &a - &d + &two * k)
                * (&one + &a - &e + &two * k))
            * (&one + &a - &b - &e + k)
            * (&one + &a - &c - &d + k)
            * (&one + &a - &d - &e + k)
            / ((&s + &two * k) * (&one + &s + &two * k));
        t1 + t2 + t3
    }

    fn beta_direct(p: &Params, k: &Rational) -> Rational {
        let Params { a, b, c, d, e } = p.clone();
        let one = int(1);
        let two = int(2);
        let s = &one + &two * &a - &b - &c - &d - &e;
        (&one + &two * &a - &b - &c - &d + &two * k) * (&a - &e + k) / (&s + k)
            + (&one + &a - &b - &c + k) * (&one + &a - &b - &d + k) * (&e + k)
                / ((&one + &a - &b + &two * k) * (&s + k))
    }

    fn omega_direct(p: &Params, k: &Rational) -> Rational {
        let Params { a, b, c, d, e } = p.clone();
        let one = int(1);
        let two = int(2);
        let three = int(3);
        let s = &one + &two * &a - &b - &c - &d - &e;
        (&one + &two * &a - &b - &c - &d + &three * k) * (&a - &e + k) / (&s + &two * k)
            + (&e + k) * (&one + &a - &b - &c + k)
                / ((&one + &a - &b + &two * k) * (&one + &a - &d + &two * k))
                * (&one + &a - &c - &d + k)
                * (&one + &a - &b - &d + &two * k)
                * (&two + &two * &a - &b - &d - &e + &three * k)
                / ((&s + &two * k) * (&one + &s + &two * k))
    }

    #[test]
    fn family_weights_match_closed_forms() {
        for p in sample_params() {
            let (wa, wb, wo) = (alpha(&p), beta(&p), omega(&p));
            for k in ks() {
                assert_eq!(wa.eval(&k).unwrap(), alpha_direct(&p, &k));
                assert_eq!(wb.eval(&k).unwrap(), beta_direct(&p, &k));
                assert_eq!(wo.eval(&k).unwrap(), omega_direct(&p, &k));
            }
        }
    }

    #[test]
    fn summands_agree_with_exact_weights() {
        let p = &sample_params()[1];
        let w = alpha(p);
        let terms = w.to_summands();
        for k in 0..6u64 {
            let via_terms: Rational = terms.iter().map(|t| t.exact_value(k).unwrap()).sum();
            assert_eq!(via_terms, w.eval_at(k).unwrap());
        }
    }

    #[test]
    fn case_weights_at_central_point() {
        // b = c = 1
        let one = int(1);
        assert_eq!(weight_a(&one).eval_at(0).unwrap(), int(2) + rat(3, 8) + rat(1, 32));
        assert_eq!(weight_b(&one).eval_at(0).unwrap(), int(2) + rat(3, 8) + rat(1, 32));
        assert_eq!(weight_e(&one).eval_at(0).unwrap(), int(2) + rat(3, 8));
        assert_eq!(weight_f(&one).eval_at(0).unwrap(), int(2) + rat(3, 8));
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // s = 0 makes (s + 2k) vanish at k = 0
        let p = Params::new(int(2), int(1), int(1), int(1), int(2));
        assert!(matches!(alpha(&p).eval_at(0), Err(Error::DegenerateParameters(_))));
    }
}
