//! The terminating well-poised `₉F₈` transformation, checked exactly.

use num_traits::{One, Zero};

use super::lcg::Lcg;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, pochhammer, rat, Rational};

/// Largest `n` accepted by [`check_f98_exact`].
pub const MAX_N: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F98Params {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub n: u64,
}

impl F98Params {
    /// Chooses `g` from `2 + 3a = b + c + d + e + f + g - n`.
    pub fn balanced(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, f: Rational, n: u64) -> Self {
        let g = int(2) + int(3) * &a + int(n as i64) - &b - &c - &d - &e - &f;
        F98Params { a, b, c, d, e, f, g, n }
    }

    /// `1 + 2a - b - c - d`
    pub fn lambda(&self) -> Rational {
        int(1) + int(2) * &self.a - &self.b - &self.c - &self.d
    }

    pub fn is_balanced(&self) -> bool {
        int(2) + int(3) * &self.a
            == &self.b + &self.c + &self.d + &self.e + &self.f + &self.g - int(self.n as i64)
    }

    pub fn label(&self) -> String {
        let v = [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g];
        let mut parts: Vec<String> = v.iter().map(|x| format_rational(x)).collect();
        parts.push(self.n.to_string());
        parts.join(",")
    }
}

fn degenerate(what: &str, x: &Rational) -> Error {
    Error::DegenerateParameters(format!("{what} ({})_k vanishes", format_rational(x)))
}

/// `Σ_{k=0}^{n} Π (num)_k / (k! Π (den)_k)`
fn terminating_sum(num: &[Rational], den: &[Rational], n: u64) -> Result<Rational> {
    for x in den {
        if pochhammer(x, n).is_zero() {
            return Err(degenerate("denominator", x));
        }
    }
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut t = Rational::one() / pochhammer(&int(1), k);
        for x in num {
            t *= pochhammer(x, k);
        }
        for x in den {
            t /= pochhammer(x, k);
        }
        total += t;
    }
    Ok(total)
}

/// Left side minus right side, in exact arithmetic.
pub fn check_f98_exact(p: &F98Params) -> Result<Rational> {
    if !p.is_balanced() {
        return Err(Error::InvalidArgument(format!("parameters {} are not balanced", p.label())));
    }
    if p.n > MAX_N {
        return Err(Error::InvalidArgument(format!("n = {} exceeds {MAX_N}", p.n)));
    }
    let F98Params { a, b, c, d, e, f, g, n } = p;
    let n = *n;
    let lam = p.lambda();
    if lam.is_zero() {
        return Err(Error::DegenerateParameters("1 + 2a - b - c - d = 0".into()));
    }
    let one = int(1);
    let half = rat(1, 2);
    let neg_n = int(-(n as i64));
    let up = |x: &Rational| &one + a - x;
    let upl = |x: &Rational| &one + &lam - x;

    let left = terminating_sum(
        &[a.clone(), &one + a * &half, b.clone(), c.clone(), d.clone(), e.clone(), f.clone(), g.clone(), neg_n.clone()],
        &[a * &half, up(b), up(c), up(d), up(e), up(f), up(g), &one + a + int(n as i64)],
        n,
    )?;

    let pre_den = [&one + &lam, up(e), up(f), up(g)];
    let mut pre = pochhammer(&(&one + a), n);
    for x in [upl(e), upl(f), upl(g)] {
        pre *= pochhammer(&x, n);
    }
    for x in &pre_den {
        let v = pochhammer(x, n);
        if v.is_zero() {
            return Err(degenerate("prefactor", x));
        }
        pre /= v;
    }
    let right = pre
        * terminating_sum(
            &[
                lam.clone(),
                &one + &lam * &half,
                &lam + b - a,
                &lam + c - a,
                &lam + d - a,
                e.clone(),
                f.clone(),
                g.clone(),
                neg_n,
            ],
            &[&lam * &half, up(b), up(c), up(d), upl(e), upl(f), upl(g), &one + &lam + int(n as i64)],
            n,
        )?;
    Ok(left - right)
}

/// A seeded draw: `a ∈ [1/4, 4]`, `b..f ∈ [-3, 3]`, `n = next % 6`, and `g`
/// from the balance relation.
pub fn draw_f98(rng: &mut Lcg) -> F98Params {
    let a = rng.rational(&rat(1, 4), &int(4));
    let mut v: Vec<Rational> = (0..5).map(|_| rng.rational(&int(-3), &int(3))).collect();
    let n = rng.next_u64() % 6;
    let f = v.pop().unwrap();
    let e = v.pop().unwrap();
    let d = v.pop().unwrap();
    let c = v.pop().unwrap();
    let b = v.pop().unwrap();
    F98Params::balanced(a, b, c, d, e, f, n)
}

/// Result of a seeded sweep.
#[derive(Clone, Debug)]
pub struct F98Sweep {
    pub checked: Vec<(F98Params, Rational)>,
    /// Draws discarded as degenerate.
    pub skipped: usize,
}

impl F98Sweep {
    pub fn all_zero(&self) -> bool {
        self.checked.iter().all(|(_, r)| r.is_zero())
    }
}

/// Draws until `count` nondegenerate parameter sets have been checked.
pub fn f98_sweep(seed: u64, count: usize) -> Result<F98Sweep> {
    let mut rng = Lcg::new(seed);
    let mut sweep = F98Sweep {
        checked: Vec::with_capacity(count),
        skipped: 0,
    };
    while sweep.checked.len() < count {
        let p = draw_f98(&mut rng);
        match check_f98_exact(&p) {
            Ok(r) => sweep.checked.push((p, r)),
            Err(Error::DegenerateParameters(_)) => {
                sweep.skipped += 1;
                if sweep.skipped > 100 * count.max(1) {
                    return Err(Error::InvalidArgument("too many degenerate draws".into()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Rational {
        rat(1, 2)
    }

    #[test]
    fn small_example_is_exact() {
        let p = F98Params::balanced(int(1), h(), h(), h(), h(), h(), 2);
        assert_eq!(p.g, rat(9, 2));
        assert_eq!(check_f98_exact(&p).unwrap(), Rational::zero());
    }

    #[test]
    fn n_zero_is_trivial() {
        let p = F98Params::balanced(rat(7, 3), rat(1, 5), rat(2, 7), h(), int(-1) / int(3), rat(5, 4), 0);
        assert_eq!(check_f98_exact(&p).unwrap(), Rational::zero());
    }

    #[test]
    fn lambda_zero_is_degenerate() {
        let p = F98Params::balanced(int(1), int(1), int(1), int(1), h(), h(), 2);
        assert!(matches!(check_f98_exact(&p), Err(Error::DegenerateParameters(_))));
    }

    #[test]
    fn unbalanced_is_rejected() {
        let mut p = F98Params::balanced(int(1), h(), h(), h(), h(), h(), 2);
        p.g += int(1);
        assert!(matches!(check_f98_exact(&p), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn seeded_sweep_is_exact() {
        let s = f98_sweep(0, 50).unwrap();
        assert_eq!(s.checked.len(), 50);
        assert!(s.all_zero());
        let again = f98_sweep(0, 50).unwrap();
        assert_eq!(s.checked, again.checked);
    }
}
