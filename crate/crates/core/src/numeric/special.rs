//! Shifted factorials and generalized harmonic numbers, exact over the
//! rationals.

use num_traits::{One, Zero};

use super::rational::{int, powu, Rational};
use crate::error::{Error, Result};

/// `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..n {
        if f.is_zero() {
            return Rational::zero();
        }
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// `H_n^(ell)(x) = sum_{i=1..n} 1/(x+i)^ell`; `x = 0` gives the ordinary
/// harmonic numbers of order `ell`.
pub fn gen_harmonic(n: u64, ell: u32, x: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 1..=n {
        acc += harmonic_increment(i, ell, x)?;
    }
    Ok(acc)
}

/// `1/(x+i)^ell`, or a pole error.
pub(crate) fn harmonic_increment(i: u64, ell: u32, x: &Rational) -> Result<Rational> {
    let base = x + int(i as i64);
    if base.is_zero() {
        return Err(Error::Pole(format!("x + {i} = 0 in H^({ell})(x) with x = {x}")));
    }
    Ok(powu(&base, ell).recip())
}

/// Running values of `H_k`, `H_k^(2)`, `H_{1+2k}` and `H_{1+2k}^(2)` along a
/// summation, advanced with a constant number of rational operations per step.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicState {
    k: u64,
    h1_k: Rational,
    h2_k: Rational,
    h1_odd: Rational,
    h2_odd: Rational,
}

impl Default for HarmonicState {
    fn default() -> Self {
        Self::new()
    }
}

impl HarmonicState {
    /// State at `k = 0`: `H_0 = 0`, `H_1 = 1`.
    pub fn new() -> Self {
        HarmonicState {
            k: 0,
            h1_k: Rational::zero(),
            h2_k: Rational::zero(),
            h1_odd: Rational::one(),
            h2_odd: Rational::one(),
        }
    }

    pub fn advance(&mut self) {
        self.k += 1;
        let k = int(self.k as i64);
        self.h1_k += k.recip();
        self.h2_k += (&k * &k).recip();
        for j in [&k * int(2), &k * int(2) + int(1)] {
            self.h1_odd += j.recip();
            self.h2_odd += (&j * &j).recip();
        }
    }

    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn h1_k(&self) -> &Rational {
        &self.h1_k
    }
    pub fn h2_k(&self) -> &Rational {
        &self.h2_k
    }
    pub fn h1_odd(&self) -> &Rational {
        &self.h1_odd
    }
    pub fn h2_odd(&self) -> &Rational {
        &self.h2_odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&int(3), 4), int(360));
        assert_eq!(pochhammer(&int(-2), 5), int(0));
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(gen_harmonic(4, 1, &int(0)).unwrap(), rat(25, 12));
        assert_eq!(gen_harmonic(3, 2, &int(0)).unwrap(), rat(49, 36));
        assert_eq!(gen_harmonic(2, 1, &rat(1, 2)).unwrap(), rat(16, 15));
        assert_eq!(gen_harmonic(0, 1, &int(-1)).unwrap(), int(0));
        assert!(matches!(gen_harmonic(3, 1, &int(-2)), Err(Error::Pole(_))));
    }

    #[test]
    fn harmonic_state_matches_direct_sums() {
        let mut st = HarmonicState::new();
        let zero = int(0);
        for k in 0..=200u64 {
            assert_eq!(st.k(), k);
            assert_eq!(st.h1_k(), &gen_harmonic(k, 1, &zero).unwrap());
            assert_eq!(st.h2_k(), &gen_harmonic(k, 2, &zero).unwrap());
            assert_eq!(st.h1_odd(), &gen_harmonic(2 * k + 1, 1, &zero).unwrap());
            assert_eq!(st.h2_odd(), &gen_harmonic(2 * k + 1, 2, &zero).unwrap());
            st.advance();
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..40).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_splits(x in rational(), m in 0u64..12, n in 0u64..12) {
            let lhs = pochhammer(&x, m + n);
            let rhs = pochhammer(&x, m) * pochhammer(&(&x + int(m as i64)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn harmonic_recurrence(x in rational(), n in 1u64..30, ell in 1u32..4) {
            prop_assume!((1..=n).all(|i| !(&x + int(i as i64)).is_zero()));
            let full = gen_harmonic(n, ell, &x).unwrap();
            let prev = gen_harmonic(n - 1, ell, &x).unwrap();
            let inc = powu(&(&x + int(n as i64)), ell).recip();
            prop_assert_eq!(full, prev + inc);
        }
    }
}
