//! Summation of harmonic-free series whose term ratio tends to one.
//!
//! With `t_{k+1}/t_k = A(k)/B(k)` the remainder `T_N = Σ_{k≥N} t_k` obeys
//! `B(N) T_N/t_N = B(N) + A(N) T_{N+1}/t_{N+1}`. Writing `T_N = t_N G(N)` and
//! expanding `G(N) = Σ_{j≥-1} g_j N^-j` turns this into a triangular
//! recurrence for the `g_j`, independent of `N`. For `N` well beyond the roots
//! of `A` and `B` the expansion shrinks quickly, so a few hundred direct terms
//! plus the expansion give the full sum to high precision.

use num_traits::{One, ToPrimitive};

use super::def::SeriesDef;
use super::engine::{guard_digits, rounding_allowance, sum_geometric, Method, SeriesSum, TermStream};
use crate::error::{Error, Result};
use crate::numeric::{BigReal, Poly, Rational};

/// Extra digits for the expansion coefficients.
const EXPANSION_GUARD: u32 = 20;

/// Smallest cutoff tried before the expansion.
const MIN_CUTOFF: u64 = 256;

/// The summand as a single rational function `P/Q`, or `None` when it carries
/// harmonic factors.
pub fn combined_summand(def: &SeriesDef) -> Option<(Poly, Poly)> {
    let mut acc = (Poly::zero(), Poly::one());
    for t in &def.terms {
        if !t.harmonic.is_empty() {
            return None;
        }
        acc = (&(&acc.0 * &t.den) + &(&t.num * &acc.1), &acc.1 * &t.den);
    }
    Some(acc)
}

/// Ratio polynomials `A`, `B` with `t_{k+1}/t_k = A(k)/B(k)`.
pub fn ratio_polys(def: &SeriesDef) -> Option<(Poly, Poly)> {
    let (p, q) = combined_summand(def)?;
    let (num, den) = def.step_polys();
    let one = Rational::one();
    let a = &(&num * &p.shift(&one)) * &q;
    let b = &(&den * &q.shift(&one)) * &p;
    Some((a, b))
}

/// Exponent `p` with `t_k ~ C k^-p`, when the ratio tends to one.
pub fn decay_exponent(def: &SeriesDef) -> Option<Rational> {
    let (a, b) = ratio_polys(def)?;
    let d = a.degree()?;
    if b.degree() != Some(d) || a.leading() != b.leading() || d == 0 {
        return None;
    }
    let a1 = &a.coeffs()[d - 1];
    let b1 = &b.coeffs()[d - 1];
    Some((b1 - a1) / a.leading())
}

/// Sums a harmonic-free series with unit ratio limit by direct summation to a
/// cutoff `N` followed by the asymptotic tail expansion.
pub fn sum_algebraic(def: &SeriesDef, digits: u32, max_terms: usize) -> Result<SeriesSum> {
    if def.poch_num.iter().any(|f| f.can_vanish()) {
        return sum_geometric(def, digits, max_terms);
    }
    let (a, b) = ratio_polys(def).ok_or_else(|| {
        Error::InvalidArgument("the asymptotic tail needs a summand without harmonic factors".into())
    })?;
    if a.is_zero() || b.is_zero() {
        // Zero summand.
        let w = digits + guard_digits(max_terms);
        return Ok(SeriesSum {
            value: BigReal::zero(w),
            error_bound: BigReal::zero(w),
            terms_used: 0,
            rate: f64::INFINITY,
            method: Method::Terminating,
        });
    }
    let p = decay_exponent(def).ok_or(Error::NonConvergence { ratio: 1.0, terms: 0 })?;
    if p <= Rational::one() {
        return Err(Error::NonConvergence { ratio: 1.0, terms: 0 });
    }
    let d = a.degree().unwrap();
    let at: Vec<Rational> = (0..=d).map(|i| a.coeffs()[d - i].clone()).collect();
    let bt: Vec<Rational> = (0..=d).map(|i| b.coeffs()[d - i].clone()).collect();

    let w = digits + guard_digits(max_terms);
    let w2 = w + EXPANSION_GUARD;
    let (sp, sq) = combined_summand(def).unwrap();
    let (sn, sd) = def.step_polys();
    let rb = [&a, &b, &sp, &sq, &sn, &sd]
        .iter()
        .map(|p| p.root_bound().to_f64().unwrap_or(f64::MAX))
        .fold(0.0, f64::max);
    let mut cutoff = (MIN_CUTOFF as f64).max(16.0 * rb).max(4.0 * w as f64).ceil() as u64;

    let expansion = Expansion::new(&at, &bt, &p, w2);
    let mut stream = TermStream::new(def, w)?;
    let mut head = BigReal::zero(w);
    let mut max_log = f64::NEG_INFINITY;
    loop {
        if cutoff as usize > max_terms {
            return Err(Error::MaxTermsExceeded(max_terms));
        }
        while stream.k() < cutoff {
            let t = stream.next_term()?;
            max_log = max_log.max(t.log10_abs());
            head = head + t;
        }
        let t_n = stream.prefactor() * &stream.summand()?;
        if let Some((g, last)) = expansion.evaluate(cutoff, -(w2 as f64)) {
            let tail = &t_n * &g;
            let trunc = (&t_n * &last).abs().mul_i64(2);
            let rel = tail.abs() * BigReal::pow10(-(w2 as i64) + 8, w2);
            let bound = trunc + rel + rounding_allowance(cutoff as usize, max_log, w);
            return Ok(SeriesSum {
                value: (head + tail.with_digits(w)).with_digits(w),
                error_bound: bound.with_digits(w),
                terms_used: cutoff as usize,
                rate: 0.0,
                method: Method::AsymptoticTail,
            });
        }
        cutoff *= 2;
    }
}

/// Coefficients `g_j` of `G(N) = Σ_{j≥-1} g_j N^-j`.
struct Expansion {
    a: Vec<BigReal>,
    b: Vec<BigReal>,
    p: Rational,
    w: u32,
}

impl Expansion {
    fn new(a: &[Rational], b: &[Rational], p: &Rational, w: u32) -> Self {
        Expansion {
            a: a.iter().map(|c| BigReal::from_rational(c, w)).collect(),
            b: b.iter().map(|c| BigReal::from_rational(c, w)).collect(),
            p: p.clone(),
            w,
        }
    }

    /// `G(n)` and the magnitude of its last retained term, once a term drops
    /// below `10^tol_log |G|`; `None` if the expansion starts to grow first.
    fn evaluate(&self, n: u64, tol_log: f64) -> Option<(BigReal, BigReal)> {
        let w = self.w;
        let d = self.a.len() - 1;
        let max_order = 6 * w as usize + 50;
        let inv_n = BigReal::one(w).div_i64(n as i64);
        let a0 = &self.a[0];
        // g[idx] = g_{idx-1}
        let mut g: Vec<BigReal> = Vec::new();
        // binom[j+1][s] = c(j, j+s) = [u^(j+s)] u^j (1+u)^-j
        let mut binom: Vec<Vec<BigReal>> = Vec::new();
        let mut total = BigReal::zero(w);
        // N^(1-m) for the term g_{m-1} N^-(m-1)
        let mut scale = BigReal::from_i64(n as i64, w);
        let mut prev_mag = f64::INFINITY;
        let mut prev_term = BigReal::zero(w);
        let mut growth = 0;

        for m in 0..max_order {
            extend_binomials(&mut binom, m as i64, w);
            let mut rhs = if m <= d { self.b[m].clone() } else { BigReal::zero(w) };
            for i in 0..=d.min(m + 1) {
                let nn = m as i64 - i as i64;
                let mut s = BigReal::zero(w);
                for j in -1..=nn {
                    let unknown = (i == 0 && (j == m as i64 || j == m as i64 - 1)) || (i == 1 && j == m as i64 - 1);
                    if unknown {
                        continue;
                    }
                    let c = &binom[(j + 1) as usize][(nn - j) as usize];
                    if c.is_zero() {
                        continue;
                    }
                    s = s + &g[(j + 1) as usize] * c;
                }
                rhs = rhs + &self.a[i] * &s;
                if i >= 2 {
                    rhs = rhs - &self.b[i] * &g[m + 1 - i];
                }
            }
            let denom = a0.mul_rational(&(&self.p + Rational::from_integer((m as i64 - 1).into())));
            let gm = rhs / denom;
            let term = &gm * &scale;
            g.push(gm);
            total = total + &term;
            scale = &scale * &inv_n;

            // Coefficients can vanish individually, so judge pairs of terms.
            let mag = term.log10_abs();
            let pair = mag.max(prev_mag);
            if m > d + 1 && pair < tol_log + total.log10_abs() {
                let last = if term.is_zero() { prev_term } else { term.abs() };
                return Some((total, last));
            }
            if m > d + 1 && mag.is_finite() && mag > prev_mag {
                growth += 1;
                if growth >= 3 {
                    return None;
                }
            } else {
                growth = 0;
            }
            if mag.is_finite() {
                prev_mag = mag;
                prev_term = term.abs();
            }
        }
        None
    }
}

/// Makes rows `j = -1..=m` of the `c(j, n)` table available up to `n = m`.
fn extend_binomials(rows: &mut Vec<Vec<BigReal>>, m: i64, w: u32) {
    while (rows.len() as i64) < m + 2 {
        rows.push(vec![BigReal::one(w)]);
    }
    for (idx, row) in rows.iter_mut().enumerate() {
        let j = idx as i64 - 1;
        while (row.len() as i64) <= m - j {
            let nn = j + row.len() as i64 - 1;
            // c(j, nn+1) = c(j, nn) * (-nn) / (nn - j + 1)
            let next = row.last().unwrap().mul_i64(-nn).div_i64(nn - j + 1);
            row.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, rat};
    use crate::numeric::{ref_pi, ref_zeta};
    use crate::series::def::{PochFactor, SummandTerm};

    fn inverse_power(s: i64) -> SeriesDef {
        let mut q = Poly::one();
        for _ in 0..s {
            q = &q * &Poly::from_ints(&[1, 1]);
        }
        SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(Poly::one(), q)])
    }

    fn close(a: &BigReal, b: &BigReal, digits: i64) -> bool {
        (a - b).abs() < BigReal::pow10(-digits, a.digits())
    }

    #[test]
    fn zeta_values() {
        for (s, d) in [(2, 60), (3, 100), (5, 40)] {
            let r = sum_algebraic(&inverse_power(s), d, 100_000).unwrap();
            assert_eq!(r.method, Method::AsymptoticTail);
            let z = ref_zeta(s as u32, d + 10);
            assert!(close(&r.value, &z, d as i64), "zeta({s}): {}", r.value);
            assert!((r.value.clone() - z).abs() <= r.error_bound.clone() + BigReal::pow10(-(d as i64) - 8, d + 10));
        }
    }

    #[test]
    fn hypergeometric_slow_sum() {
        // 2F1(1/2, 1/2; 3/2; 1) = arcsin(1)
        let s = SeriesDef::new(
            int(1),
            vec![PochFactor::k(rat(1, 2)).pow(2)],
            vec![PochFactor::k(rat(3, 2)), PochFactor::k(int(1))],
            vec![SummandTerm::poly(Poly::one())],
        );
        assert_eq!(decay_exponent(&s), Some(rat(3, 2)));
        let r = sum_algebraic(&s, 50, 100_000).unwrap();
        let half_pi = ref_pi(60).div_i64(2);
        assert!(close(&r.value, &half_pi, 50), "{}", r.value);
    }

    #[test]
    fn slow_decay_is_rejected() {
        // 1/(k+1) diverges
        let s = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(Poly::one(), Poly::from_ints(&[1, 1]))]);
        assert!(matches!(sum_algebraic(&s, 20, 100_000), Err(Error::NonConvergence { .. })));
    }
}
