//! Incremental term generation and geometric-envelope summation.

use std::collections::VecDeque;

use num_traits::Zero;

use super::def::{HarmonicArg, HarmonicFactor, RatioLimit, SeriesDef, SummandTerm};
use crate::error::{Error, Result};
use crate::numeric::special::harmonic_increment;
use crate::numeric::{BigReal, Poly, Rational};

/// Number of trailing term ratios inspected by the stopping rule.
const RATIO_WINDOW: usize = 5;

/// Largest envelope ratio accepted by the geometric tail bound.
pub const MAX_RATIO: f64 = 0.9;

/// Guard digits for a summation of up to `max_terms` terms.
pub fn guard_digits(max_terms: usize) -> u32 {
    15 + (max_terms.max(1) as f64).log10().ceil() as u32
}

/// How a [`SeriesSum`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Summed until the geometric tail bound fell below the target.
    Geometric,
    /// A factor vanished and the series stopped after finitely many terms.
    Terminating,
    /// Direct sum plus an asymptotic expansion of the algebraic tail.
    AsymptoticTail,
    /// Direct sum plus an integral estimate; limited to a few digits.
    PolynomialTail,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Geometric => "geometric",
            Method::Terminating => "terminating",
            Method::AsymptoticTail => "asymptotic-tail",
            Method::PolynomialTail => "polynomial-tail",
        }
    }
}

/// A series value with an error bound.
#[derive(Clone, Debug)]
pub struct SeriesSum {
    pub value: BigReal,
    pub error_bound: BigReal,
    pub terms_used: usize,
    /// Observed decimal digits gained per term near the end of the sum.
    pub rate: f64,
    pub method: Method,
}

#[derive(Debug)]
struct Tracker {
    factor: HarmonicFactor,
    value: BigReal,
}

impl Tracker {
    fn new(factor: HarmonicFactor, w: u32) -> Result<Self> {
        let value = match factor.arg {
            HarmonicArg::K => BigReal::zero(w),
            HarmonicArg::OnePlusTwoK => {
                BigReal::from_rational(&harmonic_increment(1, factor.ell, &factor.x)?, w)
            }
        };
        Ok(Tracker { factor, value })
    }

    /// From index `k` to `k + 1`.
    fn advance(&mut self, k: u64) -> Result<()> {
        let f = &self.factor;
        let inc = match f.arg {
            HarmonicArg::K => harmonic_increment(k + 1, f.ell, &f.x)?,
            HarmonicArg::OnePlusTwoK => {
                harmonic_increment(2 * k + 2, f.ell, &f.x)? + harmonic_increment(2 * k + 3, f.ell, &f.x)?
            }
        };
        self.value = &self.value + BigReal::from_rational(&inc, self.value.digits());
        Ok(())
    }
}

/// Produces `t_0, t_1, ...` with O(1) rational and real operations per term.
pub(crate) struct TermStream<'a> {
    k: u64,
    w: u32,
    prefactor: BigReal,
    num_step: Poly,
    den_step: Poly,
    terms: Vec<(&'a SummandTerm, Vec<usize>)>,
    trackers: Vec<Tracker>,
    terminated: bool,
}

impl<'a> TermStream<'a> {
    pub(crate) fn new(def: &'a SeriesDef, w: u32) -> Result<Self> {
        for f in &def.poch_den {
            if f.can_vanish() {
                return Err(Error::Pole(format!("denominator factor ({})_n vanishes", f.base)));
            }
        }
        let (num_step, den_step) = def.step_polys();
        let mut trackers: Vec<Tracker> = Vec::new();
        let mut terms = Vec::with_capacity(def.terms.len());
        for t in &def.terms {
            let mut idx = Vec::with_capacity(t.harmonic.len());
            for h in &t.harmonic {
                let i = match trackers.iter().position(|tr| &tr.factor == h) {
                    Some(i) => i,
                    None => {
                        trackers.push(Tracker::new(h.clone(), w)?);
                        trackers.len() - 1
                    }
                };
                idx.push(i);
            }
            terms.push((t, idx));
        }
        Ok(TermStream {
            k: 0,
            w,
            prefactor: BigReal::one(w),
            num_step,
            den_step,
            terms,
            trackers,
            terminated: false,
        })
    }

    /// Index of the next term to be produced.
    pub(crate) fn k(&self) -> u64 {
        self.k
    }

    pub(crate) fn prefactor(&self) -> &BigReal {
        &self.prefactor
    }

    /// True once every remaining term is zero.
    pub(crate) fn terminated(&self) -> bool {
        self.terminated
    }

    pub(crate) fn summand(&self) -> Result<BigReal> {
        let k = self.k;
        let mut s = BigReal::zero(self.w);
        for (t, idx) in &self.terms {
            let d = t.den.eval_at(k);
            if d.is_zero() {
                return Err(Error::Pole(format!("summand denominator vanishes at k = {k}")));
            }
            let r: Rational = t.num.eval_at(k) / d;
            if r.is_zero() {
                continue;
            }
            let mut v = BigReal::from_rational(&r, self.w);
            for &i in idx {
                v = &v * &self.trackers[i].value;
            }
            s = s + v;
        }
        Ok(s)
    }

    pub(crate) fn next_term(&mut self) -> Result<BigReal> {
        if self.terminated {
            self.k += 1;
            return Ok(BigReal::zero(self.w));
        }
        let t = &self.prefactor * &self.summand()?;
        let k = self.k;
        let den = self.den_step.eval_at(k);
        if den.is_zero() {
            return Err(Error::Pole(format!("Pochhammer denominator vanishes after k = {k}")));
        }
        let ratio = self.num_step.eval_at(k) / den;
        if ratio.is_zero() {
            self.terminated = true;
        } else {
            self.prefactor = self.prefactor.mul_rational(&ratio);
            for tr in &mut self.trackers {
                tr.advance(k)?;
            }
        }
        self.k += 1;
        Ok(t)
    }
}

/// Tracks `log10 |t_k|` of recent nonzero terms.
struct RatioWindow {
    logs: VecDeque<(u64, f64)>,
}

impl RatioWindow {
    fn new() -> Self {
        RatioWindow {
            logs: VecDeque::with_capacity(RATIO_WINDOW + 1),
        }
    }

    fn push(&mut self, k: u64, log: f64) {
        if log.is_finite() {
            self.logs.push_back((k, log));
            if self.logs.len() > RATIO_WINDOW + 1 {
                self.logs.pop_front();
            }
        }
    }

    fn full(&self) -> bool {
        self.logs.len() == RATIO_WINDOW + 1
    }

    /// `log10` of the largest per-step ratio in the window.
    fn max_log_ratio(&self) -> f64 {
        self.logs
            .iter()
            .zip(self.logs.iter().skip(1))
            .map(|(a, b)| (b.1 - a.1) / (b.0 - a.0) as f64)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// `log10` of the geometric-mean ratio across the window.
    fn mean_log_ratio(&self) -> f64 {
        let (a, b) = (self.logs.front().unwrap(), self.logs.back().unwrap());
        (b.1 - a.1) / (b.0 - a.0) as f64
    }

    /// `log10` of the envelope `max_j |t_j| r^(k-j)` at the newest index.
    fn envelope_log(&self, log_r: f64) -> f64 {
        let last = self.logs.back().unwrap().0;
        self.logs
            .iter()
            .map(|&(j, l)| l + log_r * (last - j) as f64)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Bound on accumulated rounding for `n` additions of terms no larger than
/// `10^max_log` at `w` digits.
pub(crate) fn rounding_allowance(n: usize, max_log: f64, w: u32) -> BigReal {
    let scale = if max_log.is_finite() { max_log.max(0.0) } else { 0.0 };
    BigReal::from_log10(scale - w as f64 + 2.0 + ((n + 1) as f64).log10(), w)
}

/// Sums a series whose term ratio tends to a limit of modulus below one.
///
/// Stops once `|t_k| < 10^-(digits + guard/2)` and the geometric tail bound
/// `2 |t_k| r/(1-r)` is below `10^-(digits+2)`, where `r` is the largest of
/// the last five observed term ratios.
pub fn sum_geometric(def: &SeriesDef, digits: u32, max_terms: usize) -> Result<SeriesSum> {
    let guard = guard_digits(max_terms);
    let w = digits + guard;
    let eps_log = -(digits as f64) - guard as f64 / 2.0;
    let tail_log_max = -(digits as f64) - 2.0;

    let mut stream = TermStream::new(def, w)?;
    let mut sum = BigReal::zero(w);
    let mut window = RatioWindow::new();
    let mut max_log = f64::NEG_INFINITY;

    for n in 0..max_terms {
        let k = stream.k();
        let t = stream.next_term()?;
        let lt = t.log10_abs();
        sum = sum + t;
        max_log = max_log.max(lt);
        if stream.terminated() {
            return Ok(SeriesSum {
                value: sum,
                error_bound: rounding_allowance(n + 1, max_log, w),
                terms_used: n + 1,
                rate: f64::INFINITY,
                method: Method::Terminating,
            });
        }
        window.push(k, lt);
        if !window.full() || !lt.is_finite() || lt >= eps_log {
            continue;
        }
        let log_r = window.max_log_ratio();
        let r = 10f64.powf(log_r);
        if r >= MAX_RATIO {
            continue;
        }
        let tail_log = window.envelope_log(log_r) + (r / (1.0 - r)).log10() + 2f64.log10();
        if tail_log < tail_log_max {
            let bound = BigReal::from_log10(tail_log, w) + rounding_allowance(n + 1, max_log, w);
            return Ok(SeriesSum {
                value: sum,
                error_bound: bound,
                terms_used: n + 1,
                rate: -window.mean_log_ratio(),
                method: Method::Geometric,
            });
        }
    }
    let r = if window.full() { 10f64.powf(window.max_log_ratio()) } else { 1.0 };
    if r >= MAX_RATIO {
        Err(Error::NonConvergence { ratio: r, terms: max_terms })
    } else {
        Err(Error::MaxTermsExceeded(max_terms))
    }
}

/// Digits gained per term: `-log10` of the geometric-mean term ratio over
/// `probe_terms/2 ..= probe_terms`.
pub fn estimate_rate(def: &SeriesDef, probe_terms: usize) -> Result<f64> {
    match def.ratio_limit() {
        RatioLimit::Geometric(_) => {}
        RatioLimit::Unit => return Err(Error::NonConvergence { ratio: 1.0, terms: probe_terms }),
        RatioLimit::Divergent(r) => {
            return Err(Error::NonConvergence {
                ratio: 10f64.powf(crate::numeric::rational::log10_abs(&r)),
                terms: probe_terms,
            })
        }
    }
    let probe = probe_terms.max(4) as u64;
    let lo = probe / 2;
    let mut stream = TermStream::new(def, 30)?;
    let mut first: Option<(u64, f64)> = None;
    let mut last: Option<(u64, f64)> = None;
    while stream.k() <= probe {
        let k = stream.k();
        let l = stream.next_term()?.log10_abs();
        if stream.terminated() {
            return Ok(f64::INFINITY);
        }
        if k >= lo && l.is_finite() {
            if first.is_none() {
                first = Some((k, l));
            }
            last = Some((k, l));
        }
    }
    let (Some((k0, l0)), Some((k1, l1))) = (first, last) else {
        return Err(Error::NonConvergence { ratio: 1.0, terms: probe_terms });
    };
    if k1 == k0 {
        return Err(Error::NonConvergence { ratio: 1.0, terms: probe_terms });
    }
    let rate = (l0 - l1) / (k1 - k0) as f64;
    let ratio = 10f64.powf(-rate);
    if ratio >= MAX_RATIO {
        return Err(Error::NonConvergence { ratio, terms: probe_terms });
    }
    Ok(rate)
}

/// `Σ_{k<n} t_k` at `digits` digits, with no tail correction.
pub fn partial_sum(def: &SeriesDef, n: usize, digits: u32) -> Result<BigReal> {
    let mut stream = TermStream::new(def, digits)?;
    let mut sum = BigReal::zero(digits);
    for _ in 0..n {
        sum = sum + stream.next_term()?;
        if stream.terminated() {
            break;
        }
    }
    Ok(sum)
}

/// Observed `|t_{k+1}/t_k|` at index `k`, in double precision.
pub fn observed_ratio(def: &SeriesDef, k: u64) -> Result<f64> {
    let mut stream = TermStream::new(def, 30)?;
    let mut prev = f64::NAN;
    while stream.k() <= k + 1 {
        let at = stream.k();
        let l = stream.next_term()?.log10_abs();
        if at == k + 1 {
            return Ok(10f64.powf(l - prev));
        }
        prev = l;
    }
    unreachable!()
}

/// `log10 |t_k|` for `k < n`; `-inf` marks a zero term.
pub fn term_profile(def: &SeriesDef, n: usize) -> Result<Vec<f64>> {
    let mut stream = TermStream::new(def, 30)?;
    (0..n).map(|_| Ok(stream.next_term()?.log10_abs())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, rat};
    use crate::numeric::ref_zeta;
    use crate::series::def::{HarmonicFactor, PochFactor};

    fn az() -> SeriesDef {
        SeriesDef::new(
            rat(-1, 1024),
            vec![PochFactor::k(int(1)).pow(5)],
            vec![PochFactor::k(rat(3, 2)).pow(5)],
            vec![SummandTerm::poly(Poly::from_ints(&[77, 250, 205]))],
        )
    }

    #[test]
    fn stream_matches_exact_terms() {
        let p = Poly::from_ints(&[77, 250, 205]);
        let mut s = az();
        s.terms = vec![
            SummandTerm::poly(p.clone()).with(HarmonicFactor::h_odd(1)),
            SummandTerm::poly(-&p).with(HarmonicFactor::h_k(1)),
            SummandTerm::poly(Poly::from_ints(&[-25, -41])),
        ];
        let mut st = TermStream::new(&s, 60).unwrap();
        for k in 0..12 {
            let t = st.next_term().unwrap();
            let exact = BigReal::from_rational(&s.exact_term(k).unwrap(), 60);
            assert!((t - &exact).abs() <= exact.abs() * BigReal::pow10(-55, 60));
        }
        assert_eq!(s.exact_term(0).unwrap(), int(52));
    }

    #[test]
    fn az_sum_and_term_count() {
        let r = sum_geometric(&az(), 100, 100_000).unwrap();
        let target = ref_zeta(3, 110).mul_i64(64);
        assert!((r.value.clone() - target).abs() < BigReal::pow10(-98, 110));
        assert!(r.terms_used <= 45, "{}", r.terms_used);
        assert!(r.error_bound < BigReal::pow10(-100, 110));
    }

    #[test]
    fn rates() {
        let rate = estimate_rate(&az(), 1000).unwrap();
        assert!((rate - 1024f64.log10()).abs() < 0.01, "{rate}");
    }

    #[test]
    fn terminating_series_is_exact() {
        // (-3)_k (-1)^k / k! = C(3, k)
        let s = SeriesDef::new(
            int(-1),
            vec![PochFactor::k(int(-3))],
            vec![PochFactor::k(int(1))],
            vec![SummandTerm::poly(Poly::one())],
        );
        let r = sum_geometric(&s, 30, 1000).unwrap();
        assert_eq!(r.method, Method::Terminating);
        assert!((r.value - BigReal::from_i64(8, 30)).abs() < BigReal::pow10(-28, 30));
    }

    #[test]
    fn slow_series_is_rejected() {
        let s = SeriesDef::new(int(1), vec![], vec![], vec![SummandTerm::rational(Poly::one(), Poly::from_ints(&[1, 2, 1]))]);
        assert!(matches!(sum_geometric(&s, 20, 2000), Err(Error::NonConvergence { .. })));
    }
}
