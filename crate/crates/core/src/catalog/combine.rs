//! Exact reconstruction of one identity as a rational combination of others.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::CatalogEntry;
use crate::numeric::Rational;
use crate::series::{HarmonicArg, HarmonicFactor, IdentityDef, SeriesDef};

/// Coefficients `c_i` with `target = Σ c_i · part_i`, summand by summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    pub coefficients: Vec<Rational>,
    /// The closed forms combine with the same coefficients.
    pub target_consistent: bool,
}

type Signature = Vec<(u32, HarmonicArg, Rational)>;

fn signature(h: &[HarmonicFactor]) -> Signature {
    let mut s: Signature = h
        .iter()
        .map(|f| (f.ell, f.arg, f.x.clone()))
        .collect();
    s.sort();
    s
}

/// Rational-function coefficient of each harmonic product, evaluated at `k`.
fn components(def: &SeriesDef, k: u64) -> Option<BTreeMap<Signature, Rational>> {
    let mut out: BTreeMap<Signature, Rational> = BTreeMap::new();
    let kr = Rational::from_integer(k.into());
    for t in &def.terms {
        let d = t.den.eval(&kr);
        if d.is_zero() {
            return None;
        }
        *out.entry(signature(&t.harmonic)).or_insert_with(Rational::zero) += t.num.eval(&kr) / d;
    }
    Some(out)
}

fn same_prefactor(a: &SeriesDef, b: &SeriesDef) -> bool {
    let norm = |s: &SeriesDef| {
        let mut n: Vec<_> = s.poch_num.iter().map(|f| (f.base.clone(), f.index, f.power)).collect();
        let mut d: Vec<_> = s.poch_den.iter().map(|f| (f.base.clone(), f.index, f.power)).collect();
        n.sort();
        d.sort();
        (s.z.clone(), n, d)
    };
    norm(a) == norm(b)
}

/// Degree bound for clearing all denominators of one equation.
fn degree_budget(defs: &[&SeriesDef]) -> usize {
    defs.iter()
        .flat_map(|d| d.terms.iter())
        .map(|t| t.num.degree().unwrap_or(0) + t.den.degree().unwrap_or(0))
        .sum::<usize>()
        + 1
}

/// Reduced row echelon solve of `rows · c = rhs`; `None` if inconsistent or
/// underdetermined.
fn solve(mut rows: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let r = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, r);
        let inv = Rational::one() / rows[pivot_row][col].clone();
        for v in rows[pivot_row].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let sub = f.clone() * rows[pivot_row][c].clone();
                    rows[r][c] -= sub;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| rows[r][n].clone()).collect())
}

fn target_map(def: &IdentityDef) -> BTreeMap<&'static str, Rational> {
    let mut m = BTreeMap::new();
    for t in &def.target {
        *m.entry(t.constant.name()).or_insert_with(Rational::zero) += t.coeff.clone();
    }
    m.retain(|_, v| !v.is_zero());
    m
}

/// Expresses the summand of `target` as an exact rational combination of the
/// summands of `parts`. All series must share the ratio and Pochhammer block.
///
/// Equality is checked at enough sample points to cover the cleared
/// denominators, so a returned combination holds identically in `k`.
pub fn reconstruct_combination(target: &CatalogEntry, parts: &[&CatalogEntry]) -> Option<Combination> {
    let ts = &target.def.series;
    if parts.is_empty() || parts.iter().any(|p| !same_prefactor(ts, &p.def.series)) {
        return None;
    }
    let mut defs: Vec<&SeriesDef> = parts.iter().map(|p| &p.def.series).collect();
    defs.push(ts);
    let samples = degree_budget(&defs) as u64 + 2;
    let n = parts.len();
    let mut rows = Vec::new();
    let mut k = 0u64;
    let mut taken = 0;
    while taken < samples {
        let comps: Option<Vec<_>> = defs.iter().map(|d| components(d, k)).collect();
        k += 1;
        let Some(comps) = comps else { continue };
        taken += 1;
        let mut sigs: Vec<&Signature> = comps.iter().flat_map(|c| c.keys()).collect();
        sigs.sort();
        sigs.dedup();
        for sig in sigs {
            let row: Vec<Rational> = comps
                .iter()
                .map(|c| c.get(sig).cloned().unwrap_or_else(Rational::zero))
                .collect();
            if !row.iter().all(Zero::is_zero) {
                rows.push(row);
            }
        }
    }
    let coefficients = solve(rows, n)?;

    let mut combined: BTreeMap<&'static str, Rational> = BTreeMap::new();
    for (c, p) in coefficients.iter().zip(parts) {
        for t in &p.def.target {
            *combined.entry(t.constant.name()).or_insert_with(Rational::zero) += c.clone() * t.coeff.clone();
        }
    }
    combined.retain(|_, v| !v.is_zero());
    Some(Combination {
        target_consistent: combined == target_map(&target.def),
        coefficients,
    })
}
