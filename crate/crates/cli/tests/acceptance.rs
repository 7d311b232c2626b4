//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails if
//! any criterion fails.

use std::time::Instant;

use zetaforge::catalog::{reconstruct_combination, verify_identity, Catalog};
use zetaforge::numeric::{gen_harmonic, int, pochhammer, rat, BigReal, Rational};
use zetaforge::series::{sum_identity, Convergence};
use zetaforge::transform::{
    check_derivative, check_lemma_bounds, check_pochhammer_derivative, check_specialization, check_transform,
    f98_sweep, family_points, Family, Lcg, Lemma, SpecializationCase,
};
use zetaforge_cli::measure_rate;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MAX_TERMS: usize = 100_000;

fn verify_ids(ids: &[&str], digits: u32, below: f64) -> Outcome {
    let c = Catalog::builtin();
    let mut worst = f64::NEG_INFINITY;
    for id in ids {
        let v = verify_identity(&c, id, digits, MAX_TERMS).map_err(|e| format!("{id}: {e}"))?;
        let r = v.report.log10_residual();
        if !v.passed || r >= below {
            return Err(format!("{id}: residual 1e{r:.1}"));
        }
        worst = worst.max(r);
    }
    Ok(format!("{} ids, worst residual 1e{worst:.1}", ids.len()))
}

fn fast_series() -> Outcome {
    let ids = [
        "sun-zeta4-a", "sun-zeta5-b", "sun-zeta4-c", "sun-zeta5-d",
        "wei-zeta4-e", "wei-zeta4-f", "wei-zeta5-g", "wei-zeta5-h",
    ];
    let start = Instant::now();
    let msg = verify_ids(&ids, 100, -95.0)?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 10.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("{msg}, {secs:.2}s"))
}

fn classical_series() -> Outcome {
    verify_ids(&["az-zeta3", "guillera-zeta3", "cz-zeta3", "borwein-bradley-zeta5"], 100, -95.0)
}

fn intermediates() -> Outcome {
    let ids: Vec<String> = ["cc", "ff", "jj", "mm", "thb", "thf", "thp"]
        .iter()
        .map(|s| format!("intermediate-wei-{s}"))
        .collect();
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    verify_ids(&refs, 60, -55.0)
}

fn combination() -> Outcome {
    let msg = verify_ids(&["combined-616"], 100, -95.0)?;
    let c = Catalog::builtin();
    let get = |id| c.get(id).map_err(|e| e.to_string());
    let comb = reconstruct_combination(get("combined-616")?, &[get("wei-zeta5-h")?, get("wei-zeta5-g")?])
        .ok_or("no combination found")?;
    if comb.coefficients != [int(34), int(-9)] || !comb.target_consistent {
        return Err(format!("coefficients {:?}", comb.coefficients));
    }
    Ok(format!("{msg}, 34 h - 9 g"))
}

fn rates() -> Outcome {
    let c = Catalog::builtin();
    let mut n = 0;
    for e in c.entries() {
        if e.def.series.convergence != Convergence::Geometric {
            continue;
        }
        let (measured, expected) = measure_rate(e).map_err(|err| format!("{}: {err}", e.def.id))?;
        if (measured - expected).abs() > 0.01 {
            return Err(format!("{}: {measured:.4} vs {expected:.4}", e.def.id));
        }
        n += 1;
    }
    let az = sum_identity(&c.get("az-zeta3").unwrap().def, 100, MAX_TERMS).map_err(|e| e.to_string())?;
    if az.terms_used > 45 {
        return Err(format!("az-zeta3 used {} terms", az.terms_used));
    }
    Ok(format!("{n} geometric series within 0.01, az-zeta3 in {} terms", az.terms_used))
}

fn f98_exact() -> Outcome {
    let sweep = f98_sweep(0, 50).map_err(|e| e.to_string())?;
    if sweep.checked.len() != 50 || !sweep.all_zero() {
        return Err(format!("{} draws checked", sweep.checked.len()));
    }
    Ok(format!("50 draws exactly zero, {} degenerate draws skipped", sweep.skipped))
}

fn families() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for family in [Family::AA, Family::BB, Family::TH] {
        for p in family_points(family, 0, 10).map_err(|e| e.to_string())? {
            let r = check_transform(family, &p, 40).map_err(|e| e.to_string())?;
            if !r.passes(35) {
                return Err(format!("{}: 1e{:.1}", r.id, r.log10_residual()));
            }
            worst = worst.max(r.log10_residual());
        }
    }
    Ok(format!("30 points, worst residual 1e{worst:.1}"))
}

fn derivatives() -> Outcome {
    let mut count = 0;
    for case in SpecializationCase::ALL {
        for t in case.interior_points(3) {
            let side = check_specialization(case, &t, 60).map_err(|e| e.to_string())?;
            if !side.passes(55) {
                return Err(format!("{}: 1e{:.1}", side.id, side.log10_residual()));
            }
            let d = check_derivative(case, &t, 60).map_err(|e| e.to_string())?;
            if !d.passed || d.log10_residual() >= -30.0 {
                return Err(format!("{}: 1e{:.1}", d.label, d.log10_residual()));
            }
            count += 1;
        }
    }
    for x in [rat(1, 2), int(1), rat(3, 2)] {
        for n in 0..=20 {
            let d = check_pochhammer_derivative(&x, n, 60).map_err(|e| e.to_string())?;
            if !d.passed {
                return Err(d.label);
            }
        }
    }
    Ok(format!("{count} stencils, Pochhammer rule n <= 20"))
}

fn lemmas() -> Outcome {
    for lemma in Lemma::ALL {
        let r = check_lemma_bounds(lemma, 5).map_err(|e| e.to_string())?;
        if !r.passed || r.points.len() != 5 {
            return Err(format!("lemma {}", lemma.number()));
        }
    }
    Ok("4 bounds at 5 points".into())
}

fn goldbach() -> Outcome {
    let c = Catalog::builtin();
    let v = verify_identity(&c, "goldbach", 8, MAX_TERMS).map_err(|e| e.to_string())?;
    let rel = v.report.log10_residual() - v.report.target_value.log10_abs();
    if !v.passed || rel >= -8.0 || v.report.terms_used > MAX_TERMS {
        return Err(format!("relative 1e{rel:.1} in {} terms", v.report.terms_used));
    }
    Ok(format!("relative 1e{rel:.1} in {} terms", v.report.terms_used))
}

fn scaled(id: &str, digits: u32) -> Result<BigReal, String> {
    let c = Catalog::builtin();
    let e = c.get(id).map_err(|e| e.to_string())?;
    let r = sum_identity(&e.def, digits, MAX_TERMS).map_err(|e| e.to_string())?;
    Ok(r.value.div_rational(&e.def.target[0].coeff))
}

fn properties() -> Outcome {
    let mut rng = Lcg::new(11);
    for _ in 0..64 {
        let x = rng.rational(&int(-8), &int(8));
        let m = rng.next_u64() % 12;
        let n = rng.next_u64() % 12;
        let split = pochhammer(&x, m) * pochhammer(&(&x + int(m as i64)), n);
        if split != pochhammer(&x, m + n) {
            return Err(format!("Pochhammer split at x = {x}"));
        }
        let ell = 1 + (rng.next_u64() % 3) as u32;
        let y = rng.rational(&int(0), &int(8));
        let prev = gen_harmonic(n, ell, &y).map_err(|e| e.to_string())?;
        let next = gen_harmonic(n + 1, ell, &y).map_err(|e| e.to_string())?;
        let step: Rational = int(1) / (&y + int(n as i64 + 1)).pow(ell as i32);
        if next - prev != step {
            return Err(format!("harmonic recurrence at x = {y}"));
        }
    }
    let c = Catalog::builtin();
    for e in c.entries() {
        if e.def.series.convergence != Convergence::Geometric {
            continue;
        }
        let lo = sum_identity(&e.def, 40, MAX_TERMS).map_err(|err| err.to_string())?;
        let hi = sum_identity(&e.def, 70, MAX_TERMS).map_err(|err| err.to_string())?;
        let diff = (&lo.value - &hi.value).abs();
        if diff > &lo.error_bound + &hi.error_bound {
            return Err(format!("{}: bound not honest", e.def.id));
        }
    }
    for group in [
        &["sun-zeta4-a", "sun-zeta4-c", "wei-zeta4-e", "wei-zeta4-f"][..],
        &["sun-zeta5-b", "sun-zeta5-d", "wei-zeta5-g", "wei-zeta5-h", "borwein-bradley-zeta5"][..],
    ] {
        let first = scaled(group[0], 300)?;
        for id in &group[1..] {
            let d = (&first - &scaled(id, 300)?).abs();
            if d.log10_abs() > -298.0 {
                return Err(format!("{} vs {id}: 1e{:.1}", group[0], d.log10_abs()));
            }
        }
    }
    Ok("Pochhammer split, harmonic recurrence, honest bounds, 300-digit agreement".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("fast zeta(4) and zeta(5) series at 100 digits", fast_series),
        ("classical series at 100 digits", classical_series),
        ("intermediate sums at 60 digits", intermediates),
        ("combined series and its reconstruction", combination),
        ("convergence rates", rates),
        ("terminating transformation is exact", f98_exact),
        ("three-parameter families at seeded points", families),
        ("specializations and their derivatives", derivatives),
        ("lemma bounds", lemmas),
        ("slow zeta(4) series to 8 digits", goldbach),
        ("property suite", properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {n:>2} {name}: {detail}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
