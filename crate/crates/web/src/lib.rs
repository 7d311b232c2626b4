//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every function returns JSON text so the page needs no generated types.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zetaforge::catalog::{verify_identity, Catalog};
use zetaforge::numeric::{format_rational, rat};
use zetaforge::series::{term_profile as profile, EvalReport, TargetDisplay};
use zetaforge::transform::{check_specialization, SpecializationCase};

const MAX_TERMS: usize = 100_000;
const MAX_DIGITS: u32 = 500;
const SIG: usize = 40;

fn digits_in_range(digits: u32) -> Result<u32, String> {
    if (10..=MAX_DIGITS).contains(&digits) {
        Ok(digits)
    } else {
        Err(format!("digits must lie in 10..={MAX_DIGITS}"))
    }
}

fn report_json(r: &EvalReport) -> Value {
    let sig = SIG.min(r.digits as usize);
    json!({
        "id": r.id,
        "value": r.value.to_sig_string(sig),
        "target": r.target_value.to_sig_string(sig),
        "residual": r.residual.to_sci_string(3),
        "error_bound": r.error_bound.to_sci_string(3),
        "terms_used": r.terms_used,
        "digits": r.digits,
    })
}

/// Catalog ids with their closed forms, and the specialization cases with
/// their parameter intervals.
#[wasm_bindgen]
pub fn list() -> String {
    let catalog = Catalog::builtin();
    let ids: Vec<Value> = catalog
        .entries()
        .iter()
        .map(|e| json!({ "id": e.def.id, "target": TargetDisplay(&e.def.target).to_string() }))
        .collect();
    let cases: Vec<Value> = SpecializationCase::ALL
        .iter()
        .map(|c| {
            let (lo, hi) = c.interval();
            json!({
                "id": c.id(),
                "param": c.param().name(),
                "lo": format_rational(&lo),
                "hi": format_rational(&hi),
            })
        })
        .collect();
    json!({ "identities": ids, "cases": cases }).to_string()
}

/// Sums catalog entry `id` to `digits` and compares it with its closed form.
#[wasm_bindgen]
pub fn evaluate_identity(id: &str, digits: u32) -> Result<String, String> {
    let digits = digits_in_range(digits)?;
    let v = verify_identity(&Catalog::builtin(), id, digits, MAX_TERMS).map_err(|e| e.to_string())?;
    let mut out = report_json(&v.report);
    out["passed"] = json!(v.passed);
    out["requested_digits"] = json!(v.requested_digits);
    Ok(out.to_string())
}

/// Both sides of a specialization at `t = permille / 1000`.
#[wasm_bindgen]
pub fn specialization_sides(case: &str, permille: i32, digits: u32) -> Result<String, String> {
    let digits = digits_in_range(digits)?;
    let case: SpecializationCase = case.parse().map_err(|e: zetaforge::Error| e.to_string())?;
    let t = rat(permille as i64, 1000);
    let r = check_specialization(case, &t, digits).map_err(|e| e.to_string())?;
    let mut out = report_json(&r);
    out["t"] = json!(format_rational(&t));
    out["passed"] = json!(r.passes(digits as i64 - 5));
    Ok(out.to_string())
}

/// `log10 |t_k|` for the first `n` terms of catalog entry `id`.
#[wasm_bindgen]
pub fn term_profile(id: &str, n: usize) -> Result<Vec<f64>, String> {
    let catalog = Catalog::builtin();
    let e = catalog.get(id).map_err(|e| e.to_string())?;
    profile(&e.def.series, n.min(2000)).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_names_every_entry_and_case() {
        let v: Value = serde_json::from_str(&list()).unwrap();
        assert_eq!(v["identities"].as_array().unwrap().len(), Catalog::builtin().entries().len());
        assert_eq!(v["cases"].as_array().unwrap().len(), SpecializationCase::ALL.len());
    }

    #[test]
    fn evaluates_an_identity() {
        let v: Value = serde_json::from_str(&evaluate_identity("az-zeta3", 60).unwrap()).unwrap();
        assert_eq!(v["passed"], true);
        assert!(v["value"].as_str().unwrap().starts_with("76.93164180221403426558"));
        assert!(evaluate_identity("nope", 60).is_err());
        assert!(evaluate_identity("az-zeta3", 5).is_err());
    }

    #[test]
    fn specialization_sides_agree() {
        let v: Value = serde_json::from_str(&specialization_sides("aa", 900, 30).unwrap()).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["t"], "9/10");
        assert!(specialization_sides("aa", 5000, 30).is_err());
    }

    #[test]
    fn profile_decreases_for_geometric_series() {
        let p = term_profile("sun-zeta4-a", 20).unwrap();
        assert_eq!(p.len(), 20);
        assert!(p[19] < p[0] - 50.0);
    }
}
