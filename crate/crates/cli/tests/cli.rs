use std::process::Command;

use zetaforge::numeric::{rat, ref_zeta, BigReal};
use zetaforge_cli::run_args;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_zetaforge"));
    c.env_remove("ZETAFORGE_DIGITS");
    c
}

fn json_rows(out: &str) -> Vec<serde_json::Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn unknown_id_exits_with_usage_code() {
    let out = bin().args(["eval", "--id", "no-such-series"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no-such-series"));
}

#[test]
fn low_precision_is_rejected() {
    let (code, msg) = run_args(["zetaforge", "verify", "--all", "--digits", "9"]);
    assert_eq!(code, 2, "{msg}");
}

#[test]
fn verify_all_at_100_digits() {
    let (code, out) = run_args(["zetaforge", "verify", "--all", "--digits", "100", "--json"]);
    let rows = json_rows(&out);
    assert!(rows.len() >= 19);
    assert!(rows.iter().all(|r| r["status"] == "pass"), "{out}");
    assert_eq!(code, 0);
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn eval_reproduces_zeta5_at_200_digits() {
    let (code, out) = run_args(["zetaforge", "eval", "--id", "sun-zeta5-d", "--digits", "200", "--json"]);
    assert_eq!(code, 0);
    let row = &json_rows(&out)[0];
    let value = BigReal::parse_decimal(row["value"].as_str().unwrap(), 210).unwrap();
    let zeta5 = value.div_rational(&rat(31, 2));
    let diff = (&zeta5 - &ref_zeta(5, 200)).abs();
    assert!(diff.log10_abs() < -190.0, "1e{:.1}", diff.log10_abs());
}

#[test]
fn json_output_is_stable_across_runs() {
    let args = ["transform", "--family", "aa", "--samples", "3", "--seed", "7", "--json"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    for r in json_rows(&String::from_utf8(a.stdout).unwrap()) {
        assert_eq!(r["seed"], 7);
        for key in ["id", "status", "value", "target", "residual", "error_bound", "terms_used", "rate", "digits"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn digits_come_from_the_environment() {
    let out = bin()
        .env("ZETAFORGE_DIGITS", "30")
        .args(["eval", "--id", "az-zeta3", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows = json_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows[0]["digits"], 30);
}

#[test]
fn exit_code_tracks_statuses() {
    for args in [
        vec!["zetaforge", "rate", "--all", "--json"],
        vec!["zetaforge", "lemmas", "--json"],
        vec!["zetaforge", "transform", "--family", "f98", "--samples", "5", "--json"],
        vec!["zetaforge", "derive", "--case", "wei-tha", "--samples", "1", "--json"],
    ] {
        let (code, out) = run_args(args.clone());
        let all_pass = json_rows(&out).iter().all(|r| r["status"] == "pass");
        assert_eq!(code == 0, all_pass, "{args:?}");
        assert_eq!(code, 0, "{args:?}: {out}");
    }
}

#[test]
fn malformed_catalog_reports_its_location() {
    let dir = std::env::temp_dir().join(format!("zetaforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "[\n  {\"id\": \"x\", \"zz\": 1}\n]\n").unwrap();
    let out = bin().args(["list", "--catalog", path.to_str().unwrap()]).output().unwrap();
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::remove_dir_all(&dir).ok();
}
