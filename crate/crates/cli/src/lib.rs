//! Command-line front end: argument parsing, check dispatch, and table or
//! JSON-lines output.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 for
//! usage errors and unknown identifiers (reported before any computation),
//! 3 when a summation raises a numeric error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use zetaforge::catalog::{verify_entry, Catalog, CatalogEntry};
use zetaforge::numeric::{format_rational, int, BigReal, Rational};
use zetaforge::series::engine::observed_ratio;
use zetaforge::series::{estimate_rate, RatioLimit};
use zetaforge::transform::{
    check_derivative, check_derivative_link, check_lemma_bounds, check_pochhammer_derivative,
    check_specialization, check_transform, f98_sweep, family_points, params_label, DerivativeReport, Family,
    Lemma, SpecializationCase,
};
use zetaforge::Error;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

/// Probe length for measured convergence rates.
pub const RATE_PROBE: usize = 200;
/// Allowed gap between measured and limiting digits per term.
pub const RATE_TOLERANCE: f64 = 0.01;
/// Index at which the ratio of a sublinear series is sampled.
pub const UNIT_RATIO_INDEX: u64 = 1000;

#[derive(Debug, Parser)]
#[command(name = "zetaforge", version, about = "Evaluate and verify fast series for zeta(3), zeta(4) and zeta(5)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Working precision in decimal digits.
    #[arg(long, default_value_t = 50, env = "ZETAFORGE_DIGITS", value_parser = clap::value_parser!(u32).range(10..))]
    pub digits: u32,
    /// Term cap for any single summation.
    #[arg(long, default_value_t = 100_000)]
    pub max_terms: usize,
    /// Seed for pseudo-random parameter draws.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON catalog to use instead of the built-in one.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// Emit one JSON object per check.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Select {
    /// Identity to process; repeatable.
    #[arg(long)]
    pub id: Vec<String>,
    /// Process every catalog entry.
    #[arg(long, conflicts_with = "id")]
    pub all: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries.
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Sum identities and print their values.
    Eval(Select),
    /// Sum identities and compare with their closed forms.
    Verify(Select),
    /// Measure digits gained per term.
    Rate(Select),
    /// Check the transformations at seeded parameter points, or a
    /// specialization at interior points.
    Transform {
        /// `aa`, `bb`, `th` or `f98`.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// Specialization case such as `wei-aa` or `aa`.
        #[arg(long, conflicts_with = "family")]
        case: Option<String>,
        /// Number of points; defaults to 10 per family, 50 for F98 and 5
        /// per specialization.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare stencil derivatives of both sides of specializations.
    Derive {
        /// Specialization case such as `wei-aa` or `aa`.
        #[arg(long)]
        case: Option<String>,
        /// Every case plus the Pochhammer derivative rule; the default when
        /// `--case` is absent.
        #[arg(long, conflicts_with = "case")]
        all: bool,
        /// Interior points per case.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check the dominating bounds used for uniform convergence.
    Lemmas {
        /// `lemma-1` .. `lemma-4`; all four when omitted.
        #[arg(long)]
        id: Vec<String>,
        /// Points per interval.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One emitted check.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub id: String,
    pub status: Status,
    pub value: Option<String>,
    pub target: Option<String>,
    pub residual: Option<String>,
    pub error_bound: Option<String>,
    pub terms_used: Option<usize>,
    pub rate: Option<f64>,
    pub digits: u32,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Row {
    fn new(id: impl Into<String>, status: Status, common: &Common) -> Self {
        Row {
            id: id.into(),
            status,
            value: None,
            target: None,
            residual: None,
            error_bound: None,
            terms_used: None,
            rate: None,
            digits: common.digits,
            seed: common.seed,
            message: None,
        }
    }

    fn error(id: impl Into<String>, err: &Error, common: &Common) -> Self {
        let mut r = Row::new(id, Status::Error, common);
        r.message = Some(err.to_string());
        r
    }

    fn from_derivative(d: &DerivativeReport, common: &Common) -> Self {
        let mut r = Row::new(d.label.clone(), Status::from_bool(d.passed), common);
        r.value = Some(d.left.to_sig_string(sig(common.digits)));
        r.target = Some(d.right.to_sig_string(sig(common.digits)));
        r.residual = Some(sci(&d.residual));
        r.error_bound = Some(sci(&d.tolerance));
        r
    }
}

/// Significant digits shown for values.
fn sig(digits: u32) -> usize {
    digits as usize
}

fn sci(x: &BigReal) -> String {
    x.to_sci_string(3)
}

/// Reports a usage problem and yields the usage exit code.
#[derive(Debug)]
struct Usage(String);

fn load_catalog(common: &Common) -> Result<Catalog, Usage> {
    match &common.catalog {
        None => Ok(Catalog::builtin()),
        Some(path) => {
            let bytes = std::fs::read(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
            Catalog::from_json(&bytes).map_err(|e| Usage(format!("{}: {e}", path.display())))
        }
    }
}

fn select<'a>(catalog: &'a Catalog, sel: &Select) -> Result<Vec<&'a CatalogEntry>, Usage> {
    if sel.all {
        return Ok(catalog.entries().iter().collect());
    }
    if sel.id.is_empty() {
        return Err(Usage("pass --id ID or --all".into()));
    }
    let mut out = Vec::new();
    for id in &sel.id {
        out.push(catalog.get(id).map_err(|e| Usage(e.to_string()))?);
    }
    out.sort_by(|a, b| a.def.id.cmp(&b.def.id));
    out.dedup_by(|a, b| a.def.id == b.def.id);
    Ok(out)
}

fn parse_case(s: &str) -> Result<SpecializationCase, Usage> {
    s.parse().map_err(|e: Error| Usage(e.to_string()))
}

fn verify_rows(entries: &[&CatalogEntry], common: &Common, full_value: bool) -> Vec<Row> {
    entries
        .iter()
        .map(|e| match verify_entry(e, common.digits, common.max_terms) {
            Ok(v) => {
                let rep = &v.report;
                let shown = if full_value { sig(v.digits) } else { 24.min(sig(v.digits)) };
                let mut r = Row::new(e.def.id.clone(), Status::from_bool(v.passed), common);
                r.value = Some(rep.value.to_sig_string(shown));
                r.target = Some(rep.target_value.to_sig_string(shown));
                r.residual = Some(sci(&rep.residual));
                r.error_bound = Some(sci(&(&rep.error_bound + &rep.target_error)));
                r.terms_used = Some(rep.terms_used);
                r.rate = Some(round4(rep.rate_digits_per_term));
                r.digits = v.digits;
                if v.capped() {
                    r.message = Some(format!("precision capped at {} digits", v.digits));
                }
                r
            }
            Err(err) => Row::error(e.def.id.clone(), &err, common),
        })
        .collect()
}

fn round4(x: f64) -> f64 {
    if x.is_finite() {
        (x * 1e4).round() / 1e4
    } else {
        x
    }
}

/// Measured and limiting digits per term.
pub fn measure_rate(entry: &CatalogEntry) -> Result<(f64, f64), Error> {
    let s = &entry.def.series;
    match s.ratio_limit() {
        RatioLimit::Geometric(z) => {
            let expected = -zetaforge::numeric::rational::log10_abs(&z);
            Ok((estimate_rate(s, RATE_PROBE)?, expected))
        }
        RatioLimit::Unit => Ok((-observed_ratio(s, UNIT_RATIO_INDEX)?.log10(), 0.0)),
        RatioLimit::Divergent(r) => Err(Error::NonConvergence {
            ratio: zetaforge::numeric::rational::log10_abs(&r),
            terms: 0,
        }),
    }
}

fn rate_rows(entries: &[&CatalogEntry], common: &Common) -> Vec<Row> {
    entries
        .iter()
        .map(|e| match measure_rate(e) {
            Ok((measured, expected)) => {
                let ok = (measured - expected).abs() <= RATE_TOLERANCE;
                let mut r = Row::new(e.def.id.clone(), Status::from_bool(ok), common);
                r.value = Some(format!("{measured:.4}"));
                r.target = Some(format!("{expected:.4}"));
                r.residual = Some(format!("{:.2e}", (measured - expected).abs()));
                r.error_bound = Some(format!("{RATE_TOLERANCE:.2e}"));
                r.rate = Some(round4(measured));
                r.terms_used = Some(RATE_PROBE);
                r
            }
            Err(err) => Row::error(e.def.id.clone(), &err, common),
        })
        .collect()
}

fn family_rows(family: Family, samples: usize, common: &Common) -> Vec<Row> {
    if family == Family::F98 {
        return match f98_sweep(common.seed, samples) {
            Ok(sweep) => sweep
                .checked
                .iter()
                .enumerate()
                .map(|(i, (p, res))| {
                    let mut r = Row::new(format!("F98#{i:02}({})", p.label()), Status::from_bool(*res == int(0)), common);
                    r.value = Some("exact".into());
                    r.target = Some("exact".into());
                    r.residual = Some(format_rational(res));
                    r.error_bound = Some("0".into());
                    r.terms_used = Some(p.n as usize + 1);
                    r
                })
                .collect(),
            Err(err) => vec![Row::error("F98", &err, common)],
        };
    }
    let points = match family_points(family, common.seed, samples) {
        Ok(p) => p,
        Err(err) => return vec![Row::error(family.name(), &err, common)],
    };
    points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let id = format!("{family}#{i:02}({})", params_label(p));
            match check_transform(family, p, common.digits) {
                Ok(rep) => {
                    let mut r = Row::new(id, Status::from_bool(rep.passes(common.digits as i64 - 5)), common);
                    r.value = Some(rep.value.to_sig_string(24));
                    r.target = Some(rep.target_value.to_sig_string(24));
                    r.residual = Some(sci(&rep.residual));
                    r.error_bound = Some(sci(&(&rep.error_bound + &rep.target_error)));
                    r.terms_used = Some(rep.terms_used);
                    r.rate = Some(round4(rep.rate_digits_per_term));
                    r
                }
                Err(err) => Row::error(id, &err, common),
            }
        })
        .collect()
}

fn specialization_rows(case: SpecializationCase, samples: usize, common: &Common) -> Vec<Row> {
    case.interior_points(samples)
        .iter()
        .map(|t| {
            let id = format!("{}({}={})", case.id(), case.param().name(), format_rational(t));
            match check_specialization(case, t, common.digits) {
                Ok(rep) => {
                    let mut r = Row::new(id, Status::from_bool(rep.passes(common.digits as i64 - 5)), common);
                    r.value = Some(rep.value.to_sig_string(24));
                    r.target = Some(rep.target_value.to_sig_string(24));
                    r.residual = Some(sci(&rep.residual));
                    r.error_bound = Some(sci(&(&rep.error_bound + &rep.target_error)));
                    r.terms_used = Some(rep.terms_used);
                    r
                }
                Err(err) => Row::error(id, &err, common),
            }
        })
        .collect()
}

fn derive_rows(cases: &[SpecializationCase], samples: usize, with_rule: bool, common: &Common) -> Vec<Row> {
    let mut rows = Vec::new();
    for &case in cases {
        for t in case.interior_points(samples) {
            rows.push(match check_derivative(case, &t, common.digits) {
                Ok(d) => Row::from_derivative(&d, common),
                Err(err) => Row::error(format!("D {}({}={})", case.id(), case.param().name(), t), &err, common),
            });
        }
        rows.push(match check_derivative_link(case, common.digits) {
            Ok(d) => Row::from_derivative(&d, common),
            Err(err) => Row::error(format!("{}: link", case.id()), &err, common),
        });
    }
    if with_rule {
        for x in [Rational::new(1.into(), 2.into()), int(1), Rational::new(3.into(), 2.into())] {
            let mut worst: Option<DerivativeReport> = None;
            let mut ok = true;
            let mut failure = None;
            for n in 0..=20u64 {
                match check_pochhammer_derivative(&x, n, common.digits) {
                    Ok(d) => {
                        ok &= d.passed;
                        let rel = d.residual.log10_abs() - d.tolerance.log10_abs();
                        if worst
                            .as_ref()
                            .is_none_or(|w| rel > w.residual.log10_abs() - w.tolerance.log10_abs())
                        {
                            worst = Some(d);
                        }
                    }
                    Err(e) => failure = Some(e),
                }
            }
            let id = format!("D (x)_n, n<=20, x={}", format_rational(&x));
            rows.push(match (failure, worst) {
                (Some(e), _) => Row::error(id, &e, common),
                (None, Some(w)) => {
                    let mut r = Row::from_derivative(&w, common);
                    r.id = id;
                    r.status = Status::from_bool(ok);
                    r
                }
                (None, None) => unreachable!("at least one order is checked"),
            });
        }
    }
    rows
}

fn lemma_rows(lemmas: &[Lemma], samples: usize, common: &Common) -> Vec<Row> {
    lemmas
        .iter()
        .map(|&l| {
            let id = format!("lemma-{}", l.number());
            match check_lemma_bounds(l, samples) {
                Ok(rep) => {
                    let top = rep
                        .points
                        .iter()
                        .map(|p| &p.value)
                        .fold(None::<&BigReal>, |m, v| match m {
                            Some(m) if m >= v => Some(m),
                            _ => Some(v),
                        })
                        .expect("at least three points");
                    let bound = &rep.points[0].bound;
                    let excess = top - bound;
                    let mut r = Row::new(id, Status::from_bool(rep.passed), common);
                    r.value = Some(top.to_sig_string(20));
                    r.target = Some(bound.to_sig_string(20));
                    r.residual = Some(if excess.signum() > 0 { sci(&excess) } else { "0".into() });
                    r.error_bound = Some("0".into());
                    r.terms_used = Some(rep.points.len());
                    r.message = Some(l.statement().to_string());
                    r
                }
                Err(err) => Row::error(id, &err, common),
            }
        })
        .collect()
}

fn list_rows(catalog: &Catalog, common: &Common) -> Vec<Row> {
    catalog
        .entries()
        .iter()
        .map(|e| {
            let mut r = Row::new(e.def.id.clone(), Status::Pass, common);
            r.target = Some(zetaforge::series::TargetDisplay(&e.def.target).to_string());
            r.terms_used = e.expected_terms_100d;
            r.message = Some(e.def.label.clone());
            r
        })
        .collect()
}

fn compute(command: &Command) -> Result<(Vec<Row>, &Common), Usage> {
    Ok(match command {
        Command::List { common } => (list_rows(&load_catalog(common)?, common), common),
        Command::Eval(sel) | Command::Verify(sel) => {
            let catalog = load_catalog(&sel.common)?;
            let entries = select(&catalog, sel)?;
            let full = matches!(command, Command::Eval(_));
            (verify_rows(&entries, &sel.common, full), &sel.common)
        }
        Command::Rate(sel) => {
            let catalog = load_catalog(&sel.common)?;
            let entries = select(&catalog, sel)?;
            (rate_rows(&entries, &sel.common), &sel.common)
        }
        Command::Transform { family, case, samples, common } => {
            let rows = if let Some(case) = case {
                let case = parse_case(case)?;
                specialization_rows(case, samples.unwrap_or(5), common)
            } else {
                let families = match family {
                    Some(f) => vec![*f],
                    None => Family::ALL.to_vec(),
                };
                families
                    .into_iter()
                    .flat_map(|f| {
                        let n = samples.unwrap_or(if f == Family::F98 { 50 } else { 10 });
                        family_rows(f, n, common)
                    })
                    .collect()
            };
            (rows, common)
        }
        Command::Derive { case, all, samples, common } => {
            if *samples == 0 {
                return Err(Usage("--samples must be positive".into()));
            }
            let cases = match case {
                Some(c) => vec![parse_case(c)?],
                None => SpecializationCase::ALL.to_vec(),
            };
            let with_rule = *all || case.is_none();
            (derive_rows(&cases, *samples, with_rule, common), common)
        }
        Command::Lemmas { id, samples, common } => {
            if *samples < 3 {
                return Err(Usage("--samples must be at least 3".into()));
            }
            let lemmas = if id.is_empty() {
                Lemma::ALL.to_vec()
            } else {
                id.iter()
                    .map(|s| {
                        s.trim_start_matches("lemma-")
                            .parse::<u32>()
                            .ok()
                            .and_then(|n| Lemma::from_number(n).ok())
                            .ok_or_else(|| Usage(format!("unknown lemma `{s}` (expected lemma-1 .. lemma-4)")))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            (lemma_rows(&lemmas, *samples, common), common)
        }
    })
}

/// Exit code for a set of rows.
pub fn exit_code(rows: &[Row]) -> u8 {
    if rows.iter().any(|r| r.status == Status::Error) {
        EXIT_NUMERIC
    } else if rows.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn text_table(rows: &[Row], list: bool) -> String {
    let header: Vec<&str> = if list {
        vec!["id", "target", "terms@100", "label"]
    } else {
        vec!["id", "status", "value", "target", "residual", "bound", "terms", "digits/term"]
    };
    let dash = || "-".to_string();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            if list {
                vec![
                    r.id.clone(),
                    r.target.clone().unwrap_or_else(dash),
                    r.terms_used.map_or_else(dash, |t| t.to_string()),
                    r.message.clone().unwrap_or_default(),
                ]
            } else {
                vec![
                    r.id.clone(),
                    format!("{:?}", r.status).to_lowercase(),
                    r.value.clone().unwrap_or_else(dash),
                    r.target.clone().unwrap_or_else(dash),
                    r.residual.clone().unwrap_or_else(dash),
                    r.error_bound.clone().unwrap_or_else(dash),
                    r.terms_used.map_or_else(dash, |t| t.to_string()),
                    r.rate.map_or_else(dash, |x| format!("{x:.4}")),
                ]
            }
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let n = row.len();
        row.iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| if i + 1 == n { c.clone() } else { format!("{c:<w$}") })
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = String::new();
    out.push_str(&line(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
    out.push('\n');
    for row in &cells {
        out.push_str(&line(row));
        out.push('\n');
    }
    if !list {
        for r in rows {
            if let Some(m) = &r.message {
                if r.status == Status::Error {
                    out.push_str(&format!("{}: {m}\n", r.id));
                }
            }
        }
    }
    out
}

/// Runs `cli`, writing the report to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> u8 {
    let (mut rows, common) = match compute(&cli.command) {
        Ok(v) => v,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    let written = if common.json {
        rows.iter().try_for_each(|r| {
            let line = serde_json::to_string(r).expect("rows serialize");
            writeln!(out, "{line}")
        })
    } else {
        let list = matches!(cli.command, Command::List { .. });
        write!(out, "{}", text_table(&rows, list))
    };
    if written.is_err() {
        return EXIT_NUMERIC;
    }
    exit_code(&rows)
}

/// Parses `args` (including the program name) and runs them, capturing the
/// output.
pub fn run_args<I, S>(args: I) -> (u8, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (EXIT_USAGE, e.to_string()),
    };
    let mut buf = Vec::new();
    let code = run(&cli, &mut buf);
    (code, String::from_utf8(buf).expect("output is UTF-8"))
}
