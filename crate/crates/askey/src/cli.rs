//! `askey` command line: list, verify, sweep, classify, spectral, report.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure,
//! 2 on a configuration error. The JSON report goes to `--out`, or to
//! stdout when no path is given; progress lines go to stderr.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use askey_core::catalog::{self, CatalogInstance, RelationEntry};
use askey_core::contiguity::RelationKind;
use askey_core::families::{weight, SpectralPoint};
use askey_core::report::VerificationReport;
use askey_core::sampling::{sample_params, SampleRng};
use askey_core::search::{classify, SearchSpace};
use askey_core::{scalar, spectral, FamilyId, Param, ParameterSet, Scalar};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::catalog_file;
use crate::report::{classification_json, skipped_json, verification_json, RunReport};

/// Draw attempts per sample before a row is recorded as skipped.
const DRAWS: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "askey", version, about = "Exact verification of contiguity relations for finite orthogonal polynomial families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Print catalog ids, one per line
    List(ListArgs),
    /// Verify one relation at given or sampled parameters
    Verify(VerifyArgs),
    /// Verify many catalog entries over a range of N
    Sweep(SweepArgs),
    /// Search a bounded shift space and compare with the published list
    Classify(ClassifyArgs),
    /// Christoffel/Geronimus and measure checks for an A2 entry
    Spectral(VerifyArgs),
    /// Summarize a report file written by another run
    Report(ReportArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct ListArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub kind: Option<String>,
}

#[derive(Debug, Args, Serialize, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub z: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct RunArgs {
    /// A size `3` or an inclusive range `2..5`
    #[arg(long = "N")]
    pub n: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Where to write the JSON report (stdout if omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub relation: String,
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    /// Every catalog entry (the default when no filter is given)
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub relation: Option<String>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value = "A2")]
    pub kind: String,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ReportArgs {
    pub input: PathBuf,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Catalog(#[from] catalog_file::CatalogFileError),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

fn config(msg: impl std::fmt::Display) -> CliError {
    CliError::Config(msg.to_string())
}

/// `3`, `2..5` or `2..=5`; ranges are inclusive.
pub fn parse_n(s: &str) -> Result<Vec<u32>, CliError> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| config(format!("bad N `{s}`")));
    let out: Vec<u32> = match s.split_once("..") {
        Some((a, b)) => (num(a)?..=num(b.trim_start_matches('='))?).collect(),
        None => Vec::from([num(s)?]),
    };
    if out.is_empty() {
        return Err(config(format!("empty N range `{s}`")));
    }
    Ok(out)
}

fn parse_family(s: &str) -> Result<FamilyId, CliError> {
    s.parse().map_err(|_| {
        let known: Vec<&str> = FamilyId::ALL.iter().map(|f| f.code()).collect();
        config(format!("unknown family `{s}` (known: {})", known.join(", ")))
    })
}

fn parse_kind(s: &str) -> Result<RelationKind, CliError> {
    RelationKind::from_code(s).ok_or_else(|| config(format!("unknown kind `{s}` (A2, B2, B2p, BI, G)")))
}

fn overrides(p: &ParamArgs) -> Result<Vec<(Param, Scalar)>, CliError> {
    let given = [
        (Param::Q, &p.q),
        (Param::Alpha, &p.alpha),
        (Param::Beta, &p.beta),
        (Param::Gamma, &p.gamma),
        (Param::Delta, &p.delta),
        (Param::Z, &p.z),
    ];
    given
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
        .map(|(k, v)| Ok((k, scalar::parse(v).map_err(|e| config(format!("--{}: {e}", k.name())))?)))
        .collect()
}

/// Seed for one `(entry, N)` job, independent of job order.
fn job_seed(seed: u64, id: &str, n: u32) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes().chain(n.to_le_bytes()) {
        h = (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3);
    }
    h ^ seed
}

enum Draw {
    Ok(Box<CatalogInstance>),
    Skipped(String),
}

/// Binds `entry` at size `n`, sampling whatever `fixed` does not set.
fn draw(entry: &RelationEntry, n: u32, fixed: &[(Param, Scalar)], rng: &mut SampleRng) -> Result<Draw, CliError> {
    let family_params = entry.family.params();
    if let Some((p, _)) = fixed.iter().find(|(p, _)| !family_params.contains(p)) {
        return Err(config(format!("--{} is not a parameter of {}", p.name(), entry.family)));
    }
    let complete = family_params.iter().all(|p| fixed.iter().any(|(q, _)| q == p));
    let bind = |mut params: ParameterSet| {
        for (p, v) in fixed {
            params.set(*p, v.clone());
        }
        catalog::instantiate(entry, &params).and_then(|inst| catalog::check_instance(&inst).map(|_| inst))
    };
    if complete {
        return match bind(ParameterSet::new(entry.family, n)) {
            Ok(inst) => Ok(Draw::Ok(Box::new(inst))),
            Err(e) => Err(config(format!("{} at N={n}: {e}", entry.id))),
        };
    }
    let mut last = String::new();
    for _ in 0..DRAWS {
        match bind(sample_params(entry.family, n, rng)) {
            Ok(inst) => return Ok(Draw::Ok(Box::new(inst))),
            Err(e) => last = e.to_string(),
        }
    }
    Ok(Draw::Skipped(format!("no admissible draw at N={n}: {last}")))
}

fn fully_fixed(entry: &RelationEntry, fixed: &[(Param, Scalar)]) -> bool {
    entry.family.params().iter().all(|p| fixed.iter().any(|(q, _)| q == p))
}

fn size_skip(entry: &RelationEntry, n: u32) -> Option<String> {
    if !entry.parity_ok(n) {
        Some(format!("{} needs N ≡ {} mod 2", entry.id, entry.parity.unwrap_or(0)))
    } else if n < entry.min_n() {
        Some(format!("{} needs N ≥ {}", entry.id, entry.min_n()))
    } else {
        None
    }
}

/// Rows for one entry at one size.
fn verify_rows(entry: &RelationEntry, n: u32, fixed: &[(Param, Scalar)], samples: usize, seed: u64) -> Result<Vec<Value>, CliError> {
    if let Some(why) = size_skip(entry, n) {
        return Ok(Vec::from([skipped_json(&entry.id, &why)]));
    }
    let mut rng = SampleRng::seeded(job_seed(seed, &entry.id, n));
    let count = if fully_fixed(entry, fixed) { 1 } else { samples };
    let mut rows = Vec::new();
    for _ in 0..count {
        rows.push(match draw(entry, n, fixed, &mut rng)? {
            Draw::Ok(inst) => verification_json(&catalog::verify_instance(&inst)),
            Draw::Skipped(why) => skipped_json(&entry.id, &why),
        });
    }
    Ok(rows)
}

fn spectral_rows(inst: &CatalogInstance) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let Some(shift) = inst.shift.as_ref() else { return out };
    let nu: Option<SpectralPoint> = inst.nu.clone();
    let mut cg = spectral::verify_christoffel_geronimus(shift, nu.as_ref());
    cg.relation_id = format!("{}:christoffel-geronimus", inst.entry_id);
    out.push(cg);
    if let Some(chi) = &inst.chi {
        if weight(&inst.base, 0).is_ok() {
            let mut g = spectral::verify_geronimus_mass(shift, chi);
            g.relation_id = format!("{}:geronimus-mass", inst.entry_id);
            out.push(g);
        }
    }
    if spectral::measure_identity_ids().contains(&inst.entry_id.as_str()) {
        if let Ok(mut m) = spectral::verify_measure_identity(&inst.entry_id, &inst.base) {
            m.relation_id = format!("{}:measure", inst.entry_id);
            out.push(m);
        }
    }
    out
}

fn find_entry<'a>(entries: &'a [RelationEntry], id: &str) -> Result<&'a RelationEntry, CliError> {
    entries.iter().find(|e| e.id == id).ok_or_else(|| config(format!("unknown relation `{id}`")))
}

fn check_family(entry: &RelationEntry, family: &Option<String>) -> Result<(), CliError> {
    if let Some(f) = family {
        let f = parse_family(f)?;
        if f != entry.family {
            return Err(config(format!("{} is a {} relation, not {f}", entry.id, entry.family)));
        }
    }
    Ok(())
}

fn progress(row: &Value) {
    let status = row["status"].as_str().unwrap_or("?");
    let params: Vec<String> = row["params"]
        .as_array()
        .map(|ps| {
            ps.iter()
                .take(1)
                .map(|p| {
                    p.as_object()
                        .map(|o| o.iter().map(|(k, v)| format!("{k}={}", v.as_str().map_or(v.to_string(), str::to_string))).collect::<Vec<_>>().join(" "))
                        .unwrap_or_default()
                })
                .collect()
        })
        .unwrap_or_default();
    let detail = row["detail"].as_str().filter(|d| !d.is_empty()).map(|d| format!(" ({d})")).unwrap_or_default();
    eprintln!("{status:<7} {} {}{detail}", row["id"].as_str().unwrap_or("?"), params.join(""));
}

fn emit(report: &RunReport, out: &Option<PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Output { path: path.clone(), source })?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    let s = report.summary;
    eprintln!("summary: pass={} fail={} skipped={}", s.pass, s.fail, s.skipped);
    Ok(())
}

fn echo(command: &Command) -> Value {
    serde_json::to_value(command).unwrap_or(Value::Null)
}

fn run_list(a: &ListArgs) -> Result<i32, CliError> {
    let entries = catalog_file::load_catalog()?;
    let family = a.family.as_deref().map(parse_family).transpose()?;
    let kind = a.kind.as_deref().map(parse_kind).transpose()?;
    let mut out = std::io::stdout().lock();
    for e in entries.iter().filter(|e| family.is_none_or(|f| e.family == f) && kind.is_none_or(|k| e.kind == k)) {
        let _ = writeln!(out, "{}", e.id);
    }
    Ok(0)
}

fn run_verify(a: &VerifyArgs, command: &Command) -> Result<i32, CliError> {
    let entries = catalog_file::load_catalog()?;
    let entry = find_entry(&entries, &a.relation)?;
    check_family(entry, &a.family)?;
    let fixed = overrides(&a.params)?;
    let ns = parse_n(a.run.n.as_deref().unwrap_or("3"))?;
    let mut report = RunReport::new(echo(command));
    for n in ns {
        for row in verify_rows(entry, n, &fixed, a.run.samples, a.run.seed)? {
            progress(&row);
            report.push(row);
        }
    }
    emit(&report, &a.run.out)?;
    Ok(report.summary.exit_code())
}

fn run_sweep(a: &SweepArgs, command: &Command) -> Result<i32, CliError> {
    let entries = catalog_file::load_catalog()?;
    let family = a.family.as_deref().map(parse_family).transpose()?;
    let kind = a.kind.as_deref().map(parse_kind).transpose()?;
    if let Some(id) = &a.relation {
        find_entry(&entries, id)?;
    }
    let selected: Vec<&RelationEntry> = entries
        .iter()
        .filter(|e| a.all || (family.is_none_or(|f| e.family == f) && kind.is_none_or(|k| e.kind == k)))
        .filter(|e| a.all || a.relation.as_ref().is_none_or(|id| &e.id == id))
        .collect();
    let ns = parse_n(a.run.n.as_deref().unwrap_or("2..5"))?;
    let jobs: Vec<(&RelationEntry, u32)> = selected
        .iter()
        .flat_map(|e| ns.iter().filter(|&&n| size_skip(e, n).is_none()).map(move |&n| (*e, n)))
        .collect();
    let rows: Vec<Vec<Value>> = jobs
        .par_iter()
        .map(|(e, n)| verify_rows(e, *n, &[], a.run.samples, a.run.seed))
        .collect::<Result<_, _>>()?;
    let mut report = RunReport::new(echo(command));
    for row in rows.into_iter().flatten() {
        if row["status"] != "pass" {
            progress(&row);
        }
        report.push(row);
    }
    eprintln!("{} entries, {} jobs", selected.len(), jobs.len());
    emit(&report, &a.run.out)?;
    Ok(report.summary.exit_code())
}

fn run_classify(a: &ClassifyArgs, command: &Command) -> Result<i32, CliError> {
    let family = parse_family(&a.family)?;
    let kind = parse_kind(&a.kind)?;
    if !family.has_recurrence() {
        return Err(config(format!("{family} has no recurrence to search with")));
    }
    let mut space = SearchSpace::bounded(family);
    space.samples = a.run.samples;
    space.seed = a.run.seed;
    if let Some(n) = &a.run.n {
        space.n_values = parse_n(n)?;
    }
    let c = classify(&space, kind).map_err(|e| config(format!("classification: {e}")))?;
    let row = classification_json(&c);
    eprintln!("{family} {kind}: matched {:?}", c.matched);
    for u in &row["unmatched"].as_array().cloned().unwrap_or_default() {
        eprintln!("  unmatched {u}");
    }
    if !c.missing.is_empty() {
        eprintln!("  missing {:?}", c.missing);
    }
    let mut report = RunReport::new(echo(command));
    report.push(row);
    emit(&report, &a.run.out)?;
    Ok(report.summary.exit_code())
}

fn run_spectral(a: &VerifyArgs, command: &Command) -> Result<i32, CliError> {
    let entries = catalog_file::load_catalog()?;
    let entry = find_entry(&entries, &a.relation)?;
    check_family(entry, &a.family)?;
    if entry.kind != RelationKind::A2 || entry.nu.is_none() {
        return Err(config(format!("{} has no published ν", entry.id)));
    }
    let fixed = overrides(&a.params)?;
    let ns = parse_n(a.run.n.as_deref().unwrap_or("3"))?;
    let mut report = RunReport::new(echo(command));
    for n in ns {
        let mut rng = SampleRng::seeded(job_seed(a.run.seed, &entry.id, n));
        let count = if fully_fixed(entry, &fixed) { 1 } else { a.run.samples };
        for _ in 0..count {
            let rows = match draw(entry, n, &fixed, &mut rng)? {
                Draw::Ok(inst) => spectral_rows(&inst).iter().map(verification_json).collect(),
                Draw::Skipped(why) => Vec::from([skipped_json(&entry.id, &why)]),
            };
            for row in rows {
                progress(&row);
                report.push(row);
            }
        }
    }
    emit(&report, &a.run.out)?;
    Ok(report.summary.exit_code())
}

fn run_report(a: &ReportArgs) -> Result<i32, CliError> {
    let text = fs::read_to_string(&a.input).map_err(|e| config(format!("{}: {e}", a.input.display())))?;
    let report: RunReport = serde_json::from_str(&text).map_err(|e| config(format!("{}: {e}", a.input.display())))?;
    if report.recount() != report.summary {
        return Err(config(format!("{}: summary does not match results", a.input.display())));
    }
    let command = report.config_echo.get("command").and_then(Value::as_str).unwrap_or("?");
    println!("{} ({command}): pass={} fail={} skipped={}", report.version, report.summary.pass, report.summary.fail, report.summary.skipped);
    for r in report.results.iter().filter(|r| r["status"] == "fail") {
        let id = r.get("id").or_else(|| r.get("family")).and_then(Value::as_str).unwrap_or("?");
        println!("fail {id} {}", r.get("residual_locus").map(Value::to_string).unwrap_or_default());
    }
    Ok(report.summary.exit_code())
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::List(a) => run_list(a),
        Command::Verify(a) => run_verify(a, &cli.command),
        Command::Sweep(a) => run_sweep(a, &cli.command),
        Command::Classify(a) => run_classify(a, &cli.command),
        Command::Spectral(a) => run_spectral(a, &cli.command),
        Command::Report(a) => run_report(a),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Default location used by the README examples.
pub fn default_catalog_dir() -> PathBuf {
    catalog_file::catalog_dir()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_specs() {
        assert_eq!(parse_n("3").unwrap(), [3]);
        assert_eq!(parse_n("2..5").unwrap(), [2, 3, 4, 5]);
        assert_eq!(parse_n("2..=4").unwrap(), [2, 3, 4]);
        assert!(parse_n("5..2").is_err());
        assert!(parse_n("x").is_err());
    }

    #[test]
    fn seeds_depend_on_job_only() {
        assert_eq!(job_seed(7, "qRI", 3), job_seed(7, "qRI", 3));
        assert_ne!(job_seed(7, "qRI", 3), job_seed(7, "qRI", 4));
        assert_ne!(job_seed(7, "qRI", 3), job_seed(7, "qRII", 3));
    }

    #[test]
    fn rationals_only() {
        let p = ParamArgs { q: Some("2/5".into()), alpha: Some("0.5".into()), ..Default::default() };
        assert!(overrides(&p).is_err());
    }
}
