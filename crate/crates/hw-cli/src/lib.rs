//! The `hw-factor` command line: `solve`, `verify`, `survey`, `oracle`,
//! `classify` and `fixtures`.
//!
//! Exit codes are a stable contract (see [`exit`]). Every successful
//! `solve` is re-verified in process, from its serialized document, before
//! the command exits 0.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hw_cert::{from_json, read_document, to_json, write_document, ReadError};
use hw_composer::{feasibility, survey, Composer, SurveyOutcome, SurveyRow, Verdict};
use hw_constructions::{printed_factors, BlockFamily, Printed};
use hw_digraph::{complete_symmetric, Certificate, FactorKind, Family, HostSpec, ParamRequest, Trace};
use hw_verify::{
    check_certificate, exhaustive_factorize, OracleOutcome, SearchBudget, SearchMode,
    VerificationReport,
};

/// Process exit codes.
pub mod exit {
    /// Solved and verified; document accepted; oracle found a factorization.
    pub const OK: i32 = 0;
    /// Internal fault: a solvable request was not constructed, a self-check
    /// failed, or an I/O error occurred.
    pub const FAULT: i32 = 1;
    /// The request is proven impossible (oracle: search space exhausted).
    pub const IMPOSSIBLE: i32 = 2;
    /// The request is an open exception (oracle: inconclusive).
    pub const OPEN: i32 = 3;
    /// The request is outside the supported parameter range.
    pub const OUT_OF_SCOPE: i32 = 4;
    /// A document could not be read or parsed.
    pub const PARSE: i32 = 5;
    /// A document was read but the verifier rejected it.
    pub const REJECTED: i32 = 6;
    /// Malformed command line, or a request refused by policy.
    pub const USAGE: i32 = 64;
}

/// Largest complete symmetric host (by vertex count) the oracle searches
/// without `--force`: `K_7*` has 42 arcs.
pub const ORACLE_CEILING: u32 = 7;

#[derive(Debug, Parser)]
#[command(
    name = "hw-factor",
    version,
    about = "Factorizations of K_v* into K2*-factors and directed cycle factors",
    after_help = format!(
        "Environment:\n  {}  directory caching Kirkman triple systems found by search",
        hw_blocks::KTS_CACHE_ENV
    )
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct, verify and write a factorization certificate.
    Solve(SolveArgs),
    /// Classify a request (solvable / impossible / open / out of scope).
    Classify(RequestArgs),
    /// Check a certificate document with the independent verifier.
    Verify(VerifyArgs),
    /// Classify and solve every (v, r) for one family and cycle length.
    Survey(SurveyArgs),
    /// Exhaustive search for a factorization of a small K_v*.
    Oracle(OracleArgs),
    /// Write the printed small factorizations as certificate documents.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// r K2*-factors and s directed m-cycle factors.
    K2cm,
    /// r directed m-cycle factors and s directed 2m-cycle factors.
    Cm2m,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::K2cm => Family::K2Cm,
            FamilyArg::Cm2m => Family::CmC2m,
        }
    }
}

#[derive(Debug, Args)]
pub struct RequestArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Number of vertices.
    #[arg(long)]
    pub v: u32,
    /// Cycle length m.
    #[arg(long)]
    pub m: u32,
    /// Number of first-kind factors (derived from s when omitted).
    #[arg(long)]
    pub r: Option<u32>,
    /// Number of second-kind factors (derived from r when omitted).
    #[arg(long)]
    pub s: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub request: RequestArgs,
    /// Output path for the certificate document (stdout when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Certificate document to check.
    pub path: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Csv,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Cycle length m
    #[arg(long)]
    pub m: u32,
    /// Largest order; v runs over the multiples of m up to this bound.
    #[arg(long)]
    pub v_max: u32,
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    First,
    Count,
    All,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Order of the complete symmetric host.
    #[arg(long)]
    pub v: u32,
    /// Factor kinds and counts, e.g. "k2x2,c4x1" (kinds: k2, cN, sym-cN).
    #[arg(long)]
    pub spec: String,
    #[arg(long, value_enum, default_value = "first")]
    pub mode: OracleMode,
    /// Search hosts larger than the default ceiling (K_7*).
    #[arg(long)]
    pub force: bool,
    /// Node budget; an exceeded budget is reported as inconclusive.
    #[arg(long, default_value_t = 50_000_000)]
    pub node_limit: u64,
    /// Write the first factorization found as a certificate document.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Directory receiving one `<name>.json` per printed factorization.
    pub dir: PathBuf,
}

/// Parses an oracle spec string: comma- or plus-separated `<kind>x<count>`
/// terms.
pub fn parse_spec(text: &str) -> Result<Vec<(FactorKind, usize)>, String> {
    let mut out = Vec::new();
    for term in text.split([',', '+']).map(str::trim) {
        let (kind, count) = term
            .rsplit_once('x')
            .ok_or_else(|| format!("term {term:?} is not <kind>x<count>"))?;
        let kind = FactorKind::from_code(kind).ok_or_else(|| format!("unknown kind {kind:?}"))?;
        let count = count.parse().map_err(|_| format!("bad count in {term:?}"))?;
        out.push((kind, count));
    }
    Ok(out)
}

/// The request described by the flags; a missing count is derived from
/// `r + s = v - 1` (saturating, so impossible combinations still classify).
pub fn request_of(args: &RequestArgs) -> Result<ParamRequest, String> {
    let top = args.v.saturating_sub(1);
    let (r, s) = match (args.r, args.s) {
        (Some(r), Some(s)) => (r, s),
        (Some(r), None) => (r, top.saturating_sub(r)),
        (None, Some(s)) => (top.saturating_sub(s), s),
        (None, None) => return Err("give --r, --s or both".into()),
    };
    Ok(ParamRequest::new(args.family.into(), args.v, args.m, r, s))
}

/// The exit code reporting a verdict that is not `Solvable`.
pub fn verdict_exit(verdict: &Verdict) -> i32 {
    match verdict {
        Verdict::Solvable(_) => exit::OK,
        Verdict::ProvenImpossible(_) => exit::IMPOSSIBLE,
        Verdict::OpenException(_) => exit::OPEN,
        Verdict::OutOfScope(_) => exit::OUT_OF_SCOPE,
    }
}

/// The certificate of a printed factorization, on its host.
pub fn fixture_certificate(p: Printed) -> Certificate {
    let (family, m) = match p {
        Printed::C4BlowupI8R0 | Printed::C4BlowupI8R2 => (BlockFamily::C4BlowupI8, 4),
        Printed::K12R2 | Printed::K12R4 => (BlockFamily::K12, 4),
        Printed::K43R1 => (BlockFamily::K43, 4),
    };
    Certificate::from_factors(
        family.host(m),
        printed_factors(p),
        Trace::new("printed").param("fixture", p.name()),
    )
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return exit::USAGE;
            }
            let _ = write!(out, "{e}");
            return exit::OK;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve_cmd(&a, out, err),
        Command::Classify(a) => classify_cmd(&a, out),
        Command::Verify(a) => verify_cmd(&a, out),
        Command::Survey(a) => survey_cmd(&a, out, err),
        Command::Oracle(a) => oracle_cmd(&a, out, err),
        Command::Fixtures(a) => fixtures_cmd(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit::FAULT
        }
    }
}

fn classify_cmd(a: &RequestArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let req = match request_of(a) {
        Ok(r) => r,
        Err(e) => {
            writeln!(out, "error: {e}")?;
            return Ok(exit::USAGE);
        }
    };
    let verdict = feasibility(&req);
    writeln!(out, "{req}: {verdict}")?;
    Ok(verdict_exit(&verdict))
}

fn solve_cmd(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let req = match request_of(&a.request) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::USAGE);
        }
    };
    let verdict = feasibility(&req);
    if !verdict.is_solvable() {
        writeln!(out, "{req}: {verdict}")?;
        return Ok(verdict_exit(&verdict));
    }
    let mut composer = Composer::new();
    let (cert, plan) = match composer.solve_with_plan(&req) {
        Ok(x) => x,
        Err(e) => {
            writeln!(err, "{req}: {verdict}, but construction failed: {e}")?;
            return Ok(exit::FAULT);
        }
    };
    // Self-check gate: re-read the serialized document and verify it.
    let text = to_json(&cert);
    let reread = from_json(&text).context("re-reading the produced document")?;
    let report = check_certificate(&reread);
    if !report.accepted() || reread.request != Some(req) {
        writeln!(err, "{req}: self-check failed:\n{report}")?;
        return Ok(exit::FAULT);
    }
    match &a.output {
        Some(path) => write_document(path, &reread)
            .with_context(|| format!("writing {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    writeln!(err, "{req}: {verdict}; {} factors verified; layout {}", cert.factors.len(), plan.layout)?;
    for class in &plan.classes {
        writeln!(err, "  {} -> {} of {} first-kind", class.blocks, class.count, class.factors)?;
    }
    Ok(exit::OK)
}

fn report_json(report: &VerificationReport) -> serde_json::Value {
    let failures: Vec<serde_json::Value> = report
        .failures
        .iter()
        .map(|f| serde_json::json!({ "factor": f.factor, "violation": f.violation.to_string() }))
        .collect();
    serde_json::json!({ "accepted": report.accepted(), "failures": failures })
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let cert = match read_document(&a.path) {
        Ok(c) => c,
        Err(e @ (ReadError::Io { .. } | ReadError::Document { .. })) => {
            match a.format {
                ReportFormat::Text => writeln!(out, "parse error: {e}")?,
                ReportFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "accepted": false, "parse_error": e.to_string() })
                )?,
            }
            return Ok(exit::PARSE);
        }
    };
    let report = check_certificate(&cert);
    match a.format {
        ReportFormat::Text if report.accepted() => writeln!(
            out,
            "accepted: {} factors on {} vertices",
            cert.factors.len(),
            cert.host.order()
        )?,
        ReportFormat::Text => writeln!(out, "rejected:\n{report}")?,
        ReportFormat::Json => writeln!(out, "{}", report_json(&report))?,
    }
    Ok(if report.accepted() { exit::OK } else { exit::REJECTED })
}

fn yes_no(row: &SurveyRow) -> (&'static str, &'static str) {
    match row.outcome {
        SurveyOutcome::Skipped => ("-", "-"),
        SurveyOutcome::Verified => ("yes", "yes"),
        SurveyOutcome::Failed(_) => ("no", "no"),
    }
}

fn verdict_cell(v: &Verdict) -> String {
    match v {
        Verdict::Solvable(c) => format!("solvable:{}", c.code()),
        Verdict::ProvenImpossible(_) => "impossible".to_string(),
        Verdict::OpenException(c) => format!("open:{}", c.code()),
        Verdict::OutOfScope(_) => "out-of-scope".to_string(),
    }
}

/// Renders survey rows; CSV columns are `v,r,s,verdict,solved,verified,millis`.
pub fn render_survey(rows: &[SurveyRow], format: TableFormat) -> String {
    let mut text = String::new();
    match format {
        TableFormat::Csv => {
            text.push_str("v,r,s,verdict,solved,verified,millis\n");
            for row in rows {
                let (solved, verified) = yes_no(row);
                let q = row.request;
                text.push_str(&format!(
                    "{},{},{},{},{solved},{verified},{}\n",
                    q.v,
                    q.r,
                    q.s,
                    verdict_cell(&row.verdict),
                    row.millis
                ));
            }
        }
        TableFormat::Table => {
            text.push_str(&format!(
                "{:>4} {:>4} {:>4}  {:<44} {:<6} {:<8} {:>7}\n",
                "v", "r", "s", "verdict", "solved", "verified", "millis"
            ));
            for row in rows {
                let (solved, verified) = yes_no(row);
                let q = row.request;
                text.push_str(&format!(
                    "{:>4} {:>4} {:>4}  {:<44} {:<6} {:<8} {:>7}\n",
                    q.v,
                    q.r,
                    q.s,
                    verdict_cell(&row.verdict),
                    solved,
                    verified,
                    row.millis
                ));
            }
        }
    }
    text
}

fn survey_cmd(a: &SurveyArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let mut composer = Composer::new();
    let rows = survey(&mut composer, a.family.into(), a.m, a.v_max);
    out.write_all(render_survey(&rows, a.format).as_bytes())?;
    let failed: Vec<&SurveyRow> =
        rows.iter().filter(|r| matches!(r.outcome, SurveyOutcome::Failed(_))).collect();
    for row in &failed {
        if let SurveyOutcome::Failed(e) = &row.outcome {
            writeln!(err, "not constructed: {}: {e}", row.request)?;
        }
    }
    Ok(if failed.is_empty() { exit::OK } else { exit::FAULT })
}

fn oracle_cmd(a: &OracleArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let spec = match parse_spec(&a.spec) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: malformed --spec: {e}")?;
            return Ok(exit::USAGE);
        }
    };
    if a.v > ORACLE_CEILING && !a.force {
        writeln!(
            err,
            "refused: K_{}* exceeds the oracle ceiling K_{ORACLE_CEILING}*; pass --force to search anyway",
            a.v
        )?;
        return Ok(exit::USAGE);
    }
    let host = complete_symmetric(a.v)?;
    let mode = match a.mode {
        OracleMode::First => SearchMode::First,
        OracleMode::Count => SearchMode::Count,
        OracleMode::All => SearchMode::All,
    };
    let result = match exhaustive_factorize(&host, &spec, mode, SearchBudget::nodes(a.node_limit)) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::USAGE);
        }
    };
    let code = match &result.outcome {
        OracleOutcome::Found(sols) => {
            writeln!(out, "Found {} factorization(s) ({} nodes)", sols.len(), result.nodes)?;
            if let (Some(path), Some(first)) = (&a.output, sols.first()) {
                let cert = Certificate::from_factors(
                    HostSpec::CompleteSymmetric { order: a.v },
                    first.clone(),
                    Trace::new("oracle").param("spec", &a.spec),
                );
                write_document(path, &cert).with_context(|| format!("writing {}", path.display()))?;
            }
            exit::OK
        }
        OracleOutcome::Counted { unordered, ordered } => {
            writeln!(out, "Counted unordered={unordered} ordered={ordered} ({} nodes)", result.nodes)?;
            exit::OK
        }
        OracleOutcome::Exhausted => {
            writeln!(out, "Exhausted ({} nodes): no such factorization exists", result.nodes)?;
            exit::IMPOSSIBLE
        }
        OracleOutcome::Inconclusive => {
            writeln!(out, "Inconclusive: node budget of {} exhausted", a.node_limit)?;
            exit::OPEN
        }
    };
    Ok(code)
}

/// Writes every printed fixture into `dir` as `<name>.json`.
pub fn write_fixtures(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for p in Printed::ALL {
        let path = dir.join(format!("{}.json", p.name()));
        write_document(&path, &fixture_certificate(p))
            .with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

fn fixtures_cmd(a: &FixturesArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    for path in write_fixtures(&a.dir)? {
        writeln!(out, "{}", path.display())?;
    }
    Ok(exit::OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings_parse() {
        assert_eq!(parse_spec("c4x3").unwrap(), vec![(FactorKind::Cycles(4), 3)]);
        assert_eq!(
            parse_spec("k2x2, c4x1").unwrap(),
            vec![(FactorKind::K2Star, 2), (FactorKind::Cycles(4), 1)]
        );
        assert_eq!(parse_spec("sym-c4x2").unwrap(), vec![(FactorKind::SymCycles(4), 2)]);
        assert!(parse_spec("c4").is_err());
        assert!(parse_spec("q4x2").is_err());
        assert!(parse_spec("c4xz").is_err());
    }

    #[test]
    fn missing_counts_are_derived() {
        let args = RequestArgs { family: FamilyArg::K2cm, v: 8, m: 4, r: None, s: Some(1) };
        assert_eq!(request_of(&args).unwrap(), ParamRequest::new(Family::K2Cm, 8, 4, 6, 1));
        let none = RequestArgs { family: FamilyArg::K2cm, v: 8, m: 4, r: None, s: None };
        assert!(request_of(&none).is_err());
    }

    #[test]
    fn fixtures_verify() {
        for p in Printed::ALL {
            assert!(check_certificate(&fixture_certificate(p)).accepted(), "{}", p.name());
        }
    }
}
