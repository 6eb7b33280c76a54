//! Seeded verification suites and their text/JSON reports.
//!
//! Every check draws from its own ChaCha8 stream (derived from the check
//! name), so checks can run in parallel without changing the output. Reports
//! list checks sorted by name.

mod checks;

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::electrodynamics::Calibration;
use crate::error::{Error, Result};

pub use checks::check_names;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Maxwell,
    Kinematics,
    Stress,
    Polytopes,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Identities,
        Suite::Maxwell,
        Suite::Kinematics,
        Suite::Stress,
        Suite::Polytopes,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Maxwell => "maxwell",
            Suite::Kinematics => "kinematics",
            Suite::Stress => "stress",
            Suite::Polytopes => "polytopes",
            Suite::All => "all",
        }
    }

    fn includes(self, check: &str) -> bool {
        self == Suite::All || check.split('.').next() == Some(self.name())
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown suite `{s}` (expected identities, maxwell, kinematics, stress, polytopes or all)"
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// Exact checks compare against the zero polynomial; float checks against a
/// tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckMode {
    Exact,
    Float,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Exact => "EXACT",
            CheckMode::Float => "FLOAT",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Residual {
    /// Every residual was structurally zero.
    ExactZero(bool),
    MaxAbs(f64),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::ExactZero(true) => f.write_str("0 (exact)"),
            Residual::ExactZero(false) => f.write_str("nonzero"),
            Residual::MaxAbs(x) => write!(f, "{x:.3e}"),
        }
    }
}

/// Outcome of one verified identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// The formula being certified.
    pub paper_ref: String,
    pub status: Status,
    pub mode: CheckMode,
    pub residual: Residual,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioConstant {
    pub relation: String,
    pub slot: usize,
    pub value: String,
}

/// The sign conventions and residual ratios a report was produced under.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CalibrationRecord {
    pub e_sign: i64,
    pub lorentz_sign: i64,
    pub ratio_constants: Vec<RatioConstant>,
}

impl From<&Calibration> for CalibrationRecord {
    fn from(c: &Calibration) -> Self {
        let mut ratio_constants = Vec::new();
        for (relation, ratios) in [
            ("homogeneous", &c.homogeneous_ratios),
            ("inhomogeneous", &c.inhomogeneous_ratios),
        ] {
            for (k, r) in ratios.iter().enumerate() {
                ratio_constants.push(RatioConstant {
                    relation: relation.to_string(),
                    slot: k + 1,
                    value: r.to_string(),
                });
            }
        }
        CalibrationRecord {
            e_sign: c.e_sign.value(),
            lorentz_sign: c.lorentz_sign,
            ratio_constants,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: u32,
    pub degree: u32,
    pub calibration: CalibrationRecord,
    pub checks: Vec<CheckResult>,
    /// Wall-clock time; `None` unless timing was requested, which keeps
    /// reports byte-identical across runs.
    pub duration_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Parameters of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: u32,
    pub degree: u32,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, trials: 100, degree: 3, timing: false }
    }
}

/// Runs every check of `suite`.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    run_filtered(suite.name(), cfg, |name| suite.includes(name))
}

/// Runs the checks whose names satisfy `select`, labelling the report `label`.
pub fn run_filtered<F: Fn(&str) -> bool>(label: &str, cfg: &VerifyConfig, select: F) -> Result<Report> {
    if cfg.trials < 1 {
        return Err(Error::Usage("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let cal = Calibration::compute()?;
    let ctx = checks::Context { seed: cfg.seed, trials: cfg.trials, degree: cfg.degree, cal: &cal };
    let selected: Vec<_> = checks::registry().into_iter().filter(|c| select(c.name)).collect();
    let mut results: Vec<CheckResult> = selected.par_iter().map(|c| c.run(&ctx)).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(Report {
        suite: label.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        degree: cfg.degree,
        calibration: CalibrationRecord::from(&cal),
        checks: results,
        duration_ms: cfg.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!("unknown format `{s}` (expected text or json)"))),
        }
    }
}

pub fn render_json(r: &Report) -> Result<String> {
    let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite {}  seed {}  trials {}  degree {}",
        r.suite, r.seed, r.trials, r.degree
    );
    let ratios: Vec<String> = r
        .calibration
        .ratio_constants
        .iter()
        .map(|c| format!("{}[{}]={}", &c.relation[..1], c.slot, c.value))
        .collect();
    let _ = writeln!(
        out,
        "calibration  e_sign {:+}  lorentz_sign {:+}  ratios {}",
        r.calibration.e_sign,
        r.calibration.lorentz_sign,
        ratios.join(" ")
    );
    let _ = writeln!(out);
    let w_name = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
    let w_ref = r.checks.iter().map(|c| c.paper_ref.chars().count()).max().unwrap_or(7).max(7);
    let _ = writeln!(
        out,
        "{:<w_name$}  {:<6}  {:<5}  {:<12}  {:<w_ref$}  details",
        "check", "status", "mode", "residual", "formula"
    );
    for c in &r.checks {
        let pad = w_ref - c.paper_ref.chars().count();
        let _ = writeln!(
            out,
            "{:<w_name$}  {:<6}  {:<5}  {:<12}  {}{}  {}",
            c.name,
            c.status.to_string(),
            c.mode.to_string(),
            c.residual.to_string(),
            c.paper_ref,
            " ".repeat(pad),
            c.details
        );
    }
    let fails = r.failures().count();
    let _ = writeln!(out);
    let _ = write!(out, "{} checks, {} failed", r.checks.len(), fails);
    if let Some(ms) = r.duration_ms {
        let _ = write!(out, ", {ms} ms");
    }
    out.push('\n');
    out
}

/// Writes the report to `path`, or stdout when `path` is `None`.
pub fn emit_report(r: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = match format {
        Format::Text => render_text(r),
        Format::Json => render_json(r)?,
    };
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
