//! Scenario runner for `corner-core`: reads JSON scenario files, runs the
//! requested checks and writes `summary.json` plus CSV tables.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod grid;
pub mod report;
pub mod scenarios;
pub mod schema;

use std::fs;
use std::path::{Path, PathBuf};

use corner_core::DEFAULT_TRUNC_ORDER;

pub use report::Report;
use report::{Provenance, Summary};
use scenarios::Ctx;
use schema::Scenario;

/// Malformed scenario input.
#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("{path}:{line}:{column}: {message}")]
    Syntax { path: String, line: usize, column: usize, message: String },
    #[error("{path}: field `{field}`: {message}")]
    Field { path: String, field: String, message: String },
}

/// A domain error raised while running a well-formed scenario.
#[derive(Debug, thiserror::Error)]
#[error("{path}: {kind} scenario failed in {stage}: {source}")]
pub struct ScenarioError {
    pub path: String,
    pub kind: &'static str,
    pub stage: &'static str,
    #[source]
    pub source: corner_core::Error,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl RunError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Schema(_) => 2,
            RunError::Scenario(_) => 3,
            RunError::Io { .. } => 4,
        }
    }
}

/// Command-line overrides of scenario settings.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub trunc_order: Option<usize>,
    pub seed: Option<u64>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io { path: path.display().to_string(), source }
}

/// Parses and validates scenario text; `path` is only used in messages.
pub fn parse_scenario(text: &str, path: &str) -> Result<(Scenario, serde_json::Value), SchemaError> {
    let syntax = |e: serde_json::Error| SchemaError::Syntax {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    };
    let echo: serde_json::Value = serde_json::from_str(text).map_err(syntax)?;
    let scenario: Scenario = serde_json::from_str(text).map_err(syntax)?;
    scenario
        .validate()
        .map_err(|(field, message)| SchemaError::Field { path: path.to_string(), field, message })?;
    Ok((scenario, echo))
}

/// Runs a parsed scenario. Deterministic for a fixed seed.
pub fn run_scenario(scenario: &Scenario, echo: serde_json::Value, path: &str, ov: Overrides) -> Result<Report, RunError> {
    let common = scenario.common();
    let seed = ov.seed.unwrap_or(common.seed);
    let order = ov.trunc_order.or(common.precision.trunc_order).unwrap_or(DEFAULT_TRUNC_ORDER);
    let ctx = Ctx { seed, order };
    let out = scenarios::run(scenario, &ctx).map_err(|e| ScenarioError {
        path: path.to_string(),
        kind: scenario.kind(),
        stage: e.stage,
        source: e.source,
    })?;
    let summary = Summary {
        kind: scenario.kind().to_string(),
        name: common.name,
        passed: out.checks.iter().all(|c| c.passed),
        checks: out.checks,
        constants: out.constants,
        tables: out.tables.iter().map(|t| format!("{}.csv", t.name)).collect(),
        provenance: Provenance { library: "corner-core", version: env!("CARGO_PKG_VERSION"), seed, trunc_order: order },
        scenario: echo,
    };
    Ok(Report { summary, tables: out.tables })
}

/// Reads `path`, runs it and writes the report into `out`.
pub fn run_file(path: &Path, out: &Path, ov: Overrides) -> Result<Report, RunError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let label = path.display().to_string();
    let (scenario, echo) = parse_scenario(&text, &label)?;
    let report = run_scenario(&scenario, echo, &label, ov)?;
    report.write(out).map_err(io_err(out))?;
    Ok(report)
}

/// Every `*.json` in `dir`, sorted by name.
pub fn batch_files(dir: &Path) -> Result<Vec<PathBuf>, RunError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Per-file results of a batch run.
pub type BatchResults = Vec<(PathBuf, Result<Report, RunError>)>;

/// Runs every scenario of `dir` into `out/<file stem>/`, concurrently when
/// the `parallel` feature is on. Results are in file order.
pub fn run_batch(dir: &Path, out: &Path, ov: Overrides) -> Result<BatchResults, RunError> {
    let files = batch_files(dir)?;
    let results = corner_core::par::map(&files, |f| {
        let stem = f.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        run_file(f, &out.join(stem), ov)
    });
    Ok(files.into_iter().zip(results).collect())
}
