//! Report assembly and output: `summary.json` plus one CSV per table.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    /// The invariant this entry checks.
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&'static str]) -> Self {
        Self { name: name.to_string(), header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push_numbers(&mut self, row: &[f64]) {
        self.rows.push(row.iter().map(|x| fmt_num(*x)).collect());
    }
}

/// 17 significant digits, independent of locale.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub library: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub trunc_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub kind: String,
    pub name: Option<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub constants: BTreeMap<String, f64>,
    pub tables: Vec<String>,
    pub provenance: Provenance,
    pub scenario: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub summary: Summary,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.summary.checks.iter().filter(|c| !c.passed)
    }

    pub fn write(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut json = serde_json::to_string_pretty(&self.summary).map_err(std::io::Error::other)?;
        json.push('\n');
        fs::write(dir.join("summary.json"), json)?;
        for t in &self.tables {
            let mut w = csv::Writer::from_path(dir.join(format!("{}.csv", t.name)))?;
            w.write_record(&t.header)?;
            for row in &t.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        Ok(())
    }
}

/// Accumulates checks, constants and tables while a scenario runs.
#[derive(Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub constants: BTreeMap<String, f64>,
    pub tables: Vec<Table>,
}

impl Outcome {
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    /// Passes iff `worst <= tol`.
    pub fn bound(&mut self, name: &str, worst: f64, tol: f64) {
        self.check(name, worst <= tol, format!("max deviation {worst:.3e}, tolerance {tol:.1e}"));
    }

    pub fn constant(&mut self, name: &str, value: f64) {
        self.constants.insert(name.to_string(), value);
    }
}
