//! Reduced-grid run of every scenario, twice, with a byte-for-byte comparison.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::config::{ScenarioConfig, ScenarioKind};
use crate::error::CliError;
use crate::io::{summary_csv, write_file};
use crate::scenarios::{run_to_dir, ScenarioReport};

pub const SELFTEST_GRID: usize = 256;

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub reports: Vec<(ScenarioReport, Duration)>,
    /// Files whose contents differ between the two runs (or exist in only one).
    pub mismatches: Vec<String>,
    pub files_compared: usize,
    pub elapsed: Duration,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.reports.iter().all(|(r, _)| r.passed())
    }
}

pub fn selftest_config(kind: ScenarioKind) -> Result<ScenarioConfig, CliError> {
    let cfg = ScenarioConfig::defaults(kind);
    if kind.uses_grid() && cfg.grid.n > SELFTEST_GRID {
        cfg.with_grid_n(SELFTEST_GRID)
    } else {
        Ok(cfg)
    }
}

/// Runs all scenarios into `<dir>/<scenario>/` and writes the aggregate `<dir>/summary.csv`.
pub fn run_all(dir: &Path) -> Result<Vec<(ScenarioReport, Duration)>, CliError> {
    let mut reports = Vec::new();
    for kind in ScenarioKind::ALL {
        let start = Instant::now();
        let report = run_to_dir(&selftest_config(kind)?, &dir.join(kind.name()))?;
        reports.push((report, start.elapsed()));
    }
    reports.sort_by_key(|(r, _)| r.scenario.name());
    let rows: Vec<_> = reports.iter().flat_map(|(r, _)| r.rows.iter().cloned()).collect();
    write_file(&dir.join("summary.csv"), &summary_csv(&rows)?)?;
    Ok(reports)
}

fn digests(dir: &Path) -> Result<BTreeMap<PathBuf, Vec<u8>>, CliError> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).map_err(|e| CliError::io(&d, e))? {
            let path = entry.map_err(|e| CliError::io(&d, e))?.path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let bytes = std::fs::read(&path).map_err(|e| CliError::io(&path, e))?;
                let rel = path.strip_prefix(dir).expect("under root").to_path_buf();
                out.insert(rel, Sha256::digest(&bytes).to_vec());
            }
        }
    }
    Ok(out)
}

/// Runs everything twice. The second run is kept in `out` when given.
pub fn selftest(out: Option<&Path>) -> Result<SelftestReport, CliError> {
    let start = Instant::now();
    let scratch = tempfile::tempdir().map_err(|e| CliError::io(std::env::temp_dir(), e))?;
    let first_dir = scratch.path().join("first");
    let second_dir = match out {
        Some(p) => p.to_path_buf(),
        None => scratch.path().join("second"),
    };
    run_all(&first_dir)?;
    let reports = run_all(&second_dir)?;
    let a = digests(&first_dir)?;
    let b = digests(&second_dir)?;
    let mut mismatches = Vec::new();
    for (path, digest) in &a {
        if b.get(path) != Some(digest) {
            mismatches.push(path.display().to_string());
        }
    }
    for path in b.keys().filter(|p| !a.contains_key(*p)) {
        mismatches.push(path.display().to_string());
    }
    Ok(SelftestReport {
        reports,
        mismatches,
        files_compared: a.len(),
        elapsed: start.elapsed(),
    })
}
