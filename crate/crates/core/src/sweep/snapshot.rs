use std::fs;
use std::path::Path;

use super::SweepError;

/// Per-cell absolute tolerance when comparing against a stored table.
pub const SNAPSHOT_TOL: f64 = 1e-9;

/// First cell where two CSV texts disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    /// 1-based line number, header included.
    pub line: usize,
    pub column: String,
    pub expected: String,
    pub actual: String,
}

fn cells_match(a: &str, b: &str, tol: f64) -> bool {
    if a == b {
        return true;
    }
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) => (x.is_nan() && y.is_nan()) || (x - y).abs() <= tol,
        _ => false,
    }
}

/// Cell-by-cell comparison; numbers within `tol`, everything else verbatim.
pub fn compare_csv(expected: &str, actual: &str, tol: f64) -> Option<Divergence> {
    let exp: Vec<&str> = expected.lines().collect();
    let act: Vec<&str> = actual.lines().collect();
    let header: Vec<&str> = exp.first().map(|h| h.split(',').collect()).unwrap_or_default();
    for i in 0..exp.len().max(act.len()) {
        let (e, a) = match (exp.get(i), act.get(i)) {
            (Some(e), Some(a)) => (*e, *a),
            (e, a) => {
                return Some(Divergence {
                    line: i + 1,
                    column: "<row>".into(),
                    expected: e.unwrap_or(&"<missing>").to_string(),
                    actual: a.unwrap_or(&"<missing>").to_string(),
                })
            }
        };
        let ec: Vec<&str> = e.split(',').collect();
        let ac: Vec<&str> = a.split(',').collect();
        for j in 0..ec.len().max(ac.len()) {
            let (x, y) = (ec.get(j).copied().unwrap_or("<missing>"), ac.get(j).copied().unwrap_or("<missing>"));
            if !cells_match(x, y, tol) {
                let column = header.get(j).map(|s| s.to_string()).unwrap_or_else(|| format!("#{}", j + 1));
                return Some(Divergence { line: i + 1, column, expected: x.into(), actual: y.into() });
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnapshotOutcome {
    Blessed,
    Matched,
}

pub fn bless_snapshot(path: &Path, csv: &str) -> Result<(), SweepError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| SweepError::io(dir, e))?;
    }
    fs::write(path, csv).map_err(|e| SweepError::io(path, e))
}

pub fn check_snapshot(path: &Path, csv: &str) -> Result<(), SweepError> {
    let stored = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(SweepError::SnapshotMissing { path: path.to_path_buf() })
        }
        Err(e) => return Err(SweepError::io(path, e)),
    };
    match compare_csv(&stored, csv, SNAPSHOT_TOL) {
        None => Ok(()),
        Some(d) => Err(SweepError::SnapshotMismatch { path: path.to_path_buf(), divergence: d }),
    }
}

/// Writes the snapshot when `bless` is set, otherwise checks against it.
pub fn regression_snapshot(path: &Path, csv: &str, bless: bool) -> Result<SnapshotOutcome, SweepError> {
    if bless {
        bless_snapshot(path, csv)?;
        Ok(SnapshotOutcome::Blessed)
    } else {
        check_snapshot(path, csv).map(|_| SnapshotOutcome::Matched)
    }
}
