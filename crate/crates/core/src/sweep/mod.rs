//! Parameter sweeps over the model families, with CSV/SVG output and
//! frozen-snapshot regression checks.

mod config;
mod presets;
mod snapshot;
mod svg;
mod table;

use std::path::{Path, PathBuf};

use rayon::prelude::*;

pub use config::{Scenario, SweepConfig, SweepRange, SweepVariable};
pub use presets::{all_presets, preset, Preset, PRESET_NAMES};
pub use snapshot::{
    bless_snapshot, check_snapshot, compare_csv, regression_snapshot, Divergence, SnapshotOutcome,
    SNAPSHOT_TOL,
};
pub use svg::{emit_svg, ChartStyle};
pub use table::{format_number, Row, RowValues, Table, CP_COLUMN, QUANTITY_COLUMNS};

use crate::dirac::{mixture_state, rho_free};
use crate::quantifiers::correlation_report;
use crate::symmetry::{cp_discord_difference, cp_discord_difference_thermal};
use crate::thermal::gibbs_state;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error("invalid configuration ({field}): {message}")]
    Config { field: String, message: String },

    #[error("table has fewer than two rows")]
    EmptyTable,

    #[error("snapshot {} not found (run with --bless to create it)", path.display())]
    SnapshotMissing { path: PathBuf },

    #[error(
        "snapshot {} differs at line {}, column {}: expected {}, got {}",
        path.display(), divergence.line, divergence.column, divergence.expected, divergence.actual
    )]
    SnapshotMismatch { path: PathBuf, divergence: Divergence },

    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
}

impl SweepError {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        SweepError::Config { field: field.into(), message: message.into() }
    }

    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        SweepError::Io { path: path.to_path_buf(), message: e.to_string() }
    }
}

/// All quantities at one sweep value.
pub fn evaluate_point(config: &SweepConfig, x: f64) -> crate::Result<RowValues> {
    let side = config.discord_side;
    let (rho, cp_discord_diff) = match config.scenario {
        Scenario::Free => (rho_free(&config.free_params(x)?), None),
        Scenario::Mixture => {
            (mixture_state(&config.coupling_params(x)?, &config.mixture_weights(x)?)?, None)
        }
        Scenario::Thermal => (gibbs_state(&config.coupling_params(x)?, config.thermal_params(x)?)?, None),
        Scenario::CpDiff => {
            let cp = config.coupling_params(x)?;
            let w = config.mixture_weights(x)?;
            (mixture_state(&cp, &w)?, Some(cp_discord_difference(&cp, &w, side)?))
        }
        Scenario::CpDiffThermal => {
            let cp = config.coupling_params(x)?;
            let tp = config.thermal_params(x)?;
            (gibbs_state(&cp, tp)?, Some(cp_discord_difference_thermal(&cp, tp, side)?))
        }
    };
    Ok(RowValues { report: correlation_report(&rho)?, cp_discord_diff })
}

/// Evaluates every point in parallel; rows come back in sweep order and a
/// failing point becomes an error row instead of aborting.
pub fn run_sweep(config: &SweepConfig) -> Result<Table, SweepError> {
    config.validate()?;
    let rows = config
        .range
        .values()
        .into_par_iter()
        .map(|x| Row {
            series: config.label.clone(),
            x,
            values: evaluate_point(config, x).map_err(|e| {
                log::warn!("{} at {}={x}: {e}", config.label, config.variable);
                e.to_string()
            }),
        })
        .collect();
    Ok(Table { variable: config.variable, has_cp: config.scenario.has_cp_column(), rows })
}

/// Runs each series of a preset and stacks the rows.
pub fn run_configs(configs: &[SweepConfig]) -> Result<Table, SweepError> {
    let first = configs.first().ok_or_else(|| SweepError::config("series", "no sweep configured"))?;
    let mut table = run_sweep(first)?;
    for c in &configs[1..] {
        if c.variable != first.variable || c.scenario.has_cp_column() != first.scenario.has_cp_column() {
            return Err(SweepError::config("series", "all series must share the sweep variable and columns"));
        }
        table.append(run_sweep(c)?);
    }
    Ok(table)
}

pub fn run_preset(p: &Preset) -> Result<Table, SweepError> {
    run_configs(&p.configs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{discord_free_exact, FreeParams};

    #[test]
    fn free_sweep_follows_exact_discord() {
        let c = SweepConfig::new(Scenario::Free, SweepVariable::MOverE, SweepRange::new(0.0, 1.0, 11)).set("A", 0.3);
        let t = run_sweep(&c).unwrap();
        assert_eq!(t.rows.len(), 11);
        for r in &t.rows {
            let v = r.values.as_ref().unwrap();
            let fp = FreeParams::from_mass_ratio(r.x, 0.3).unwrap();
            assert!((v.report.discord1 - discord_free_exact(&fp)).abs() < 1e-12);
            assert!(v.report.negativity < 1e-12);
        }
    }

    #[test]
    fn failing_points_become_error_rows() {
        // B = 0 makes every point degenerate.
        let c = SweepConfig::new(Scenario::Mixture, SweepVariable::MOverP, SweepRange::new(0.0, 1.0, 3)).set("B_over_p", 0.0);
        let t = run_sweep(&c).unwrap();
        assert_eq!(t.error_count(), 3);
        assert!(t.to_csv().lines().nth(1).unwrap().contains("error: energy spectrum is degenerate"));
    }

    #[test]
    fn invalid_config_is_rejected_up_front() {
        let mut c = SweepConfig::new(Scenario::Thermal, SweepVariable::BetaP, SweepRange::new(0.0, 1.0, 3));
        c.range.points = 0;
        assert!(matches!(run_sweep(&c), Err(SweepError::Config { .. })));
    }

    #[test]
    fn cp_scenarios_add_a_column() {
        let c = SweepConfig::new(Scenario::CpDiff, SweepVariable::MOverP, SweepRange::new(0.5, 1.0, 2));
        let t = run_sweep(&c).unwrap();
        assert!(t.header().contains(&CP_COLUMN.to_string()));
        assert!(t.rows.iter().all(|r| r.values.as_ref().unwrap().cp_discord_diff.is_some()));
    }
}
