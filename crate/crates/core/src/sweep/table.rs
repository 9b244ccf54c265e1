use std::fmt::Write as _;

use crate::quantifiers::CorrelationReport;

use super::config::SweepVariable;

pub const QUANTITY_COLUMNS: [&str; 6] = ["negativity", "discord1", "discord2", "locality_m", "bell_b", "chsh"];
pub const CP_COLUMN: &str = "cp_discord_diff";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowValues {
    pub report: CorrelationReport,
    pub cp_discord_diff: Option<f64>,
}

impl RowValues {
    pub fn quantities(&self) -> [f64; 6] {
        let r = &self.report;
        [r.negativity, r.discord1, r.discord2, r.locality_m, r.bell_b, r.chsh_value]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub series: String,
    pub x: f64,
    pub values: Result<RowValues, String>,
}

/// Sweep output, one row per point, series stacked in order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub variable: SweepVariable,
    pub has_cp: bool,
    pub rows: Vec<Row>,
}

/// `{:.16e}` (17 significant digits) with negative zero folded into zero.
pub fn format_number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

impl Table {
    pub fn header(&self) -> Vec<String> {
        let mut h = vec!["series".to_string(), self.variable.name().to_string()];
        h.extend(QUANTITY_COLUMNS.iter().map(|s| s.to_string()));
        if self.has_cp {
            h.push(CP_COLUMN.to_string());
        }
        h.push("status".to_string());
        h
    }

    pub fn error_count(&self) -> usize {
        self.rows.iter().filter(|r| r.values.is_err()).count()
    }

    pub fn series_names(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.series.as_str()) {
                out.push(&r.series);
            }
        }
        out
    }

    pub fn series(&self, name: &str) -> impl Iterator<Item = &Row> {
        let name = name.to_string();
        self.rows.iter().filter(move |r| r.series == name)
    }

    pub fn append(&mut self, other: Table) {
        debug_assert_eq!(self.variable, other.variable);
        debug_assert_eq!(self.has_cp, other.has_cp);
        self.rows.extend(other.rows);
    }

    /// Comma-separated, header first, `\n` line endings.
    pub fn to_csv(&self) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        let blanks = QUANTITY_COLUMNS.len() + usize::from(self.has_cp);
        for row in &self.rows {
            write!(out, "{},{}", row.series, format_number(row.x)).unwrap();
            match &row.values {
                Ok(v) => {
                    for q in v.quantities() {
                        write!(out, ",{}", format_number(q)).unwrap();
                    }
                    if self.has_cp {
                        let d = v.cp_discord_diff.unwrap_or(f64::NAN);
                        write!(out, ",{}", format_number(d)).unwrap();
                    }
                    out.push_str(",ok\n");
                }
                Err(msg) => {
                    out.push_str(&",".repeat(blanks));
                    let clean = msg.replace([',', '\n', '\r'], ";");
                    writeln!(out, ",error: {clean}").unwrap();
                }
            }
        }
        out
    }
}
