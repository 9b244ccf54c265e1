use std::fmt::Write as _;

use crate::quantifiers::Side;

use super::table::Table;
use super::SweepError;

#[derive(Debug, Clone, PartialEq)]
pub struct ChartStyle {
    pub width: f64,
    pub height: f64,
    pub title: String,
    pub discord_side: Side,
}

impl Default for ChartStyle {
    fn default() -> Self {
        Self { width: 640.0, height: 400.0, title: String::new(), discord_side: Side::Parity }
    }
}

const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 36.0;
const MARGIN_BOTTOM: f64 = 48.0;
const TICKS: usize = 5;

/// Stroke patterns: solid, dashed, dotted, then mixed patterns for extra series.
const DASHES: [&str; 6] = ["", "8 4", "2 3", "8 3 2 3", "12 4", "4 2"];
const COLORS: [&str; 6] = ["#1f4e9a", "#b2402c", "#2b7a3d", "#7a3d8c", "#a67c00", "#333333"];

struct Curve {
    label: String,
    dash: &'static str,
    color: &'static str,
    /// Consecutive finite points; a failed row breaks the line.
    segments: Vec<Vec<(f64, f64)>>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn curves(table: &Table, side: Side) -> Vec<Curve> {
    let series = table.series_names();
    let mut out = Vec::new();
    // (label suffix, value picker, dash index)
    type Pick = fn(&super::table::RowValues, Side) -> Option<f64>;
    let picks: Vec<(&str, Pick, usize)> = if table.has_cp {
        vec![("|𝒟ᶜᴾ−𝒟|", |v, _| v.cp_discord_diff, 0)]
    } else {
        vec![
            ("𝒩", |v, _| Some(v.report.negativity), 0),
            ("𝒟", |v, s| Some(v.report.discord(s)), 1),
            ("ℬ", |v, _| Some(v.report.bell_b), 2),
        ]
    };
    for (si, name) in series.iter().enumerate() {
        for (qi, (qname, pick, dash)) in picks.iter().enumerate() {
            let mut segments = vec![Vec::new()];
            for row in table.series(name) {
                match row.values.as_ref().ok().and_then(|v| pick(v, side)) {
                    Some(y) if y.is_finite() => segments.last_mut().unwrap().push((row.x, y)),
                    _ => {
                        if !segments.last().unwrap().is_empty() {
                            segments.push(Vec::new());
                        }
                    }
                }
            }
            segments.retain(|s| !s.is_empty());
            let (dash, color) = if table.has_cp {
                (DASHES[si % DASHES.len()], COLORS[si % COLORS.len()])
            } else {
                (DASHES[*dash], COLORS[(si * picks.len() + qi) % COLORS.len()])
            };
            let label = if series.len() > 1 || table.has_cp { format!("{qname} {name}") } else { qname.to_string() };
            out.push(Curve { label, dash, color, segments });
        }
    }
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), v| (l.min(v), h.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        return (lo - 0.5, hi + 0.5);
    }
    let pad = 0.05 * (hi - lo);
    (lo - pad, hi + pad)
}

fn tick_label(v: f64) -> String {
    let v = if v.abs() < 1e-12 { 0.0 } else { v };
    format!("{v:.3}").trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Line chart of a sweep table: `𝒩` solid, `𝒟` dashed, `ℬ` dotted; CP tables
/// draw one `|𝒟ᶜᴾ − 𝒟|` curve per series with a distinct stroke pattern.
pub fn emit_svg(table: &Table, style: &ChartStyle) -> Result<String, SweepError> {
    if table.rows.len() < 2 {
        return Err(SweepError::EmptyTable);
    }
    let curves = curves(table, style.discord_side);
    let (x0, x1) = {
        let (lo, hi) = table.rows.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), r| (l.min(r.x), h.max(r.x)));
        if hi > lo { (lo, hi) } else { (lo - 0.5, hi + 0.5) }
    };
    let (y0, y1) = bounds(curves.iter().flat_map(|c| c.segments.iter().flatten().map(|p| p.1)));

    let (w, h) = (style.width, style.height);
    let pw = w - MARGIN_LEFT - MARGIN_RIGHT;
    let ph = h - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| MARGIN_TOP + (y1 - y) / (y1 - y0) * ph;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    if !style.title.is_empty() {
        writeln!(s, r#"<text x="{:.2}" y="20" text-anchor="middle" font-size="14">{}</text>"#, MARGIN_LEFT + pw / 2.0, escape(&style.title)).unwrap();
    }
    writeln!(
        s,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
    )
    .unwrap();

    for i in 0..TICKS {
        let t = i as f64 / (TICKS - 1) as f64;
        let xv = x0 + t * (x1 - x0);
        let yv = y0 + t * (y1 - y0);
        let (px, py) = (sx(xv), sy(yv));
        let bottom = MARGIN_TOP + ph;
        writeln!(s, r#"<line x1="{px:.2}" y1="{bottom:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#, bottom + 5.0).unwrap();
        writeln!(s, r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, bottom + 18.0, tick_label(xv)).unwrap();
        writeln!(s, r#"<line x1="{:.2}" y1="{py:.2}" x2="{MARGIN_LEFT}" y2="{py:.2}" stroke="black"/>"#, MARGIN_LEFT - 5.0).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, MARGIN_LEFT - 8.0, py + 4.0, tick_label(yv)).unwrap();
    }
    if y0 < 0.0 && y1 > 0.0 {
        let py = sy(0.0);
        writeln!(s, r##"<line x1="{MARGIN_LEFT}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#bbbbbb"/>"##, MARGIN_LEFT + pw).unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + pw / 2.0,
        h - 10.0,
        escape(table.variable.label())
    )
    .unwrap();

    for (i, c) in curves.iter().enumerate() {
        let dash = if c.dash.is_empty() { String::new() } else { format!(r#" stroke-dasharray="{}""#, c.dash) };
        for seg in &c.segments {
            let pts: Vec<String> = seg.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
            writeln!(s, r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#, c.color, pts.join(" ")).unwrap();
        }
        let ly = MARGIN_TOP + 10.0 + 18.0 * i as f64;
        let lx = MARGIN_LEFT + pw + 12.0;
        writeln!(s, r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="1.5"{dash}/>"#, lx + 28.0, c.color).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 34.0, ly + 4.0, escape(&c.label)).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
