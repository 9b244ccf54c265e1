//! Named sweeps behind the five figure families.
//!
//! Coupled-field presets use `p = 1`, `B/p = κ = χ = 1`, `θ = π/4`.

use super::config::{Scenario, SweepConfig, SweepRange, SweepVariable};

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub title: &'static str,
    pub configs: Vec<SweepConfig>,
}

pub const PRESET_NAMES: [&str; 12] = [
    "fig1", "fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f", "fig3a", "fig3b", "fig3c", "fig4", "fig5",
];

const PARTNER_POSITIVE: f64 = 1.0;
const PARTNER_POSNEG: f64 = 3.0;

fn mass_axis() -> SweepRange {
    SweepRange::new(0.0, 10.0, 201)
}

fn beta_axis() -> SweepRange {
    SweepRange::new(0.0, 10.0, 201)
}

fn mixture(a: f64, partner: f64) -> SweepConfig {
    SweepConfig::new(Scenario::Mixture, SweepVariable::MOverP, mass_axis())
        .set("A", a)
        .set("partner", partner)
}

fn thermal(m_over_p: f64) -> SweepConfig {
    SweepConfig::new(Scenario::Thermal, SweepVariable::BetaP, beta_axis()).set("m_over_p", m_over_p)
}

pub fn preset(name: &str) -> Option<Preset> {
    let single = |name, title, c: SweepConfig| Preset { name, title, configs: vec![c.with_label(name)] };
    let p = match name {
        "fig1" => single(
            "fig1",
            "Free helicity mixture, A = 0.5",
            SweepConfig::new(Scenario::Free, SweepVariable::MOverE, SweepRange::new(0.0, 1.0, 101)).set("A", 0.5),
        ),
        "fig2a" => single("fig2a", "A·ρ₀₀ + (1−A)·ρ₀₁, A = 0.1", mixture(0.1, PARTNER_POSITIVE)),
        "fig2b" => single("fig2b", "A·ρ₀₀ + (1−A)·ρ₀₁, A = 0.3", mixture(0.3, PARTNER_POSITIVE)),
        "fig2c" => single("fig2c", "A·ρ₀₀ + (1−A)·ρ₀₁, A = 0.5", mixture(0.5, PARTNER_POSITIVE)),
        "fig2d" => single("fig2d", "A·ρ₀₀ + (1−A)·ρ₁₁, A = 0.1", mixture(0.1, PARTNER_POSNEG)),
        "fig2e" => single("fig2e", "A·ρ₀₀ + (1−A)·ρ₁₁, A = 0.3", mixture(0.3, PARTNER_POSNEG)),
        "fig2f" => single("fig2f", "A·ρ₀₀ + (1−A)·ρ₁₁, A = 0.5", mixture(0.5, PARTNER_POSNEG)),
        "fig3a" => single("fig3a", "Gibbs state, m/p = 0", thermal(0.0)),
        "fig3b" => single("fig3b", "Gibbs state, m/p = 1", thermal(1.0)),
        "fig3c" => single("fig3c", "Gibbs state, m/p = 10", thermal(10.0)),
        "fig4" => {
            let mut configs = Vec::new();
            for (tag, partner) in [("pos", PARTNER_POSITIVE), ("posneg", PARTNER_POSNEG)] {
                for a in [0.1, 0.3, 0.5] {
                    let mut c = mixture(a, partner).with_label(format!("{tag}_A{a}"));
                    c.scenario = Scenario::CpDiff;
                    configs.push(c);
                }
            }
            Preset { name: "fig4", title: "|𝒟^CP − 𝒟| for eigenstate mixtures", configs }
        }
        "fig5" => {
            let configs = [1.0, 5.0, 10.0]
                .into_iter()
                .map(|m| {
                    let mut c = thermal(m).with_label(format!("m_over_p{m}"));
                    c.scenario = Scenario::CpDiffThermal;
                    c
                })
                .collect();
            Preset { name: "fig5", title: "|𝒟^CP − 𝒟| for Gibbs states", configs }
        }
        _ => return None,
    };
    Some(p)
}

pub fn all_presets() -> Vec<Preset> {
    PRESET_NAMES.iter().map(|n| preset(n).expect("listed preset exists")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_is_valid() {
        for p in all_presets() {
            assert!(!p.configs.is_empty());
            for c in &p.configs {
                c.validate().unwrap_or_else(|e| panic!("{}: {e}", p.name));
            }
        }
        assert!(preset("fig6").is_none());
    }

    #[test]
    fn fig4_series_labels() {
        let labels: Vec<_> = preset("fig4").unwrap().configs.iter().map(|c| c.label.clone()).collect();
        assert_eq!(labels, ["pos_A0.1", "pos_A0.3", "pos_A0.5", "posneg_A0.1", "posneg_A0.3", "posneg_A0.5"]);
    }
}
