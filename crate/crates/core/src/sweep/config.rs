use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use crate::dirac::{electric_substitution, CouplingParams, FreeParams, MixtureWeights};
use crate::quantifiers::Side;
use crate::thermal::ThermalParams;

use super::SweepError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Free,
    Mixture,
    Thermal,
    CpDiff,
    CpDiffThermal,
}

impl Scenario {
    pub const ALL: [Scenario; 5] =
        [Scenario::Free, Scenario::Mixture, Scenario::Thermal, Scenario::CpDiff, Scenario::CpDiffThermal];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Free => "free",
            Scenario::Mixture => "mixture",
            Scenario::Thermal => "thermal",
            Scenario::CpDiff => "cp_diff",
            Scenario::CpDiffThermal => "cp_diff_thermal",
        }
    }

    pub fn has_cp_column(self) -> bool {
        matches!(self, Scenario::CpDiff | Scenario::CpDiffThermal)
    }

    fn allowed_variables(self) -> &'static [SweepVariable] {
        use SweepVariable::*;
        match self {
            Scenario::Free => &[MOverE, A],
            Scenario::Mixture | Scenario::CpDiff => &[MOverP, A],
            Scenario::Thermal | Scenario::CpDiffThermal => &[BetaP, MOverP],
        }
    }

    fn allowed_keys(self) -> &'static [&'static str] {
        match self {
            Scenario::Free => &["A", "m_over_E"],
            Scenario::Mixture | Scenario::CpDiff => {
                &["A", "m_over_p", "B_over_p", "kappa", "chi", "theta", "partner", "electric"]
            }
            Scenario::Thermal | Scenario::CpDiffThermal => {
                &["beta_p", "m_over_p", "B_over_p", "kappa", "chi", "theta", "electric"]
            }
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scenario::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SweepError::config("scenario", format!("unknown scenario '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepVariable {
    MOverE,
    MOverP,
    A,
    BetaP,
}

impl SweepVariable {
    pub const ALL: [SweepVariable; 4] =
        [SweepVariable::MOverE, SweepVariable::MOverP, SweepVariable::A, SweepVariable::BetaP];

    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::MOverE => "m_over_E",
            SweepVariable::MOverP => "m_over_p",
            SweepVariable::A => "A",
            SweepVariable::BetaP => "beta_p",
        }
    }

    /// Axis label for charts.
    pub fn label(self) -> &'static str {
        match self {
            SweepVariable::MOverE => "m/E",
            SweepVariable::MOverP => "m/p",
            SweepVariable::A => "A",
            SweepVariable::BetaP => "βp",
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SweepVariable::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SweepError::config("var", format!("unknown sweep variable '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl SweepRange {
    pub fn new(start: f64, stop: f64, points: usize) -> Self {
        Self { start, stop, points }
    }

    /// `start + (stop − start)·i/(points − 1)`; the last value is exactly `stop`.
    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            return self.stop;
        }
        self.start + (self.stop - self.start) * i as f64 / (self.points - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.value(i)).collect()
    }
}

/// One curve: a scenario, a swept variable and the values held fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Written to the `series` column.
    pub label: String,
    pub scenario: Scenario,
    pub variable: SweepVariable,
    pub range: SweepRange,
    pub fixed: BTreeMap<String, f64>,
    /// Explicit weights override `A`/`partner` unless `A` is swept.
    pub weights: Option<MixtureWeights>,
    pub discord_side: Side,
}

impl SweepConfig {
    pub fn new(scenario: Scenario, variable: SweepVariable, range: SweepRange) -> Self {
        Self {
            label: scenario.name().to_string(),
            scenario,
            variable,
            range,
            fixed: BTreeMap::new(),
            weights: None,
            discord_side: Side::Parity,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn set(mut self, key: &str, value: f64) -> Self {
        self.fixed.insert(key.to_string(), value);
        self
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        let r = &self.range;
        if !(r.start.is_finite() && r.stop.is_finite()) {
            return Err(SweepError::config("range", "bounds must be finite"));
        }
        if r.start >= r.stop {
            return Err(SweepError::config("range", format!("start {} must be below stop {}", r.start, r.stop)));
        }
        if r.points < 2 {
            return Err(SweepError::config("points", format!("need at least 2 points, got {}", r.points)));
        }
        if !self.scenario.allowed_variables().contains(&self.variable) {
            return Err(SweepError::config(
                "var",
                format!("'{}' cannot be swept in scenario '{}'", self.variable, self.scenario),
            ));
        }
        for (k, v) in &self.fixed {
            if !self.scenario.allowed_keys().contains(&k.as_str()) {
                return Err(SweepError::config(k, format!("not a parameter of scenario '{}'", self.scenario)));
            }
            if !v.is_finite() {
                return Err(SweepError::config(k, format!("value {v} is not finite")));
            }
        }
        if self.label.contains([',', '\n', '\r']) {
            return Err(SweepError::config("label", "must not contain commas or newlines"));
        }
        if let Some(p) = self.fixed.get("partner") {
            partner_of(*p)?;
        }
        Ok(())
    }

    fn get(&self, key: &str, default: f64) -> f64 {
        self.fixed.get(key).copied().unwrap_or(default)
    }

    /// The fixed value of `key`, or the swept value when `key` is the sweep variable.
    fn param(&self, key: &str, x: f64, default: f64) -> f64 {
        if self.variable.name() == key {
            x
        } else {
            self.get(key, default)
        }
    }

    pub(crate) fn free_params(&self, x: f64) -> crate::Result<FreeParams> {
        FreeParams::from_mass_ratio(self.param("m_over_E", x, 0.5), self.param("A", x, 0.5))
    }

    /// Momentum fixes the unit: `p = 1`.
    pub(crate) fn coupling_params(&self, x: f64) -> crate::Result<CouplingParams> {
        let cp = CouplingParams::canonical(
            self.param("m_over_p", x, 1.0),
            1.0,
            self.get("B_over_p", 1.0),
            self.get("theta", FRAC_PI_4),
            self.get("kappa", 1.0),
            self.get("chi", 1.0),
        );
        cp.check()?;
        if self.get("electric", 0.0) != 0.0 {
            electric_substitution(&cp)
        } else {
            Ok(cp)
        }
    }

    pub(crate) fn mixture_weights(&self, x: f64) -> crate::Result<MixtureWeights> {
        match self.weights {
            Some(w) if self.variable != SweepVariable::A => Ok(w),
            _ => {
                let partner = partner_of(self.get("partner", 1.0))
                    .map_err(|e| crate::Error::InvalidParameter(e.to_string()))?;
                MixtureWeights::with_partner(self.param("A", x, 0.5), partner)
            }
        }
    }

    pub(crate) fn thermal_params(&self, x: f64) -> crate::Result<ThermalParams> {
        ThermalParams::new(self.param("beta_p", x, 1.0))
    }
}

/// `partner = 1, 2, 3` selects the `(0,1)`, `(1,0)`, `(1,1)` eigenstate.
fn partner_of(code: f64) -> Result<(u8, u8), SweepError> {
    match code {
        1.0 => Ok((0, 1)),
        2.0 => Ok((1, 0)),
        3.0 => Ok((1, 1)),
        _ => Err(SweepError::config("partner", format!("expected 1, 2 or 3, got {code}"))),
    }
}
