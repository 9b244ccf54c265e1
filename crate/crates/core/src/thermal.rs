//! Gibbs states `e^{−βĤ}/Z` assembled from the four eigenprojectors.

use crate::dirac::{eigenstate_density, ns_index, spectral_data, CouplingParams, SpectralData};
use crate::error::{Error, Result};
use crate::quantifiers::{bell_horodecki, partial_transpose_spectrum};
use crate::state::DensityMatrix;

/// Beyond this `β·gap` every excited weight underflows and the ground projector is returned.
pub const GROUND_STATE_CUTOFF: f64 = 745.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    beta: f64,
}

impl ThermalParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::InvalidParameter(format!("beta = {beta} must be finite and >= 0")));
        }
        Ok(Self { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// `(n, s)` of the lowest level, `λ = −√(c₁ + 2√c₂)`.
pub const GROUND: (u8, u8) = (1, 0);

/// Distance from the lowest level to the next one.
pub fn spectral_gap(sd: &SpectralData) -> f64 {
    sd.lambda(1, 1) - sd.lambda(1, 0)
}

/// Normalized `e^{−βλ_{n,s}}`, indexed like [`SpectralData::lambdas`].
pub fn boltzmann_weights(sd: &SpectralData, beta: f64) -> [f64; 4] {
    let lmin = sd.lambdas.iter().copied().fold(f64::INFINITY, f64::min);
    let e = sd.lambdas.map(|l| (-beta * (l - lmin)).exp());
    let z: f64 = e.iter().sum();
    e.map(|x| x / z)
}

pub fn ground_state(cp: &CouplingParams) -> Result<DensityMatrix> {
    eigenstate_density(cp, GROUND.0, GROUND.1)
}

pub fn gibbs_state(cp: &CouplingParams, tp: ThermalParams) -> Result<DensityMatrix> {
    let sd = spectral_data(cp)?;
    if tp.beta * spectral_gap(&sd) > GROUND_STATE_CUTOFF {
        return ground_state(cp);
    }
    let w = boltzmann_weights(&sd, tp.beta);
    let mut terms = Vec::with_capacity(4);
    for n in 0..2u8 {
        for s in 0..2u8 {
            let wk = w[ns_index(n, s)];
            if wk > 0.0 {
                terms.push((wk, eigenstate_density(cp, n, s)?));
            }
        }
    }
    DensityMatrix::mixture(&terms)
}

/// First `β ∈ (lo, hi]` where `f` turns positive: a uniform scan with
/// `scan_points` samples followed by bisection down to `tol`.
/// `None` if `f` never becomes positive on the scan.
pub fn first_positive_crossing(
    f: impl Fn(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    scan_points: usize,
    tol: f64,
) -> Result<Option<f64>> {
    assert!(scan_points >= 2 && hi > lo);
    let step = (hi - lo) / (scan_points - 1) as f64;
    let mut prev = lo;
    if f(lo)? > 0.0 {
        return Ok(Some(lo));
    }
    for i in 1..scan_points {
        let x = lo + step * i as f64;
        if f(x)? > 0.0 {
            let (mut a, mut b) = (prev, x);
            while b - a > tol {
                let mid = 0.5 * (a + b);
                if f(mid)? > 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            return Ok(Some(0.5 * (a + b)));
        }
        prev = x;
    }
    Ok(None)
}

/// `β*` where the Gibbs state first becomes entangled, i.e. where the smallest
/// eigenvalue of `ρ^{T₁}` first goes negative.
pub fn entanglement_onset(cp: &CouplingParams, beta_max: f64, tol: f64) -> Result<Option<f64>> {
    first_positive_crossing(
        |b| Ok(-partial_transpose_spectrum(&gibbs_state(cp, ThermalParams::new(b)?)?)?[0]),
        0.0,
        beta_max,
        400,
        tol,
    )
}

/// First `β` where the Bell function `ℬ` of the Gibbs state becomes positive.
pub fn bell_onset(cp: &CouplingParams, beta_max: f64, tol: f64) -> Result<Option<f64>> {
    first_positive_crossing(
        |b| Ok(bell_horodecki(&gibbs_state(cp, ThermalParams::new(b)?)?)?.bell_b),
        0.0,
        beta_max,
        400,
        tol,
    )
}
