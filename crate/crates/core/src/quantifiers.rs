//! Negativity, geometric discord and the Horodecki CHSH bound.

use std::fmt;

use crate::error::Result;
use crate::linalg::{
    hermitian_eigenvalues4, mat3_mul, sym_eigenvalues3, transpose3, RealSymMatrix3, Vec3,
};
use crate::state::{fano_decompose, partial_transpose_1_matrix, DensityMatrix, FanoDecomposition};

/// Which qubit the discord measurement acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Side {
    /// Qubit 1, intrinsic parity.
    #[default]
    Parity,
    /// Qubit 2, spin.
    Spin,
}

impl Side {
    pub fn index(self) -> u8 {
        match self {
            Side::Parity => 1,
            Side::Spin => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Side::Parity),
            2 => Some(Side::Spin),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Round-off below zero is clamped, and the clamp is logged.
fn clamp_non_negative(value: f64, what: &str) -> f64 {
    if value < 0.0 {
        if value < -1e-9 {
            log::warn!("{what} = {value:e} clamped to 0");
        } else {
            log::debug!("{what} = {value:e} clamped to 0");
        }
        0.0
    } else {
        value
    }
}

/// Ascending eigenvalues of `ρ^{T₁}`.
pub fn partial_transpose_spectrum(rho: &DensityMatrix) -> Result<[f64; 4]> {
    hermitian_eigenvalues4(&partial_transpose_1_matrix(rho.matrix()))
}

/// `𝒩 = Σ|μ_i| − 1` over the eigenvalues of `ρ^{T₁}`, clamped to `[0, 1]`.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let mu = partial_transpose_spectrum(rho)?;
    let raw = mu.iter().map(|x| x.abs()).sum::<f64>() - 1.0;
    let n = clamp_non_negative(raw, "negativity");
    if n > 1.0 {
        log::debug!("negativity = {n} clamped to 1");
        return Ok(1.0);
    }
    Ok(n)
}

fn tt_transpose(t: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    mat3_mul(t, &transpose3(t))
}

fn t_transpose_t(t: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    mat3_mul(&transpose3(t), t)
}

fn outer3(a: &Vec3) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            out[r][c] = a[r] * a[c];
        }
    }
    out
}

/// Geometric discord and its `k_max`, computed from Fano data.
///
/// For a measurement on qubit 1 the relevant matrix is `a₁a₁ᵀ + TTᵀ`; on
/// qubit 2 the roles of the subsystems swap and it becomes `a₂a₂ᵀ + TᵀT`.
pub fn geometric_discord_from_fano(f: &FanoDecomposition, side: Side) -> Result<(f64, f64)> {
    let (a, corr) = match side {
        Side::Parity => (f.a1, tt_transpose(&f.t)),
        Side::Spin => (f.a2, t_transpose_t(&f.t)),
    };
    let aa = outer3(&a);
    let mut k = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            k[r][c] = aa[r][c] + corr[r][c];
        }
    }
    let k_max = sym_eigenvalues3(&RealSymMatrix3::symmetrize(k))?[2];
    let raw = 0.25 * (a.iter().map(|x| x * x).sum::<f64>() + f.t_norm_sq() - k_max);
    Ok((clamp_non_negative(raw, "geometric discord"), k_max))
}

pub fn geometric_discord(rho: &DensityMatrix, side: Side) -> Result<f64> {
    let f = fano_decompose(rho)?;
    Ok(geometric_discord_from_fano(&f, side)?.0)
}

/// Ascending eigenvalues of `M = TᵀT`.
pub fn locality_matrix_eigenvalues(f: &FanoDecomposition) -> Result<[f64; 3]> {
    sym_eigenvalues3(&RealSymMatrix3::symmetrize(t_transpose_t(&f.t)))
}

/// Locality quantifier `M`, Bell function `ℬ = M − 1` and the CHSH maximum `2√M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellValues {
    pub locality_m: f64,
    pub bell_b: f64,
    pub chsh: f64,
}

impl BellValues {
    pub fn violates_chsh(&self) -> bool {
        self.bell_b > 0.0
    }
}

pub fn bell_from_fano(f: &FanoDecomposition) -> Result<BellValues> {
    let e = locality_matrix_eigenvalues(f)?;
    let m = clamp_non_negative(e[2] + e[1], "locality M");
    Ok(BellValues { locality_m: m, bell_b: m - 1.0, chsh: 2.0 * m.sqrt() })
}

pub fn bell_horodecki(rho: &DensityMatrix) -> Result<BellValues> {
    bell_from_fano(&fano_decompose(rho)?)
}

/// All quantifiers of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub negativity: f64,
    pub discord1: f64,
    pub discord2: f64,
    pub locality_m: f64,
    pub bell_b: f64,
    pub chsh_value: f64,
    pub k_max1: f64,
    pub k_max2: f64,
}

impl CorrelationReport {
    pub fn discord(&self, side: Side) -> f64 {
        match side {
            Side::Parity => self.discord1,
            Side::Spin => self.discord2,
        }
    }

    /// Largest absolute difference over the scalar fields.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.negativity - other.negativity,
            self.discord1 - other.discord1,
            self.discord2 - other.discord2,
            self.locality_m - other.locality_m,
            self.bell_b - other.bell_b,
            self.chsh_value - other.chsh_value,
            self.k_max1 - other.k_max1,
            self.k_max2 - other.k_max2,
        ]
        .iter()
        .fold(0.0_f64, |acc, d| acc.max(d.abs()))
    }
}

pub fn correlation_report(rho: &DensityMatrix) -> Result<CorrelationReport> {
    let f = fano_decompose(rho)?;
    let (discord1, k_max1) = geometric_discord_from_fano(&f, Side::Parity)?;
    let (discord2, k_max2) = geometric_discord_from_fano(&f, Side::Spin)?;
    let bell = bell_from_fano(&f)?;
    Ok(CorrelationReport {
        negativity: negativity(rho)?,
        discord1,
        discord2,
        locality_m: bell.locality_m,
        bell_b: bell.bell_b,
        chsh_value: bell.chsh,
        k_max1,
        k_max2,
    })
}
