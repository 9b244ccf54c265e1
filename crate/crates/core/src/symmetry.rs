//! Charge conjugation, parity and their product, on matrices and on Fano data.
//!
//! The antiunitary maps conjugate entrywise in the computational basis of
//! [`crate::state`]. The spinor phase factors of the transformations drop out
//! of `ρ ↦ UρU†` and are not carried.

use std::fmt;

use crate::dirac::{mixture_state, CouplingParams, FieldKind, FreeParams, MixtureWeights};
use crate::error::Result;
use crate::linalg::{ComplexMatrix4, IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z};
use crate::quantifiers::{geometric_discord, Side};
use crate::state::{DensityMatrix, FanoDecomposition};
use crate::thermal::{gibbs_state, ThermalParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Parity,
    Charge,
    ChargeParity,
}

impl Transform {
    pub const ALL: [Transform; 3] = [Transform::Parity, Transform::Charge, Transform::ChargeParity];
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transform::Parity => "P",
            Transform::Charge => "C",
            Transform::ChargeParity => "CP",
        })
    }
}

/// Parameters with every polar vector reversed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectedParams(CouplingParams);

impl ReflectedParams {
    pub fn params(&self) -> &CouplingParams {
        &self.0
    }

    pub fn into_params(self) -> CouplingParams {
        self.0
    }
}

/// `p → −p` always; the field flips only when it is electric.
pub fn params_reflect(cp: &CouplingParams) -> ReflectedParams {
    let neg = |v: [f64; 3]| v.map(|x| -x);
    let field = match cp.field_kind {
        FieldKind::Magnetic => cp.field,
        FieldKind::Electric => neg(cp.field),
    };
    ReflectedParams(CouplingParams { p: neg(cp.p), field, ..*cp })
}

/// Free-particle parameters are scalars (`m`, `|p|`, `A`) and do not change.
pub fn free_params_reflect(fp: &FreeParams) -> FreeParams {
    *fp
}

fn conjugate(rho: &DensityMatrix, u: &ComplexMatrix4, antiunitary: bool) -> DensityMatrix {
    let m = if antiunitary { rho.matrix().conj() } else { *rho.matrix() };
    DensityMatrix::from_trusted(m.conjugate_by(u))
}

/// `(σ_z⊗I) ρ (σ_z⊗I)`.
pub fn parity_transform(rho: &DensityMatrix) -> DensityMatrix {
    conjugate(rho, &ComplexMatrix4::kron(&SIGMA_Z, &IDENTITY2), false)
}

/// `(σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn charge_conjugation(rho: &DensityMatrix) -> DensityMatrix {
    conjugate(rho, &ComplexMatrix4::kron(&SIGMA_Y, &SIGMA_Y), true)
}

/// `(σ_x⊗σ_y) ρ* (σ_x⊗σ_y)`.
pub fn cp_transform(rho: &DensityMatrix) -> DensityMatrix {
    conjugate(rho, &ComplexMatrix4::kron(&SIGMA_X, &SIGMA_Y), true)
}

pub fn apply(rho: &DensityMatrix, which: Transform) -> DensityMatrix {
    match which {
        Transform::Parity => parity_transform(rho),
        Transform::Charge => charge_conjugation(rho),
        Transform::ChargeParity => cp_transform(rho),
    }
}

/// Sign rules on `(a₁, a₂, T)`:
///
/// | | `a₁` | `a₂` | `T` |
/// |---|---|---|---|
/// | P | `(−x, −y, z)` | `a₂` | `diag(−1,−1,1)·T` |
/// | C | `−a₁` | `−a₂` | `T` |
/// | CP | `(x, y, −z)` | `−a₂` | `diag(−1,−1,1)·T` |
pub fn fano_transform_oracle(f: &FanoDecomposition, which: Transform) -> FanoDecomposition {
    let [a1x, a1y, a1z] = f.a1;
    let neg = |v: [f64; 3]| v.map(|x| -x);
    let flip_rows = |t: [[f64; 3]; 3]| [neg(t[0]), neg(t[1]), t[2]];
    match which {
        Transform::Parity => FanoDecomposition { a1: [-a1x, -a1y, a1z], a2: f.a2, t: flip_rows(f.t) },
        Transform::Charge => FanoDecomposition { a1: neg(f.a1), a2: neg(f.a2), t: f.t },
        Transform::ChargeParity => {
            FanoDecomposition { a1: [a1x, a1y, -a1z], a2: neg(f.a2), t: flip_rows(f.t) }
        }
    }
}

/// `|𝒟[CP ρ(𝒳̃)] − 𝒟[ρ(𝒳)]|` for a mixture of eigenstates.
pub fn cp_discord_difference(cp: &CouplingParams, w: &MixtureWeights, side: Side) -> Result<f64> {
    let rho = mixture_state(cp, w)?;
    let reflected = mixture_state(params_reflect(cp).params(), w)?;
    let d = geometric_discord(&rho, side)?;
    let d_cp = geometric_discord(&cp_transform(&reflected), side)?;
    Ok((d_cp - d).abs())
}

/// Same difference for the Gibbs state at inverse temperature `tp`.
pub fn cp_discord_difference_thermal(cp: &CouplingParams, tp: ThermalParams, side: Side) -> Result<f64> {
    let rho = gibbs_state(cp, tp)?;
    let reflected = gibbs_state(params_reflect(cp).params(), tp)?;
    let d = geometric_discord(&rho, side)?;
    let d_cp = geometric_discord(&cp_transform(&reflected), side)?;
    Ok((d_cp - d).abs())
}
