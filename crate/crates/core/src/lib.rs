//! Spin-parity correlations of Dirac bi-spinors.
//!
//! A four-component Dirac state is treated as two qubits: intrinsic parity
//! (qubit 1) and spin (qubit 2). The crate provides
//! - a small dense linear-algebra kernel ([`linalg`]),
//! - validated two-qubit states and their Fano form ([`state`]),
//! - negativity, geometric discord and the CHSH/Horodecki bound ([`quantifiers`], [`chsh`]),
//! - free and field-coupled Dirac states ([`dirac`]) and their Gibbs states ([`thermal`]),
//! - C, P and CP maps ([`symmetry`]),
//! - parameter sweeps with CSV/SVG output ([`sweep`]).

pub mod chsh;
pub mod dirac;
pub mod error;
pub mod linalg;
pub mod quantifiers;
pub mod random;
pub mod state;
pub mod sweep;
pub mod symmetry;
pub mod thermal;

pub use dirac::{
    CouplingParams, FieldKind, FreeParams, Helicity, MixtureCoefficients, MixtureWeights, SpectralData,
};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix4, RealSymMatrix3, Vec3};
pub use quantifiers::{BellValues, CorrelationReport, Side};
pub use state::{DensityMatrix, FanoDecomposition, PartialTransposeDecomposition};
pub use sweep::{Scenario, SweepConfig, SweepError, SweepRange, SweepVariable, Table};
pub use symmetry::{ReflectedParams, Transform};
pub use thermal::ThermalParams;
