use thiserror::Error;

/// Errors raised by the numerical layers (kernel, states, models).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {defect:e})")]
    NonHermitianInput { defect: f64 },

    #[error("matrix is not symmetric (max |m_ij - m_ji| = {defect:e})")]
    NonSymmetricInput { defect: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("density matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("density matrix trace deviates from one by {deviation:e}")]
    TraceNotOne { deviation: f64 },

    #[error("density matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Pauli expectation value has imaginary part {imaginary:e}")]
    NonRealExpectation { imaginary: f64 },

    #[error("helicity is undefined at zero momentum")]
    ZeroMomentum,

    #[error("energy spectrum is degenerate (c2 = {c2:e})")]
    DegenerateSpectrum { c2: f64 },

    #[error("eigenprojector normalization failed (trace {trace:e})")]
    NormalizationFailure { trace: f64 },

    #[error("parameters already describe an electric-field coupling")]
    AlreadyElectric,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
