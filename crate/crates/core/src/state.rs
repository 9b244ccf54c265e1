//! Two-qubit density matrices on the parity ⊗ spin space.
//!
//! Basis ordering is `|+,↑⟩, |+,↓⟩, |−,↑⟩, |−,↓⟩`: the first qubit is the
//! intrinsic parity, the second the spin, so the flat index of
//! `|parity, spin⟩` is `2 * parity + spin`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues4, ComplexMatrix4, Vec3, IDENTITY2, PAULI};

pub const HERMITIAN_TOL: f64 = 1e-9;
pub const TRACE_TOL: f64 = 1e-9;
pub const PSD_TOL: f64 = 1e-9;
pub const IMAGINARY_TOL: f64 = 1e-9;

/// A validated 4×4 density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(ComplexMatrix4);

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity, in that order.
    pub fn validate(m: ComplexMatrix4) -> Result<Self> {
        let defect = m.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let deviation = (m.trace() - Complex64::new(1.0, 0.0)).norm();
        if deviation > TRACE_TOL {
            return Err(Error::TraceNotOne { deviation });
        }
        let min_eigenvalue = hermitian_eigenvalues4(&m)?[0];
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self(m))
    }

    /// Wraps a matrix produced by a trace- and positivity-preserving map of
    /// an already valid state.
    pub(crate) fn from_trusted(m: ComplexMatrix4) -> Self {
        Self(m)
    }

    pub fn maximally_mixed() -> Self {
        Self(ComplexMatrix4::identity().scale(0.25))
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalized) nonzero vector.
    pub fn from_pure(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "pure state amplitudes have norm² {norm_sq}"
            )));
        }
        let inv = 1.0 / norm_sq.sqrt();
        let psi = amplitudes.map(|z| z * inv);
        Ok(Self(ComplexMatrix4::outer(&psi, &psi)))
    }

    /// `(|++⟩ + |−−⟩)/√2` in the parity ⊗ spin basis.
    pub fn bell_phi_plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let zero = Complex64::new(0.0, 0.0);
        let amp = Complex64::new(h, 0.0);
        Self::from_pure([amp, zero, zero, amp]).expect("normalized")
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix4 {
        self.0
    }

    /// `Tr[ρ²]`.
    pub fn purity(&self) -> f64 {
        self.0.trace_product(&self.0).re
    }

    /// `Tr[ρ σ]`; for a pure `σ` this is the fidelity.
    pub fn overlap(&self, other: &DensityMatrix) -> f64 {
        self.0.trace_product(&other.0).re
    }

    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        hermitian_eigenvalues4(&self.0)
    }

    /// Convex combination `Σ w_k ρ_k`; weights must be non-negative and sum to one.
    pub fn mixture(terms: &[(f64, DensityMatrix)]) -> Result<Self> {
        let mut acc = ComplexMatrix4::zeros();
        for (w, rho) in terms {
            if *w < 0.0 {
                return Err(Error::InvalidParameter(format!("negative mixture weight {w}")));
            }
            acc = acc + rho.0.scale(*w);
        }
        Self::validate(acc)
    }
}

/// Convenience free function matching [`DensityMatrix::validate`].
pub fn validate(m: ComplexMatrix4) -> Result<DensityMatrix> {
    DensityMatrix::validate(m)
}

/// Bloch vectors and correlation matrix of a two-qubit operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoDecomposition {
    /// Parity-qubit Bloch vector, `Tr[ρ (σ_i ⊗ I)]`.
    pub a1: Vec3,
    /// Spin-qubit Bloch vector, `Tr[ρ (I ⊗ σ_j)]`.
    pub a2: Vec3,
    /// `t[i][j] = Tr[ρ (σ_i ⊗ σ_j)]`.
    pub t: [[f64; 3]; 3],
}

impl FanoDecomposition {
    pub fn zero() -> Self {
        Self { a1: [0.0; 3], a2: [0.0; 3], t: [[0.0; 3]; 3] }
    }

    /// `ρ = ¼[I + σ⃗⊗I·a1 + I⊗σ⃗·a2 + Σ t_ij σ_i⊗σ_j]` without validation.
    pub fn to_matrix(&self) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::identity();
        for i in 0..3 {
            m = m + ComplexMatrix4::kron(&PAULI[i], &IDENTITY2).scale(self.a1[i]);
            m = m + ComplexMatrix4::kron(&IDENTITY2, &PAULI[i]).scale(self.a2[i]);
            for j in 0..3 {
                m = m + ComplexMatrix4::kron(&PAULI[i], &PAULI[j]).scale(self.t[i][j]);
            }
        }
        m.scale(0.25)
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            worst = worst.max((self.a1[i] - other.a1[i]).abs());
            worst = worst.max((self.a2[i] - other.a2[i]).abs());
            for j in 0..3 {
                worst = worst.max((self.t[i][j] - other.t[i][j]).abs());
            }
        }
        worst
    }

    /// `‖T‖² = Tr[T Tᵀ]`.
    pub fn t_norm_sq(&self) -> f64 {
        self.t.iter().flat_map(|r| r.iter()).map(|x| x * x).sum()
    }
}

/// Expectation value of `σ_i ⊗ σ_j` where index 0 is the identity and 1..=3 are x, y, z.
fn pauli_expectation(m: &ComplexMatrix4, i: usize, j: usize) -> Complex64 {
    let p = |k: usize| if k == 0 { IDENTITY2 } else { PAULI[k - 1] };
    m.trace_product(&ComplexMatrix4::kron(&p(i), &p(j)))
}

fn real_part_checked(z: Complex64) -> Result<f64> {
    if z.im.abs() > IMAGINARY_TOL {
        return Err(Error::NonRealExpectation { imaginary: z.im });
    }
    Ok(z.re)
}

pub fn fano_decompose(rho: &DensityMatrix) -> Result<FanoDecomposition> {
    fano_decompose_matrix(rho.matrix())
}

/// Fano coefficients of an arbitrary Hermitian 4×4 matrix (e.g. a partial transpose).
pub fn fano_decompose_matrix(m: &ComplexMatrix4) -> Result<FanoDecomposition> {
    let mut f = FanoDecomposition::zero();
    for i in 0..3 {
        f.a1[i] = real_part_checked(pauli_expectation(m, i + 1, 0))?;
        f.a2[i] = real_part_checked(pauli_expectation(m, 0, i + 1))?;
        for j in 0..3 {
            f.t[i][j] = real_part_checked(pauli_expectation(m, i + 1, j + 1))?;
        }
    }
    Ok(f)
}

pub fn fano_compose(f: &FanoDecomposition) -> Result<DensityMatrix> {
    DensityMatrix::validate(f.to_matrix())
}

/// Fano data of `ρ^{T₁}` expressed through the original `a1`, `a2`, `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialTransposeDecomposition {
    pub b1: Vec3,
    pub b2: Vec3,
    pub q: [[f64; 3]; 3],
}

impl PartialTransposeDecomposition {
    pub fn from_fano(f: &FanoDecomposition) -> Self {
        let mut q = f.t;
        for c in 0..3 {
            q[1][c] = -q[1][c];
        }
        Self { b1: [f.a1[0], -f.a1[1], f.a1[2]], b2: f.a2, q }
    }

    pub fn as_fano(&self) -> FanoDecomposition {
        FanoDecomposition { a1: self.b1, a2: self.b2, t: self.q }
    }
}

/// `⟨μ_i ν_j| ρ^{T₁} |μ_k ν_l⟩ = ⟨μ_k ν_j| ρ |μ_i ν_l⟩`.
pub fn partial_transpose_1_matrix(m: &ComplexMatrix4) -> ComplexMatrix4 {
    let mut out = ComplexMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = m[(2 * k + j, 2 * i + l)];
                }
            }
        }
    }
    out
}

/// Partial transpose on the spin qubit.
pub fn partial_transpose_2_matrix(m: &ComplexMatrix4) -> ComplexMatrix4 {
    let mut out = ComplexMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = m[(2 * i + l, 2 * k + j)];
                }
            }
        }
    }
    out
}

pub fn partial_transpose_1(
    rho: &DensityMatrix,
) -> Result<(ComplexMatrix4, PartialTransposeDecomposition)> {
    let pt = partial_transpose_1_matrix(rho.matrix());
    let f = fano_decompose(rho)?;
    Ok((pt, PartialTransposeDecomposition::from_fano(&f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(DensityMatrix::validate(ComplexMatrix4::identity().scale(0.25)).is_ok());
        assert!(DensityMatrix::validate(ComplexMatrix4::from_real_diagonal([1.0, 0.0, 0.0, 0.0])).is_ok());
        match DensityMatrix::validate(ComplexMatrix4::from_real_diagonal([2.0, -1.0, 0.0, 0.0])) {
            Err(Error::NotPositive { min_eigenvalue }) => assert!((min_eigenvalue + 1.0).abs() < 1e-12),
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn validate_reports_hermiticity_and_trace() {
        let mut m = ComplexMatrix4::identity().scale(0.25);
        m[(0, 1)] = Complex64::new(0.0, 0.1);
        assert!(matches!(DensityMatrix::validate(m), Err(Error::NotHermitian { .. })));

        let m = ComplexMatrix4::identity().scale(0.3);
        match DensityMatrix::validate(m) {
            Err(Error::TraceNotOne { deviation }) => assert!((deviation - 0.2).abs() < 1e-12),
            other => panic!("expected TraceNotOne, got {other:?}"),
        }
    }

    #[test]
    fn maximally_mixed_has_zero_fano() {
        let f = fano_decompose(&DensityMatrix::maximally_mixed()).unwrap();
        assert!(f.max_abs_diff(&FanoDecomposition::zero()) < 1e-15);
    }

    #[test]
    fn bell_state_fano() {
        let f = fano_decompose(&DensityMatrix::bell_phi_plus()).unwrap();
        let expected = FanoDecomposition {
            a1: [0.0; 3],
            a2: [0.0; 3],
            t: [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
        };
        assert!(f.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn product_up_up_fano() {
        let rho = DensityMatrix::validate(ComplexMatrix4::from_real_diagonal([1.0, 0.0, 0.0, 0.0])).unwrap();
        let f = fano_decompose(&rho).unwrap();
        let mut t = [[0.0; 3]; 3];
        t[2][2] = 1.0;
        let expected = FanoDecomposition { a1: [0.0, 0.0, 1.0], a2: [0.0, 0.0, 1.0], t };
        assert!(f.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn compose_examples() {
        let rho = fano_compose(&FanoDecomposition::zero()).unwrap();
        assert!(rho.matrix().max_abs_diff(DensityMatrix::maximally_mixed().matrix()) < 1e-15);

        let bell = FanoDecomposition {
            a1: [0.0; 3],
            a2: [0.0; 3],
            t: [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
        };
        let rho = fano_compose(&bell).unwrap();
        assert!(rho.matrix().max_abs_diff(DensityMatrix::bell_phi_plus().matrix()) < 1e-15);

        let bad = FanoDecomposition {
            a1: [0.0; 3],
            a2: [0.0; 3],
            t: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        };
        match fano_compose(&bad) {
            Err(Error::NotPositive { min_eigenvalue }) => assert!((min_eigenvalue + 0.5).abs() < 1e-12),
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn partial_transpose_examples() {
        let (pt, _) = partial_transpose_1(&DensityMatrix::maximally_mixed()).unwrap();
        assert!(pt.max_abs_diff(DensityMatrix::maximally_mixed().matrix()) < 1e-15);

        let (pt, dec) = partial_transpose_1(&DensityMatrix::bell_phi_plus()).unwrap();
        let e = hermitian_eigenvalues4(&pt).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (a, b) in e.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
        // The returned decomposition describes the partially transposed matrix.
        assert!(dec.as_fano().to_matrix().max_abs_diff(&pt) < 1e-15);
        assert!((dec.q[1][1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pt_decomposition_sign_pattern() {
        let f = FanoDecomposition {
            a1: [0.1, 0.2, 0.3],
            a2: [-0.1, 0.05, 0.0],
            t: [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6], [0.7, 0.8, 0.9]],
        };
        let d = PartialTransposeDecomposition::from_fano(&f);
        assert_eq!(d.b1, [0.1, -0.2, 0.3]);
        assert_eq!(d.b2, f.a2);
        assert_eq!(d.q, [[0.1, 0.2, 0.3], [-0.4, -0.5, -0.6], [0.7, 0.8, 0.9]]);
        let direct = fano_decompose_matrix(&partial_transpose_1_matrix(&f.to_matrix())).unwrap();
        assert!(direct.max_abs_diff(&d.as_fano()) < 1e-15);
    }
}
