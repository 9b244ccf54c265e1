//! Fixed-size complex and real matrix kernels.
//!
//! Everything here works on stack-allocated 2×2, 3×3, 4×4 (and an internal
//! 8×8) arrays. The eigenvalue solvers are cyclic Jacobi; the complex
//! Hermitian case is handled through the real symmetric embedding
//! `[[Re, -Im], [Im, Re]]`, whose spectrum is the Hermitian spectrum with
//! every eigenvalue doubled.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Vec3 = [f64; 3];
pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub const IDENTITY2: Mat2 = [[ONE, ZERO], [ZERO, ONE]];
pub const SIGMA_X: Mat2 = [[ZERO, ONE], [ONE, ZERO]];
pub const SIGMA_Y: Mat2 = [[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]];
pub const SIGMA_Z: Mat2 = [[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]];

/// The three Pauli matrices in x, y, z order.
pub const PAULI: [Mat2; 3] = [SIGMA_X, SIGMA_Y, SIGMA_Z];

/// Hermiticity tolerance for [`hermitian_eigenvalues4`].
pub const HERMITIAN_TOL: f64 = 1e-9;
/// Symmetry tolerance for [`sym_eigenvalues3`].
pub const SYMMETRIC_TOL: f64 = 1e-12;
/// Relative off-diagonal Frobenius norm at which Jacobi stops.
pub const JACOBI_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm_sq(a: &Vec3) -> f64 {
    dot(a, a)
}

pub fn scale(a: &Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn add3(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// `σ⃗·v` as a 2×2 matrix.
pub fn sigma_dot(v: &Vec3) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (k, sigma) in PAULI.iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] += sigma[r][c] * v[k];
            }
        }
    }
    out
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

/// Dense 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4(pub [[Complex64; 4]; 4]);

impl ComplexMatrix4 {
    pub fn zeros() -> Self {
        Self([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for k in 0..4 {
            m.0[k][k] = ONE;
        }
        m
    }

    pub fn from_real_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::zeros();
        for k in 0..4 {
            m.0[k][k] = Complex64::new(d[k], 0.0);
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zeros();
        for r in 0..4 {
            for c in 0..4 {
                m.0[r][c] = Complex64::new(rows[r][c], 0.0);
            }
        }
        m
    }

    /// Outer product `|ψ⟩⟨φ|`.
    pub fn outer(psi: &[Complex64; 4], phi: &[Complex64; 4]) -> Self {
        let mut m = Self::zeros();
        for r in 0..4 {
            for c in 0..4 {
                m.0[r][c] = psi[r] * phi[c].conj();
            }
        }
        m
    }

    /// Kronecker product `a ⊗ b`; `a` acts on the first qubit.
    pub fn kron(a: &Mat2, b: &Mat2) -> Self {
        let mut m = Self::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.0[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for r in 0..4 {
            for c in 0..4 {
                m.0[r][c] = self.0[c][r].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate in the computational basis.
    pub fn conj(&self) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z = z.conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }

    /// `Tr[self · other]` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        let mut acc = ZERO;
        for r in 0..4 {
            for k in 0..4 {
                acc += self.0[r][k] * other.0[k][r];
            }
        }
        acc
    }

    /// `U · self · U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }

    /// max |m_ij − conj(m_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..4 {
            for c in r..4 {
                worst = worst.max((self.0[r][c] - self.0[c][r].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..4 {
            for c in 0..4 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&Self::zeros())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix4 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.0[r][c]
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for r in 0..4 {
            for c in 0..4 {
                self.0[r][c] += rhs.0[r][c];
            }
        }
        self
    }
}

impl Sub for ComplexMatrix4 {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for r in 0..4 {
            for c in 0..4 {
                self.0[r][c] -= rhs.0[r][c];
            }
        }
        self
    }
}

impl Neg for ComplexMatrix4 {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.0[r][k];
                if a == ZERO {
                    continue;
                }
                for c in 0..4 {
                    m.0[r][c] += a * rhs.0[k][c];
                }
            }
        }
        m
    }
}

impl Mul<f64> for ComplexMatrix4 {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

/// Real 3×3 matrix carrier for `TᵀT`, `TTᵀ` and `a aᵀ + TTᵀ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealSymMatrix3(pub [[f64; 3]; 3]);

impl RealSymMatrix3 {
    /// `(m + mᵀ)/2`.
    pub fn symmetrize(m: [[f64; 3]; 3]) -> Self {
        let mut out = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                out[r][c] = 0.5 * (m[r][c] + m[c][r]);
            }
        }
        Self(out)
    }

    pub fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..3 {
            for c in r + 1..3 {
                worst = worst.max((self.0[r][c] - self.0[c][r]).abs());
            }
        }
        worst
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

pub fn mat3_mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            out[r][c] = (0..3).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    out
}

pub fn transpose3(a: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            out[r][c] = a[c][r];
        }
    }
    out
}

fn off_diagonal_norm<const N: usize>(a: &[[f64; N]; N]) -> f64 {
    let mut s = 0.0;
    for r in 0..N {
        for c in 0..N {
            if r != c {
                s += a[r][c] * a[r][c];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigenvalues of a real symmetric matrix, ascending.
fn jacobi_eigenvalues<const N: usize>(mut a: [[f64; N]; N]) -> Result<[f64; N]> {
    let scale = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    let threshold = JACOBI_TOL * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off_norm: off });
        }
        sweeps += 1;

        for p in 0..N - 1 {
            for q in p + 1..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for row in a.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..N {
                    let (pk, qk) = (a[p][k], a[q][k]);
                    a[p][k] = c * pk - s * qk;
                    a[q][k] = s * pk + c * qk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }

    let mut eig = [0.0; N];
    for k in 0..N {
        eig[k] = a[k][k];
    }
    eig.sort_by(|x, y| x.total_cmp(y));
    Ok(eig)
}

/// Eigenvalues of a Hermitian 4×4 matrix, ascending.
pub fn hermitian_eigenvalues4(m: &ComplexMatrix4) -> Result<[f64; 4]> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NonHermitianInput { defect });
    }

    // Symmetrized real embedding; each eigenvalue of m appears twice.
    let mut big = [[0.0; 8]; 8];
    for r in 0..4 {
        for c in 0..4 {
            let z = 0.5 * (m.0[r][c] + m.0[c][r].conj());
            big[r][c] = z.re;
            big[r + 4][c + 4] = z.re;
            big[r][c + 4] = -z.im;
            big[r + 4][c] = z.im;
        }
    }
    let doubled = jacobi_eigenvalues(big)?;
    let mut eig = [0.0; 4];
    for k in 0..4 {
        eig[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }
    Ok(eig)
}

/// Eigenvalues of a real symmetric 3×3 matrix, ascending.
pub fn sym_eigenvalues3(m: &RealSymMatrix3) -> Result<[f64; 3]> {
    let defect = m.symmetry_defect();
    if defect > SYMMETRIC_TOL {
        return Err(Error::NonSymmetricInput { defect });
    }
    jacobi_eigenvalues(m.0)
}
