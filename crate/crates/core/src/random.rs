//! Random states and unitaries for property tests and oracle sweeps.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::dirac::{CouplingParams, FieldKind, MixtureWeights};
use crate::linalg::{mat2_mul, ComplexMatrix4, Mat2, IDENTITY2, PAULI};
use crate::state::DensityMatrix;

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Ginibre ensemble: `G G† / Tr[G G†]` with complex Gaussian `G`.
pub fn ginibre_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let mut g = ComplexMatrix4::zeros();
    for r in 0..4 {
        for c in 0..4 {
            g[(r, c)] = complex_gaussian(rng);
        }
    }
    let w = g * g.adjoint();
    let tr = w.trace().re;
    DensityMatrix::validate(w.scale(1.0 / tr)).expect("Ginibre states are valid")
}

/// Haar-random pure state (a column of a random SU(4) matrix).
pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let amps = [(); 4].map(|_| complex_gaussian(rng));
    DensityMatrix::from_pure(amps).expect("nonzero Gaussian vector")
}

/// Haar-random SU(2) matrix from a uniformly random unit quaternion.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let mut q: [f64; 4] = [(); 4].map(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= n);
    let a = Complex64::new(q[0], q[1]);
    let b = Complex64::new(q[2], q[3]);
    [[a, -b.conj()], [b, a.conj()]]
}

/// One of `I, σ_x, σ_y, σ_z`, uniformly.
pub fn random_pauli<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    match rng.random_range(0..4) {
        0 => IDENTITY2,
        k => PAULI[k - 1],
    }
}

/// `U₁ ⊗ U₂` with independent Haar SU(2) factors.
pub fn random_local_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    ComplexMatrix4::kron(&random_su2(rng), &random_su2(rng))
}

/// Product of a random Pauli string with a random local SU(2) pair.
pub fn random_pauli_string_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let a = mat2_mul(&random_pauli(rng), &random_pauli(rng));
    let b = mat2_mul(&random_pauli(rng), &random_pauli(rng));
    ComplexMatrix4::kron(&a, &b)
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let mut g = ComplexMatrix4::zeros();
    for r in 0..4 {
        for c in 0..4 {
            g[(r, c)] = complex_gaussian(rng);
        }
    }
    (g + g.adjoint()).scale(0.5)
}

/// Random magnetic coupling parameters with `c₂` bounded away from zero.
pub fn random_coupling_params<R: Rng + ?Sized>(rng: &mut R, min_c2: f64) -> CouplingParams {
    loop {
        let v = |rng: &mut R| -> [f64; 3] { [(); 3].map(|_| rng.sample::<f64, _>(StandardNormal)) };
        let cp = CouplingParams {
            m: rng.random_range(0.05..3.0),
            p: v(rng),
            field: v(rng),
            kappa: rng.sample(StandardNormal),
            chi: rng.sample(StandardNormal),
            field_kind: FieldKind::Magnetic,
        };
        if cp.c2() > min_c2 {
            return cp;
        }
    }
}

/// Uniform (Dirichlet(1,1,1,1)) mixture weights.
pub fn random_weights<R: Rng + ?Sized>(rng: &mut R) -> MixtureWeights {
    let e: [f64; 4] = [(); 4].map(|_| -(1.0 - rng.random::<f64>()).ln());
    let s: f64 = e.iter().sum();
    MixtureWeights::new(e.map(|x| x / s)).expect("normalized")
}
