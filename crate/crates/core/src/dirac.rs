//! Spin-parity states of a Dirac particle.
//!
//! Two families are built here:
//! - free helicity mixtures, written in the frame `p = p ẑ`;
//! - eigenstates (and their mixtures) of the Hamiltonian with anomalous
//!   magnetic and axial couplings to an external field,
//!   `Ĥ = m σ_z⊗I + σ_x⊗σ⃗·p + κ σ_z⊗σ⃗·B − χ σ_y⊗σ⃗·B`.
//!
//! Natural units throughout.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    cross, dot, norm_sq, sigma_dot, ComplexMatrix4, Vec3, IDENTITY2, SIGMA_X, SIGMA_Y,
    SIGMA_Z,
};
use crate::state::{DensityMatrix, FanoDecomposition};

/// Below this `c₂` the eigenprojector construction divides by ~0.
pub const DEGENERACY_TOL: f64 = 1e-12;

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {x}")))
    }
}

/// Mass, momentum magnitude and helicity weight of a free particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeParams {
    m: f64,
    p: f64,
    a: f64,
    energy: f64,
}

impl FreeParams {
    /// `m, p ≥ 0` (not both zero) and `A ∈ [0, 1]`.
    pub fn new(m: f64, p: f64, a: f64) -> Result<Self> {
        check_finite("m", m)?;
        check_finite("p", p)?;
        check_finite("A", a)?;
        if m < 0.0 || p < 0.0 {
            return Err(Error::InvalidParameter(format!("m = {m} and p = {p} must be non-negative")));
        }
        if m == 0.0 && p == 0.0 {
            return Err(Error::InvalidParameter("m and p cannot both vanish".into()));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidParameter(format!("A = {a} outside [0, 1]")));
        }
        Ok(Self { m, p, a, energy: m.hypot(p) })
    }

    /// Unit-energy parameters with `m/E = r`.
    pub fn from_mass_ratio(r: f64, a: f64) -> Result<Self> {
        check_finite("m/E", r)?;
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidParameter(format!("m/E = {r} outside [0, 1]")));
        }
        Self::new(r, (1.0 - r * r).max(0.0).sqrt(), a)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn mass_ratio(&self) -> f64 {
        self.m / self.energy
    }

    /// `(√((E+m)/2E), √((E−m)/2E))`.
    fn amplitudes(&self) -> (f64, f64) {
        let e = self.energy;
        (((e + self.m) / (2.0 * e)).sqrt(), ((e - self.m) / (2.0 * e)).max(0.0).sqrt())
    }
}

/// Helicity sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Helicity {
    Positive,
    Negative,
}

/// State vector of a positive-energy helicity eigenstate for `p = p ẑ`:
/// `|ψ±⟩ = (√((E+m)/2E) |+⟩ ± √((E−m)/2E) |−⟩) ⊗ |h±⟩`, with `|h+⟩ = |↑⟩`.
pub fn helicity_amplitudes(h: Helicity, fp: &FreeParams) -> Result<[Complex64; 4]> {
    if fp.p == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    let (c, s) = fp.amplitudes();
    let z = Complex64::new(0.0, 0.0);
    let r = |x: f64| Complex64::new(x, 0.0);
    Ok(match h {
        Helicity::Positive => [r(c), z, r(s), z],
        Helicity::Negative => [z, r(c), z, r(-s)],
    })
}

pub fn helicity_state(h: Helicity, fp: &FreeParams) -> Result<DensityMatrix> {
    DensityMatrix::from_pure(helicity_amplitudes(h, fp)?)
}

/// `A|ψ₊⟩⟨ψ₊| + (1−A)|ψ₋⟩⟨ψ₋|`, written out entry by entry.
pub fn rho_free(fp: &FreeParams) -> DensityMatrix {
    let e = fp.energy;
    let (a, b) = (fp.a, 1.0 - fp.a);
    let up = (e + fp.m) / (2.0 * e);
    let down = (e - fp.m) / (2.0 * e);
    let off = fp.p / (2.0 * e);
    let rows = [
        [a * up, 0.0, a * off, 0.0],
        [0.0, b * up, 0.0, -b * off],
        [a * off, 0.0, a * down, 0.0],
        [0.0, -b * off, 0.0, b * down],
    ];
    DensityMatrix::from_trusted(ComplexMatrix4::from_real(rows))
}

/// Closed-form free-particle discord,
/// `¼[x − √(x² − 4(1−r²)r²)]` with `x = 1 + (1−2A)²r²`, `r = m/E`.
pub fn discord_free_closed_form(fp: &FreeParams) -> f64 {
    let r2 = fp.mass_ratio().powi(2);
    let x = 1.0 + (1.0 - 2.0 * fp.a).powi(2) * r2;
    0.25 * (x - (x * x - 4.0 * (1.0 - r2) * r2).max(0.0).sqrt())
}

/// Closed-form Bell function of a free mixture, `(1 − 4A(1−A)r²)² − 1`.
pub fn bell_free_closed_form(fp: &FreeParams) -> f64 {
    let r2 = fp.mass_ratio().powi(2);
    (1.0 - 4.0 * fp.a * (1.0 - fp.a) * r2).powi(2) - 1.0
}

/// Closed-form position of the discord maximum in `m/E`.
pub fn m_max_closed_form(a: f64) -> f64 {
    (2.0 * (1.0 - a) / (5.0 - 8.0 * a + 4.0 * a * a)).sqrt()
}

/// Parity-side discord of [`rho_free`] from its rank-one correlation matrix:
/// `(S − √(S² − 64A²(1−A)²r²(1−r²)))/8`, `S = 1 + (1−2A)²`.
pub fn discord_free_exact(fp: &FreeParams) -> f64 {
    let r2 = fp.mass_ratio().powi(2);
    let a = fp.a;
    let s = 1.0 + (1.0 - 2.0 * a).powi(2);
    let det = 16.0 * (a * (1.0 - a)).powi(2) * r2 * (1.0 - r2);
    (s - (s * s - 4.0 * det).max(0.0).sqrt()) / 8.0
}

/// `M − 1` of [`rho_free`]: `−4A(1−A)r²`.
pub fn bell_free_exact(fp: &FreeParams) -> f64 {
    -4.0 * fp.a * (1.0 - fp.a) * fp.mass_ratio().powi(2)
}

/// Whether the external field enters as a magnetic (axial) or electric (polar) vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldKind {
    #[default]
    Magnetic,
    Electric,
}

/// Parameters of the coupled Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingParams {
    pub m: f64,
    pub p: Vec3,
    pub field: Vec3,
    pub kappa: f64,
    pub chi: f64,
    pub field_kind: FieldKind,
}

impl CouplingParams {
    /// `p = (p, 0, 0)`, `B = b (cos θ, sin θ, 0)`, magnetic.
    pub fn canonical(m: f64, p: f64, b: f64, theta: f64, kappa: f64, chi: f64) -> Self {
        Self {
            m,
            p: [p, 0.0, 0.0],
            field: [b * theta.cos(), b * theta.sin(), 0.0],
            kappa,
            chi,
            field_kind: FieldKind::Magnetic,
        }
    }

    /// `p = B = κ = χ = 1`, `θ = π/4`, at the given mass.
    pub fn figure_defaults(m: f64) -> Self {
        Self::canonical(m, 1.0, 1.0, FRAC_PI_4, 1.0, 1.0)
    }

    pub fn check(&self) -> Result<()> {
        check_finite("m", self.m)?;
        for (name, v) in [("p", &self.p), ("B", &self.field)] {
            for x in v {
                check_finite(name, *x)?;
            }
        }
        check_finite("kappa", self.kappa)?;
        check_finite("chi", self.chi)?;
        if self.m < 0.0 {
            return Err(Error::InvalidParameter(format!("m = {} must be non-negative", self.m)));
        }
        Ok(())
    }

    /// `ω = p × B`.
    pub fn omega(&self) -> Vec3 {
        cross(&self.p, &self.field)
    }

    pub fn c1(&self) -> f64 {
        norm_sq(&self.p)
            + self.m * self.m
            + norm_sq(&self.field) * (self.kappa * self.kappa + self.chi * self.chi)
    }

    pub fn c2(&self) -> f64 {
        let k2 = self.kappa * self.kappa;
        self.m * self.m * k2 * norm_sq(&self.field)
            + (k2 + self.chi * self.chi) * norm_sq(&self.omega())
    }
}

pub fn hamiltonian_matrix(cp: &CouplingParams) -> ComplexMatrix4 {
    let sp = sigma_dot(&cp.p);
    let sb = sigma_dot(&cp.field);
    ComplexMatrix4::kron(&SIGMA_Z, &IDENTITY2) * cp.m
        + ComplexMatrix4::kron(&SIGMA_X, &sp)
        + ComplexMatrix4::kron(&SIGMA_Z, &sb) * cp.kappa
        - ComplexMatrix4::kron(&SIGMA_Y, &sb) * cp.chi
}

/// `𝒪 = mκ I⊗σ⃗·B + χ σ_z⊗σ⃗·ω + κ σ_y⊗σ⃗·ω`, so that `Ĥ² = c₁ + 2𝒪`.
pub fn o_matrix(cp: &CouplingParams) -> ComplexMatrix4 {
    let sw = sigma_dot(&cp.omega());
    ComplexMatrix4::kron(&IDENTITY2, &sigma_dot(&cp.field)) * (cp.m * cp.kappa)
        + ComplexMatrix4::kron(&SIGMA_Z, &sw) * cp.chi
        + ComplexMatrix4::kron(&SIGMA_Y, &sw) * cp.kappa
}

/// Index of `(n, s)` in the `lambdas` and weight arrays.
pub fn ns_index(n: u8, s: u8) -> usize {
    debug_assert!(n < 2 && s < 2);
    2 * n as usize + s as usize
}

fn parity_sign(k: u8) -> f64 {
    if k == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralData {
    pub c1: f64,
    pub c2: f64,
    pub omega: Vec3,
    /// `λ_{n,s} = (−1)ⁿ √(c₁ + 2(−1)ˢ√c₂)`, indexed by [`ns_index`].
    pub lambdas: [f64; 4],
    pub o_matrix: ComplexMatrix4,
}

impl SpectralData {
    pub fn lambda(&self, n: u8, s: u8) -> f64 {
        self.lambdas[ns_index(n, s)]
    }

    /// `λ_{1,0} = −√(c₁ + 2√c₂)`, the lowest level.
    pub fn ground_energy(&self) -> f64 {
        self.lambdas[ns_index(1, 0)]
    }
}

pub fn spectral_data(cp: &CouplingParams) -> Result<SpectralData> {
    cp.check()?;
    let c2 = cp.c2();
    if c2 <= DEGENERACY_TOL {
        return Err(Error::DegenerateSpectrum { c2 });
    }
    let c1 = cp.c1();
    let rc2 = c2.sqrt();
    let mut lambdas = [0.0; 4];
    for n in 0..2u8 {
        for s in 0..2u8 {
            let inner = (c1 + 2.0 * parity_sign(s) * rc2).max(0.0);
            lambdas[ns_index(n, s)] = parity_sign(n) * inner.sqrt();
        }
    }
    Ok(SpectralData { c1, c2, omega: cp.omega(), lambdas, o_matrix: o_matrix(cp) })
}

/// Projector onto the `(n, s)` eigenvector,
/// `[I + Ĥ/λ_{n,s}][I + (−1)ˢ𝒪/√c₂]` normalized by its trace.
pub fn eigenstate_density(cp: &CouplingParams, n: u8, s: u8) -> Result<DensityMatrix> {
    if n > 1 || s > 1 {
        return Err(Error::InvalidParameter(format!("(n, s) = ({n}, {s}) outside {{0, 1}}")));
    }
    let sd = spectral_data(cp)?;
    let lambda = sd.lambda(n, s);
    if lambda.abs() < DEGENERACY_TOL {
        return Err(Error::NormalizationFailure { trace: 0.0 });
    }
    let id = ComplexMatrix4::identity();
    let h = hamiltonian_matrix(cp);
    let left = id + h * (1.0 / lambda);
    let right = id + sd.o_matrix * (parity_sign(s) / sd.c2.sqrt());
    let raw = left * right;
    let trace = raw.trace().re;
    if trace < 1e-10 {
        return Err(Error::NormalizationFailure { trace });
    }
    let mut rho = raw.scale(1.0 / trace);
    // The product of two commuting Hermitian factors is Hermitian; remove round-off.
    rho = (rho + rho.adjoint()).scale(0.5);
    DensityMatrix::validate(rho)
}

/// Weights `A_{n,s}` in the order `00, 01, 10, 11`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureWeights([f64; 4]);

impl MixtureWeights {
    pub fn new(w: [f64; 4]) -> Result<Self> {
        if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidParameter(format!("weights {w:?} must be finite and non-negative")));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self(w))
    }

    /// Equal weight on two eigenstates.
    pub fn pair(a: (u8, u8), b: (u8, u8)) -> Result<Self> {
        let mut w = [0.0; 4];
        w[ns_index(a.0, a.1)] += 0.5;
        w[ns_index(b.0, b.1)] += 0.5;
        Self::new(w)
    }

    /// `A` on `(0,0)` and `1 − A` on `partner`.
    pub fn with_partner(a: f64, partner: (u8, u8)) -> Result<Self> {
        let mut w = [0.0; 4];
        w[0] += a;
        w[ns_index(partner.0, partner.1)] += 1.0 - a;
        Self::new(w)
    }

    pub fn uniform() -> Self {
        Self([0.25; 4])
    }

    pub fn get(&self, n: u8, s: u8) -> f64 {
        self.0[ns_index(n, s)]
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }
}

pub fn mixture_state(cp: &CouplingParams, w: &MixtureWeights) -> Result<DensityMatrix> {
    let mut terms = Vec::with_capacity(4);
    for n in 0..2u8 {
        for s in 0..2u8 {
            let a = w.get(n, s);
            if a > 0.0 {
                terms.push((a, eigenstate_density(cp, n, s)?));
            }
        }
    }
    DensityMatrix::mixture(&terms)
}

/// `ρ = ¼[I + g₁Ĥ + g₂𝒪 + g₃Ĥ𝒪]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureCoefficients {
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
}

pub fn mixture_coefficients(sd: &SpectralData, w: &MixtureWeights) -> MixtureCoefficients {
    let rc2 = sd.c2.sqrt();
    let (mut g1, mut g2, mut g3) = (0.0, 0.0, 0.0);
    for n in 0..2u8 {
        for s in 0..2u8 {
            let a = w.get(n, s);
            let l = sd.lambda(n, s);
            let sign = parity_sign(s);
            g1 += a / l;
            g2 += sign * a / rc2;
            g3 += sign * a / (l * rc2);
        }
    }
    MixtureCoefficients { g1, g2, g3 }
}

/// Fano data of a mixture straight from `g₁, g₂, g₃`, without building a matrix.
pub fn fano_from_formula(cp: &CouplingParams, w: &MixtureWeights) -> Result<FanoDecomposition> {
    let sd = spectral_data(cp)?;
    let MixtureCoefficients { g1, g2, g3 } = mixture_coefficients(&sd, w);
    let (m, k, x) = (cp.m, cp.kappa, cp.chi);
    let p = cp.p;
    let b = cp.field;
    let om = sd.omega;
    let b2 = norm_sq(&b);
    let pw = cross(&p, &om);
    let bw = cross(&b, &om);

    let a1 = [g3 * m * k * dot(&p, &b), -g3 * m * x * k * b2, g1 * m + g3 * m * k * k * b2];
    let a2 = [0, 1, 2].map(|i| g2 * m * k * b[i] + g3 * m * x * om[i]);
    let tx = [0, 1, 2].map(|i| g1 * p[i] + g3 * (k * k + x * x) * bw[i]);
    let ty = [0, 1, 2].map(|i| -g1 * x * b[i] + g2 * k * om[i] + g3 * x * pw[i]);
    let tz = [0, 1, 2].map(|i| g1 * k * b[i] + g2 * x * om[i] + g3 * (m * m * k * b[i] - k * pw[i]));
    Ok(FanoDecomposition { a1, a2, t: [tx, ty, tz] })
}

/// `(κ, χ) → (χ, −κ)` and the field becomes a polar vector.
pub fn electric_substitution(cp: &CouplingParams) -> Result<CouplingParams> {
    if cp.field_kind == FieldKind::Electric {
        return Err(Error::AlreadyElectric);
    }
    Ok(CouplingParams { kappa: cp.chi, chi: -cp.kappa, field_kind: FieldKind::Electric, ..*cp })
}

/// Same substitution without the field-kind guard; applying it twice gives `(−κ, −χ)`.
pub fn swap_couplings(cp: &CouplingParams) -> CouplingParams {
    CouplingParams { kappa: cp.chi, chi: -cp.kappa, ..*cp }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantifiers::{bell_horodecki, geometric_discord, negativity, Side};
    use crate::state::{fano_decompose, partial_transpose_1_matrix};
    use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

    fn defaults() -> CouplingParams {
        CouplingParams::figure_defaults(1.0)
    }

    #[test]
    fn free_params_validation() {
        assert!(FreeParams::new(-1.0, 1.0, 0.5).is_err());
        assert!(FreeParams::new(0.0, 0.0, 0.5).is_err());
        assert!(FreeParams::new(1.0, 1.0, 1.5).is_err());
        assert!(FreeParams::new(f64::NAN, 1.0, 0.5).is_err());
        let fp = FreeParams::new(3.0, 4.0, 0.2).unwrap();
        assert_eq!(fp.energy(), 5.0);
        assert!((fp.energy().powi(2) - 9.0 - 16.0).abs() < 1e-12);
        let fp = FreeParams::from_mass_ratio(0.6, 0.2).unwrap();
        assert!((fp.mass_ratio() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn rho_free_is_helicity_mixture() {
        for r in [0.1, 0.5, FRAC_1_SQRT_2, 0.95] {
            for a in [0.0, 0.3, 1.0] {
                let fp = FreeParams::from_mass_ratio(r, a).unwrap();
                let direct = rho_free(&fp);
                let plus = helicity_state(Helicity::Positive, &fp).unwrap();
                let minus = helicity_state(Helicity::Negative, &fp).unwrap();
                let mix = DensityMatrix::mixture(&[(a, plus), (1.0 - a, minus)]).unwrap();
                assert!(direct.matrix().max_abs_diff(mix.matrix()) < 1e-12);
                assert!((direct.matrix().trace().re - 1.0).abs() < 1e-15);
                let pt = partial_transpose_1_matrix(direct.matrix());
                assert!(pt.max_abs_diff(direct.matrix()) < 1e-15);
            }
        }
    }

    #[test]
    fn helicity_states_are_pure_and_separable() {
        let fp = FreeParams::from_mass_ratio(0.4, 0.5).unwrap();
        for h in [Helicity::Positive, Helicity::Negative] {
            let rho = helicity_state(h, &fp).unwrap();
            assert!((rho.purity() - 1.0).abs() < 1e-12);
            assert!(negativity(&rho).unwrap() < 1e-12);
        }
        let at_rest = FreeParams::new(1.0, 0.0, 0.5).unwrap();
        assert_eq!(helicity_state(Helicity::Positive, &at_rest), Err(Error::ZeroMomentum));
    }

    #[test]
    fn helicity_superposition_is_entangled() {
        let fp = FreeParams::from_mass_ratio(FRAC_1_SQRT_2, 0.5).unwrap();
        let p = helicity_amplitudes(Helicity::Positive, &fp).unwrap();
        let m = helicity_amplitudes(Helicity::Negative, &fp).unwrap();
        let sup = [0, 1, 2, 3].map(|i| p[i] + m[i]);
        let rho = DensityMatrix::from_pure(sup).unwrap();
        assert!(negativity(&rho).unwrap() > 0.1);
    }

    #[test]
    fn free_limits_vanish() {
        let fp = FreeParams::from_mass_ratio(0.0, 1.0).unwrap();
        let rho = rho_free(&fp);
        assert!(negativity(&rho).unwrap() < 1e-15);
        assert!(geometric_discord(&rho, Side::Parity).unwrap() < 1e-15);
        for r in [0.0, 1.0] {
            let fp = FreeParams::from_mass_ratio(r, 0.3).unwrap();
            assert!(discord_free_closed_form(&fp).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_examples() {
        let fp = FreeParams::from_mass_ratio(FRAC_1_SQRT_2, 0.5).unwrap();
        assert!((discord_free_closed_form(&fp) - 0.25).abs() < 1e-12);
        assert!((bell_free_closed_form(&fp) + 0.75).abs() < 1e-12);
        let fp = FreeParams::from_mass_ratio(1.0, 0.5).unwrap();
        assert!((bell_free_closed_form(&fp) + 1.0).abs() < 1e-15);
        let fp = FreeParams::from_mass_ratio(0.4, 0.0).unwrap();
        assert_eq!(bell_free_closed_form(&fp), 0.0);
        assert!((m_max_closed_form(0.5) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((m_max_closed_form(0.0) - (0.4f64).sqrt()).abs() < 1e-15);
        assert_eq!(m_max_closed_form(1.0), 0.0);
    }

    #[test]
    fn exact_forms_match_pipeline() {
        for i in 0..=20 {
            for j in 0..=20 {
                let fp = FreeParams::from_mass_ratio(i as f64 / 20.0, j as f64 / 20.0).unwrap();
                let rho = rho_free(&fp);
                let d = geometric_discord(&rho, Side::Parity).unwrap();
                assert!((d - discord_free_exact(&fp)).abs() < 1e-10, "{fp:?}");
                let b = bell_horodecki(&rho).unwrap().bell_b;
                assert!((b - bell_free_exact(&fp)).abs() < 1e-10, "{fp:?}");
                assert!(geometric_discord(&rho, Side::Spin).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let cp = CouplingParams::canonical(2.0, 0.0, 0.0, 0.0, 1.0, 1.0);
        let h = hamiltonian_matrix(&cp);
        assert!(h.max_abs_diff(&ComplexMatrix4::from_real_diagonal([2.0, 2.0, -2.0, -2.0])) < 1e-15);

        let cp = CouplingParams::canonical(1.0, 1.0, 1.0, 0.3, 0.0, 0.0);
        let e = crate::linalg::hermitian_eigenvalues4(&hamiltonian_matrix(&cp)).unwrap();
        for (x, y) in e.iter().zip([-SQRT_2, -SQRT_2, SQRT_2, SQRT_2]) {
            assert!((x - y).abs() < 1e-12);
        }

        let h = hamiltonian_matrix(&defaults());
        assert!(h.is_hermitian(1e-12));
        assert!(h.trace().norm() < 1e-15);
        let e = crate::linalg::hermitian_eigenvalues4(&h).unwrap();
        let r = (4.0f64 + 2.0 * SQRT_2).sqrt();
        let q = (4.0f64 - 2.0 * SQRT_2).sqrt();
        for (x, y) in e.iter().zip([-r, -q, q, r]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn spectral_examples() {
        let sd = spectral_data(&defaults()).unwrap();
        assert!((sd.c1 - 4.0).abs() < 1e-12);
        assert!((sd.c2 - 2.0).abs() < 1e-12);
        assert!((sd.lambda(0, 0) - 2.613125929752753).abs() < 1e-12);
        let o2 = sd.o_matrix * sd.o_matrix;
        assert!(o2.max_abs_diff(&ComplexMatrix4::identity().scale(sd.c2)) < 1e-9);
        let h = hamiltonian_matrix(&defaults());
        let lhs = h * h;
        let rhs = ComplexMatrix4::identity().scale(sd.c1) + sd.o_matrix * 2.0;
        assert!(lhs.max_abs_diff(&rhs) < 1e-9);

        let no_field = CouplingParams::canonical(1.0, 1.0, 0.0, 0.0, 1.0, 1.0);
        assert!(matches!(spectral_data(&no_field), Err(Error::DegenerateSpectrum { .. })));
    }

    #[test]
    fn eigenstate_examples() {
        let cp = defaults();
        let h = hamiltonian_matrix(&cp);
        let mut sum = ComplexMatrix4::zeros();
        for n in 0..2 {
            for s in 0..2 {
                let rho = eigenstate_density(&cp, n, s).unwrap();
                assert!((rho.purity() - 1.0).abs() < 1e-9);
                let lambda = spectral_data(&cp).unwrap().lambda(n, s);
                let resid = (h * *rho.matrix()).max_abs_diff(&rho.matrix().scale(lambda));
                assert!(resid < 1e-9);
                sum = sum + *rho.matrix();
            }
        }
        assert!(sum.max_abs_diff(&ComplexMatrix4::identity()) < 1e-9);
        let rho = eigenstate_density(&cp, 0, 0).unwrap();
        let energy = rho.matrix().trace_product(&h).re;
        assert!((energy - (4.0f64 + 2.0 * SQRT_2).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn mixture_examples() {
        let cp = defaults();
        let pure = mixture_state(&cp, &MixtureWeights::new([1.0, 0.0, 0.0, 0.0]).unwrap()).unwrap();
        let e00 = eigenstate_density(&cp, 0, 0).unwrap();
        assert!(pure.matrix().max_abs_diff(e00.matrix()) < 1e-12);
        let flat = mixture_state(&cp, &MixtureWeights::uniform()).unwrap();
        assert!(flat.matrix().max_abs_diff(DensityMatrix::maximally_mixed().matrix()) < 1e-9);
    }

    #[test]
    fn weights_validation() {
        assert!(MixtureWeights::new([0.5, 0.5, 0.1, -0.1]).is_err());
        assert!(MixtureWeights::new([0.5, 0.4, 0.0, 0.0]).is_err());
        let w = MixtureWeights::with_partner(0.1, (0, 1)).unwrap();
        assert_eq!(w.as_array(), [0.1, 0.9, 0.0, 0.0]);
        let w = MixtureWeights::pair((0, 0), (1, 1)).unwrap();
        assert_eq!(w.as_array(), [0.5, 0.0, 0.0, 0.5]);
    }

    #[test]
    fn formula_fano_matches_matrix() {
        let cp = defaults();
        let flat = fano_from_formula(&cp, &MixtureWeights::uniform()).unwrap();
        assert!(flat.max_abs_diff(&FanoDecomposition::zero()) < 1e-15);
        let w = MixtureWeights::new([0.5, 0.5, 0.0, 0.0]).unwrap();
        let f = fano_from_formula(&cp, &w).unwrap();
        let g = fano_decompose(&mixture_state(&cp, &w).unwrap()).unwrap();
        assert!(f.max_abs_diff(&g) < 1e-9);
    }

    #[test]
    fn electric_substitution_rules() {
        let cp = CouplingParams::canonical(1.0, 1.0, 1.0, 0.5, 1.0, 0.0);
        let e = electric_substitution(&cp).unwrap();
        assert_eq!((e.kappa, e.chi, e.field_kind), (0.0, -1.0, FieldKind::Electric));
        let cp = CouplingParams::canonical(1.0, 1.0, 1.0, 0.5, 0.0, 1.0);
        let e = electric_substitution(&cp).unwrap();
        assert_eq!((e.kappa, e.chi), (1.0, 0.0));
        assert_eq!(electric_substitution(&e), Err(Error::AlreadyElectric));

        let cp = CouplingParams::canonical(0.7, 1.2, 0.9, 0.4, 0.8, -0.3);
        let twice = swap_couplings(&swap_couplings(&cp));
        assert_eq!((twice.kappa, twice.chi), (-0.8, 0.3));
        assert!((twice.c1() - cp.c1()).abs() < 1e-15);
        assert!((twice.c2() - cp.c2()).abs() < 1e-15);
    }
}
