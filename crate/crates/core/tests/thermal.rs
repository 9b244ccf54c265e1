use spinparity_core::dirac::{eigenstate_density, hamiltonian_matrix, spectral_data};
use spinparity_core::quantifiers::{bell_horodecki, negativity};
use spinparity_core::thermal::{bell_onset, boltzmann_weights, entanglement_onset, gibbs_state};
use spinparity_core::{CouplingParams, ThermalParams};

fn gibbs(cp: &CouplingParams, beta: f64) -> spinparity_core::DensityMatrix {
    gibbs_state(cp, ThermalParams::new(beta).unwrap()).unwrap()
}

#[test]
fn purity_grows_as_temperature_falls() {
    for m in [0.0, 1.0, 10.0] {
        let cp = CouplingParams::figure_defaults(m);
        let mut last = 0.0;
        for k in 0..200 {
            let p = gibbs(&cp, k as f64 * 0.05).purity();
            assert!(p >= last - 1e-12, "m = {m}, step {k}");
            last = p;
        }
    }
}

#[test]
fn gibbs_state_commutes_with_hamiltonian() {
    let cp = CouplingParams::figure_defaults(1.0);
    let h = hamiltonian_matrix(&cp);
    for beta in [0.0, 0.3, 1.0, 5.0, 50.0] {
        let rho = gibbs(&cp, beta);
        assert!(h.commutator(rho.matrix()).max_abs() < 1e-9);
    }
}

#[test]
fn populations_follow_boltzmann() {
    let cp = CouplingParams::figure_defaults(2.0);
    let sd = spectral_data(&cp).unwrap();
    for beta in [0.1, 0.7, 3.0] {
        let rho = gibbs(&cp, beta);
        let z: f64 = sd.lambdas.iter().map(|l| (-beta * l).exp()).sum();
        let w = boltzmann_weights(&sd, beta);
        for k in 0..4u8 {
            let pop = rho.overlap(&eigenstate_density(&cp, k / 2, k % 2).unwrap());
            let expected = (-beta * sd.lambdas[k as usize]).exp() / z;
            assert!((pop - expected).abs() < 1e-9);
            assert!((w[k as usize] - expected).abs() < 1e-12);
        }
    }
}

#[test]
fn entanglement_appears_before_nonlocality() {
    // Thresholds in βp for the figure defaults (p = 1).
    let expected = [(0.0, 0.43, 0.85), (1.0, 0.42, 1.04), (10.0, 0.24, 3.27)];
    for (m, n_at, b_at) in expected {
        let cp = CouplingParams::figure_defaults(m);
        let beta_n = entanglement_onset(&cp, 10.0, 1e-6).unwrap().expect("entanglement appears");
        let beta_b = bell_onset(&cp, 10.0, 1e-6).unwrap().expect("Bell function crosses zero");
        assert!((beta_n - n_at).abs() < 0.01, "m = {m}: β* = {beta_n}");
        assert!((beta_b - b_at).abs() < 0.01, "m = {m}: β_B = {beta_b}");
        assert!(beta_b > beta_n);
        assert!(negativity(&gibbs(&cp, beta_n - 1e-3)).unwrap() < 1e-12);
        assert!(negativity(&gibbs(&cp, beta_n + 1e-3)).unwrap() > 0.0);
        assert!(bell_horodecki(&gibbs(&cp, beta_b - 1e-3)).unwrap().bell_b < 0.0);
    }
}
