use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use spinparity_core::linalg::hermitian_eigenvalues4;
use spinparity_core::quantifiers::{bell_horodecki, correlation_report, geometric_discord, negativity};
use spinparity_core::random::{ginibre_state, random_local_unitary, random_pure_state};
use spinparity_core::state::{
    fano_compose, fano_decompose, partial_transpose_1, partial_transpose_1_matrix, partial_transpose_2_matrix,
};
use spinparity_core::{DensityMatrix, Side};

fn state_from_seed(seed: u64, pure: bool) -> DensityMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    if pure {
        random_pure_state(&mut rng)
    } else {
        ginibre_state(&mut rng)
    }
}

fn any_state() -> impl Strategy<Value = DensityMatrix> {
    (any::<u64>(), any::<bool>()).prop_map(|(s, p)| state_from_seed(s, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fano_round_trip(rho in any_state()) {
        let f = fano_decompose(&rho).unwrap();
        let back = fano_compose(&f).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
    }

    #[test]
    fn partial_transpose_is_an_involution(rho in any_state()) {
        let m = rho.matrix();
        prop_assert!(partial_transpose_1_matrix(&partial_transpose_1_matrix(m)).max_abs_diff(m) < 1e-15);
        prop_assert!(partial_transpose_2_matrix(&partial_transpose_2_matrix(m)).max_abs_diff(m) < 1e-15);
        // Transposing both qubits is the full transpose.
        let both = partial_transpose_2_matrix(&partial_transpose_1_matrix(m));
        let mut full = *m;
        for r in 0..4 { for c in 0..4 { full[(r, c)] = m[(c, r)]; } }
        prop_assert!(both.max_abs_diff(&full) < 1e-15);
    }

    #[test]
    fn partial_transpose_decomposition_matches_matrix(rho in any_state()) {
        let (pt, dec) = partial_transpose_1(&rho).unwrap();
        prop_assert!(dec.as_fano().to_matrix().max_abs_diff(&pt) < 1e-12);
        let trace: f64 = hermitian_eigenvalues4(&pt).unwrap().iter().sum();
        prop_assert!((trace - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quantifier_ranges(rho in any_state()) {
        let r = correlation_report(&rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.negativity));
        prop_assert!(r.discord1 >= 0.0 && r.discord2 >= 0.0);
        prop_assert!(r.locality_m >= 0.0 && r.locality_m <= 2.0 + 1e-9);
        prop_assert!(r.chsh_value <= 2.0 * 2f64.sqrt() + 1e-9);
        prop_assert!((r.bell_b - (r.locality_m - 1.0)).abs() == 0.0);
    }

    #[test]
    fn discord_bounds_negativity(rho in any_state()) {
        let n = negativity(&rho).unwrap();
        for side in [Side::Parity, Side::Spin] {
            let d = geometric_discord(&rho, side).unwrap();
            prop_assert!(d >= 0.5 * n * n - 1e-9, "D{side} = {d}, N = {n}");
        }
    }

    #[test]
    fn local_unitaries_preserve_quantifiers(seed in any::<u64>(), pure in any::<bool>()) {
        let rho = state_from_seed(seed, pure);
        let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let u = random_local_unitary(&mut rng);
        let moved = DensityMatrix::validate(rho.matrix().conjugate_by(&u)).unwrap();
        let a = correlation_report(&rho).unwrap();
        let b = correlation_report(&moved).unwrap();
        prop_assert!((a.negativity - b.negativity).abs() < 1e-9);
        prop_assert!((a.discord1 - b.discord1).abs() < 1e-9);
        prop_assert!((a.discord2 - b.discord2).abs() < 1e-9);
        prop_assert!((a.locality_m - b.locality_m).abs() < 1e-9);
    }

    #[test]
    fn pure_states_violate_chsh_iff_entangled(seed in any::<u64>()) {
        let rho = state_from_seed(seed, true);
        let n = negativity(&rho).unwrap();
        let b = bell_horodecki(&rho).unwrap().bell_b;
        // For pure states M = 1 + C² and N = C.
        prop_assert!((b - n * n).abs() < 1e-9);
        let d = geometric_discord(&rho, Side::Parity).unwrap();
        prop_assert!((d - 0.5 * n * n).abs() < 1e-9);
    }

    #[test]
    fn mixtures_are_valid_states(s1 in any::<u64>(), s2 in any::<u64>(), w in 0.0f64..=1.0) {
        let a = state_from_seed(s1, true);
        let b = state_from_seed(s2, false);
        let mix = DensityMatrix::mixture(&[(w, a), (1.0 - w, b)]).unwrap();
        let f = fano_decompose(&mix).unwrap();
        let fa = fano_decompose(&a).unwrap();
        let fb = fano_decompose(&b).unwrap();
        for i in 0..3 {
            prop_assert!((f.a1[i] - (w * fa.a1[i] + (1.0 - w) * fb.a1[i])).abs() < 1e-12);
        }
    }
}
