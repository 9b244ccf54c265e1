use rand::rngs::StdRng;
use rand::SeedableRng;

use spinparity_core::chsh::{chsh_brute_force, DEFAULT_GRID_N, DEFAULT_REFINE_ITERS};
use spinparity_core::quantifiers::bell_horodecki;
use spinparity_core::random::{ginibre_state, random_pure_state};

#[test]
fn brute_force_matches_horodecki_on_random_states() {
    let mut rng = StdRng::seed_from_u64(31);
    for i in 0..50 {
        let rho = if i % 2 == 0 { ginibre_state(&mut rng) } else { random_pure_state(&mut rng) };
        let exact = bell_horodecki(&rho).unwrap().chsh;
        let brute = chsh_brute_force(&rho, DEFAULT_GRID_N, DEFAULT_REFINE_ITERS);
        assert!(brute <= exact + 1e-9, "state {i}: {brute} > {exact}");
        assert!(exact - brute < 1e-3, "state {i}: {brute} vs {exact}");
    }
}

#[test]
fn brute_force_never_exceeds_tsirelson() {
    let mut rng = StdRng::seed_from_u64(32);
    for _ in 0..50 {
        let rho = random_pure_state(&mut rng);
        assert!(chsh_brute_force(&rho, 12, 10) <= 2.0 * 2f64.sqrt() + 1e-9);
    }
}
