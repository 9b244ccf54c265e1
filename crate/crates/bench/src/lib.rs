//! Shared fixtures for the criterion benches.

use rand::rngs::StdRng;
use rand::SeedableRng;
use spinparity_core::random::ginibre_state;
use spinparity_core::DensityMatrix;

/// A reproducible batch of random mixed states.
pub fn sample_states(n: usize, seed: u64) -> Vec<DensityMatrix> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n).map(|_| ginibre_state(&mut rng)).collect()
}
