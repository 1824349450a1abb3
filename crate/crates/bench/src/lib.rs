//! Seeded inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riordan_core::fps::Series;
use riordan_core::suite::random_unit_series;

/// Random series with constant term 1, the same for the same `(order, seed)`.
pub fn unit_series(order: usize, seed: u64) -> Series {
    random_unit_series(&mut ChaCha8Rng::seed_from_u64(seed), order)
}

/// `x u(x)` for a seeded unit series `u`: a compositional series.
pub fn compositional_series(order: usize, seed: u64) -> Series {
    unit_series(order, seed).shift_up(1).truncate(order)
}
