//! Seeded randomness shared by the randomized algorithms and the synthetic
//! data generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic random source. The same seed yields the same draw sequence
/// on every platform (ChaCha8 stream, portable range sampling).
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `[0, n)`. Panics if `n == 0`.
    pub fn uniform_index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// Uniform real in `[low, high)`.
    pub fn uniform_real(&mut self, low: f64, high: f64) -> f64 {
        low + (high - low) * self.rng.random::<f64>()
    }

    /// Uniform integer in `[low, high]`.
    pub fn uniform_int(&mut self, low: i64, high: i64) -> i64 {
        self.rng.random_range(low..=high)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RandomSource::new(99);
        let mut b = RandomSource::new(99);
        let xs: Vec<usize> = (0..64).map(|_| a.uniform_index(1000)).collect();
        let ys: Vec<usize> = (0..64).map(|_| b.uniform_index(1000)).collect();
        assert_eq!(xs, ys);
    }

    #[test]
    fn different_seeds_differ() {
        let mut a = RandomSource::new(1);
        let mut b = RandomSource::new(2);
        let xs: Vec<usize> = (0..16).map(|_| a.uniform_index(1 << 30)).collect();
        let ys: Vec<usize> = (0..16).map(|_| b.uniform_index(1 << 30)).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn index_in_range_and_covers_support() {
        let mut r = RandomSource::new(5);
        let mut seen = [0usize; 7];
        for _ in 0..7000 {
            let i = r.uniform_index(7);
            seen[i] += 1;
        }
        // each bucket expects 1000
        assert!(seen.iter().all(|&c| (850..1150).contains(&c)), "{seen:?}");
    }

    #[test]
    fn real_and_int_bounds() {
        let mut r = RandomSource::new(8);
        for _ in 0..1000 {
            let x = r.uniform_real(-10.0, 10.0);
            assert!((-10.0..10.0).contains(&x));
            let k = r.uniform_int(-3, 3);
            assert!((-3..=3).contains(&k));
        }
    }

    #[test]
    fn pinned_stream() {
        // guards against silent changes in the generator or range sampling
        let mut r = RandomSource::new(42);
        let draws: Vec<usize> = (0..5).map(|_| r.uniform_index(150)).collect();
        assert_eq!(draws, [33, 102, 21, 142, 115]);
    }
}
