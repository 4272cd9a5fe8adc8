//! Seeded, allocation-free random number generation.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014): 64-bit state
//! advanced by the golden-gamma constant, output mixed by two xor-multiply
//! rounds. Gaussians come from the Box–Muller transform, so every draw
//! consumes a fixed number of uniforms — no rejection loops — and a given
//! seed always produces the same stream within one build. Cross-language
//! bit-reproducibility is a non-goal.

#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer; also used to derive independent per-trial seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the `index`-th substream of a master seed. Each violating audit
/// instance can be replayed in isolation from its derived seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    mix64(master.wrapping_add(GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// The SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box–Muller; always consumes exactly two uniforms.
    pub fn next_normal(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64(); // (0, 1], keeps ln finite
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
    }

    /// Standard complex normal: independent N(0,1) real and imaginary parts.
    pub fn next_complex_normal(&mut self) -> crate::C64 {
        let re = self.next_normal();
        let im = self.next_normal();
        crate::C64::new(re, im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn uniform_in_unit_interval() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..10_000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn normal_moments_are_sane() {
        let mut rng = SplitMix64::new(2024);
        let n = 100_000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let z = rng.next_normal();
            sum += z;
            sum_sq += z * z;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.03, "var {var}");
    }

    #[test]
    fn derived_seeds_are_distinct() {
        let seeds: std::vec::Vec<u64> = (0..1000).map(|i| derive_seed(99, i)).collect();
        let mut sorted = seeds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), seeds.len());
    }
}


