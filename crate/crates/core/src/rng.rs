//! Minimal deterministic pseudo-random generator.
//!
//! The crate needs reproducible sampling in `no_std` contexts (construction
//! verification, randomized test loops, seed derivation for worker shards).
//! SplitMix64 is tiny, has no state beyond one word, and its output sequence
//! is fixed for all time, which keeps sampled verification runs byte-stable
//! across platforms and toolchain upgrades.

/// SplitMix64 generator (public-domain constants from Vigna's reference).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Creates a generator from an arbitrary seed. Distinct seeds give
    /// independent-looking streams; seed 0 is fine.
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next 64 uniform bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`), by rejection to avoid bias.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below requires a positive bound");
        // Rejection zone keeps the distribution exactly uniform.
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    /// Derives an independent generator for worker/shard `index`.
    pub fn derive(&self, index: u64) -> Self {
        let mut child = Self::new(self.state ^ 0xA076_1D64_78BD_642F_u64.wrapping_mul(index + 1));
        child.next_u64();
        Self::new(child.next_u64())
    }

    /// Fisher-Yates shuffle of a slice.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
