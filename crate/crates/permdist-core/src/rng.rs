//! Random-stream helpers.
//!
//! All stochastic operations in this crate draw from a single caller-supplied
//! stream implementing [`rand_core::RngCore`], so a run is reproducible from
//! its seed alone. [`DefaultRng`] is the stream used by the CLI and the test
//! suite; `DefaultRng::seed_from_u64(seed)` yields the same sequence on every
//! platform.

pub use rand_core::{RngCore, SeedableRng};

/// The concrete deterministic stream used throughout the project.
pub type DefaultRng = rand_chacha::ChaCha8Rng;

/// Bounded draws and coin flips on top of any [`RngCore`].
pub trait StreamExt: RngCore {
    /// Uniform integer in `[0, bound)` (Lemire's unbiased rejection method).
    /// `bound` must be nonzero.
    fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        loop {
            let x = self.next_u64();
            let m = x as u128 * bound as u128;
            let lo = m as u64;
            if lo < bound {
                let threshold = bound.wrapping_neg() % bound;
                if lo < threshold {
                    continue;
                }
            }
            return (m >> 64) as u64;
        }
    }

    /// Uniform double in `[0, 1)` with 53 bits of precision.
    fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// One Bernoulli trial; always consumes exactly one draw.
    fn next_coin(&mut self, probability: f64) -> bool {
        self.next_unit() < probability
    }
}

impl<R: RngCore + ?Sized> StreamExt for R {}
