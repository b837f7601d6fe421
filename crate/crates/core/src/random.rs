//! Seeded random rationals for genericity checks.
//!
//! Numerator and denominator are drawn uniformly from `1..=100` with a random
//! sign, so every sample is nonzero. Each `(seed, stream)` pair yields an
//! independent, reproducible sequence.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{int, Rational};

/// Seed used when none is supplied on the command line.
pub const DEFAULT_SEED: u64 = 20_100_517;

pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RationalSampler { rng }
    }

    pub fn next_rational(&mut self) -> Rational {
        let num: i64 = self.rng.gen_range(1..=100);
        let den: i64 = self.rng.gen_range(1..=100);
        let num = if self.rng.gen_bool(0.5) { -num } else { num };
        Rational::new(int(num), int(den))
    }

    pub fn rationals(&mut self, count: usize) -> Vec<Rational> {
        (0..count).map(|_| self.next_rational()).collect()
    }

    /// Two distinct rationals.
    pub fn distinct_pair(&mut self) -> (Rational, Rational) {
        let a = self.next_rational();
        loop {
            let b = self.next_rational();
            if b != a {
                return (a, b);
            }
        }
    }
}
