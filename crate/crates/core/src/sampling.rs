//! Seeded sampling of small rationals for certificate batteries.
//!
//! Numerators and denominators are drawn from [1, 10] with a random sign,
//! which keeps every downstream exact computation small while exercising
//! nontrivial denominators. Streams are decorrelated from a base seed with
//! a fixed odd multiplier so batch runs stay deterministic per instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Rational;

const STREAM_MIX: u64 = 0x9e37_79b9_7f4a_7c15;

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(STREAM_MIX))
}

/// Nonzero rational with numerator and denominator in [1, 10], signed.
pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer: i64 = rng.gen_range(1..=10);
    let denom: i64 = rng.gen_range(1..=10);
    let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new((sign * numer).into(), denom.into())
}

/// Possibly-zero rational combination coefficient (zero one time in five).
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_bool(0.2) {
        Rational::new(0.into(), 1.into())
    } else {
        random_nonzero_rational(rng)
    }
}

pub fn random_nonzero_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_nonzero_rational(rng)).collect()
}
