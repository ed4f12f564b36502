//! Deterministic, parallel-safe random number streams.
//!
//! Every sampling routine in this crate draws from a stream derived from
//! `(seed, label, replica)`. The derivation is a SplitMix64 mix of the
//! three components expanded into a ChaCha key, so streams for different
//! labels or replica indices are statistically independent, and replica
//! parallelism cannot change results: replica `r` always sees the same
//! stream no matter which worker runs it.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// The concrete RNG used everywhere. ChaCha is counter-based, so streams
/// are reproducible across platforms.
pub type StreamRng = ChaCha12Rng;

/// SplitMix64 step: advances the state and returns a mixed output.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the reproducible stream for `(seed, label, replica)`.
pub fn rng_stream(seed: u64, label: &str, replica: u64) -> StreamRng {
    let mut state = seed;
    let mut acc = splitmix64(&mut state);
    for byte in label.bytes() {
        state ^= u64::from(byte);
        acc ^= splitmix64(&mut state);
    }
    state ^= replica;
    acc ^= splitmix64(&mut state);

    let mut key = [0u8; 32];
    let mut expand = acc;
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut expand).to_le_bytes());
    }
    StreamRng::from_seed(key)
}
