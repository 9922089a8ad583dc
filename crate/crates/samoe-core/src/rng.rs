//! Seed derivation. Every random draw in the crate flows from a single
//! config seed through named streams, so reordering one training phase
//! never perturbs the randomness of another.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// FNV-1a over the label bytes folded into the base seed.
pub fn derive_seed(base: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ base.rotate_left(17);
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Derivation with numeric qualifiers (step index, epoch, sample id, ...).
pub fn derive_seed_n(base: u64, label: &str, ns: &[u64]) -> u64 {
    let mut h = derive_seed(base, label);
    for n in ns {
        for b in n.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// A named deterministic stream.
pub fn stream(base: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(base, label))
}

pub fn stream_n(base: u64, label: &str, ns: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed_n(base, label, ns))
}
