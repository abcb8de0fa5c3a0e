//! Deterministic seed derivation.
//!
//! All randomness in the crate flows from one root seed. Child seeds are
//! derived with a fixed mixing function of `(root, tag, index)` so that
//! experiments can run their trials independently (and in parallel) while
//! staying byte-reproducible: the same root seed always yields the same
//! stream for every `(tag, index)` pair.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// FNV-1a over the tag bytes; stable across platforms.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Child seed for a named subsystem and trial index.
pub fn split(root: u64, tag: &str, index: u64) -> u64 {
    mix(root ^ fnv1a(tag.as_bytes()) ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Seeded RNG for a `(root, tag, index)` triple.
pub fn rng(root: u64, tag: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(split(root, tag, index))
}
