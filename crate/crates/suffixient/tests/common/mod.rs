//! Seeded text generators shared by the integration suites. Everything is
//! deterministic: the same seed always yields the same corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform text over `sigma` letters starting at `b'a'`.
pub fn uniform(rng: &mut ChaCha8Rng, len: usize, sigma: usize) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect()
}

/// Concatenated copies of a short seed block with point mutations — the
/// highly similar regime the structure is designed for.
pub fn repetitive(rng: &mut ChaCha8Rng, len: usize, sigma: usize) -> Vec<u8> {
    let block_len = (len / 8).clamp(1, 64);
    let block = uniform(rng, block_len, sigma);
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let mut copy = block.clone();
        if rng.gen_bool(0.7) {
            let at = rng.gen_range(0..copy.len());
            copy[at] = b'a' + rng.gen_range(0..sigma) as u8;
        }
        out.extend_from_slice(&copy);
    }
    out.truncate(len);
    out
}

/// Long single-character runs, stressing the run-boundary logic.
pub fn run_heavy(rng: &mut ChaCha8Rng, len: usize, sigma: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let c = b'a' + rng.gen_range(0..sigma) as u8;
        let run = rng.gen_range(1..=12).min(len - out.len());
        out.extend(std::iter::repeat(c).take(run));
    }
    out
}

/// `count` texts with body length in `[1, max_len]` over 1..=`max_sigma`-1
/// letters (so the final alphabet including the sentinel stays within
/// `[2, max_sigma]`), cycling through all three generators.
pub fn corpus(seed: u64, count: usize, max_len: usize, max_sigma: usize) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let len = rng.gen_range(1..=max_len);
            let sigma = rng.gen_range(1..max_sigma);
            match k % 3 {
                0 => uniform(&mut rng, len, sigma),
                1 => repetitive(&mut rng, len, sigma),
                _ => run_heavy(&mut rng, len, sigma),
            }
        })
        .collect()
}

/// A large text of `copies` mutated copies of a `seed_len`-byte seed.
pub fn mutated_copies(seed: u64, seed_len: usize, copies: usize) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let block = uniform(&mut rng, seed_len, 4);
    let mut out = Vec::with_capacity(seed_len * copies);
    for _ in 0..copies {
        let mut copy = block.clone();
        for _ in 0..3 {
            let at = rng.gen_range(0..copy.len());
            copy[at] = b'a' + rng.gen_range(0..4u8);
        }
        out.extend_from_slice(&copy);
    }
    out
}
