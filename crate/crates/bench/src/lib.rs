//! Inputs shared by the benchmarks.

use yugong::{yu_gong, BinarySeq, Delta};

/// Yu-Gong sequence for `k` over the default field.
pub fn yu_gong_input(k: u32) -> BinarySeq {
    yu_gong(k, Delta::Plus, None).expect("k within range").seq
}

/// Deterministic pseudo-random sequence of the given period (xorshift64).
pub fn scrambled(period: usize, seed: u64) -> BinarySeq {
    let mut state = seed | 1;
    BinarySeq::from_fn(period, |_| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state & 1 == 1
    })
    .expect("positive period")
}
