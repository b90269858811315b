#![allow(dead_code)]

use bce_core::Ring;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rings() -> Vec<Ring> {
    ["z", "q", "fp:2", "fp:3", "fp:5", "fq:2,2", "fq:3,2", "qsqrt"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect()
}

pub fn any_ring() -> impl Strategy<Value = Ring> {
    prop::sample::select(rings())
}

pub fn char_p_ring() -> impl Strategy<Value = (Ring, u64)> {
    prop::sample::select(vec!["fp:2", "fp:3", "fp:5", "fq:2,2", "fq:3,2"])
        .prop_map(|t| {
            let r: Ring = t.parse().unwrap();
            let p = r.characteristic();
            (r, p)
        })
}
