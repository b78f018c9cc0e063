#![allow(dead_code)]

use kneserlab_core::algebra::Subspace;
use kneserlab_core::PrimeField;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector<F: PrimeField>(rng: &mut ChaCha8Rng, d: usize) -> Vec<F> {
    (0..d)
        .map(|_| F::from_i64(rng.random_range(0..F::CHARACTERISTIC) as i64))
        .collect()
}

/// A uniformly chosen spanning set, redrawn until it spans a `k`-space.
pub fn random_subspace<F: PrimeField>(rng: &mut ChaCha8Rng, d: usize, k: usize) -> Subspace<F> {
    loop {
        let rows: Vec<Vec<F>> = (0..k).map(|_| random_vector(rng, d)).collect();
        let u = Subspace::span(d, &rows).unwrap();
        if u.dim() == k {
            return u;
        }
    }
}
