#![allow(dead_code)]

use lcplab_core::numerics::{rat, ratio};
use lcplab_core::{Rational, RationalMatrix, RationalVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> RationalMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect::<Vec<Vec<i64>>>();
    RationalMatrix::from_i64_rows(&rows).unwrap()
}

pub fn int_vector(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> RationalVector {
    RationalVector((0..n).map(|_| rat(rng.gen_range(lo..=hi))).collect())
}

pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `P A Pᵀ` for the permutation matrix of `perm`.
pub fn permute(a: &RationalMatrix, perm: &[usize]) -> RationalMatrix {
    let p = RationalMatrix::permutation(perm);
    p.mul(a).mul(&p.transpose())
}

pub fn positive_diagonal(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let choices = [rat(1), rat(2), rat(3), ratio(1, 2), ratio(2, 3)];
    (0..n).map(|_| choices.choose(rng).unwrap().clone()).collect()
}

/// Every integer 2×2 matrix with entries in `lo..=hi`.
pub fn all_2x2(lo: i64, hi: i64) -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            for c in lo..=hi {
                for d in lo..=hi {
                    out.push([[a, b], [c, d]]);
                }
            }
        }
    }
    out
}
