//! Binomials and lexicographic rank/unrank for sorted index tuples.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n choose k` as an unbounded integer.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 1..=k {
        r = r * BigUint::from(n - (k - i)) / BigUint::from(i);
    }
    r
}

/// `n choose k` as a `u128`, `None` on overflow.
pub fn binom_u128(n: u64, k: u64) -> Option<u128> {
    u128::try_from(binom_big(n, k)).ok()
}

/// `n choose k` when it fits in a `u64`.
pub fn binom_u64(n: u64, k: u64) -> Option<u64> {
    u64::try_from(binom_big(n, k)).ok()
}

pub fn factorial_big(n: u64) -> BigUint {
    let mut r = BigUint::one();
    for i in 2..=n {
        r *= BigUint::from(i);
    }
    r
}

/// Lexicographic rank of a strictly increasing k-tuple out of `0..n`.
pub fn rank_combination(n: usize, combo: &[u32]) -> u64 {
    let k = combo.len();
    let mut rank = 0u64;
    let mut prev = 0u32;
    for (i, &c) in combo.iter().enumerate() {
        for j in prev..c {
            rank += binom_u64((n as u64) - (j as u64) - 1, (k - i - 1) as u64)
                .expect("rank fits u64");
        }
        prev = c + 1;
    }
    rank
}

/// Inverse of [`rank_combination`].
pub fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<u32> {
    let mut combo = Vec::with_capacity(k);
    let mut c = 0u32;
    for i in 0..k {
        loop {
            let count = binom_u64((n as u64) - (c as u64) - 1, (k - i - 1) as u64)
                .expect("rank fits u64");
            if count <= rank {
                rank -= count;
                c += 1;
            } else {
                combo.push(c);
                c += 1;
                break;
            }
        }
    }
    combo
}
