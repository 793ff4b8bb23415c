//! The four elementary inequality implications used to bound the
//! enumeration regions, as pure predicates. Each is brute-force verified
//! over its stated range in the tests.

use num_bigint::BigUint;

use crate::binom_big;

fn two_pow(e: u64) -> BigUint {
    BigUint::from(1u32) << e
}

fn sq(x: &BigUint) -> BigUint {
    x * x
}

/// 2^((s-1)(t-1)) > 2 s^4 C(t,2)^2 — the imprimitive-branch region bound.
pub fn region_s_ge3(s: u64, t: u64) -> bool {
    let lhs = two_pow((s - 1) * (t - 1));
    let rhs = BigUint::from(2u32) * BigUint::from(s).pow(4) * sq(&binom_big(t, 2));
    lhs < rhs
}

/// C(s+t, s) <= 2 s^2 t^2 — the intransitive-branch region bound.
pub fn region_intransitive(s: u64, t: u64) -> bool {
    binom_big(s + t, s) < BigUint::from(2 * s * s * t * t)
}

/// (i) as consumed by the subset branch: t > s >= 7 implies
/// C(s+t,s) > 2s^2t^2, so the region condition cannot hold there. The
/// stronger printed chain through 2t^4 fails at (7,8), (7,9), (7,10);
/// see `lemma_i_middle_term` for the recorded counterexamples.
pub fn lemma_i(s: u64, t: u64) -> bool {
    if !(t > s && s >= 7) {
        return true;
    }
    binom_big(s + t, s) > BigUint::from(2 * s * s * t * t)
}

/// The printed middle term of (i): C(s+t,s) > 2t^4 for t > s >= 7.
pub fn lemma_i_middle_term(s: u64, t: u64) -> bool {
    if !(t > s && s >= 7) {
        return true;
    }
    binom_big(s + t, s) > BigUint::from(2 * t * t * t * t)
}

/// (ii): s >= 6, t >= 2, 2^((s-1)(t-1)) > 2 s^4 C(t,2)^2
///        implies 2^(s(t-1)) > 2 (s+1)^4 C(t,2)^2.
pub fn lemma_ii(s: u64, t: u64) -> bool {
    if !(s >= 6 && t >= 2) || region_s_ge3(s, t) {
        return true;
    }
    let lhs = two_pow(s * (t - 1));
    let rhs = BigUint::from(2u32) * BigUint::from(s + 1).pow(4) * sq(&binom_big(t, 2));
    lhs > rhs
}

/// (iii): t >= 6, s >= 2, 2^((s-1)(t-1)) > 2 s^4 C(t,2)^2
///        implies 2^((s-1)t) > 2 s^4 C(t+1,2)^2.
pub fn lemma_iii(s: u64, t: u64) -> bool {
    if !(t >= 6 && s >= 2) || region_s_ge3(s, t) {
        return true;
    }
    let lhs = two_pow((s - 1) * t);
    let rhs = BigUint::from(2u32) * BigUint::from(s).pow(4) * sq(&binom_big(t + 1, 2));
    lhs > rhs
}

/// (iv): t >= 4, s >= 3, C(s+t,s) > 2 s^2 t^2
///        implies C(s+t+1,s) > 2 s^2 (t+1)^2.
pub fn lemma_iv(s: u64, t: u64) -> bool {
    if !(t >= 4 && s >= 3) || region_intransitive(s, t) {
        return true;
    }
    binom_big(s + t + 1, s) > BigUint::from(2 * s * s * (t + 1) * (t + 1))
}
