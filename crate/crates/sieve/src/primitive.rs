//! Candidate parameters when the point stabilizer acts primitively on the
//! n letters. The replication number is exactly divisible by 2, its odd
//! part is a squarefree product of primes from {n-2, n-1, n}, and the point
//! count is at least half the factorial of half of n; scanning those
//! constraints yields ten (n, r) pairs and ten parameter tuples.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binom::factorial_big;
use crate::params::ParamTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRow {
    pub n: usize,
    pub params: ParamTuple,
}

fn is_odd_prime(x: u64) -> bool {
    if x < 3 || x % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Candidate replication numbers for a given n: 2p and 2pq over odd primes
/// p, q in {n-2, n-1, n}.
fn candidate_rs(n: u64) -> Vec<u64> {
    let ps: Vec<u64> = [n - 2, n - 1, n]
        .into_iter()
        .filter(|&x| is_odd_prime(x))
        .collect();
    let mut rs: Vec<u64> = ps.iter().map(|&p| 2 * p).collect();
    if ps.len() == 2 {
        rs.push(2 * ps[0] * ps[1]);
    }
    rs.sort_unstable();
    rs
}

fn half_factorial_floor(n: u64) -> BigUint {
    factorial_big((n + 1) / 2)
}

/// The (n, r) pairs surviving r² > ⌊(n+1)/2⌋!.
pub fn nr_pairs() -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    // The largest conceivable r at a given n is 2n(n-2); its square falls
    // behind the factorial bound from n = 17 on and never recovers, so a
    // scan to 100 is exhaustive with margin.
    for n in 5u64..=100 {
        let bound = half_factorial_floor(n);
        for r in candidate_rs(n) {
            if BigUint::from(r * r) > bound {
                out.push((n as usize, r));
            }
        }
    }
    out
}

/// The full enumeration: for each surviving (n, r), all tuples with
/// v ≥ ⌊(n+1)/2⌋!/2, the six admissibility conditions, and v, b dividing n!.
pub fn primitive_branch() -> Vec<PrimitiveRow> {
    let mut rows = Vec::new();
    for (n, r) in nr_pairs() {
        let nf = factorial_big(n as u64);
        let v_min = half_factorial_floor(n as u64) / BigUint::from(2u32);
        // v = 1 + r(k-1)/2 for k in 3..r; r² > 2v bounds k
        for k in 3..r {
            if (r * (k - 1)) % 2 != 0 {
                continue;
            }
            let v = 1 + r * (k - 1) / 2;
            if BigUint::from(v) < v_min || r * r <= 2 * v {
                continue;
            }
            if (v * r) % k != 0 {
                continue;
            }
            let b = v * r / k;
            if b <= v {
                continue;
            }
            if (&nf % BigUint::from(v)) != BigUint::zero()
                || (&nf % BigUint::from(b)) != BigUint::zero()
            {
                continue;
            }
            let params = ParamTuple { v, b, r, k };
            debug_assert!(params.is_admissible());
            rows.push(PrimitiveRow { n, params });
        }
    }
    rows.sort_by_key(|row| (row.params.v, row.params.b, row.n));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_ten_nr_pairs() {
        assert_eq!(
            nr_pairs(),
            vec![
                (5, 6),
                (5, 10),
                (5, 30),
                (6, 10),
                (7, 10),
                (7, 14),
                (7, 70),
                (8, 14),
                (9, 14),
                (13, 286),
            ]
        );
    }

    #[test]
    fn the_ten_tuples() {
        let rows = primitive_branch();
        let got: Vec<(usize, u64, u64, u64, u64)> = rows
            .iter()
            .map(|r| (r.n, r.params.v, r.params.b, r.params.r, r.params.k))
            .collect();
        let expected = vec![
            (5, 10, 15, 6, 4),
            (6, 16, 40, 10, 4),
            (7, 16, 40, 10, 4),
            (7, 15, 70, 14, 3),
            (8, 15, 70, 14, 3),
            (7, 21, 42, 10, 5),
            (6, 36, 45, 10, 8),
            (7, 36, 45, 10, 8),
            (7, 36, 84, 14, 6),
            (8, 36, 84, 14, 6),
        ];
        let sort = |mut v: Vec<(usize, u64, u64, u64, u64)>| {
            v.sort_unstable();
            v
        };
        assert_eq!(sort(got), sort(expected));
        assert!(rows.iter().any(|r| r.params
            == ParamTuple {
                v: 36,
                b: 84,
                r: 14,
                k: 6
            }
            && r.n == 7));
    }
}
