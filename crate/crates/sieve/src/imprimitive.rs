//! Candidate parameters when the point stabilizer preserves a partition of
//! the n letters into t classes of size s. The pair-class size 2 case dies
//! against r² > 2v; for class size at least 3 the region inequality leaves
//! 36 pairs (s, t), of which exactly two produce parameter tuples.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::binom::{binom_big, factorial_big};
use crate::lemma26::region_s_ge3;
use crate::params::ParamTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub t: u64,
    pub n: u64,
    pub v: u64,
    pub d2: u64,
    pub d3: u64,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImprimitiveRow {
    pub n: usize,
    pub s: u64,
    pub t: u64,
    pub params: ParamTuple,
    /// The orbit lengths used for the divisibility filter (d_2).
    pub subdegrees: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct ImprimitiveOutput {
    pub table1: Vec<Table1Row>,
    pub pairs: Vec<(u64, u64)>,
    pub rows: Vec<ImprimitiveRow>,
}

/// v = C(ts-1, s-1) C((t-1)s-1, s-1) ... C(2s-1, s-1).
fn partition_point_count(s: u64, t: u64) -> BigUint {
    let mut v = BigUint::from(1u32);
    for i in 2..=t {
        v *= binom_big(i * s - 1, s - 1);
    }
    v
}

/// The s = 2 table: v = (2t-1)(2t-3)...3, d_j = 2^(j-1) C(t,j),
/// d = 2 gcd(d2, d3). Every line has d² < 2v, killing the branch.
fn table1() -> Vec<Table1Row> {
    (3..=6u64)
        .map(|t| {
            let v = u64::try_from(partition_point_count(2, t)).unwrap();
            let d2 = 2 * (t * (t - 1) / 2);
            let d3 = 4 * (t * (t - 1) * (t - 2) / 6);
            let d = 2 * d2.gcd(&d3);
            Table1Row {
                t,
                n: 2 * t,
                v,
                d2,
                d3,
                d,
            }
        })
        .collect()
}

/// The 36 pairs (s, t) with s >= 3 satisfying the region inequality.
fn region_pairs() -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for s in 3..=64u64 {
        for t in 2..=64u64 {
            if region_s_ge3(s, t) {
                out.push((s, t));
            }
        }
    }
    out
}

pub fn imprimitive_branch() -> ImprimitiveOutput {
    let table1 = table1();
    for row in &table1 {
        // r | 2 gcd(d2, d3) = d and r² > 2v must both hold; they cannot
        assert!(row.d * row.d < 2 * row.v, "s = 2 line survives unexpectedly");
    }
    let pairs = region_pairs();
    let mut rows = Vec::new();
    for &(s, t) in &pairs {
        let n = s * t;
        let v_big = partition_point_count(s, t);
        let d2 = s * s * (t * (t - 1) / 2);
        let stab = factorial_big(s).pow(u32::try_from(t).unwrap()) * factorial_big(t);
        let nf = factorial_big(n);
        for r in crate::params::divisors_of(2 * d2) {
            if r % 2 != 0 {
                continue;
            }
            if BigUint::from(r) * BigUint::from(r) <= BigUint::from(2u32) * &v_big {
                continue;
            }
            // r | 2(v-1) and r | |H|
            let v_minus_1 = &v_big - BigUint::from(1u32);
            if (BigUint::from(2u32) * &v_minus_1 % BigUint::from(r)) != BigUint::zero() {
                continue;
            }
            if (&stab % BigUint::from(r)) != BigUint::zero() {
                continue;
            }
            let k_big = BigUint::from(2u32) * &v_minus_1 / BigUint::from(r) + BigUint::from(1u32);
            let (v, k) = match (u64::try_from(&v_big), u64::try_from(&k_big)) {
                (Ok(v), Ok(k)) => (v, k),
                _ => continue,
            };
            if !(r > k && k > 2) {
                continue;
            }
            if (v * r) % k != 0 {
                continue;
            }
            let b = v * r / k;
            if b <= v {
                continue;
            }
            if (&nf % BigUint::from(b)) != BigUint::zero()
                || (&nf % BigUint::from(v)) != BigUint::zero()
            {
                continue;
            }
            let params = ParamTuple { v, b, r, k };
            debug_assert!(params.is_admissible());
            rows.push(ImprimitiveRow {
                n: n as usize,
                s,
                t,
                params,
                subdegrees: vec![d2],
            });
        }
    }
    rows.sort_by_key(|r| (r.params.v, r.params.b, r.n));
    ImprimitiveOutput {
        table1,
        pairs,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_matches_published_values() {
        let t1 = table1();
        let d_col: Vec<u64> = t1.iter().map(|r| r.d).collect();
        assert_eq!(d_col, vec![4, 8, 40, 20]);
        let v_col: Vec<u64> = t1.iter().map(|r| r.v).collect();
        assert_eq!(v_col, vec![15, 105, 945, 10395]);
        let d2_col: Vec<u64> = t1.iter().map(|r| r.d2).collect();
        assert_eq!(d2_col, vec![6, 12, 20, 30]);
        let d3_col: Vec<u64> = t1.iter().map(|r| r.d3).collect();
        assert_eq!(d3_col, vec![4, 16, 40, 80]);
    }

    #[test]
    fn exactly_36_pairs() {
        let pairs = region_pairs();
        assert_eq!(pairs.len(), 36);
        assert!(pairs.contains(&(3, 10)));
        assert!(pairs.contains(&(18, 2)));
        assert!(!pairs.contains(&(19, 2)));
        assert!(!pairs.contains(&(3, 11)));
        assert!(!pairs.contains(&(6, 5)));
        let expected: Vec<(u64, u64)> = vec![
            (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (3, 10),
            (4, 2), (4, 3), (4, 4), (4, 5), (4, 6),
            (5, 2), (5, 3), (5, 4), (5, 5),
            (6, 2), (6, 3), (6, 4),
            (7, 2), (7, 3),
            (8, 2), (8, 3),
            (9, 2), (9, 3),
            (10, 2), (11, 2), (12, 2), (13, 2), (14, 2), (15, 2), (16, 2), (17, 2), (18, 2),
        ];
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        let mut exp = expected;
        exp.sort_unstable();
        assert_eq!(sorted, exp);
    }

    #[test]
    fn exactly_two_survivors() {
        let out = imprimitive_branch();
        let got: Vec<(usize, u64, u64, u64, u64, u64, u64)> = out
            .rows
            .iter()
            .map(|r| (r.n, r.s, r.t, r.params.v, r.params.b, r.params.r, r.params.k))
            .collect();
        assert_eq!(
            got,
            vec![
                (6, 3, 2, 10, 15, 6, 4),
                (10, 5, 2, 126, 1050, 50, 6),
            ]
        );
    }
}
