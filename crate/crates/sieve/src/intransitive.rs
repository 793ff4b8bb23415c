//! Candidate parameters when the point stabilizer fixes an s-subset of the
//! letters, so the points are the s-subsets of n letters. The branch at
//! s = 1 is empty by a counting contradiction, s = 2 is an arithmetic scan
//! filtered through the index oracle at the in-proof threshold, and
//! 3 <= s <= 6 runs over the bounded region of the intransitive inequality.

use index_oracle::{has_subgroup_of_index, GroupKind, IndexAnswer};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::binom::{binom_u64, factorial_big};
use crate::lemma26::region_intransitive;
use crate::params::{divisors_of, ParamTuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionBounds {
    pub s: u64,
    pub t_lo: u64,
    pub t_hi: u64,
    pub n_lo: u64,
    pub n_hi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntransitiveRow {
    pub n: usize,
    pub s: u64,
    pub params: ParamTuple,
    /// Non-trivial subdegrees of the subset action used for the filters.
    pub subdegrees: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct IntransitiveOutput {
    pub table2: Vec<RegionBounds>,
    pub rows: Vec<IntransitiveRow>,
    /// s = 2 candidates surviving the arithmetic before the oracle filter.
    pub s2_arithmetic: Vec<IntransitiveRow>,
    /// Candidates the oracle removed (no subgroup of index b on either side).
    pub s2_oracle_eliminated: Vec<IntransitiveRow>,
}

/// The counting contradiction at s = 1: a k-transitive group forces
/// b = C(n,k), which overshoots n(n-1). Returns true when no parameters
/// survive at this n.
pub fn s1_branch_is_empty(n: u64) -> bool {
    for k in 3..=n.saturating_sub(2) {
        if (2 * (n - 1)) % (k - 1) != 0 {
            continue;
        }
        let r = 2 * (n - 1) / (k - 1);
        if r % 2 != 0 || r <= k || r * r <= 2 * n {
            continue;
        }
        let b = match binom_u64(n, k) {
            Some(b) => b,
            None => continue,
        };
        if b * k == n * r {
            return false;
        }
    }
    true
}

fn s2_scan() -> (Vec<IntransitiveRow>, Vec<IntransitiveRow>, Vec<IntransitiveRow>) {
    let mut kept = Vec::new();
    let mut arithmetic = Vec::new();
    let mut eliminated = Vec::new();
    let mut nf = factorial_big(4);
    for n in 5u64..=1675 {
        nf *= BigUint::from(n);
        let v = n * (n - 1) / 2;
        let d1 = binom_u64(n - 2, 2).unwrap();
        let d2 = 2 * (n - 2);
        let g = 2 * d1.gcd(&d2);
        for r in divisors_of(g) {
            if r % 2 != 0 || r * r <= 2 * v {
                continue;
            }
            if (2 * (v - 1)) % r != 0 {
                continue;
            }
            let k = 2 * (v - 1) / r + 1;
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
            if (&nf % BigUint::from(b)) != BigUint::zero() {
                continue;
            }
            let row = IntransitiveRow {
                n: n as usize,
                s: 2,
                params: ParamTuple { v, b, r, k },
                subdegrees: vec![d1, d2],
            };
            arithmetic.push(row.clone());
            // the in-proof filter: both ambient groups lack an index-b
            // subgroup whenever the s = 3 threshold covers the query
            let alt = has_subgroup_of_index(n as usize, GroupKind::Alt, b, Some(3));
            let sym = has_subgroup_of_index(n as usize, GroupKind::Sym, b, Some(3));
            if matches!(alt, IndexAnswer::No) && matches!(sym, IndexAnswer::No) {
                eliminated.push(row);
            } else {
                kept.push(row);
            }
        }
    }
    (kept, arithmetic, eliminated)
}

fn s_high_scan() -> (Vec<RegionBounds>, Vec<IntransitiveRow>) {
    let mut table2 = Vec::new();
    let mut rows = Vec::new();
    for s in 3..=6u64 {
        let t_lo = s + 1;
        let mut t_hi = t_lo;
        let mut t = t_lo;
        while region_intransitive(s, t) {
            t_hi = t;
            let n = s + t;
            let v = binom_u64(n, s).unwrap();
            let d1 = binom_u64(n - s, s).unwrap();
            let d2 = s * binom_u64(n - s, s - 1).unwrap();
            let d3 = (s * (s - 1) / 2) * binom_u64(n - s, s - 2).unwrap();
            let stab = factorial_big(s) * factorial_big(n - s);
            let nf = factorial_big(n);
            let g_big = (BigUint::from(2 * (v - 1))).gcd(&stab);
            let g: u64 = u64::try_from(g_big).expect("gcd bounded by 2(v-1)");
            for r in divisors_of(g) {
                if r % 2 != 0 || r * r <= 2 * v {
                    continue;
                }
                if (2 * d1) % r != 0 || (2 * d2) % r != 0 || (2 * d3) % r != 0 {
                    continue;
                }
                let k = 2 * (v - 1) / r + 1;
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
                if (&nf % BigUint::from(b)) != BigUint::zero() {
                    continue;
                }
                rows.push(IntransitiveRow {
                    n: n as usize,
                    s,
                    params: ParamTuple { v, b, r, k },
                    subdegrees: vec![d1, d2, d3],
                });
            }
            t += 1;
        }
        table2.push(RegionBounds {
            s,
            t_lo,
            t_hi,
            n_lo: s + t_lo,
            n_hi: s + t_hi,
        });
    }
    (table2, rows)
}

pub fn intransitive_branch() -> IntransitiveOutput {
    let (mut rows, s2_arithmetic, s2_oracle_eliminated) = s2_scan();
    let (table2, high) = s_high_scan();
    rows.extend(high);
    rows.sort_by_key(|r| (r.params.v, r.params.b, r.n));
    IntransitiveOutput {
        table2,
        rows,
        s2_arithmetic,
        s2_oracle_eliminated,
    }
}
