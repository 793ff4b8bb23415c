//! Design parameter tuples and the admissibility conditions shared by all
//! enumeration branches: with λ = 2 throughout,
//!   vr = bk,  2(v-1) = r(k-1),  b > v,  r > k > 2,  2 | r,  r² > 2v,
//!   r | gcd(2(v-1), |H|),  b | |G|.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

/// (v, b, r, k) with λ fixed at 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamTuple {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
}

pub const LAMBDA: u64 = 2;

impl ParamTuple {
    /// The arithmetic identities and non-symmetry inequalities.
    pub fn is_admissible(&self) -> bool {
        let &ParamTuple { v, b, r, k } = self;
        v * r == b * k
            && LAMBDA * (v - 1) == r * (k - 1)
            && b > v
            && r > k
            && k > 2
            && r % 2 == 0
            && r * r > LAMBDA * v
    }
}

impl std::fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.b, self.r, self.k)
    }
}

/// Divisors of n in increasing order.
pub fn divisors_of(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All parameter tuples compatible with a point count `v`, a point
/// stabilizer order, and the ambient group order.
pub fn admissible_params(v: u64, stab_order: &BigUint, group_order: &BigUint) -> Vec<ParamTuple> {
    assert!(v >= 3);
    let two_v1 = BigUint::from(2 * (v - 1));
    let g = two_v1.gcd(stab_order);
    let g: u64 = u64::try_from(g).expect("gcd divides 2(v-1), which fits u64");
    let mut out = Vec::new();
    for r in divisors_of(g) {
        if r % 2 != 0 || r * r <= 2 * v {
            continue;
        }
        // r | 2(v-1) already holds; k from the basic equation
        debug_assert_eq!((2 * (v - 1)) % r, 0);
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
        if (group_order % BigUint::from(b)) != BigUint::zero() {
            continue;
        }
        let t = ParamTuple { v, b, r, k };
        debug_assert!(t.is_admissible());
        out.push(t);
    }
    out.sort_unstable();
    out
}
