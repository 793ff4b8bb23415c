//! Arithmetic enumeration of all candidate parameter tuples: admissibility
//! conditions, the three stabilizer-family branches, the exceptional A6
//! family, and the assembly of the published 25-case master table.

mod exceptional;
mod lemma26;
mod params;
mod primitive;
mod imprimitive;
mod intransitive;
mod table3;

pub mod binom {
    pub use atlas_free_binom::*;

    /// Local binomial/factorial helpers so the sieve stays purely
    /// arithmetic.
    mod atlas_free_binom {
        use num_bigint::BigUint;
        use num_traits::{One, Zero};

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
    }
}

pub use binom::{binom_big, binom_u64, factorial_big};
pub use exceptional::{
    exceptional_a6_cases, exceptional_tuples, ExceptionalGroup, ExceptionalRow,
    EXCEPTIONAL_DEGREES,
};
pub use lemma26::{lemma_i, lemma_i_middle_term, lemma_ii, lemma_iii, lemma_iv, region_intransitive, region_s_ge3};
pub use params::{admissible_params, divisors_of, ParamTuple, LAMBDA};
pub use primitive::{nr_pairs, primitive_branch, PrimitiveRow};
pub use imprimitive::{imprimitive_branch, ImprimitiveOutput, ImprimitiveRow, Table1Row};
pub use intransitive::{intransitive_branch, s1_branch_is_empty, IntransitiveOutput, IntransitiveRow, RegionBounds};
pub use table3::{assemble_table3, CaseRow, GroupVariant, Source, StabilizerFamily};
