//! Concrete group actions for the classification, built from first
//! principles: natural and induced alternating/symmetric actions, the F9
//! projective family on 10, 36, and 45 points, and binary linear groups.
//! Every construction self-verifies its order and transitivity.

mod binom;
mod conjpairs;
mod gf;
mod linear;
mod natural;
mod projective;
mod space;

pub use binom::{
    binom_big, binom_u128, binom_u64, factorial_big, rank_combination, unrank_combination,
};
pub use conjpairs::{conjugate_pair_action, pairs_of_line_action};
pub use gf::{gf5, gf8, gf9, Gf81, SmallField};
pub use linear::{agl3_2_on_8, gl3_2_on_7, linear_group_action, locate_a7};
pub use natural::{
    half_partition_action, natural_action, natural_generators, subsets_action, GroupAction,
    NaturalKind,
};
pub use projective::{
    frobenius_perm, mobius_perm, pgammal2_8_on_9, projective_family_action, ProjectiveVariant,
};
pub use space::{ActionSpace, SpaceKind};

use perm_core::{Perm, PermGroup};

/// Action on the s-subsets of an arbitrary base action's points.
pub fn induced_subsets_of_action(base: &PermGroup, s: usize, name: &str) -> GroupAction {
    let space = ActionSpace::subsets(base.degree(), s);
    let gens: Vec<Perm> = base.gens().iter().map(|g| space.induce(g)).collect();
    let group = PermGroup::new(space.size(), gens).unwrap();
    GroupAction {
        group,
        space,
        letter_gens: Some(base.gens().to_vec()),
        name: name.to_string(),
    }
}
