//! Analytic decision procedure for the existence of subgroups of a given
//! index in Alt(n)/Sym(n) below the small-index classification threshold,
//! with explicit generator realization and orbit profiling of each
//! admissible subgroup class.

mod achievable;
mod descriptor;
mod profile;
mod sd;

pub use achievable::{
    achievable_indices, exceptional_extension, exceptional_extensions, has_subgroup_of_index,
    IndexAnswer,
};
pub use descriptor::{tower_descriptors, Descriptor, ExceptionalCase, GroupKind};
pub use profile::{gens_on_space, orbit_profile, orbits_on_space, searched_achievable_indices};
pub use sd::{index_two_subgroups, sd_subgroup_classes, sd_subgroup_indices, SdClass};
