//! Foundational permutation-group algorithms: products, orders, membership,
//! capped orbits, stabilizer generators, primitivity, bounded element
//! enumeration, subgroup search, and coset actions.
//!
//! Everything here is deterministic: identical inputs yield identical
//! outputs regardless of worker scheduling. Groups are immutable after
//! construction and safe to share across threads.

mod dimino;
mod error;
mod group;
mod orbit;
mod perm;
mod primitivity;
mod subgroup;

pub use dimino::{closure_bounded, closure_order_bounded};
pub use error::PermError;
pub use group::{even_subgroup_generators, schreier_sims, Bsgs, PermGroup};
pub use orbit::{
    orbit, orbit_capped, orbit_lengths, orbit_partition, schreier_generators,
    set_orbit_capped, set_stabilizer_generators, transversal, OrbitResult, SetOrbit,
};
pub use perm::Perm;
pub use primitivity::{
    is_primitive, minimal_block_partition, preserves_partition, BlockSystem, Primitivity,
};
pub use subgroup::{
    coset_action, element_class_reps, element_set, normalizing_elements, subgroups_of_order,
    subgroups_of_order_with, CosetAction, Escalation, SearchAudit, SubgroupClass, SubgroupSearch,
};
