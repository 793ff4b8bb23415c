//! Case outcomes and their machine-checkable witnesses. Every elimination
//! carries enough data to re-derive the verdict without re-running the
//! search; budget exhaustion is a value, never a silent truncation.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::design::Design;

/// Search budgets; exceeding one yields Unresolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest group order that may be fully enumerated.
    pub element_bound: usize,
    /// Largest candidate count for a plain exhaustive block scan.
    pub exhaustive_candidates: u64,
    /// Node budget for the symmetry-reduced anchored scan.
    pub anchored_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            element_bound: 45_000,
            exhaustive_candidates: 1_000_000,
            anchored_nodes: 100_000_000,
        }
    }
}

/// A block scanned but rejected, with the reason preserved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NearMiss {
    /// Completed orbit whose length is not the block count.
    OrbitLength { block: Vec<u32>, observed: u64, expected: u64 },
    /// Orbit of the right length but an unbalanced pair.
    Unbalanced { block: Vec<u32>, pair: (u32, u32), count: u64 },
    /// Balanced single orbit whose base-block stabilizer splits the block.
    NotFlagTransitive { block: Vec<u32>, stabilizer_orbit: Vec<u32> },
}

/// Audit of a completed scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanAudit {
    pub candidates_visited: u64,
    /// For anchored scans: internal nodes of the augmentation tree.
    pub nodes: u64,
    /// For anchored scans: order of the anchor stabilizer used to reduce.
    pub anchor_stabilizer_order: Option<String>,
    pub anchored: bool,
    /// Least rejected candidates that came close, for rechecking.
    pub near_misses: Vec<NearMiss>,
}

/// The witness behind an elimination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// v or b fails to divide the group order.
    Divisibility { detail: String },
    /// The stabilizer arithmetic cannot hold (transitivity or parity).
    StabilizerArithmetic { detail: String },
    /// The index oracle returned a definite no for the block-stabilizer
    /// index; the achievable indices below the bound are listed.
    NoSubgroupOfIndex { n: usize, group: String, index: u64, achievable_below: Vec<u64> },
    /// Every realized subgroup class of the stabilizer index lacks an
    /// orbit of the block size; profiles are per class.
    NoOrbitOfLengthK { k: u64, profiles: Vec<(String, Vec<u64>)> },
    /// A mandated base block has an orbit of the wrong length.
    BaseBlockOrbit { block: Vec<u32>, observed: Option<u64>, expected: u64 },
    /// A mandated design is not pairwise balanced.
    UnbalancedPair { pair: (u32, u32), count: u64, lambda: u64 },
    /// An exhaustive or anchored scan found no admissible base block.
    ExhaustedScan(ScanAudit),
    /// A bounded subgroup search found no subgroup of the required order.
    NoSubgroupOfOrder { order: u64, group: String, audit_two_gen: u64, audit_three_gen: u64, generator_bound: u8 },
    /// Per-variant witnesses, for cases with several groups.
    PerVariant(Vec<(String, Witness)>),
}

/// A realized design together with its verification data.
#[derive(Debug, Clone)]
pub struct RealizedDesign {
    pub design: Design,
    pub base_block: Vec<u32>,
    pub group_label: String,
    pub stabilizer_order: BigUint,
    pub point_primitive: bool,
}

/// Case outcome.
#[derive(Debug, Clone)]
pub enum Verdict {
    Eliminated(Witness),
    Realized(Vec<RealizedDesign>),
    Unresolved(String),
}

impl Verdict {
    pub fn is_eliminated(&self) -> bool {
        matches!(self, Verdict::Eliminated(_))
    }
    pub fn is_realized(&self) -> bool {
        matches!(self, Verdict::Realized(_))
    }
}
