//! Construction, search, and verification of 2-(v,k,2) designs whose block
//! set is a single group orbit: balance, flag-transitivity, exhaustive and
//! symmetry-reduced block scans, design isomorphism, and the design file
//! format.

mod anchored;
mod balance;
mod design;
mod fileio;
mod flag;
mod iso;
mod scan;
mod verdict;

pub use anchored::anchored_symmetry_scan;
pub use balance::{count_pair, pairwise_lambda, BalanceReport};
pub use design::{design_from_base_block, BaseBlockOutcome, Design};
pub use fileio::{parse_design, render_design, FileError, Header};
pub use flag::{is_flag_transitive, FlagTransitivity};
pub use iso::design_isomorphic;
pub use scan::{
    exhaustive_block_scan, recheck_orbit_near_miss, stabilizer_orbit_candidates, subdegrees,
};
pub use verdict::{NearMiss, RealizedDesign, ScanAudit, SearchBudget, Verdict, Witness};
