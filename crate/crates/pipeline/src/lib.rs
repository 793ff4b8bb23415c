//! Orchestration of the classification: the strategy ladder over the
//! master table, report assembly, design-file verification, and the
//! building blocks behind the `designclass` command-line interface.

pub mod actions;
pub mod classify;
pub mod ladder;
pub mod report;
pub mod sieve_render;
pub mod verify;

pub use actions::{action_for_exceptional, actions_for_natural, parse_group_spec};
pub use classify::{
    construct_six_three_two, run_classification, verify_realization, CaseResult, Classification,
};
pub use ladder::{case_strategy, eliminate_case, StrategyTag, VariantVerdict};
pub use report::{build_report, canonical_json, full_json, render_text, Report};
pub use verify::{verify_design_text, VerifyReport};
