//! Verification of design files: structural parsing, recomputation of the
//! parameters, and — with a group spec — automorphism, block-transitivity,
//! flag-transitivity, and point-primitivity checks.

use design_engine::{
    is_flag_transitive, pairwise_lambda, parse_design, BalanceReport, Design, FlagTransitivity,
};
use perm_core::{Primitivity, SetOrbit};
use serde::{Deserialize, Serialize};

use crate::actions::parse_group_spec;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub v: usize,
    pub b: u64,
    pub k: Option<u64>,
    pub r: Option<u64>,
    pub lambda: Option<u64>,
    pub header_consistent: bool,
    pub group: Option<GroupChecks>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupChecks {
    pub spec: String,
    pub automorphisms: bool,
    pub block_transitive: bool,
    pub flag_transitive: bool,
    pub point_primitive: bool,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.header_consistent
            && self.k.is_some()
            && self.r.is_some()
            && self.lambda.is_some()
            && self
                .group
                .as_ref()
                .map(|g| {
                    g.automorphisms && g.block_transitive && g.flag_transitive && g.point_primitive
                })
                .unwrap_or(true)
    }
}

pub fn verify_design_text(text: &str, group_spec: Option<&str>) -> Result<VerifyReport, String> {
    let (design, header) = parse_design(text).map_err(|e| e.to_string())?;
    let k = design.k();
    let r = design.r();
    let lambda = match pairwise_lambda(&design) {
        BalanceReport::Uniform { lambda } => Some(lambda),
        BalanceReport::Counterexample { .. } => None,
    };
    let header_consistent = k == Some(header.3)
        && r == Some(header.2)
        && lambda == Some(header.4)
        && design.v as u64 == header.0
        && design.b() == header.1;
    let group = match group_spec {
        None => None,
        Some(spec) => {
            let action = parse_group_spec(spec)?;
            if action.space.size() != design.v {
                return Err(format!(
                    "group degree {} does not match v = {}",
                    action.space.size(),
                    design.v
                ));
            }
            Some(group_checks(&action, &design, spec))
        }
    };
    Ok(VerifyReport {
        v: design.v,
        b: design.b(),
        k,
        r,
        lambda,
        header_consistent,
        group,
    })
}

fn group_checks(action: &atlas::GroupAction, design: &Design, spec: &str) -> GroupChecks {
    use std::collections::HashSet;
    let block_set: HashSet<&[u32]> = design.blocks.iter().map(|b| b.as_slice()).collect();
    let automorphisms = action.group.gens().iter().all(|g| {
        design
            .blocks
            .iter()
            .all(|b| block_set.contains(g.apply_set(b).as_slice()))
    });
    let block_transitive = automorphisms
        && match design.blocks.first() {
            None => false,
            Some(base) => match perm_core::set_orbit_capped(
                action.group.gens(),
                base,
                design.blocks.len() + 1,
            ) {
                SetOrbit::Complete { sets, .. } => sets.len() == design.blocks.len(),
                SetOrbit::CapExceeded { .. } => false,
            },
        };
    let flag_transitive = block_transitive
        && matches!(
            is_flag_transitive(&action.group, design),
            FlagTransitivity::Transitive
        );
    let point_primitive = matches!(
        perm_core::is_primitive(action.group.gens(), design.v),
        Primitivity::Primitive
    );
    GroupChecks {
        spec: spec.to_string(),
        automorphisms,
        block_transitive,
        flag_transitive,
        point_primitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn malformed_duplicate_point() {
        let text = "10 1 1 4 2\n0 1 1 3\n";
        assert!(verify_design_text(text, None).is_err());
    }
}
