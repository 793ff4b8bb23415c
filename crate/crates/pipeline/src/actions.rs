//! Resolution of case rows and group-spec strings to concrete actions.
//!
//! Group-spec grammar: `alt:N`, `sym:N`, `alt:N/subsets:S`, `alt:N/halves`
//! (likewise for sym), `psl2:9`, `pgl2:9`, `m10`, `pgammal2:9`, `psl2:5`,
//! `pgl2:5`, each optionally suffixed `@deg36` or `@deg45` for the
//! conjugate-pair and pair-of-line models of the F9 family.

use atlas::{
    conjugate_pair_action, half_partition_action, linear_group_action, locate_a7,
    natural_action, pairs_of_line_action, projective_family_action, subsets_action, GroupAction,
    NaturalKind, ProjectiveVariant,
};
use index_oracle::GroupKind;
use sieve::{CaseRow, ExceptionalGroup, GroupVariant, StabilizerFamily};

pub fn natural_kind(kind: GroupKind) -> NaturalKind {
    match kind {
        GroupKind::Alt => NaturalKind::Alt,
        GroupKind::Sym => NaturalKind::Sym,
    }
}

pub fn projective_variant(g: ExceptionalGroup) -> ProjectiveVariant {
    match g {
        ExceptionalGroup::M10 => ProjectiveVariant::M10,
        ExceptionalGroup::Pgl29 => ProjectiveVariant::Pgl,
        ExceptionalGroup::PGammaL29 => ProjectiveVariant::PGammaL,
    }
}

/// The point actions a natural-variant case scans, when one is available
/// from the constructions. Primitive-stabilizer rows only carry an action
/// in the degree-15 linear case; everything else there dies arithmetically.
pub fn actions_for_natural(row: &CaseRow, variant: GroupVariant) -> Vec<GroupAction> {
    let v = row.params.v as usize;
    match row.family {
        StabilizerFamily::IntransitiveSubsets { s } => {
            vec![subsets_action(natural_kind(variant.kind), variant.n, s as usize)]
        }
        StabilizerFamily::TransitiveImprimitive { t: 2, .. } => {
            vec![half_partition_action(natural_kind(variant.kind), variant.n)]
        }
        StabilizerFamily::TransitiveImprimitive { .. } => vec![],
        StabilizerFamily::PrimitiveOnLetters => {
            if v == 15 && variant.kind == GroupKind::Alt && variant.n == 8 {
                vec![linear_group_action()]
            } else if v == 15 && variant.kind == GroupKind::Alt && variant.n == 7 {
                let ambient = linear_group_action();
                locate_a7(&ambient)
                    .into_iter()
                    .map(|class| GroupAction {
                        group: class.group(15),
                        space: ambient.space.clone(),
                        letter_gens: None,
                        name: format!("A7@15<{}", ambient.name),
                    })
                    .collect()
            } else {
                vec![]
            }
        }
        StabilizerFamily::ExceptionalMaximal => vec![],
    }
}

pub fn action_for_exceptional(g: ExceptionalGroup, v: u64) -> GroupAction {
    match v {
        10 => projective_family_action(9, projective_variant(g)),
        36 => conjugate_pair_action(projective_variant(g)),
        45 => pairs_of_line_action(projective_variant(g)),
        _ => panic!("the exceptional family acts on 10, 36, or 45 points"),
    }
}

/// Parses a group-spec string into an action.
pub fn parse_group_spec(spec: &str) -> Result<GroupAction, String> {
    let (base, suffix) = match spec.split_once('@') {
        Some((b, s)) => (b, Some(s)),
        None => (spec, None),
    };
    let proj = |variant: ProjectiveVariant, q: usize| -> Result<GroupAction, String> {
        match suffix {
            None => Ok(projective_family_action(q, variant)),
            Some("deg36") if q == 9 => Ok(conjugate_pair_action(variant)),
            Some("deg45") if q == 9 => Ok(pairs_of_line_action(variant)),
            Some(other) => Err(format!("unknown suffix @{other} for {base}")),
        }
    };
    if let Some(rest) = base.strip_prefix("psl2:") {
        let q: usize = rest.parse().map_err(|_| format!("bad field size {rest}"))?;
        return proj(ProjectiveVariant::Psl, q);
    }
    if let Some(rest) = base.strip_prefix("pgl2:") {
        let q: usize = rest.parse().map_err(|_| format!("bad field size {rest}"))?;
        return proj(ProjectiveVariant::Pgl, q);
    }
    if let Some(rest) = base.strip_prefix("pgammal2:") {
        let q: usize = rest.parse().map_err(|_| format!("bad field size {rest}"))?;
        return proj(ProjectiveVariant::PGammaL, q);
    }
    if base == "m10" {
        return proj(ProjectiveVariant::M10, 9);
    }
    if suffix.is_some() {
        return Err("@deg36/@deg45 apply to the F9 projective family".into());
    }
    let (kind, rest) = if let Some(rest) = base.strip_prefix("alt:") {
        (NaturalKind::Alt, rest)
    } else if let Some(rest) = base.strip_prefix("sym:") {
        (NaturalKind::Sym, rest)
    } else {
        return Err(format!("unrecognized group spec `{spec}`"));
    };
    let (n_str, action) = match rest.split_once('/') {
        None => (rest, None),
        Some((n, act)) => (n, Some(act)),
    };
    let n: usize = n_str.parse().map_err(|_| format!("bad degree {n_str}"))?;
    match action {
        None => Ok(natural_action(kind, n)),
        Some("halves") => Ok(half_partition_action(kind, n)),
        Some(sub) => match sub.strip_prefix("subsets:") {
            Some(s) => {
                let s: usize = s.parse().map_err(|_| format!("bad subset size {s}"))?;
                Ok(subsets_action(kind, n, s))
            }
            None => Err(format!("unknown action `{sub}`")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trips() {
        assert_eq!(parse_group_spec("alt:6/halves").unwrap().space.size(), 10);
        assert_eq!(parse_group_spec("sym:5/subsets:2").unwrap().space.size(), 10);
        assert_eq!(parse_group_spec("m10").unwrap().space.size(), 10);
        assert_eq!(parse_group_spec("m10@deg36").unwrap().space.size(), 36);
        assert_eq!(parse_group_spec("pgammal2:9@deg45").unwrap().space.size(), 45);
        assert_eq!(parse_group_spec("psl2:5").unwrap().space.size(), 6);
        assert!(parse_group_spec("alt:banana").is_err());
        assert!(parse_group_spec("sp6:2").is_err());
    }
}
