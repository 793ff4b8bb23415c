//! The three almost simple groups over the socle A6 that the maximal
//! subgroup classification does not cover: their maximal subgroup indices
//! are 45, 36, and 10, and the admissibility conditions leave exactly two
//! parameter tuples, each shared by all three groups.

use num_bigint::BigUint;

use crate::params::{admissible_params, ParamTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalGroup {
    M10,
    Pgl29,
    PGammaL29,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 3] = [
        ExceptionalGroup::M10,
        ExceptionalGroup::Pgl29,
        ExceptionalGroup::PGammaL29,
    ];

    pub fn order(&self) -> u64 {
        match self {
            ExceptionalGroup::M10 | ExceptionalGroup::Pgl29 => 720,
            ExceptionalGroup::PGammaL29 => 1440,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ExceptionalGroup::M10 => "M10",
            ExceptionalGroup::Pgl29 => "PGL(2,9)",
            ExceptionalGroup::PGammaL29 => "PGammaL(2,9)",
        }
    }
}

/// The maximal subgroup indices of each group in the family.
pub const EXCEPTIONAL_DEGREES: [u64; 3] = [45, 36, 10];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalRow {
    pub params: ParamTuple,
    pub groups: Vec<ExceptionalGroup>,
}

/// Per-degree admissible tuples for one group of the family.
pub fn exceptional_tuples(group: ExceptionalGroup, v: u64) -> Vec<ParamTuple> {
    let order = BigUint::from(group.order());
    let stab = BigUint::from(group.order() / v);
    admissible_params(v, &stab, &order)
}

/// The merged rows: every tuple admissible for at least one family member,
/// tagged with all members admitting it.
pub fn exceptional_a6_cases() -> Vec<ExceptionalRow> {
    let mut rows: Vec<ExceptionalRow> = Vec::new();
    for &v in &EXCEPTIONAL_DEGREES {
        for group in ExceptionalGroup::ALL {
            for params in exceptional_tuples(group, v) {
                match rows.iter_mut().find(|r| r.params == params) {
                    Some(row) => row.groups.push(group),
                    None => rows.push(ExceptionalRow {
                        params,
                        groups: vec![group],
                    }),
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.params.v, r.params.b));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_rows_with_all_three_groups() {
        let rows = exceptional_a6_cases();
        assert_eq!(rows.len(), 2);
        assert_eq!(
            rows[0].params,
            ParamTuple {
                v: 10,
                b: 15,
                r: 6,
                k: 4
            }
        );
        assert_eq!(
            rows[1].params,
            ParamTuple {
                v: 36,
                b: 45,
                r: 10,
                k: 8
            }
        );
        for row in &rows {
            assert_eq!(row.groups.len(), 3);
        }
    }

    #[test]
    fn degree_45_contributes_nothing() {
        for group in ExceptionalGroup::ALL {
            assert!(exceptional_tuples(group, 45).is_empty());
        }
    }
}
