//! Structured and text reports. The structured report's `cases`,
//! `survivors`, and `adjudication` sections are canonical (byte-identical
//! across runs and worker counts); wall-clock data lives in the separate
//! `runtime` section.

use design_engine::{Verdict, Witness};
use serde::{Deserialize, Serialize};

use crate::classify::{realized_summary, Classification};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariantReport {
    pub group: String,
    pub strategy: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unresolved_reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub designs: Vec<DesignReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DesignReport {
    pub v: usize,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
    pub group: String,
    pub base_block: Vec<u32>,
    pub stabilizer_order: String,
    pub point_primitive: bool,
    pub blocks: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case_id: usize,
    pub params: (u64, u64, u64, u64, u64),
    pub groups: Vec<String>,
    pub strategy: String,
    pub published_step: String,
    pub verdict: String,
    pub variants: Vec<VariantReport>,
    pub concordant_with_table: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdjudicationRecord {
    pub computed_flag_transitive_groups: Vec<String>,
    pub theorem_statement_groups: Vec<String>,
    pub concordant: bool,
    pub note: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurvivorsRecord {
    pub ten_four_count: usize,
    pub ten_four_pairwise_isomorphic: bool,
    pub ten_four_realizations: Vec<(String, usize)>,
    pub six_three: Option<DesignReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuntimeRecord {
    pub per_case_wall_ms: Vec<(usize, u128)>,
    pub total_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub cases: Vec<CaseRecord>,
    pub survivors: SurvivorsRecord,
    pub adjudication: AdjudicationRecord,
    pub rows_concordant: bool,
    pub exit_code: i32,
    pub runtime: RuntimeRecord,
}

fn design_report(r: &design_engine::RealizedDesign) -> DesignReport {
    let d = &r.design;
    DesignReport {
        v: d.v,
        b: d.b(),
        r: d.r().unwrap_or(0),
        k: d.k().unwrap_or(0),
        lambda: 2,
        group: r.group_label.clone(),
        base_block: r.base_block.clone(),
        stabilizer_order: r.stabilizer_order.to_string(),
        point_primitive: r.point_primitive,
        blocks: d.blocks.clone(),
    }
}

pub fn build_report(c: &Classification) -> Report {
    let cases = c
        .cases
        .iter()
        .map(|case| {
            let verdict = if case
                .verdicts
                .iter()
                .any(|v| matches!(v.verdict, Verdict::Realized(_)))
            {
                "realized"
            } else if case.unresolved() {
                "unresolved"
            } else {
                "eliminated"
            };
            CaseRecord {
                case_id: case.row.id,
                params: (
                    case.row.params.v,
                    case.row.params.b,
                    case.row.params.r,
                    case.row.params.k,
                    2,
                ),
                groups: case
                    .verdicts
                    .iter()
                    .map(|v| v.group.clone())
                    .collect(),
                strategy: case.strategy.label().to_string(),
                published_step: case.row.published_step.to_string(),
                verdict: verdict.to_string(),
                variants: case
                    .verdicts
                    .iter()
                    .map(|v| {
                        let (outcome, witness, unresolved_reason, designs) = match &v.verdict {
                            Verdict::Eliminated(w) => {
                                ("eliminated".to_string(), Some(w.clone()), None, vec![])
                            }
                            Verdict::Realized(ds) => (
                                "realized".to_string(),
                                None,
                                None,
                                ds.iter().map(design_report).collect(),
                            ),
                            Verdict::Unresolved(reason) => (
                                "unresolved".to_string(),
                                None,
                                Some(reason.clone()),
                                vec![],
                            ),
                        };
                        VariantReport {
                            group: v.group.clone(),
                            strategy: v.strategy.label().to_string(),
                            outcome,
                            witness,
                            unresolved_reason,
                            designs,
                        }
                    })
                    .collect(),
                concordant_with_table: case.concordant(),
            }
        })
        .collect();
    Report {
        cases,
        survivors: SurvivorsRecord {
            ten_four_count: c.ten_four_designs.len(),
            ten_four_pairwise_isomorphic: c.ten_four_pairwise_isomorphic,
            ten_four_realizations: realized_summary(c),
            six_three: c.six_three.as_ref().map(design_report),
        },
        adjudication: AdjudicationRecord {
            computed_flag_transitive_groups: c.adjudication.computed_groups.clone(),
            theorem_statement_groups: c.adjudication.theorem_groups.clone(),
            concordant: c.adjudication.concordant,
            note: "the published statement lists A5 where the computation realizes the design under S5 on pairs and eliminates A5 by its orbit-length witness".to_string(),
        },
        rows_concordant: c.rows_concordant,
        exit_code: c.exit_code(),
        runtime: RuntimeRecord {
            per_case_wall_ms: c.cases.iter().map(|x| (x.row.id, x.wall_ms)).collect(),
            total_ms: c.total_ms,
        },
    }
}

/// Canonical JSON: the runtime section zeroed, for byte-identity checks.
pub fn canonical_json(report: &Report) -> String {
    let mut clone = report.clone();
    clone.runtime = RuntimeRecord {
        per_case_wall_ms: vec![],
        total_ms: 0,
    };
    serde_json::to_string_pretty(&clone).expect("report serializes")
}

pub fn full_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// Text rendering of the classification outcome, one line per case.
pub fn render_text(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "case  (v,b,r,k,l)                 groups                strategy                      step    verdict");
    for c in &report.cases {
        let params = format!(
            "({}, {}, {}, {}, {})",
            c.params.0, c.params.1, c.params.2, c.params.3, c.params.4
        );
        let _ = writeln!(
            out,
            "{:>4}  {:<26} {:<21} {:<29} {:<7} {}",
            c.case_id,
            params,
            c.groups.join(","),
            c.strategy,
            c.published_step,
            c.verdict
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "survivors: {} realizations of the 2-(10,4,2), pairwise isomorphic: {}",
        report.survivors.ten_four_count, report.survivors.ten_four_pairwise_isomorphic
    );
    if let Some(d) = &report.survivors.six_three {
        let _ = writeln!(
            out,
            "the odd-replication survivor: 2-(6,3,2) with b={} r={} under {}",
            d.b, d.r, d.group
        );
    }
    let _ = writeln!(
        out,
        "flag-transitive point-primitive groups of the 2-(10,4,2): computed {:?}, theorem {:?}, concordant: {}",
        report.adjudication.computed_flag_transitive_groups,
        report.adjudication.theorem_statement_groups,
        report.adjudication.concordant
    );
    let _ = writeln!(out, "exit code: {}", report.exit_code);
    out
}
