//! Text and structured renderings of the sieve tables.

use serde::Serialize;
use sieve::{assemble_table3, nr_pairs, imprimitive_branch, intransitive_branch};

#[derive(Serialize)]
struct SieveDump<T: Serialize> {
    table: u32,
    rows: T,
}

pub fn render_table(table: u32, structured: bool) -> String {
    match table {
        1 => {
            let out = imprimitive_branch();
            if structured {
                let rows: Vec<(u64, u64, u64, u64, u64, u64)> = out
                    .table1
                    .iter()
                    .map(|r| (r.t, r.n, r.v, r.d2, r.d3, r.d))
                    .collect();
                serde_json::to_string_pretty(&SieveDump { table: 1, rows }).unwrap()
            } else {
                let mut s = String::from("t     n     v      d2    d3    d\n");
                for r in &out.table1 {
                    s.push_str(&format!(
                        "{:<5} {:<5} {:<6} {:<5} {:<5} {}\n",
                        r.t, r.n, r.v, r.d2, r.d3, r.d
                    ));
                }
                s.push_str(&format!(
                    "\npairs (s,t) with s >= 3 satisfying the region inequality: {}\n",
                    out.pairs.len()
                ));
                s
            }
        }
        2 => {
            let out = intransitive_branch();
            if structured {
                let rows: Vec<(u64, u64, u64, u64, u64)> = out
                    .table2
                    .iter()
                    .map(|r| (r.s, r.t_lo, r.t_hi, r.n_lo, r.n_hi))
                    .collect();
                serde_json::to_string_pretty(&SieveDump { table: 2, rows }).unwrap()
            } else {
                let mut s = String::from("s     t               n\n");
                for r in &out.table2 {
                    s.push_str(&format!(
                        "{:<5} {} <= t <= {:<5} {} <= n <= {}\n",
                        r.s, r.t_lo, r.t_hi, r.n_lo, r.n_hi
                    ));
                }
                s
            }
        }
        3 => {
            let rows = assemble_table3();
            if structured {
                #[derive(Serialize)]
                struct Row {
                    case: usize,
                    params: (u64, u64, u64, u64),
                    groups: Vec<String>,
                    proposition: String,
                    step: String,
                }
                let rows: Vec<Row> = rows
                    .iter()
                    .map(|r| Row {
                        case: r.id,
                        params: (r.params.v, r.params.b, r.params.r, r.params.k),
                        groups: r
                            .natural_variants
                            .iter()
                            .map(|v| v.label())
                            .chain(r.exceptional_variants.iter().map(|g| g.label().to_string()))
                            .collect(),
                        proposition: r.source.label().to_string(),
                        step: r.published_step.to_string(),
                    })
                    .collect();
                serde_json::to_string_pretty(&SieveDump { table: 3, rows }).unwrap()
            } else {
                let mut s =
                    String::from("case  (v,b,r,k)                  groups                prop   step\n");
                for r in &rows {
                    let groups: Vec<String> = r
                        .natural_variants
                        .iter()
                        .map(|v| v.label())
                        .chain(r.exceptional_variants.iter().map(|g| g.label().to_string()))
                        .collect();
                    s.push_str(&format!(
                        "{:>4}  {:<26} {:<21} {:<6} {}\n",
                        r.id,
                        format!(
                            "({}, {}, {}, {})",
                            r.params.v, r.params.b, r.params.r, r.params.k
                        ),
                        groups.join(","),
                        r.source.label(),
                        r.published_step
                    ));
                }
                s.push_str(&format!(
                    "\nprimitive-branch (n, r) pairs: {:?}\n",
                    nr_pairs()
                ));
                s
            }
        }
        other => format!("no table {other}; tables are 1, 2, 3\n"),
    }
}
