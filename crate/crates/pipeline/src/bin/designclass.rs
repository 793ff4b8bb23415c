use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use design_engine::{render_design, SearchBudget, Verdict};
use index_oracle::{has_subgroup_of_index, GroupKind, IndexAnswer};
use pipeline::{
    build_report, canonical_json, eliminate_case, full_json, render_text, run_classification,
    verify_design_text,
};
use sieve::assemble_table3;

#[derive(Parser)]
#[command(name = "designclass", about = "classification of flag-transitive point-primitive non-symmetric 2-(v,k,2) designs with alternating socle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Alt,
    Sym,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the arithmetic enumeration tables.
    Sieve {
        #[arg(long, default_value_t = 3)]
        table: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Query the subgroup-index oracle.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        index: u64,
        /// Optional cap on the classification parameter s.
        #[arg(long)]
        s_cap: Option<usize>,
    },
    /// Run the elimination ladder on one case of the master table.
    Eliminate {
        #[arg(long)]
        case: usize,
        #[arg(long, default_value_t = 45_000)]
        element_bound: usize,
        #[arg(long, default_value_t = 1_000_000)]
        scan_bound: u64,
        #[arg(long, default_value_t = 100_000_000)]
        anchored_bound: u64,
    },
    /// Run the whole classification and emit the report.
    Classify {
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Zero out the runtime section (byte-identical reports).
        #[arg(long)]
        canonical: bool,
    },
    /// Construct the designs of a realized case and write a design file.
    /// Case 0 is the odd-replication 2-(6,3,2) construction.
    Construct {
        #[arg(long)]
        case: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a design file, optionally against a group spec.
    Verify {
        path: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
}

fn budget(element_bound: usize, scan_bound: u64, anchored_bound: u64) -> SearchBudget {
    SearchBudget {
        element_bound,
        exhaustive_candidates: scan_bound,
        anchored_nodes: anchored_bound,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sieve { table, format } => {
            print!(
                "{}",
                pipeline::sieve_render::render_table(table, matches!(format, FormatArg::Structured))
            );
            ExitCode::SUCCESS
        }
        Command::Oracle {
            n,
            kind,
            index,
            s_cap,
        } => {
            let kind = match kind {
                KindArg::Alt => GroupKind::Alt,
                KindArg::Sym => GroupKind::Sym,
            };
            match has_subgroup_of_index(n, kind, index, s_cap) {
                IndexAnswer::Yes(descs) => {
                    println!("yes: {} conjugacy class(es)", descs.len());
                    for d in descs {
                        println!("  {d}");
                    }
                }
                IndexAnswer::No => println!("no"),
                IndexAnswer::OutOfRange => println!("out-of-range"),
            }
            ExitCode::SUCCESS
        }
        Command::Eliminate {
            case,
            element_bound,
            scan_bound,
            anchored_bound,
        } => {
            let rows = assemble_table3();
            let Some(row) = rows.iter().find(|r| r.id == case) else {
                eprintln!("no case {case}; the table has cases 1..=25 plus 26, 27");
                return ExitCode::FAILURE;
            };
            let b = budget(element_bound, scan_bound, anchored_bound);
            let verdicts = eliminate_case(row, &b);
            for v in &verdicts {
                match &v.verdict {
                    Verdict::Eliminated(w) => {
                        println!("{}: eliminated via {} ({:?})", v.group, v.strategy.label(), w)
                    }
                    Verdict::Realized(d) => {
                        println!("{}: realized ({} design(s))", v.group, d.len())
                    }
                    Verdict::Unresolved(r) => println!("{}: unresolved: {r}", v.group),
                }
            }
            if verdicts
                .iter()
                .any(|v| matches!(v.verdict, Verdict::Unresolved(_)))
            {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Classify {
            jobs,
            report,
            canonical,
        } => {
            let c = run_classification(&SearchBudget::default(), jobs);
            let rep = build_report(&c);
            let json = if canonical {
                canonical_json(&rep)
            } else {
                full_json(&rep)
            };
            match report {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                    print!("{}", render_text(&rep));
                }
                None => println!("{json}"),
            }
            match c.exit_code() {
                0 => ExitCode::SUCCESS,
                code => ExitCode::from(code as u8),
            }
        }
        Command::Construct { case, out } => {
            let budget = SearchBudget::default();
            let designs = if case == 0 {
                match pipeline::construct_six_three_two(&budget) {
                    Verdict::Realized(d) => d,
                    _ => vec![],
                }
            } else {
                let rows = assemble_table3();
                let Some(row) = rows.iter().find(|r| r.id == case) else {
                    eprintln!("no case {case}");
                    return ExitCode::FAILURE;
                };
                eliminate_case(row, &budget)
                    .into_iter()
                    .filter_map(|v| match v.verdict {
                        Verdict::Realized(d) => Some(d),
                        _ => None,
                    })
                    .flatten()
                    .collect()
            };
            let Some(first) = designs.first() else {
                eprintln!("case {case} realizes no design");
                return ExitCode::from(2);
            };
            let d = &first.design;
            let text = render_design(d, d.r().unwrap_or(0), 2);
            if let Err(e) = std::fs::write(&out, text) {
                eprintln!("cannot write {}: {e}", out.display());
                return ExitCode::FAILURE;
            }
            println!(
                "case {case}: wrote a 2-({},{},2) design with b={} under {}",
                d.v,
                d.k().unwrap_or(0),
                d.b(),
                first.group_label
            );
            ExitCode::SUCCESS
        }
        Command::Verify { path, group } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", path.display());
                    return ExitCode::FAILURE;
                }
            };
            match verify_design_text(&text, group.as_deref()) {
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::FAILURE
                }
                Ok(rep) => {
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                    if rep.all_pass() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    }
                }
            }
        }
    }
}
