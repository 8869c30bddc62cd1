//! Command-line surface: single-object queries (encode, decode, boundary,
//! purity), exact tables, the series solver, and the verification suites.
//!
//! Exit codes: 0 success / pure / all checks pass, 1 combinatorial failure
//! (impure grid, oracle mismatch, failed suite), 2 usage or input error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use stairgrid::closed::{i_closed, j_closed, max_nonzero_k, Count};
use stairgrid::grid::{boundary_grid, downcore};
use stairgrid::perm::parse_permutation;
use stairgrid::series::series_solve_f;
use stairgrid::staircase::{decode, encode, staircase_downcore, StaircaseEncoding};
use stairgrid::verify::{run_all, run_suite, Bounds, SUITE_NAMES};
use stairgrid::Error;

#[derive(Parser)]
#[command(name = "stairgrid", version, about = "Staircase encodings, boundary grids, and downcore purity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the staircase encoding of a permutation.
    Encode {
        /// Permutation in one-line notation (contiguous digits or separated values).
        perm: String,
        /// Emit JSON instead of the ASCII grid.
        #[arg(long)]
        json: bool,
    },
    /// Recover the unique 132-avoiding permutation from an encoding.
    Decode {
        /// Encoding as JSON: {"size":a,"rows":[[...],...]}.
        encoding: String,
        /// Emit the permutation as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Print the boundary grid of a 123-avoiding permutation.
    Boundary {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Report purity of the boundary-grid downcore. Exits 0 if pure, 1 if not.
    Purity {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit the I(n,k) or J(l,k) triangle.
    Tables(TablesArgs),
    /// Solve the generating-function fixed point and print its coefficients.
    Series {
        /// Truncation order in both variables.
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Run a named verification suite, or "all".
    Verify {
        /// Suite name, or "all".
        suite: String,
        /// Length bound for brute-force enumerations.
        #[arg(long)]
        max_n: Option<usize>,
        /// Series truncation order.
        #[arg(long)]
        order: Option<usize>,
        /// Seed for the randomized diagram corpus.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args)]
struct TablesArgs {
    /// Which triangle to emit.
    which: Table,
    /// Largest n (for I) or l (for J).
    bound: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Add brute-force cross-check columns; exits 1 on any mismatch.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    I,
    J,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Encode { perm, json } => {
            let enc = encode(&parse_permutation(&perm)?)?;
            if json {
                println!("{}", enc.to_json());
            } else {
                println!("{}", enc.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { encoding, json } => {
            let enc = StaircaseEncoding::from_json(&encoding)?;
            let sigma = decode(&enc)?;
            if json {
                println!("{}", serde_json::to_string(sigma.values()).expect("json"));
            } else {
                println!("{sigma}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary { perm, json } => {
            let grid = boundary_grid(&parse_permutation(&perm)?)?;
            if json {
                println!("{}", grid.to_json());
            } else {
                println!("{}", grid.render(&[]));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Purity { perm, json } => {
            let grid = boundary_grid(&parse_permutation(&perm)?)?;
            let graph = downcore(&grid);
            let report = graph.purity()?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("json"));
            } else {
                println!("{}", grid.render(&report.witness_max));
                println!("boxes: {}", grid.len());
                println!("downcore edges: {}", graph.edge_count());
                println!("pure: {}", report.is_pure);
                println!("min maximal set size: {}", report.min_size);
                println!("max maximal set size: {}", report.max_size);
                println!("witness (min): {:?}", report.witness_min);
                println!("witness (max): {:?}", report.witness_max);
            }
            Ok(if report.is_pure {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Tables(args) => tables(args),
        Command::Series { order } => {
            let f = series_solve_f(order)?;
            let coeffs: Vec<serde_json::Value> = f
                .nonzero_terms()
                .into_iter()
                .map(|(n, k, c)| serde_json::json!([n, k, c.to_string()]))
                .collect();
            println!(
                "{}",
                serde_json::json!({ "order": order, "coeffs": coeffs })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_n,
            order,
            seed,
        } => {
            let bounds = Bounds { max_n, order, seed };
            let outcomes = if suite == "all" {
                run_all(&bounds)?
            } else {
                if !SUITE_NAMES.contains(&suite.as_str()) {
                    return Err(Error::Domain(format!(
                        "unknown suite {suite:?}; valid suites: all, {}",
                        SUITE_NAMES.join(", ")
                    )));
                }
                vec![run_suite(&suite, &bounds)?]
            };
            let mut all_passed = true;
            for outcome in &outcomes {
                println!("{outcome}");
                all_passed &= outcome.passed();
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

struct TableData {
    /// Row label (n or l) and the closed-form values by k.
    rows: Vec<(usize, Vec<Count>)>,
    /// Brute-force values in the same layout, when --oracle is on.
    oracle: Option<Vec<(usize, Vec<Count>)>>,
}

fn tables(args: TablesArgs) -> Result<ExitCode, Error> {
    let data = match args.which {
        Table::I => i_table(args.bound, args.oracle)?,
        Table::J => j_table(args.bound, args.oracle)?,
    };
    let mut mismatches = Vec::new();
    if let Some(oracle) = &data.oracle {
        for ((row, closed), (_, brute)) in data.rows.iter().zip(oracle) {
            for (k, (c, b)) in closed.iter().zip(brute).enumerate() {
                if c != b {
                    mismatches.push(format!("row {row} k {k}: closed {c} brute {b}"));
                }
            }
        }
    }
    match args.format {
        Format::Csv => {
            let ncols = data.rows.first().map_or(0, |(_, vs)| vs.len());
            let mut header: Vec<String> = vec![r"n\k".to_string()];
            for k in 0..ncols {
                header.push(k.to_string());
                if data.oracle.is_some() {
                    header.push(format!("{k} oracle"));
                }
            }
            println!("{}", csv_line(&header));
            for (idx, (row, closed)) in data.rows.iter().enumerate() {
                let mut cells = vec![row.to_string()];
                for (k, c) in closed.iter().enumerate() {
                    cells.push(c.to_string());
                    if let Some(oracle) = &data.oracle {
                        cells.push(oracle[idx].1[k].to_string());
                    }
                }
                println!("{}", csv_line(&cells));
            }
        }
        Format::Json => {
            let mut cells = Vec::new();
            for (idx, (row, closed)) in data.rows.iter().enumerate() {
                for (k, c) in closed.iter().enumerate() {
                    let mut cell = serde_json::json!({ "row": row, "k": k, "value": c.to_string() });
                    if let Some(oracle) = &data.oracle {
                        cell["oracle"] = serde_json::json!(oracle[idx].1[k].to_string());
                    }
                    cells.push(cell);
                }
            }
            println!("{}", serde_json::json!({ "cells": cells }));
        }
    }
    if mismatches.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for m in &mismatches {
            eprintln!("oracle mismatch: {m}");
        }
        Ok(ExitCode::from(1))
    }
}

fn i_table(bound: usize, oracle: bool) -> Result<TableData, Error> {
    let kmax = if bound == 0 { 0 } else { 2 * bound - 1 };
    let rows: Vec<(usize, Vec<Count>)> = (0..=bound)
        .map(|n| {
            (
                n,
                (0..=kmax).map(|k| i_closed(n as u64, k as u64)).collect(),
            )
        })
        .collect();
    let oracle = if oracle {
        let mut out = Vec::new();
        for n in 0..=bound {
            let counts = if n == 0 {
                vec![Count::from(1u32)]
            } else {
                staircase_downcore(n).independent_set_counts()?
            };
            out.push((
                n,
                (0..=kmax)
                    .map(|k| counts.get(k).cloned().unwrap_or_else(Count::zero))
                    .collect(),
            ));
        }
        Some(out)
    } else {
        None
    };
    Ok(TableData { rows, oracle })
}

fn j_table(bound: usize, oracle: bool) -> Result<TableData, Error> {
    if bound < 1 {
        return Err(Error::Domain("the J table requires a bound of at least 1".into()));
    }
    let kmax = max_nonzero_k(bound as u64)? as usize;
    let rows: Vec<(usize, Vec<Count>)> = (1..=bound)
        .map(|l| {
            (
                l,
                (0..=kmax).map(|k| j_closed(l as u64, k as u64)).collect(),
            )
        })
        .collect();
    let oracle = if oracle {
        let p132 = parse_permutation("132")?;
        let mut out = Vec::new();
        for l in 1..=bound {
            let mut hist = vec![Count::zero(); kmax + 1];
            for sigma in stairgrid::perm::enumerate_avoiders(l, &[p132.clone()])? {
                let k = encode(&sigma)?.nonzero_count();
                if k <= kmax {
                    hist[k] += 1u32;
                }
            }
            out.push((l, hist));
        }
        Some(out)
    } else {
        None
    };
    Ok(TableData { rows, oracle })
}

/// RFC-4180-style quoting: fields containing commas, quotes, or newlines
/// are wrapped in double quotes with inner quotes doubled.
fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| {
            if c.contains(',') || c.contains('"') || c.contains('\n') {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}
