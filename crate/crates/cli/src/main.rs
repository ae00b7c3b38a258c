//! `cfc` — color, verify, solve, and sweep small graphs for conflict-free
//! connectivity.
//!
//! Exit codes are a stable contract:
//! 0 pass, 1 verification failed, 2 parse/validation problem,
//! 3 disconnected input, 4 search cap exceeded, 5 sweep found a violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cfc_core::enumerate::{self, SearchReport};
use cfc_core::exact::{self, SolverCaps};
use cfc_core::graph::{self, Graph};
use cfc_core::verify::{self, EdgeColoring, VertexColoring};
use cfc_core::{ceil_log2, color, Error};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_VIOLATION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "cfc",
    version,
    about = "Conflict-free connectivity: constructive colorings, exact numbers, exhaustive sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a connected graph conflict-free with at most ceil(log2(n+1)) colors
    Color {
        /// Edge-list file ("n <count>" header optional, "u v" lines, # comments)
        graph: PathBuf,
        /// Write the vertex<TAB>color lines here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring certificate; prints the first failing pair on failure
    Verify {
        graph: PathBuf,
        /// vertex<TAB>color lines (vertex variant) or "u v<TAB>color" lines (edge variant)
        coloring: PathBuf,
        #[arg(long, value_enum)]
        variant: Variant,
    },
    /// Compute an exact invariant by exhaustive search and emit a witness
    Exact {
        graph: PathBuf,
        #[arg(long, value_enum)]
        invariant: Invariant,
        /// Write the witness here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Vertex cap for the searches (default 10; env CFC_MAX_N)
        #[arg(long)]
        max_n: Option<usize>,
        /// Edge cap for the edge-coloring search (default 10; env CFC_MAX_EDGES)
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// All non-isomorphic trees of one order with their exact invariants
    Trees {
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Sweep a claim over every catalog class of one order
    Check {
        claim: Claim,
        n: usize,
        /// Write the full TSV report here; stdout then carries only the footer
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// mono only: cap on edge deletions tried per class
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Vcfc,
    Cfc,
    Ranking,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    /// vcfc = 2 exactly for 2-connected graphs and graphs with one cut vertex
    Thm11,
    /// tree colorings stay within ceil(log2(n+1)) colors, constructively and exactly
    Conj14,
    /// cfc of every tree is at least ceil(log2 n) — open, violations are findings
    Conj31,
    /// deleting an edge never decreases vcfc or cfc
    Mono,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for_error(&e))
        }
    }
}

fn exit_code_for_error(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Validation(_) => EXIT_INVALID,
        Error::Disconnected => EXIT_DISCONNECTED,
        Error::CapExceeded { .. } => EXIT_CAP,
    }
}

fn exit_code_for_report(report: &SearchReport) -> u8 {
    if report.violations.is_empty() {
        0
    } else {
        EXIT_VIOLATION
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Color { graph, output } => cmd_color(&graph, output.as_deref()),
        Command::Verify {
            graph,
            coloring,
            variant,
        } => cmd_verify(&graph, &coloring, variant),
        Command::Exact {
            graph,
            invariant,
            output,
            max_n,
            max_edges,
        } => cmd_exact(&graph, invariant, output.as_deref(), max_n, max_edges),
        Command::Trees {
            n,
            max_n,
            max_edges,
        } => cmd_trees(n, max_n, max_edges),
        Command::Check {
            claim,
            n,
            output,
            samples,
        } => cmd_check(claim, n, output.as_deref(), samples),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents)
        .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    graph::parse_edge_list(&read_file(path)?)
}

fn env_cap(name: &str) -> Result<Option<usize>, Error> {
    match std::env::var(name) {
        Ok(s) => s
            .parse()
            .map(Some)
            .map_err(|_| Error::Validation(format!("{name} must be a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

/// Flags beat environment variables beat defaults; raising a cap warns.
fn resolve_caps(max_n: Option<usize>, max_edges: Option<usize>) -> Result<SolverCaps, Error> {
    let default = SolverCaps::default();
    let max_vertices = match max_n {
        Some(v) => v,
        None => env_cap("CFC_MAX_N")?.unwrap_or(default.max_vertices),
    };
    let max_edges = match max_edges {
        Some(v) => v,
        None => env_cap("CFC_MAX_EDGES")?.unwrap_or(default.max_edges),
    };
    if max_vertices > default.max_vertices || max_edges > default.max_edges {
        eprintln!(
            "warning: caps raised to {max_vertices} vertices / {max_edges} edges; \
             search cost grows exponentially"
        );
    }
    Ok(SolverCaps {
        max_vertices,
        max_edges,
    })
}

fn cmd_color(graph_path: &Path, output: Option<&Path>) -> Result<u8, Error> {
    let g = load_graph(graph_path)?;
    let coloring = color::color_graph(&g)?;
    match output {
        Some(p) => write_file(p, &coloring.to_tsv())?,
        None => print!("{}", coloring.to_tsv()),
    }
    println!(
        "n={} colors={} bound={}",
        g.n(),
        coloring.color_count(),
        ceil_log2(g.n() + 1)
    );
    Ok(0)
}

fn cmd_verify(graph_path: &Path, coloring_path: &Path, variant: Variant) -> Result<u8, Error> {
    let g = load_graph(graph_path)?;
    let text = read_file(coloring_path)?;
    let failing = match variant {
        Variant::Vertex => {
            let c = VertexColoring::parse_tsv(&text)?;
            verify::first_failing_pair_vertex(&g, &c)?
        }
        Variant::Edge => {
            let c = EdgeColoring::parse_tsv(&text)?;
            verify::first_failing_pair_edge(&g, &c)?
        }
    };
    match failing {
        None => {
            println!("pass");
            Ok(0)
        }
        Some((u, v)) => {
            println!("fail {u} {v}");
            Ok(EXIT_VERIFY_FAIL)
        }
    }
}

fn cmd_exact(
    graph_path: &Path,
    invariant: Invariant,
    output: Option<&Path>,
    max_n: Option<usize>,
    max_edges: Option<usize>,
) -> Result<u8, Error> {
    let g = load_graph(graph_path)?;
    let caps = resolve_caps(max_n, max_edges)?;
    let (value, explored, witness_tsv) = match invariant {
        Invariant::Vcfc => {
            let r = exact::exact_vcfc(&g, caps)?;
            (r.value, r.explored, r.witness.to_tsv())
        }
        Invariant::Cfc => {
            let r = exact::exact_cfc(&g, caps)?;
            (r.value, r.explored, r.witness.to_tsv())
        }
        Invariant::Ranking => {
            let r = exact::exact_ranking(&g, caps)?;
            (r.value, r.explored, r.witness.to_tsv())
        }
    };
    println!("value={value}");
    println!("explored={explored}");
    match output {
        Some(p) => write_file(p, &witness_tsv)?,
        None => print!("{witness_tsv}"),
    }
    Ok(0)
}

fn cmd_trees(n: usize, max_n: Option<usize>, max_edges: Option<usize>) -> Result<u8, Error> {
    let caps = resolve_caps(max_n, max_edges)?;
    let catalog = enumerate::all_trees(n)?;
    println!("graph-id\tn\tvcfc\tcfc\tranking");
    for entry in &catalog.entries {
        let vcfc = exact::exact_vcfc(&entry.graph, caps)?.value;
        let cfc = exact::exact_cfc(&entry.graph, caps)?.value;
        let ranking = exact::exact_ranking(&entry.graph, caps)?.value;
        println!("{}\t{n}\t{vcfc}\t{cfc}\t{ranking}", entry.key);
    }
    Ok(0)
}

fn cmd_check(
    claim: Claim,
    n: usize,
    output: Option<&Path>,
    samples: Option<usize>,
) -> Result<u8, Error> {
    let report = match claim {
        Claim::Thm11 => enumerate::check_vcfc_two_characterization(n)?,
        Claim::Conj14 => enumerate::check_tree_coloring_bound(n)?,
        Claim::Conj31 => enumerate::check_cfc_lower_bound(n)?,
        Claim::Mono => enumerate::check_deletion_monotonicity(n, samples)?,
    };
    let tsv = report.to_tsv();
    match output {
        Some(p) => {
            write_file(p, &tsv)?;
            println!(
                "checked={} violations={}",
                report.checked(),
                report.violations.len()
            );
        }
        None => print!("{tsv}"),
    }
    Ok(exit_code_for_report(&report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfc_core::enumerate::check_cfc_lower_bound;
    use cfc_core::graph::path_graph;

    #[test]
    fn error_exit_codes_follow_the_contract() {
        assert_eq!(
            exit_code_for_error(&Error::Parse {
                line: 1,
                message: "x".into()
            }),
            EXIT_INVALID
        );
        assert_eq!(
            exit_code_for_error(&Error::Validation("x".into())),
            EXIT_INVALID
        );
        assert_eq!(exit_code_for_error(&Error::Disconnected), EXIT_DISCONNECTED);
        assert_eq!(
            exit_code_for_error(&Error::CapExceeded {
                what: "vertices",
                limit: 10,
                actual: 11
            }),
            EXIT_CAP
        );
    }

    #[test]
    fn reports_map_to_violation_exit_code() {
        let mut report = check_cfc_lower_bound(4).unwrap();
        assert_eq!(exit_code_for_report(&report), 0);
        // synthesize a finding to pin the violation path
        report.violations.push(enumerate::Violation {
            key: "(()(()))".into(),
            graph: path_graph(4).unwrap(),
            observed: "cfc=1".into(),
            bound: "2".into(),
        });
        assert_eq!(exit_code_for_report(&report), EXIT_VIOLATION);
        let tsv = report.to_tsv();
        assert!(tsv.contains("# violation"));
        assert!(tsv.contains("# n 4"));
    }
}
