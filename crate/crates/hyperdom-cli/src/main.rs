//! `hyperdom`: generate the named constructions, inspect invariants,
//! run the reduction pipeline, test isomorphism, and drive the
//! verification harnesses.
//!
//! Exit codes: 0 when all checks pass (or a query succeeds), 1 when a
//! verification clause fails (for `iso`: when the inputs are not
//! isomorphic), 2 on usage or I/O errors.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperdom::constructions::{generate, ConstructionName};
use hyperdom::reductions::{peel_to_hstar, shrink_to_hprime, PeelPolicy};
use hyperdom::solvers::{
    domination_number, matching_number, quasidegree, transversal_number,
};
use hyperdom::{iso, Hypergraph};

use hyperdom_cli::harness::{
    bound_report, check_lemmas_report, extension_search, forward_report, verify_all,
    ExtensionBase, ExtensionConfig, VerifyAllConfig,
};
use hyperdom_cli::report::{ReportBuilder, VerificationReport};
use hyperdom_cli::{fileio, input};

#[derive(Parser)]
#[command(
    name = "hyperdom",
    version,
    about = "Hypergraph domination toolkit: exact invariants, reductions, and verification harnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named construction (F, F-, F1, F1-, F2, F3)
    Gen {
        /// Construction name
        name: String,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the invariants of a hypergraph
    Inv {
        /// Construction name or file path
        input: String,
    },
    /// Run the peel/shrink reduction pipeline and print the trace
    Reduce {
        /// Construction name or file path
        input: String,
    },
    /// Test two hypergraphs for isomorphism (exit 0 iff isomorphic)
    Iso {
        /// First construction name or file path
        a: String,
        /// Second construction name or file path
        b: String,
    },
    /// Evaluate the reduction-pipeline property clauses on one input
    CheckLemmas {
        /// Construction name or file path
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the characterization: forward checks plus both extension searches
    VerifyTheorem {
        /// Largest number of edges to add in the extension searches
        #[arg(long, default_value_t = 2)]
        max_added: usize,
        /// Cap on examined extension candidates
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the rank bound on random instances
    VerifyBound {
        /// Rank of the generated instances (2..=5)
        #[arg(short, long)]
        rank: usize,
        /// Number of random instances
        #[arg(short, long, default_value_t = 500)]
        trials: usize,
        /// Generator seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every verification harness
    VerifyAll {
        #[arg(short, long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_added: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { name, output } => {
            let name: ConstructionName = name.parse()?;
            let text = fileio::write(&generate(name).hypergraph);
            match output {
                Some(path) => std::fs::write(&path, text)?,
                None => {
                    print!("{text}");
                    std::io::stdout().flush()?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inv { input } => {
            let (label, h) = input::load(&input)?;
            print_invariants(&label, &h)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { input } => {
            let (label, h) = input::load(&input)?;
            print_reduction(&label, &h)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { a, b } => {
            let (label_a, ha) = input::load(&a)?;
            let (label_b, hb) = input::load(&b)?;
            match iso::is_isomorphic(&ha, &hb)? {
                Some(mapping) => {
                    println!("isomorphic: yes");
                    let pairs: Vec<String> = mapping
                        .iter()
                        .enumerate()
                        .map(|(i, v)| format!("{}->{}", i + 1, v))
                        .collect();
                    println!("mapping ({label_a} -> {label_b}): {}", pairs.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("isomorphic: no");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::CheckLemmas { input, format } => {
            let (label, h) = input::load(&input)?;
            let report = check_lemmas_report(&label, &h)?;
            emit(&report, format)
        }
        Command::VerifyTheorem {
            max_added,
            budget,
            format,
        } => {
            let cfg = ExtensionConfig {
                max_added_edges: max_added,
                budget,
            };
            let mut b = ReportBuilder::new(
                "verify-theorem",
                vec![format!("max-added={max_added}"), format!("budget={budget}")],
            );
            b.merge("forward", &forward_report());
            b.merge("extend[F1]", &extension_search(ExtensionBase::F1, &cfg)?);
            b.merge(
                "extend[F1-]",
                &extension_search(ExtensionBase::F1Minus, &cfg)?,
            );
            emit(&b.finish(), format)
        }
        Command::VerifyBound {
            rank,
            trials,
            seed,
            format,
        } => {
            anyhow::ensure!((2..=5).contains(&rank), "rank must be in 2..=5");
            anyhow::ensure!(trials >= 1, "need at least one trial");
            let report = bound_report(rank, trials, seed)?;
            emit(&report, format)
        }
        Command::VerifyAll {
            trials,
            seed,
            max_added,
            budget,
            format,
        } => {
            anyhow::ensure!(trials >= 1, "need at least one trial");
            let cfg = VerifyAllConfig {
                trials,
                seed,
                max_added_edges: max_added,
                budget,
            };
            let report = verify_all(&cfg)?;
            emit(&report, format)
        }
    }
}

fn emit(report: &VerificationReport, format: Format) -> anyhow::Result<ExitCode> {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_invariants(label: &str, h: &Hypergraph) -> anyhow::Result<()> {
    println!("input: {label}");
    println!("n: {}", h.vertex_count());
    println!("m: {}", h.edge_count());
    if h.edge_count() == 0 {
        println!("(no edges: rank, transversal and matching are undefined)");
        return Ok(());
    }
    let rank = h.rank()?;
    println!("rank: {rank}");
    println!(
        "uniform: {}",
        if h.is_uniform(rank)? {
            format!("yes ({rank}-uniform)")
        } else {
            "no".to_string()
        }
    );
    println!("linear: {}", if h.is_linear() { "yes" } else { "no" });
    println!(
        "intersecting: {}",
        if h.is_intersecting() { "yes" } else { "no" }
    );
    let gamma = domination_number(h)?;
    println!(
        "domination: {} certificate {}",
        gamma.value,
        render_vertices(&gamma)
    );
    let tau = transversal_number(h)?;
    println!(
        "transversal: {} certificate {}",
        tau.value,
        render_vertices(&tau)
    );
    let alpha = matching_number(h)?;
    println!("matching: {}", alpha.value);
    let qds: Vec<String> = h
        .vertices()
        .map(|v| {
            let qd = quasidegree(h, v).map(|w| w.value).unwrap_or(0);
            format!("{v}={qd}")
        })
        .collect();
    println!("quasidegree: {}", qds.join(" "));
    Ok(())
}

fn render_vertices(w: &hyperdom::InvariantWitness) -> String {
    match w.certificate_vertices() {
        Some(vs) => {
            let ids: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", ids.join(","))
        }
        None => "-".to_string(),
    }
}

fn print_reduction(label: &str, h: &Hypergraph) -> anyhow::Result<()> {
    println!("input: {label}");
    println!("  {h}");
    let trace = peel_to_hstar(h, &PeelPolicy::Deterministic)?;
    if trace.deleted_edges.is_empty() {
        println!("peel: no edge deleted");
    } else {
        let order: Vec<String> = trace
            .deleted_edges
            .iter()
            .map(|e| e.to_string())
            .collect();
        println!("peel: deleted {}", order.join(", "));
    }
    println!("spanning reduction:");
    println!("  {}", trace.hstar);
    match shrink_to_hprime(trace) {
        Ok(trace) => {
            let outcome = trace.shrink.as_ref().expect("shrink populated");
            let pendants: Vec<String> = outcome
                .pendants
                .iter()
                .map(|(e, v)| format!("{e}\u{2192}{v}"))
                .collect();
            println!("pendants: {}", pendants.join(" "));
            println!("duplicates merged: {}", outcome.dedup_count);
            println!("shrunk hypergraph:");
            println!("  {}", outcome.hprime);
        }
        Err(e) => println!("shrink failed: {e}"),
    }
    Ok(())
}
