//! Command-line front end for the cut-ideal toolkit: partition tables,
//! reduced Groebner bases, ring-graph recognition, and the verification
//! suites over the built-in corpus.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
//! exhaustion.

mod corpus;
mod report;
mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use cutideal_core::budget::{Budget, BudgetError, MAX_VERTICES};
use cutideal_core::cuts::{cut_exponent_matrix, cut_set, enumerate_partitions, ExponentMatrix};
use cutideal_core::engine::{
    basis_shape, candidate_orders, toric_ideal, MonomialOrder, OrderKind,
};
use cutideal_core::graph::Graph;

use report::Log;
use suites::Ctx;

#[derive(Parser)]
#[command(name = "cutideal", version, about = "Cut ideals of graphs: bases, series, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every vertex partition with the edges it cuts.
    Cuts {
        /// Graph file (`vertices n` then `edge i j` lines).
        graph: PathBuf,
    },
    /// Compute the reduced Groebner basis of a graph's cut ideal.
    Ideal {
        graph: PathBuf,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run a verification suite: cycles, trees, unions, ring, formulas, or all.
    Verify {
        suite: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Decide whether a graph is a ring graph, with per-block evidence.
    Recognize { graph: PathBuf },
}

#[derive(Args)]
struct RunOpts {
    /// Monomial order: lex, degrevlex, or elim:<k> (k-column leading block).
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// Column permutation: bitstring, cutsize, cutpattern (each optionally
    /// with a _rev suffix), or an explicit comma-separated list.
    #[arg(long, default_value = "bitstring")]
    perm: String,
    /// Degree cap for basis elements (default 6; must be positive).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Critical-pair cap per completion (deterministic, unlike --time-limit).
    #[arg(long)]
    max_pairs: Option<u64>,
    /// Wall-clock cap in seconds; omit to keep runs deterministic.
    #[arg(long)]
    time_limit: Option<u64>,
    /// Window width for Hilbert-function comparisons.
    #[arg(long)]
    window: Option<u32>,
    /// Directory for basis, series, and report files.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A command's failure mode, carrying the exit code.
enum Failure {
    Verify,
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl From<BudgetError> for Failure {
    fn from(e: BudgetError) -> Failure {
        Failure::Budget(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cuts { graph } => cmd_cuts(&graph),
        Command::Ideal { graph, opts } => cmd_ideal(&graph, &opts),
        Command::Verify { suite, opts } => cmd_verify(&suite, &opts),
        Command::Recognize { graph } => cmd_recognize(&graph),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verify => {}
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Budget(msg) => eprintln!("budget: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Graph::parse_text(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn budget_from(opts: &RunOpts) -> Result<Budget, Failure> {
    let mut budget = Budget::default();
    if let Some(d) = opts.max_degree {
        if d == 0 {
            return Err(Failure::Input("--max-degree must be positive".into()));
        }
        budget = budget.with_max_degree(d);
    }
    if let Some(p) = opts.max_pairs {
        if p == 0 {
            return Err(Failure::Input("--max-pairs must be positive".into()));
        }
        budget = budget.with_max_pairs(p);
    }
    if let Some(t) = opts.time_limit {
        if t == 0 {
            return Err(Failure::Input("--time-limit must be positive".into()));
        }
        budget = budget.with_time_limit(Duration::from_secs(t));
    }
    Ok(budget)
}

/// Resolve `--order` and `--perm` against a concrete matrix.
fn order_from(opts: &RunOpts, m: &ExponentMatrix) -> Result<MonomialOrder, Failure> {
    let n = m.cols();
    let perm: Vec<usize> = if opts.perm.contains(',') || opts.perm.chars().all(|c| c.is_ascii_digit()) {
        let parsed: Result<Vec<usize>, _> =
            opts.perm.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let perm = parsed.map_err(|_| {
            Failure::Input(format!("--perm {}: not a comma-separated index list", opts.perm))
        })?;
        let mut seen = vec![false; n];
        if perm.len() != n || !perm.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
            return Err(Failure::Input(format!(
                "--perm must be a permutation of 0..{n} for this graph"
            )));
        }
        perm
    } else {
        let suffix = format!("/{}", opts.perm);
        candidate_orders(m)
            .into_iter()
            .find(|(name, _)| name.ends_with(&suffix))
            .map(|(_, order)| order.perm().to_vec())
            .ok_or_else(|| {
                Failure::Input(format!(
                    "--perm {}: expected bitstring, cutsize, cutpattern, a _rev variant, or an index list",
                    opts.perm
                ))
            })?
    };

    match opts.order.as_str() {
        "lex" => Ok(MonomialOrder::new(OrderKind::Lex, perm)),
        "degrevlex" => Ok(MonomialOrder::new(OrderKind::DegRevLex, perm)),
        other => {
            let k = other
                .strip_prefix("elim:")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1 && k < n)
                .ok_or_else(|| {
                    Failure::Input(format!(
                        "--order {other}: expected lex, degrevlex, or elim:<k> with 1 <= k < {n}"
                    ))
                })?;
            Ok(MonomialOrder::elim(vec![k, n - k], perm))
        }
    }
}

fn cmd_cuts(path: &Path) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    if n >= MAX_VERTICES {
        return Err(Failure::Budget(format!(
            "{} vertices means {} partitions; the cut table stops at {} vertices",
            n,
            1u64 << (n - 1),
            MAX_VERTICES - 1
        )));
    }
    let partitions = enumerate_partitions(n).map_err(|e| Failure::Budget(e.to_string()))?;
    println!("vertices = {n}");
    println!("edges = {}", g.edge_count());
    println!("partitions = {}", partitions.len());
    for p in partitions {
        let cut = cut_set(&g, &p);
        let edges: Vec<String> = cut.edges(&g).iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let edges = if edges.is_empty() { "-".to_string() } else { edges.join(" ") };
        println!("{} : {}", p.label(), edges);
    }
    Ok(())
}

fn cmd_ideal(path: &Path, opts: &RunOpts) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let budget = budget_from(opts)?;
    let matrix = cut_exponent_matrix(&g)?;
    let order = order_from(opts, &matrix)?;
    let basis = toric_ideal(&matrix, &order, &budget)?;
    let shape = basis_shape(&basis);

    println!("vertices = {}", g.vertex_count());
    println!("edges = {}", g.edge_count());
    println!("variables = {}", matrix.cols());
    println!("elements = {}", basis.len());
    println!("max_degree = {}", basis.max_degree());
    println!("quadratic = {}", shape.quadratic);
    println!("squarefree = {}", shape.squarefree);
    println!("initial_squarefree = {}", shape.initial_squarefree);
    let text = basis.to_text(matrix.col_labels());
    print!("{text}");

    if let Some(dir) = &opts.out {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
        fs::create_dir_all(dir)?;
        fs::write(dir.join(format!("gb_{stem}.txt")), text)?;
    }
    Ok(())
}

fn cmd_verify(suite: &str, opts: &RunOpts) -> Result<(), Failure> {
    let budget = budget_from(opts)?;
    let log = Log::new(opts.out.clone());
    let mut ctx = Ctx::new(budget, opts.window, log);
    if suite == "all" {
        for name in suites::SUITES {
            suites::run_suite(&mut ctx, name)?;
        }
    } else if !suites::run_suite(&mut ctx, suite)? {
        return Err(Failure::Input(format!(
            "unknown suite {suite}: expected one of cycles, trees, unions, ring, formulas, all"
        )));
    }
    println!("result = {} # {}", if ctx.log.any_fail() { "fail" } else { "ok" }, ctx.log.summary());
    if ctx.log.any_fail() {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn cmd_recognize(path: &Path) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let verdict = g.ring_graph_verdict();
    println!("ring_graph = {}", verdict.is_ring);
    println!("blocks = {}", verdict.per_block.len());
    for b in &verdict.per_block {
        println!(
            "block {} : chordless_cycles = {} cycle_rank = {} {}",
            b.block_index,
            b.primitive_cycle_count,
            b.cycle_rank,
            if b.primitive_cycle_count == b.cycle_rank as u64 { "ok" } else { "excess" }
        );
    }
    Ok(())
}
