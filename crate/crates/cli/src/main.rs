//! Command-line front end for the flow toolkit: random CNF generation,
//! gadget building and export, flow queries over DIMACS networks, threshold
//! correspondence verification, and benchmark CSV emission.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 usage error
//! (bad flags or malformed input), 3 instance over the built-in size guards.
//! All node ids on the command line and in output are 1-based, matching the
//! DIMACS convention.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flow_core::{read_dimacs, FlowNetwork, NodeId};
use gadgets::{
    build_cap_gadget, build_mlec_gadget, build_uncap_gadget, plan_partition, read_cnf,
    read_gadget, write_cnf, write_gadget, Clause, CnfFormula, GadgetError, GadgetGraph,
    GadgetVariant, Literal, Partition, Rational,
};
use multipair::{
    all_pairs_max_flow, gh_query, global_max_flow, gomory_hu_tree, kpmf,
    max_local_edge_connectivity, st_max_flow, UndirectedGraph,
};
use sat_driver::{verify_lemma, DriverError};

#[derive(Parser)]
#[command(
    name = "flowlab",
    version,
    about = "Multi-pair max-flow toolkit and CNF-to-flow reduction laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random CNF formula in DIMACS format.
    Gen(GenArgs),
    /// Build a gadget from a CNF formula and export it as an annotated
    /// DIMACS max-flow file.
    Build(BuildArgs),
    /// Run flow queries against a DIMACS max-flow file.
    Query(QueryArgs),
    /// Verify the threshold correspondence for a formula, or check an
    /// exported gadget file against the canonical construction.
    Verify(VerifyArgs),
    /// Time gadget construction plus a full pairwise query sweep over a
    /// size sweep; emits one CSV record per instance.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Number of variables.
    #[arg(long)]
    vars: u32,
    /// Number of clauses.
    #[arg(long)]
    clauses: usize,
    /// Literals per clause (distinct variables, uniform random signs).
    #[arg(long, default_value_t = 3)]
    width: usize,
    /// RNG seed; the output is byte-identical for equal seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    /// Gadget construction to use.
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Input formula, DIMACS CNF.
    #[arg(long)]
    cnf: PathBuf,
    /// Clause threshold; required for uncap/cap, ignored for mlec.
    #[arg(long)]
    p: Option<usize>,
    /// First partition coefficient as "num/den"; ignored for mlec.
    #[arg(long, value_parser = parse_ratio, default_value = "1/1")]
    c1: Rational,
    /// Second partition coefficient as "num/den"; ignored for mlec.
    #[arg(long, value_parser = parse_ratio, default_value = "1/1")]
    c2: Rational,
    /// Scatter variables over the blocks with this seed instead of
    /// assigning them contiguously; ignored for mlec.
    #[arg(long)]
    shuffle_seed: Option<u64>,
    /// Output path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct QueryArgs {
    /// Input network, DIMACS max-flow format.
    #[arg(long)]
    graph: PathBuf,
    #[command(subcommand)]
    mode: QueryMode,
}

#[derive(Subcommand)]
enum QueryMode {
    /// Maximum flow between one source and one sink; prints the value.
    Maxflow {
        #[arg(long)]
        source: usize,
        #[arg(long)]
        sink: usize,
    },
    /// Flow matrix for sources × sinks as CSV (sink ids in the header row,
    /// source ids in the first column, "-" on diagonal cells).
    St {
        /// Comma-separated source ids.
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<usize>,
        /// Comma-separated sink ids.
        #[arg(long, value_delimiter = ',', required = true)]
        sinks: Vec<usize>,
    },
    /// Flow matrix over all ordered node pairs, same CSV layout as `st`.
    Allpairs,
    /// Largest pairwise flow; prints "value,source,sink" CSV.
    Global,
    /// All ordered pairs with flow at most k; prints "source,sink,value"
    /// rows in lexicographic pair order.
    Kpmf {
        #[arg(long)]
        k: u64,
    },
    /// Gomory–Hu tree of an undirected network. With --u/--v prints the
    /// pairwise min-cut value, otherwise the tree as "node,parent,weight".
    Gomoryhu {
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
    },
    /// Maximum local edge connectivity (unit capacities only); prints
    /// "value,source,sink" CSV.
    Mlec,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input formula, DIMACS CNF.
    #[arg(long)]
    cnf: PathBuf,
    /// Pairwise construction to verify (uncap or cap).
    #[arg(long, value_enum, required_unless_present = "gadget", conflicts_with = "gadget")]
    variant: Option<VariantArg>,
    /// First partition coefficient as "num/den".
    #[arg(long, value_parser = parse_ratio, default_value = "1/1", conflicts_with = "gadget")]
    c1: Rational,
    /// Second partition coefficient as "num/den".
    #[arg(long, value_parser = parse_ratio, default_value = "1/1", conflicts_with = "gadget")]
    c2: Rational,
    /// Scatter variables over the blocks with this seed.
    #[arg(long, conflicts_with = "gadget")]
    shuffle_seed: Option<u64>,
    /// Check this exported gadget file against the canonical construction
    /// for --cnf instead of running the lemma sweep.
    #[arg(long)]
    gadget: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Gadget construction to benchmark.
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Comma-separated variable counts, one instance per entry.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u32>,
    /// Clauses per instance (default 2·n).
    #[arg(long)]
    clauses: Option<usize>,
    /// Literals per clause.
    #[arg(long, default_value_t = 3)]
    width: usize,
    /// Clause threshold (default ⌈m/2⌉); ignored for mlec, reported as 0.
    #[arg(long)]
    p: Option<usize>,
    /// Base RNG seed; instance i uses seed + i. Only wall_time_us varies
    /// between runs with equal seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Uncap,
    Cap,
    Mlec,
}

impl From<VariantArg> for GadgetVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Uncap => GadgetVariant::Uncap,
            VariantArg::Cap => GadgetVariant::Cap,
            VariantArg::Mlec => GadgetVariant::Mlec,
        }
    }
}

enum CliError {
    /// Exit 1: a verification ran and failed.
    Failed(String),
    /// Exit 2: bad flags or malformed/unreadable input.
    Usage(String),
    /// Exit 3: instance exceeds a built-in size guard.
    SizeGuard(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::SizeGuard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Failed(m) | CliError::Usage(m) | CliError::SizeGuard(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Build(args) => cmd_build(args),
        Command::Query(args) => cmd_query(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn parse_ratio(s: &str) -> Result<Rational, String> {
    let bad = |part: &str| format!("'{part}' is not an integer; expected \"num/den\" or \"num\"");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<i64>().map_err(|_| bad(n))?,
            d.trim().parse::<i64>().map_err(|_| bad(d))?,
        ),
        None => (s.trim().parse::<i64>().map_err(|_| bad(s))?, 1),
    };
    if den == 0 {
        return Err("denominator is zero".to_string());
    }
    Ok(Rational::new(num, den))
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_node(id: usize) -> Result<NodeId, CliError> {
    id.checked_sub(1)
        .ok_or_else(|| CliError::Usage("node ids are 1-based; 0 is not a valid id".to_string()))
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Gadget builder errors during `build`/`bench`: bad p and other input
/// problems are usage errors; block and capacity limits are size guards.
fn guard(e: GadgetError) -> CliError {
    match e {
        GadgetError::BlockTooLarge { .. } | GadgetError::Network(_) => {
            CliError::SizeGuard(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn parse_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    let text = read_input(path)?;
    read_cnf(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn random_formula(rng: &mut ChaCha8Rng, vars: u32, clauses: usize, width: usize) -> CnfFormula {
    let clause_list = (0..clauses)
        .map(|_| {
            let picks = rand::seq::index::sample(rng, vars as usize, width);
            let literals: Vec<Literal> = picks
                .iter()
                .map(|v| {
                    let var = (v + 1) as u32;
                    if rng.gen() {
                        Literal::positive(var)
                    } else {
                        Literal::negative(var)
                    }
                })
                .collect();
            Clause::new(literals)
        })
        .collect();
    CnfFormula::new(vars, clause_list).expect("generated literals are in range")
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    if args.vars == 0 || args.clauses == 0 || args.width == 0 {
        return Err(CliError::Usage(
            "--vars, --clauses, and --width must be positive".to_string(),
        ));
    }
    if args.width > args.vars as usize {
        return Err(CliError::Usage(format!(
            "clause width {} exceeds the variable count {}",
            args.width, args.vars
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let formula = random_formula(&mut rng, args.vars, args.clauses, args.width);
    write_output(&args.out, &write_cnf(&formula))
}

fn pair_partition(
    num_vars: u32,
    c1: Rational,
    c2: Rational,
    shuffle_seed: Option<u64>,
) -> Result<Partition, CliError> {
    let plan = plan_partition(c1, c2, num_vars).map_err(usage)?;
    match shuffle_seed {
        Some(seed) => Partition::shuffled(num_vars, &plan, seed),
        None => Partition::contiguous(num_vars, &plan),
    }
    .map_err(usage)
}

fn build_gadget(
    formula: &CnfFormula,
    variant: VariantArg,
    p: Option<usize>,
    c1: Rational,
    c2: Rational,
    shuffle_seed: Option<u64>,
) -> Result<GadgetGraph, CliError> {
    match variant {
        VariantArg::Mlec => build_mlec_gadget(formula).map_err(guard),
        pair => {
            let p = p.ok_or_else(|| {
                CliError::Usage("--p is required for the uncap and cap variants".to_string())
            })?;
            let partition = pair_partition(formula.num_vars(), c1, c2, shuffle_seed)?;
            match pair {
                VariantArg::Uncap => build_uncap_gadget(formula, &partition, p),
                VariantArg::Cap => build_cap_gadget(formula, &partition, p),
                VariantArg::Mlec => unreachable!(),
            }
            .map_err(guard)
        }
    }
}

fn cmd_build(args: BuildArgs) -> Result<(), CliError> {
    let formula = parse_cnf(&args.cnf)?;
    let gadget = build_gadget(
        &formula,
        args.variant,
        args.p,
        args.c1,
        args.c2,
        args.shuffle_seed,
    )?;
    write_output(&args.out, &write_gadget(&gadget))
}

fn cmd_query(args: QueryArgs) -> Result<(), CliError> {
    let text = read_input(&args.graph)?;
    let net: FlowNetwork =
        read_dimacs(&text).map_err(|e| CliError::Usage(format!("{}: {e}", args.graph.display())))?;
    match args.mode {
        QueryMode::Maxflow { source, sink } => {
            let flow = net
                .max_flow(to_node(source)?, to_node(sink)?)
                .map_err(usage)?;
            println!("{}", flow.value);
        }
        QueryMode::St { sources, sinks } => {
            let sources: Vec<NodeId> = sources.into_iter().map(to_node).collect::<Result<_, _>>()?;
            let sinks: Vec<NodeId> = sinks.into_iter().map(to_node).collect::<Result<_, _>>()?;
            let matrix = st_max_flow(&net, &sources, &sinks).map_err(usage)?;
            print!("{}", matrix.to_csv(1));
        }
        QueryMode::Allpairs => {
            let matrix = all_pairs_max_flow(&net).map_err(usage)?;
            print!("{}", matrix.to_csv(1));
        }
        QueryMode::Global => {
            let (value, (s, t)) = global_max_flow(&net).map_err(usage)?;
            println!("value,source,sink");
            println!("{value},{},{}", s + 1, t + 1);
        }
        QueryMode::Kpmf { k } => {
            println!("source,sink,value");
            for (u, v, value) in kpmf(&net, k) {
                println!("{},{},{value}", u + 1, v + 1);
            }
        }
        QueryMode::Gomoryhu { u, v } => {
            let graph = UndirectedGraph::from_flow_network(&net).map_err(usage)?;
            let tree = gomory_hu_tree(&graph);
            match (u, v) {
                (Some(u), Some(v)) => {
                    let value = gh_query(&tree, to_node(u)?, to_node(v)?).map_err(usage)?;
                    println!("{value}");
                }
                _ => {
                    println!("node,parent,weight");
                    for node in 1..graph.node_count() {
                        println!("{},{},{}", node + 1, tree.parent()[node] + 1, tree.weight()[node]);
                    }
                }
            }
        }
        QueryMode::Mlec => {
            let (value, (s, t)) = max_local_edge_connectivity(&net).map_err(usage)?;
            println!("value,source,sink");
            println!("{value},{},{}", s + 1, t + 1);
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let formula = parse_cnf(&args.cnf)?;
    match &args.gadget {
        Some(path) => verify_gadget_file(&formula, path),
        None => {
            let variant: GadgetVariant = args.variant.expect("required by clap").into();
            if variant == GadgetVariant::Mlec {
                return Err(CliError::Usage(
                    "verify runs on the pairwise variants (uncap, cap)".to_string(),
                ));
            }
            let partition =
                pair_partition(formula.num_vars(), args.c1, args.c2, args.shuffle_seed)?;
            let report = verify_lemma(&formula, &partition, variant).map_err(driver_guard)?;
            print!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed("verification failed".to_string()))
            }
        }
    }
}

fn driver_guard(e: DriverError) -> CliError {
    match e {
        DriverError::TooManyVariables { .. } => CliError::SizeGuard(e.to_string()),
        DriverError::Gadget(g) => guard(g),
        DriverError::Inconsistent(_) => CliError::Failed(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

/// Checks an exported gadget file: re-runs the canonical construction with
/// the parameters recorded in the file and demands exact structural equality
/// (network, roles, colors, variant, p, partition).
fn verify_gadget_file(formula: &CnfFormula, path: &Path) -> Result<(), CliError> {
    let text = read_input(path)?;
    let file = match read_gadget(&text) {
        Ok(file) => file,
        Err(e) => {
            println!("gadget file rejected: {e}");
            return Err(CliError::Failed("gadget verification failed".to_string()));
        }
    };
    let rebuilt = match file.variant {
        GadgetVariant::Uncap => build_uncap_gadget(
            formula,
            &file.partition,
            file.p.expect("pairwise files record p"),
        ),
        GadgetVariant::Cap => build_cap_gadget(
            formula,
            &file.partition,
            file.p.expect("pairwise files record p"),
        ),
        GadgetVariant::Mlec => build_mlec_gadget(formula),
    };
    let rebuilt = match rebuilt {
        Ok(g) => g,
        Err(e @ GadgetError::BlockTooLarge { .. }) | Err(e @ GadgetError::Network(_)) => {
            return Err(CliError::SizeGuard(e.to_string()));
        }
        Err(e) => {
            // The recorded parameters do not yield a gadget for this
            // formula, so the file cannot be the canonical construction.
            println!("gadget file rejected: {e}");
            return Err(CliError::Failed("gadget verification failed".to_string()));
        }
    };
    if file.matches(&rebuilt) {
        println!("gadget file matches the canonical construction");
        Ok(())
    } else {
        println!("gadget file does not match the canonical construction");
        Err(CliError::Failed("gadget verification failed".to_string()))
    }
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let mut csv = String::from("variant,n,m,p,node_count,edge_count,wall_time_us,flow_queries\n");
    for (index, &n) in args.sizes.iter().enumerate() {
        if n == 0 {
            return Err(CliError::Usage("variable counts must be positive".to_string()));
        }
        let m = args.clauses.unwrap_or(2 * n as usize);
        if m == 0 {
            return Err(CliError::Usage("--clauses must be positive".to_string()));
        }
        if args.width == 0 || args.width > n as usize {
            return Err(CliError::Usage(format!(
                "clause width {} does not fit {} variables",
                args.width, n
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(index as u64));
        let formula = random_formula(&mut rng, n, m, args.width);
        let start = Instant::now();
        let (p, gadget, flow_queries) = match args.variant {
            VariantArg::Mlec => {
                let gadget = build_mlec_gadget(&formula).map_err(guard)?;
                let alphas = gadget.alpha_nodes();
                let betas = gadget.beta_nodes();
                st_max_flow(&gadget.net, &alphas, &betas).map_err(usage)?;
                let queries = (alphas.len() * betas.len()) as u64;
                (0, gadget, queries)
            }
            pair => {
                let p = args.p.unwrap_or((m + 1) / 2);
                let gadget = build_gadget(&formula, pair, Some(p), Rational::new(1, 1), Rational::new(1, 1), None)?;
                let threshold = gadget.threshold().expect("pairwise gadget");
                let mut queries = 0u64;
                for a in gadget.alpha_nodes() {
                    for c in gadget.gamma_nodes() {
                        gadget.net.max_flow_bounded(a, c, threshold).map_err(usage)?;
                        queries += 1;
                    }
                }
                (p, gadget, queries)
            }
        };
        let wall_time_us = start.elapsed().as_micros();
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            GadgetVariant::from(args.variant).label(),
            n,
            m,
            p,
            gadget.net.node_count(),
            gadget.net.edge_count(),
            wall_time_us,
            flow_queries
        ));
    }
    write_output(&args.out, &csv)
}
