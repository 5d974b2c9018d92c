use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use barbell_cli::build::{build, Kind};
use barbell_cli::census::{run_census, CensusOptions};
use barbell_cli::input::{read_graph, read_source};
use barbell_cli::{search_options, EXIT_USAGE};
use barbell_core::harness;
use barbell_core::ssp::{parse_matrix, property_kernel, property_kernel_float, ssp_evidence, Property, SspError};
use barbell_core::{find_barbell_partition, Graph, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Barbell partitions, graph operations and SSP kernel checks.
#[derive(Parser)]
#[command(name = "bpart", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Barbell partition search.
    #[command(subcommand)]
    Barbell(BarbellCommand),
    /// Graph operations.
    #[command(subcommand)]
    Ops(OpsCommand),
    /// Strong Arnold, Spectral and Multiplicity Property kernels.
    #[command(subcommand)]
    Ssp(SspCommand),
    /// One JSON record per graph of a graph6 catalog.
    Census(CensusArgs),
    /// Rerun the theorem verification suites.
    Theorems {
        /// Only suites whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// One JSON object per suite.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone, Copy)]
struct SearchArgs {
    /// Largest order for the exhaustive fallback [env: BARBELL_BRUTE_CAP].
    #[arg(long)]
    brute_cap: Option<usize>,
    /// Node budget for the fort search.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum BarbellCommand {
    /// Decide whether a graph admits a barbell partition.
    /// Exit 0: admits, 1: does not admit, 2: budget exceeded.
    Check {
        /// graph6 or edge-list file, `-` for stdin, or a literal graph6 string.
        graph: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OpsCommand {
    /// Build a graph and, when a construction applies, a verified partition.
    /// Exit 3 when the construction's hypothesis fails.
    Build {
        #[arg(value_enum)]
        kind: Kind,
        /// Graphs (file, `-` or literal graph6), 1-based vertices, or integers.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Partition JSON ({"R":[..],"W1":[..],"W2":[..]}, 1-based) of the
        /// input to transfer from.
        #[arg(long)]
        transfer_partition: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Sap,
    Ssp,
    Smp,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Property {
        match p {
            PropertyArg::Sap => Property::Sap,
            PropertyArg::Ssp => Property::Ssp,
            PropertyArg::Smp => Property::Smp,
        }
    }
}

#[derive(Subcommand)]
enum SspCommand {
    /// Kernel dimension of a property's defining system.
    /// Exit 0: holds, 1: fails, 2: indeterminate (floating mode).
    Check {
        /// Dense matrix file, or `-` for stdin.
        matrix: String,
        #[arg(long, value_enum, default_value = "ssp")]
        property: PropertyArg,
        /// Singular-value rank instead of exact elimination.
        #[arg(long)]
        float: bool,
    },
    /// Property counts over seeded random matrices in S(G).
    Evidence {
        graph: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct CensusArgs {
    /// graph6 catalog, one graph per line, or `-` for stdin.
    input: String,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Sampled SSP trials per graph (0 skips the evidence field).
    #[arg(long, default_value_t = 0)]
    ssp_trials: usize,
    /// Seed for the sampled SSP trials.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add per-graph wall time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    search: SearchArgs,
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn barbell_check(graph: &str, search: SearchArgs, json: bool) -> Result<i32> {
    let g: Graph = read_graph(graph)?;
    let cert = find_barbell_partition(&g, search_options(search.brute_cap, search.budget)?);
    if json {
        print_json(&cert.to_json(&g))?;
    } else {
        let j = cert.to_json(&g);
        println!("graph6: {}", j.graph6);
        println!("verdict: {}", serde_json::to_value(cert.verdict)?.as_str().unwrap_or_default());
        println!("method: {}", serde_json::to_value(cert.method)?.as_str().unwrap_or_default());
        if cert.partition.is_some() {
            println!("R: {{{}}}", j.r.join(", "));
            println!("W1: {{{}}}", j.w1.join(", "));
            println!("W2: {{{}}}", j.w2.join(", "));
        }
        println!("notes: {}", cert.notes);
        if cert.verdict == Verdict::Admits {
            println!("G admits a barbell partition, so G is not in G^SSP: some matrix in S(G) lacks the SSP.");
        }
    }
    Ok(match cert.verdict {
        Verdict::Admits => 0,
        Verdict::DoesNotAdmit => 1,
        Verdict::BudgetExceeded => 2,
    })
}

#[derive(serde::Serialize)]
struct Indeterminate {
    schema: &'static str,
    property: Property,
    n: usize,
    indeterminate: bool,
    sigma: f64,
    tolerance: f64,
}

fn ssp_check(matrix: &str, property: Property, float: bool) -> Result<i32> {
    let a = parse_matrix(&read_source(matrix)?).with_context(|| format!("reading matrix from {matrix}"))?;
    let report = if float {
        match property_kernel_float(&a, property) {
            Ok(report) => report,
            Err(SspError::Indeterminate { sigma, tolerance }) => {
                print_json(&Indeterminate {
                    schema: barbell_core::ssp::kernel::REPORT_SCHEMA,
                    property,
                    n: a.n(),
                    indeterminate: true,
                    sigma,
                    tolerance,
                })?;
                return Ok(2);
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        property_kernel(&a, property)
    };
    print_json(&report.to_json())?;
    Ok(if report.holds { 0 } else { 1 })
}

fn census(args: CensusArgs) -> Result<i32> {
    let opts = CensusOptions {
        search: search_options(args.search.brute_cap, args.search.budget)?,
        jobs: args.jobs,
        ssp_trials: args.ssp_trials,
        seed: args.seed,
        timing: args.timing,
    };
    let input: Box<dyn io::BufRead> = if args.input == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(BufReader::new(File::open(&args.input).with_context(|| format!("opening {}", args.input))?))
    };
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).with_context(|| format!("creating {path}"))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let summary = run_census(input, &mut out, &mut io::stderr(), opts)?;
    if summary.parse_errors > 0 {
        eprintln!("{} records, {} lines skipped", summary.records, summary.parse_errors);
    }
    Ok(0)
}

fn theorems(filter: Option<&str>, json: bool) -> Result<i32> {
    if let Some(f) = filter {
        if !harness::suite_names().iter().any(|name| name.contains(f)) {
            bail!("no suite matches {f:?}; suites: {}", harness::suite_names().join(", "));
        }
    }
    let mut failed = false;
    for outcome in harness::run_all(filter) {
        failed |= !outcome.passed;
        if json {
            println!("{}", serde_json::to_string(&outcome)?);
            continue;
        }
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {} ({} checks, {} ms) {}",
            outcome.name, outcome.checks, outcome.wall_time_ms, outcome.detail
        );
        for failure in &outcome.failures {
            println!("    {failure}");
        }
        if outcome.failure_count > outcome.failures.len() {
            println!("    ... {} more", outcome.failure_count - outcome.failures.len());
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Barbell(BarbellCommand::Check { graph, search, json }) => barbell_check(&graph, search, json),
        Command::Ops(OpsCommand::Build { kind, inputs, transfer_partition, search }) => {
            let opts = search_options(search.brute_cap, search.budget)?;
            let result = build(kind, &inputs, transfer_partition.as_deref(), opts)?;
            print_json(&result.output)?;
            if let Some(msg) = &result.output.hypothesis_error {
                eprintln!("hypothesis not met: {msg}");
            }
            Ok(result.exit_code)
        }
        Command::Ssp(SspCommand::Check { matrix, property, float }) => ssp_check(&matrix, property.into(), float),
        Command::Ssp(SspCommand::Evidence { graph, trials, seed }) => {
            let g = read_graph(&graph)?;
            print_json(&ssp_evidence(&g, trials, seed)?)?;
            Ok(0)
        }
        Command::Census(args) => census(args),
        Command::Theorems { filter, json } => theorems(filter.as_deref(), json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
