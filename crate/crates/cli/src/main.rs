//! Command-line front door: solve instances, dump elimination orders and
//! Grundy tables, run the verification suites, and benchmark the solvers.
//!
//! Exit codes: 0 success, 1 verification violation, 2 usage error,
//! 3 runtime or resource error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use josephus::bench::{render_svg, run_bench, write_csv, BenchConfig, SweepAxis};
use josephus::grundy::{grundy_table, verify_grundy_josephus, verify_hk_properties};
use josephus::oracle::simulate;
use josephus::verify::{cross_algorithm_agreement, VerificationReport};
use josephus::{solve, Algorithm, Error, Indexing, JosephusInstance};

#[derive(Parser)]
#[command(
    name = "josephus",
    about = "Josephus problem solvers, brute-force oracle, Grundy analysis, and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the survivor of a circle of n labels with every k-th removed
    Solve {
        /// Number of labels in the circle
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Removal step
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Which algorithm answers
        #[arg(long, value_enum, default_value = "orbit")]
        algo: SolveAlgo,
        /// Label convention; `both` prints `one=<v> zero=<v>`
        #[arg(long, value_enum, default_value = "one")]
        indexing: IndexingArg,
    },
    /// Print the full elimination order from the brute-force oracle
    Order {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Print Grundy values 0..=limit of maximum Nim with rule floor(x/k)
    Grundy {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Machine-check the Grundy identities, the orbit-map properties, and
    /// cross-algorithm agreement; exit 1 on any violation
    Verify {
        #[arg(long = "max-n", default_value_t = 50)]
        max_n: u64,
        #[arg(long = "max-k", default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
        max_k: u64,
        #[arg(long = "hk-limit", default_value_t = 10_000)]
        hk_limit: u64,
    },
    /// Time the algorithms over a sweep; write CSV and optionally SVG
    Bench {
        /// Which parameter varies
        #[arg(long, value_enum)]
        sweep: SweepArg,
        /// Value of the parameter that stays fixed
        #[arg(long)]
        fixed: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        step: u64,
        /// Timed runs per point per algorithm
        #[arg(long, default_value_t = 3000)]
        reps: u32,
        /// Comma-separated subset of orbit,linear,block
        #[arg(long, value_delimiter = ',', default_value = "orbit,linear,block")]
        algos: Vec<BenchAlgo>,
        /// CSV destination
        #[arg(long)]
        csv: PathBuf,
        /// Optional SVG chart destination
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveAlgo {
    Orbit,
    Linear,
    Block,
    Simulate,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlgo {
    Orbit,
    Linear,
    Block,
}

impl From<BenchAlgo> for Algorithm {
    fn from(a: BenchAlgo) -> Algorithm {
        match a {
            BenchAlgo::Orbit => Algorithm::Orbit,
            BenchAlgo::Linear => Algorithm::Linear,
            BenchAlgo::Block => Algorithm::Block,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexingArg {
    One,
    Zero,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    N,
    K,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InvalidParameter(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Solve {
            n,
            k,
            algo,
            indexing,
        } => cmd_solve(n, k, algo, indexing),
        Command::Order { n, k } => cmd_order(n, k),
        Command::Grundy { k, limit } => cmd_grundy(k, limit),
        Command::Verify {
            max_n,
            max_k,
            hk_limit,
        } => cmd_verify(max_n, max_k, hk_limit),
        Command::Bench {
            sweep,
            fixed,
            from,
            to,
            step,
            reps,
            algos,
            csv,
            svg,
        } => cmd_bench(sweep, fixed, from, to, step, reps, algos, csv, svg),
    }
}

fn survivor_one_based(inst: JosephusInstance, algo: SolveAlgo) -> Result<u64, Error> {
    match algo {
        SolveAlgo::Orbit => solve(inst, Algorithm::Orbit, Indexing::OneBased),
        SolveAlgo::Linear => solve(inst, Algorithm::Linear, Indexing::OneBased),
        SolveAlgo::Block => solve(inst, Algorithm::Block, Indexing::OneBased),
        SolveAlgo::Simulate => Ok(simulate(inst)?.survivor()),
    }
}

fn cmd_solve(n: u64, k: u64, algo: SolveAlgo, indexing: IndexingArg) -> Result<ExitCode, Error> {
    let inst = JosephusInstance::new(n, k)?;
    let one = survivor_one_based(inst, algo)?;
    match indexing {
        IndexingArg::One => println!("{one}"),
        IndexingArg::Zero => println!("{}", one - 1),
        IndexingArg::Both => println!("one={one} zero={}", one - 1),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_order(n: u64, k: u64) -> Result<ExitCode, Error> {
    let order = simulate(JosephusInstance::new(n, k)?)?;
    let labels: Vec<String> = order.order().iter().map(u32::to_string).collect();
    println!("{}", labels.join(","));
    Ok(ExitCode::SUCCESS)
}

fn cmd_grundy(k: u64, limit: u64) -> Result<ExitCode, Error> {
    let table = grundy_table(k, limit)?;
    let values: Vec<String> = table.values().iter().map(u32::to_string).collect();
    println!("{}", values.join(","));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_n: u64, max_k: u64, hk_limit: u64) -> Result<ExitCode, Error> {
    let mut all = VerificationReport::default();

    let identity = verify_grundy_josephus(max_n, max_k)?;
    println!(
        "grundy-josephus identity: {} checks, {} violations",
        identity.checks,
        identity.violations.len()
    );
    all.merge(identity);

    let mut map_props = VerificationReport::default();
    for k in 2..=max_k {
        map_props.merge(verify_hk_properties(k, hk_limit)?);
    }
    println!(
        "orbit-map properties:     {} checks, {} violations",
        map_props.checks,
        map_props.violations.len()
    );
    all.merge(map_props);

    let ks: Vec<u64> = (1..=max_k).collect();
    let grid = cross_algorithm_agreement(max_n, &ks)?;
    println!(
        "cross-algorithm grid:     {} checks, {} violations",
        grid.checks,
        grid.violations.len()
    );
    all.merge(grid);

    if let Some(first) = all.violations.first() {
        eprintln!("first violation: {first}");
        println!(
            "FAILED: {} violations in {} checks",
            all.violations.len(),
            all.checks
        );
        return Ok(ExitCode::from(1));
    }
    println!("all {} checks passed", all.checks);
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    sweep: SweepArg,
    fixed: u64,
    from: u64,
    to: u64,
    step: u64,
    reps: u32,
    algos: Vec<BenchAlgo>,
    csv: PathBuf,
    svg: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let sweep = match sweep {
        SweepArg::N => SweepAxis::N,
        SweepArg::K => SweepAxis::K,
    };
    let cfg = BenchConfig {
        algorithms: algos.into_iter().map(Algorithm::from).collect(),
        ..BenchConfig::new(sweep, fixed, from, to, step, reps)
    };
    let samples = run_bench(&cfg)?;

    let mut csv_out = BufWriter::new(File::create(&csv)?);
    write_csv(&samples, &mut csv_out)?;
    csv_out.flush()?;
    println!("wrote {}", csv.display());

    if let Some(svg_path) = svg {
        let mut svg_out = BufWriter::new(File::create(&svg_path)?);
        render_svg(&samples, sweep, &mut svg_out)?;
        svg_out.flush()?;
        println!("wrote {}", svg_path.display());
    }
    Ok(ExitCode::SUCCESS)
}
