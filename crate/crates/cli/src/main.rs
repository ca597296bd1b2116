mod cache;
mod render;
mod series;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qtree::par::with_workers;
use qtree::verify::{
    check_bernoulli, check_classical_q1, check_corolla_denominator, check_newton_sweep,
    check_oracle_agreement, check_partition_conjecture, check_theorem, check_zeta, CheckConfig,
    CheckReport, OracleBounds, Status, Theorem,
};

use crate::render::Format;
use crate::series::{AnySeries, SeriesName};

#[derive(Parser, Debug)]
#[command(name = "qtree", version, about = "Exact tree-indexed series over Q(q)[x]")]
struct Cli {
    /// Worker threads for the per-degree parallel loops (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of a series up to a given order.
    Compute(ComputeArgs),
    /// Run theorem sweeps and oracle cross-checks.
    Verify(VerifyArgs),
    /// Run a conjecture checker.
    #[command(subcommand)]
    Conjecture(ConjectureCmd),
    /// Inspect or maintain the coefficient cache.
    #[command(subcommand)]
    Cache(CacheAction),
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    series: SeriesName,
    /// Parameter of F, G and pawn_at.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, default_value_t = 6)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, env = "QTREE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A theorem name, or all, oracles, bernoulli, classical_q1, zeta.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    /// Inclusive range `a..b` of n; magnitudes for valeur_n_negatif.
    #[arg(long, default_value = "0..4", value_parser = parse_range)]
    n_range: (i64, i64),
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    seeds: Vec<u64>,
    /// Largest tree in the vertex-cover sweep.
    #[arg(long, default_value_t = 9)]
    cover_max_size: usize,
    /// Largest tree for the oracle agreement suite.
    #[arg(long, default_value_t = 7)]
    oracle_max_size: usize,
    /// Largest n for the coloring oracle agreement.
    #[arg(long, default_value_t = 3)]
    oracle_max_n: i64,
    #[arg(long, default_value_t = 9)]
    coloring_max_size: usize,
    #[arg(long, default_value_t = 4)]
    coloring_max_n: i64,
    #[arg(long, default_value_t = 7)]
    interpolation_max_size: usize,
    /// Print the reports as JSON lines instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum ConjectureCmd {
    /// Pawn corolla coefficients have denominator Φ_2 Φ_3 ⋯ Φ_{n+1}.
    CorollaDenominator {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Newton polygon shape of pawn numerators.
    Newton {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Cyclotomic factor in Ω of repeated partition trees.
    Partition {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 11)]
        order_cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Table of the stored entries.
    List(CacheDir),
    /// Remove entries written by another format version.
    Gc(CacheDir),
    /// Re-hash every payload and re-parse it.
    VerifyHashes(CacheDir),
}

#[derive(Args, Debug)]
struct CacheDir {
    #[arg(long, env = "QTREE_CACHE_DIR")]
    dir: PathBuf,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers;
    match with_workers(workers, move || run(cli.command)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Conjecture(c) => conjecture(c),
        Command::Cache(action) => cache_cmd(action),
    }
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let params = args.series.params(args.n)?;
    if args.order == 0 {
        bail!("--order must be at least 1");
    }
    if args.order >= 9 {
        eprintln!(
            "warning: order {} means exact bivariate arithmetic on every tree up to that size; expect minutes",
            args.order
        );
    }
    let name = args.series.as_str();
    let key = cache::CacheKey::new(name, &params, args.order);
    let cached = match &args.cache_dir {
        Some(dir) => cache::load(dir, &key)?,
        None => None,
    };
    let series = match cached {
        Some(s) => s,
        None => {
            let s = AnySeries::compute(args.series, args.n, args.order);
            if let Some(dir) = &args.cache_dir {
                cache::store(dir, &key, &s)?;
            }
            s
        }
    };
    let text = render::render(args.format, name, &params, &series)?;
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn print_report(r: &CheckReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(r).expect("reports serialize"));
        return;
    }
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Inconclusive => "INCONCLUSIVE",
    };
    println!(
        "{status:<12} {:<22} checked={:<6} {:>8.2}s  {}",
        r.name,
        r.checked,
        r.elapsed.as_secs_f64(),
        serde_json::Value::Object(r.params.clone())
    );
    if let Some(note) = &r.note {
        println!("             note: {note}");
    }
    if let Some(w) = &r.witness {
        println!("             witness: {w}");
    }
}

const EXTRA_SUITES: [&str; 4] = ["oracles", "bernoulli", "classical_q1", "zeta"];

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let cfg = CheckConfig {
        max_order: args.max_order,
        n_range: args.n_range,
        seeds: args.seeds.clone(),
        cover_max_size: args.cover_max_size,
        bounds: OracleBounds {
            coloring_max_size: args.coloring_max_size,
            coloring_max_n: args.coloring_max_n,
            interpolation_max_size: args.interpolation_max_size,
            ..OracleBounds::default()
        },
    };
    let suites: Vec<String> = if args.suite == "all" {
        Theorem::ALL
            .iter()
            .map(|t| t.name().to_string())
            .chain(EXTRA_SUITES.iter().map(|s| s.to_string()))
            .collect()
    } else {
        vec![args.suite.clone()]
    };
    let mut failed = false;
    for suite in suites {
        let report = match (Theorem::from_name(&suite), suite.as_str()) {
            (Some(t), _) => check_theorem(t, &cfg),
            (None, "oracles") => check_oracle_agreement(args.oracle_max_size, args.oracle_max_n, &cfg.bounds),
            (None, "bernoulli") => check_bernoulli(12, 10),
            (None, "classical_q1") => check_classical_q1(args.max_order.max(9)),
            (None, "zeta") => check_zeta(5, 20),
            (None, other) => {
                let known: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).chain(EXTRA_SUITES).collect();
                bail!("unknown suite {other:?}; expected all or one of {}", known.join(", "))
            }
        };
        failed |= report.status == Status::Fail;
        print_report(&report, args.json);
    }
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn conjecture(cmd: ConjectureCmd) -> Result<ExitCode> {
    let start = Instant::now();
    let report = match cmd {
        ConjectureCmd::CorollaDenominator { max_n } => {
            eprintln!("corolla-denominator: corollas with up to {max_n} leaves");
            check_corolla_denominator(max_n)
        }
        ConjectureCmd::Newton { max_size } => {
            eprintln!("newton: all trees with up to {max_size} vertices");
            check_newton_sweep(max_size)
        }
        ConjectureCmd::Partition { lambda, k, order_cap } => {
            if lambda.contains(&0) {
                bail!("--lambda parts must be positive");
            }
            eprintln!("partition: lambda {lambda:?}, {k} copies");
            check_partition_conjecture(&lambda, k, order_cap)
        }
    };
    eprintln!("done in {:.2}s", start.elapsed().as_secs_f64());
    print_report(&report, false);
    Ok(if report.status == Status::Fail { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn cache_cmd(action: CacheAction) -> Result<ExitCode> {
    match action {
        CacheAction::List(CacheDir { dir }) => {
            print!("{}", cache::list(&dir)?);
            Ok(ExitCode::SUCCESS)
        }
        CacheAction::Gc(CacheDir { dir }) => {
            let n = cache::gc(&dir).context("cache gc")?;
            println!("removed {n} stale entries");
            Ok(ExitCode::SUCCESS)
        }
        CacheAction::VerifyHashes(CacheDir { dir }) => {
            let (checked, bad) = cache::verify_hashes(&dir)?;
            for (path, problem) in &bad {
                println!("MISMATCH {}: {problem}", path.display());
            }
            println!("{} entries checked, {} bad", checked, bad.len());
            Ok(if bad.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}
