use std::path::PathBuf;
use std::process::ExitCode;

use ca_forge::Limits;
use ca_forge_cli::run::{self, EXIT_MISMATCH, EXIT_OK};
use ca_forge_cli::{selftest, Cache, CliError, Config, MethodChoice};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ca-forge", version)]
#[command(about = "Checks the minimal non-CA criterion for PSL(2,q) against explicit group computations")]
struct Cli {
    /// Append-only JSONL result cache
    #[arg(long, global = true, env = "CA_FORGE_CACHE")]
    cache: Option<PathBuf>,

    /// Largest group handed to the subgroup-lattice oracle or the Schmidt classifier
    #[arg(long, global = true, default_value_t = 1200)]
    oracle_bound: usize,

    /// Largest group that is enumerated
    #[arg(long, global = true, default_value_t = 1 << 24)]
    group_bound: usize,

    /// Largest field order
    #[arg(long, global = true, default_value_t = 1 << 20)]
    field_bound: u64,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Add wall_time_ms to records (makes output run-dependent)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Compare the arithmetic criterion with a computed verdict for one q
    Verify {
        q: u64,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodChoice,
    },
    /// Verify every prime power in [qmin, qmax]
    Sweep {
        qmin: u64,
        qmax: u64,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Per-class table for PSL(2,q)
    Inspect {
        q: u64,
        /// Also report on the Suzuki point stabilizer for Sz(2^(2n+1))
        #[arg(long)]
        suzuki: Option<u32>,
    },
    /// Run the built-in property checks
    Selftest,
}

fn fail(e: &CliError) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(cli) {
        Ok(code) => code,
        Err(e) => fail(&e),
    };
    ExitCode::from(code as u8)
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let cache = cli.cache.as_deref().map(Cache::open).transpose()?;
    let cfg = Config {
        limits: Limits { group_bound: cli.group_bound, oracle_bound: cli.oracle_bound },
        field_bound: cli.field_bound,
        timings: cli.timings,
        cache,
    };
    match cli.command {
        Commands::Verify { q, method } => {
            let rec = run::verify(&cfg, q, method)?;
            println!("{}", if cli.json { rec.to_json() } else { rec.to_text() });
            Ok(if rec.agrees() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Commands::Sweep { qmin, qmax, jobs } => {
            let jobs = jobs.unwrap_or_else(rayon::current_num_threads);
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let results = run::sweep(&cfg, qmin, qmax, jobs)?;
            for (q, r) in &results {
                match r {
                    Ok(rec) => println!("{}", if cli.json { rec.to_json() } else { rec.to_text() }),
                    Err(e) => eprintln!("error: q = {q}: {e}"),
                }
            }
            let s = run::summarize(&results);
            eprintln!(
                "sweep {qmin}..{qmax}: {} records, {} agree, {} failed, {} errors",
                s.records, s.agree, s.failed, s.errors
            );
            Ok(s.worst_exit)
        }
        Commands::Inspect { q, suzuki } => {
            let report = run::inspect(&cfg, q, suzuki)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                print!("{}", report.to_text());
            }
            Ok(EXIT_OK)
        }
        Commands::Selftest => {
            let checks = selftest::run(&cfg);
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            Ok(if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}
