use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hexvalid::cli::{
    cmd_bench, cmd_check, cmd_compare, default_jobs, BenchOptions, CheckOptions, CliError, CompareOptions, Format,
    EXIT_OK,
};
use hexvalid::dataset::Mix;
use hexvalid::CheckConfig;

#[derive(Parser)]
#[command(name = "hexvalid", version, about = "Robust validity checks for trilinear hexahedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format: table or jsonl.
    #[arg(long, default_value = "table")]
    format: Format,
    /// Values at or below this threshold count as non-positive.
    #[arg(long, default_value_t = 0.0)]
    zero_tol: f64,
    /// Subdivision depth limit before an element is reported undetermined.
    #[arg(long, default_value_t = 20)]
    max_depth: u32,
    /// Worker threads (defaults to the number of logical cores).
    #[arg(long, env = "HEXVALID_JOBS")]
    jobs: Option<usize>,
}

impl Common {
    fn config(&self) -> CheckConfig {
        CheckConfig {
            zero_tol: self.zero_tol,
            max_depth: self.max_depth,
            ..CheckConfig::default()
        }
    }

    fn jobs(&self) -> usize {
        match self.jobs {
            None | Some(0) => default_jobs(),
            Some(n) => n,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every hexahedron of a hexlist file.
    Check {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Print nothing; only the exit code reports the result.
        #[arg(long)]
        quiet: bool,
    },
    /// Compare corner-based screens against the robust check.
    Compare {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Minimum corner scaled Jacobian accepted by the quality screen.
        #[arg(long, default_value_t = 0.0)]
        quality_min: f64,
    },
    /// Measure throughput on a synthetic dataset.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1_000_000)]
        count: usize,
        /// valid, invalid or mixed.
        #[arg(long, default_value = "valid")]
        mix: Mix,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Check { input, common, quiet } => {
            let opts = CheckOptions {
                config: common.config(),
                jobs: common.jobs(),
                format: common.format,
                quiet,
            };
            Ok(cmd_check(&input, &opts, out)?.exit_code())
        }
        Command::Compare {
            input,
            common,
            quality_min,
        } => {
            let opts = CompareOptions {
                config: common.config(),
                quality_min,
                jobs: common.jobs(),
                format: common.format,
            };
            cmd_compare(&input, &opts, out)?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            common,
            count,
            mix,
            seed,
        } => {
            let opts = BenchOptions {
                count,
                mix,
                seed,
                jobs: common.jobs(),
                config: common.config(),
                format: common.format,
            };
            cmd_bench(&opts, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("hexvalid: {e}");
            e.exit_code()
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
