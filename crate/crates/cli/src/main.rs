use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use so3period::bracket::DEFAULT_CROSSING_CAP;
use so3period_cli::{cmd_bracket, cmd_brieskorn, cmd_check, cmd_invariant, cmd_jones, CheckOptions, CheckTarget, CliError};

#[derive(Parser)]
#[command(name = "so3period", version, about = "Kauffman brackets, SO(3) invariants and periodicity criteria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket of a link file (a single circle evaluates to 1).
    Bracket {
        file: PathBuf,
        /// Use the normalization with the empty diagram equal to 1.
        #[arg(long)]
        renormalized: bool,
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        max_crossings: usize,
    },
    /// Jones polynomial in t.
    Jones {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        max_crossings: usize,
    },
    /// SO(3) invariant of a surgery presentation; uncolored components are
    /// surgered, colored ones are observed.
    Invariant {
        file: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        max_crossings: usize,
    },
    /// SO(3) invariant of the Brieskorn sphere M_n (+1 surgery on T(2,n)).
    Brieskorn {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Periodicity criteria.
    Check(CheckArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true)))]
struct CheckArgs {
    /// Jones and bracket criteria on a link file.
    #[arg(long, group = "target")]
    link: Option<PathBuf>,
    /// Manifold criterion on a surgery presentation of a homology sphere.
    #[arg(long, group = "target")]
    manifold: Option<PathBuf>,
    /// Manifold criterion on the Brieskorn sphere M_N.
    #[arg(long, group = "target", value_name = "N", allow_negative_numbers = true)]
    brieskorn: Option<i64>,
    /// The 108-pair grid over p in {5..19} and odd 3 <= |n| <= 19.
    #[arg(long, group = "target")]
    experiment: bool,
    /// Manifold criterion on M_3 for every prime 5 <= p <= --max-p.
    #[arg(long, group = "target")]
    poincare_scan: bool,
    #[arg(long, default_value_t = 61)]
    max_p: u64,
    #[arg(long)]
    p: Option<u64>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads for grid computations.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
    max_crossings: usize,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Bracket { file, renormalized, max_crossings } => cmd_bracket(&file, renormalized, max_crossings),
        Command::Jones { file, max_crossings } => cmd_jones(&file, max_crossings),
        Command::Invariant { file, p, report, max_crossings } => {
            cmd_invariant(&file, p, max_crossings, report.as_deref())
        }
        Command::Brieskorn { n, p, report } => cmd_brieskorn(n, p, report.as_deref()),
        Command::Check(args) => {
            if let Some(jobs) = args.jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build_global()
                    .map_err(|e| CliError::Internal(e.to_string()))?;
            }
            let target = if let Some(f) = args.link {
                CheckTarget::Link(f)
            } else if let Some(f) = args.manifold {
                CheckTarget::Manifold(f)
            } else if let Some(n) = args.brieskorn {
                CheckTarget::Brieskorn(n)
            } else if args.experiment {
                CheckTarget::Experiment
            } else {
                CheckTarget::PoincareScan { max_p: args.max_p }
            };
            let opts = CheckOptions { p: args.p, cap: args.max_crossings, json: args.json, report: args.report };
            cmd_check(&target, &opts)
        }
    }
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
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
