use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::parser::ValueSource;
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use m0nr_cli::*;

/// Graded characters of S_n on the cohomology of the real moduli space of
/// stable genus-0 curves with n marked points.
#[derive(Parser)]
#[command(name = "m0nr", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ClassArgs {
    /// Number of marked points.
    #[arg(long)]
    n: Option<u32>,
    /// Cycle type as comma-separated parts, e.g. "3,1,1".
    #[arg(long)]
    cycle_type: Option<String>,
    /// Every conjugacy class of S_n, in lexicographic order of part lists.
    #[arg(long)]
    all: bool,
}

impl From<ClassArgs> for ClassSelection {
    fn from(a: ClassArgs) -> Self {
        ClassSelection { n: a.n, cycle_type: a.cycle_type, all: a.all }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Graded character Σ (-t)^k Tr(π | H^k).
    Char(ClassArgs),
    /// Equivariant Euler characteristic.
    Euler(ClassArgs),
    /// Dump a truncated cycle index.
    CycleIndex {
        #[arg(value_enum)]
        which: Which,
        /// Truncation order in power-sum degree.
        #[arg(long, env = PBOUND_ENV, default_value_t = DEFAULT_PBOUND)]
        pbound: usize,
    },
    /// Run a cross-validation suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest n checked by the suite.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, env = PBOUND_ENV, default_value_t = DEFAULT_PBOUND)]
        pbound: usize,
        /// Largest ambient dimension the oracle may eliminate in.
        #[arg(long, default_value_t = 100_000)]
        max_ambient: usize,
        /// Directory for cached echelon forms.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

fn metadata(matches: &ArgMatches, pbound: usize) -> Metadata {
    let sub = matches.subcommand().map(|(_, m)| m).expect("subcommand");
    let pbound_source = match sub.value_source("pbound") {
        Some(ValueSource::EnvVariable) => format!("from {PBOUND_ENV}"),
        Some(ValueSource::CommandLine) => "from --pbound".to_string(),
        _ => "default".to_string(),
    };
    Metadata { pbound, pbound_source }
}

fn run(cli: Cli, matches: &ArgMatches) -> CliResult<String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Char(a) => Ok(render_chars(&char_records(&a.into())?, format)),
        Command::Euler(a) => Ok(render_euler(&euler_records(&a.into())?, format)),
        Command::CycleIndex { which, pbound } => {
            let z = cycle_index(which, pbound)?;
            Ok(render_index(&index_terms(&z), &metadata(matches, pbound), format))
        }
        Command::Verify { suite, max_n, pbound, max_ambient, cache_dir } => {
            let opts = VerifyOptions { max_n, pbound, max_ambient, cache_dir, ..Default::default() };
            let reports = run_suite(suite, &opts)?;
            let out = render_reports(&reports, &metadata(matches, pbound), format);
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Verification("verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let matches = match Cli::command().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli, &matches) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
