use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quivergr::caps::Caps;
use quivergr::verify::VerifyConfig;
use quivergr_cli::{
    cmd_check, cmd_enumerate, cmd_filtration, cmd_measure, cmd_piling, cmd_pruefer, cmd_submodules,
    cmd_takeoff, cmd_tube, exit_code, CliError, CliResult, EnumerateMode,
};

/// Exact Gabriel-Roiter computations for quiver representations over GF(p).
#[derive(Parser)]
#[command(name = "quivergr", version, about)]
struct Cli {
    /// Budget for subrepresentation enumeration (candidate tuples).
    /// Overrides the QUIVERGR_BUDGET environment variable.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Cap for exhaustive End(M) searches.
    #[arg(long, global = true)]
    end_cap: Option<u64>,
    /// Cap for exhaustive Hom(M,N) searches.
    #[arg(long, global = true)]
    hom_cap: Option<u64>,
    /// Budget for exhaustive matrix-tuple classification per dim vector.
    #[arg(long, global = true)]
    matrix_budget: Option<u64>,
    /// Seed for the randomized isomorphism fallback.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gabriel-Roiter measure of a representation file.
    Measure { file: String },
    /// Gabriel-Roiter submodules of a representation file.
    Submodules { file: String },
    /// A Gabriel-Roiter filtration (or all of them with --all).
    Filtration {
        file: String,
        #[arg(long)]
        all: bool,
    },
    /// Piling test for a submodule given by a subrep file.
    Piling { file: String, subrep: String },
    /// Classify indecomposables up to a length bound.
    Enumerate {
        /// Quiver spec: kroneckerN or subspaceN.
        #[arg(long)]
        quiver: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        max_length: usize,
        /// exhaustive or family.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
    },
    /// Certified take-off measures.
    Takeoff {
        #[arg(long)]
        quiver: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        count: usize,
        /// Registry completeness bound backing the certification.
        #[arg(long, default_value_t = 14)]
        bound: usize,
    },
    /// A homogeneous tube module, its measure and submodule structure.
    Tube {
        #[arg(short, long)]
        p: u64,
        /// Monic irreducible polynomial like x, x+1, x^2+x+1, or inf.
        #[arg(long)]
        param: String,
        #[arg(short, long)]
        t: usize,
    },
    /// Exact limit measure of a tube.
    Pruefer {
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        param: String,
    },
    /// Run a verification suite (all suites when omitted).
    Check { suite: Option<String> },
}

fn effective_caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Ok(v) = std::env::var("QUIVERGR_BUDGET") {
        if let Ok(b) = v.parse() {
            caps.subrep_budget = b;
        }
    }
    if let Some(b) = cli.budget {
        caps.subrep_budget = b;
    }
    if let Some(c) = cli.end_cap {
        caps.end_enum_cap = c;
    }
    if let Some(c) = cli.hom_cap {
        caps.hom_enum_cap = c;
    }
    if let Some(b) = cli.matrix_budget {
        caps.matrix_enum_budget = b;
    }
    if let Some(s) = cli.seed {
        caps.iso_seed = s;
    }
    caps
}

fn read_file(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn run(cli: &Cli) -> CliResult<String> {
    let caps = effective_caps(cli);
    match &cli.command {
        Command::Measure { file } => cmd_measure(&read_file(file)?, &caps),
        Command::Submodules { file } => cmd_submodules(&read_file(file)?, &caps),
        Command::Filtration { file, all } => cmd_filtration(&read_file(file)?, *all, &caps),
        Command::Piling { file, subrep } => {
            cmd_piling(&read_file(file)?, &read_file(subrep)?, &caps)
        }
        Command::Enumerate {
            quiver,
            p,
            max_length,
            mode,
        } => {
            let mode = match mode.as_str() {
                "exhaustive" => EnumerateMode::Exhaustive,
                "family" => EnumerateMode::Family,
                other => {
                    return Err(CliError::Parse(format!(
                        "mode must be exhaustive or family, got '{other}'"
                    )))
                }
            };
            cmd_enumerate(quiver, *p, *max_length, mode, &caps)
        }
        Command::Takeoff {
            quiver,
            p,
            count,
            bound,
        } => cmd_takeoff(quiver, *p, *count, *bound, &caps),
        Command::Tube { p, param, t } => cmd_tube(*p, param, *t, &caps),
        Command::Pruefer { p, param } => cmd_pruefer(*p, param, &caps),
        Command::Check { suite } => {
            let config = VerifyConfig {
                caps,
                seed: caps.iso_seed,
            };
            cmd_check(suite.as_deref(), &config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::from(exit_code::OK as u8)
        }
        Err(e) => {
            match &e {
                CliError::CheckFailed(report) => print!("{report}"),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
