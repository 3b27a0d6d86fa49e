//! `accrete` — command-line front end for the accretion drag model.
//!
//! Subcommands: `simulate` (emit a trajectory series as CSV or JSON),
//! `metrics` (scalar quantities of a scenario), `compare` (cross-check the
//! three solution routes, usable as a CI gate), and `fit` (recover power-law
//! drag parameters from a mass data file).
//!
//! Exit codes: 0 success, 1 comparison over threshold, 2 validation or input
//! error, 3 solver non-convergence.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "accrete",
    version,
    about = "Variable-mass drag model: simulate, inspect, cross-check, and calibrate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a scenario and emit the (t, x, m, v) series
    Simulate(SimulateArgs),
    /// Print doubling time, doubling distance, and maximum range as JSON
    Metrics(MetricsArgs),
    /// Evaluate all three solution routes on a shared grid and compare them
    Compare(CompareArgs),
    /// Fit power-law drag parameters to a CSV file of mass observations
    Fit(FitArgs),
}

/// Scenario selection shared by `simulate`, `metrics`, and `compare`:
/// either a preset or an inline (m0, lambda, alpha) triple, plus v0.
#[derive(Args, Debug, Clone, Default)]
pub struct ScenarioArgs {
    /// Built-in preset: table_tennis_water or table_tennis_air
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,
    /// Initial mass, kg (inline scenario)
    #[arg(long, value_name = "KG")]
    pub m0: Option<f64>,
    /// Drag coefficient lambda (inline scenario)
    #[arg(long, value_name = "COEFF")]
    pub lambda: Option<f64>,
    /// Drag exponent alpha (inline scenario)
    #[arg(long, value_name = "EXP")]
    pub alpha: Option<f64>,
    /// Initial velocity, m/s
    #[arg(long, value_name = "M_PER_S")]
    pub v0: Option<f64>,
    /// Label for inline scenarios
    #[arg(long, value_name = "TEXT")]
    pub label: Option<String>,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Final time, s (exclusive with --x-end)
    #[arg(long, value_name = "S")]
    pub t_end: Option<f64>,
    /// Final position, m (exclusive with --t-end)
    #[arg(long, value_name = "M")]
    pub x_end: Option<f64>,
    /// Number of equally spaced samples
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Solution route: closed, implicit, or ode
    #[arg(long, value_name = "METHOD")]
    pub method: Option<String>,
    /// Output format: csv or json
    #[arg(long, value_name = "FMT")]
    pub format: Option<String>,
    /// Output path (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    pub output: Option<String>,
    /// JSON config file with the same keys; explicit flags override it
    #[arg(long, value_name = "PATH")]
    pub config: Option<String>,
}

#[derive(Args, Debug)]
pub struct MetricsArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Final time of the comparison grid, s
    #[arg(long, value_name = "S", default_value_t = 5.0)]
    pub t_end: f64,
    /// Number of grid points
    #[arg(long, value_name = "N", default_value_t = 20)]
    pub samples: usize,
    /// Maximum allowed relative deviation between any two routes
    #[arg(long, value_name = "REL", default_value_t = 1e-6)]
    pub threshold: f64,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    /// CSV file with header `t,m` or `x,m`
    #[arg(long, value_name = "PATH")]
    pub file: String,
    /// Initial mass of the observed body, kg
    #[arg(long, value_name = "KG")]
    pub m0: f64,
    /// Initial velocity of the observed body, m/s
    #[arg(long, value_name = "M_PER_S")]
    pub v0: f64,
    /// Starting guess for lambda
    #[arg(long, value_name = "COEFF", default_value_t = 1e-4)]
    pub init_lambda: f64,
    /// Starting guess for alpha
    #[arg(long, value_name = "EXP", default_value_t = 0.5)]
    pub init_alpha: f64,
}

/// Failure modes with their process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, bad files, bad model inputs: exit 2.
    Usage(String),
    /// Deviation above threshold in `compare`: exit 1.
    CompareFailed,
    /// Solver gave up: exit 3.
    Solver(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::CompareFailed => 1,
            CliError::Usage(_) => 2,
            CliError::Solver(_) => 3,
        }
    }
}

impl From<accrete_core::Error> for CliError {
    fn from(e: accrete_core::Error) -> Self {
        use accrete_core::Error;
        match e {
            Error::NonConvergence { .. } | Error::Singularity { .. } => {
                CliError::Solver(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => commands::simulate(args),
        Command::Metrics(args) => commands::metrics(args),
        Command::Compare(args) => commands::compare(args),
        Command::Fit(args) => commands::fit(args),
    };
    if let Err(e) = result {
        match &e {
            CliError::Usage(msg) | CliError::Solver(msg) => eprintln!("error: {msg}"),
            CliError::CompareFailed => {}
        }
        std::process::exit(e.exit_code());
    }
}
