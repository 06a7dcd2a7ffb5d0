//! `lgf`: walk counts, Chebyshev moments and lattice Green functions.

mod commands;
mod config;
mod grid;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_DEGENERATE_FIT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "lgf", version, about = "Lattice Green functions from exact walk counts")]
#[command(args_override_self = true)]
pub struct Cli {
    /// key=value file mirroring the subcommand's flags; flags win
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Target {
    /// chain, square, bcc, cubic, hypercubic4, honeycomb, diamond, triangular, fcc
    #[arg(long)]
    pub lattice: String,
    /// Comma-separated integer coordinates; the origin when omitted
    #[arg(long, allow_hyphen_values = true)]
    pub displacement: Option<String>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Output {
    /// Output file; stdout when omitted
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact walk counts W_0..W_N
    Walks {
        #[command(flatten)]
        target: Target,
        /// Largest walk length
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        /// Compare with the stored fixtures (n <= 10) and the adjacency oracle (n <= 12)
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Exact scaled Chebyshev moments z^n g_n and g_n
    Moments {
        #[command(flatten)]
        target: Target,
        /// Largest moment order
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Compare with the stored local-moment fixtures (n <= 10)
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate G(omega) and g(omega) on a grid
    Eval(EvalArgs),
    /// Fit the subdominant log coefficient and report tail exponents
    Fit {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1000)]
        terms: usize,
        /// Even-n fit window lo,hi
        #[arg(long)]
        fit_range: Option<String>,
        /// Window for the tail exponents lo,hi
        #[arg(long)]
        tail_range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Brute-force checks: adjacency walk counts, or the broadened zone sum with --omega
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<f64>,
        #[arg(long, default_value_t = 0.02)]
        eta: f64,
        #[arg(long, default_value_t = 400)]
        grid: usize,
    },
    /// Check every stored fixture and the walk oracle
    Verify {
        /// Largest walk length for the oracle comparison
        #[arg(long, default_value_t = 8)]
        oracle_n: usize,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct EvalArgs {
    #[command(flatten)]
    pub target: Target,
    /// Series length N
    #[arg(long, default_value_t = 1000)]
    pub terms: usize,
    /// start:stop:step, a value, or a comma list
    #[arg(long, allow_hyphen_values = true, default_value = "-1.5:1.5:0.01")]
    pub omega: String,
    /// Kaiser window beta; rectangular when omitted
    #[arg(long)]
    pub window: Option<f64>,
    /// Subtract the built-in van Hove model
    #[arg(long)]
    pub subtract: bool,
    /// Even-n window lo,hi for a fitted model coefficient
    #[arg(long)]
    pub fit_range: Option<String>,
    /// Refuse on-cut evaluation when |omega| > 1 - eps
    #[arg(long, default_value_t = lgf_core::greens::DEFAULT_EDGE_EPS)]
    pub edge_eps: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: GridFormat,
    /// Significant digits in CSV output
    #[arg(long, default_value_t = lgf_core::greens::CSV_DIGITS)]
    pub precision: usize,
    #[command(flatten)]
    pub out: Output,
}

fn config_path(argv: &[String]) -> Option<PathBuf> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Long names of the subcommand's value flags and boolean switches.
fn flag_names(sub: &str) -> (Vec<String>, Vec<String>) {
    let cmd = Cli::command();
    let Some(sc) = cmd.find_subcommand(sub) else {
        return (Vec::new(), Vec::new());
    };
    let mut flags = Vec::new();
    let mut switches = Vec::new();
    for arg in sc.get_arguments() {
        let Some(long) = arg.get_long() else { continue };
        if long == "config" {
            continue;
        }
        match arg.get_action() {
            clap::ArgAction::SetTrue => switches.push(long.to_string()),
            _ => flags.push(long.to_string()),
        }
    }
    (flags, switches)
}

/// Position of the subcommand name, skipping a leading `--config PATH`.
fn subcommand_index(argv: &[String]) -> Option<usize> {
    let mut i = 1;
    while i < argv.len() {
        let a = &argv[i];
        if a == "--config" {
            i += 2;
        } else if a.starts_with('-') {
            i += 1;
        } else {
            return Some(i);
        }
    }
    None
}

fn with_config(argv: Vec<String>) -> Result<Vec<String>, String> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let Some(sub_at) = subcommand_index(&argv) else {
        return Ok(argv);
    };
    let entries = config::load(&path)?;
    let (flags, switches) = flag_names(&argv[sub_at]);
    config::splice(argv, sub_at, &entries, &flags, &switches)
}

fn main() -> ExitCode {
    let argv = std::env::args().collect();
    let argv = match with_config(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
