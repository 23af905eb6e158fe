//! `nanotube`: band structure, gaps and symmetry data of single-wall carbon
//! nanotubes from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 numerical or I/O failure.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, RunConfig};
use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "nanotube", version, about = "Zone-folded tight-binding bands of carbon nanotubes")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Hopping energy gamma (energy unit of all outputs)
    #[arg(long, global = true)]
    gamma: Option<f64>,
    /// On-site energy epsilon
    #[arg(long, global = true, allow_hyphen_values = true)]
    epsilon: Option<f64>,
    /// C-C bond length in angstrom
    #[arg(long, global = true)]
    bond_length: Option<f64>,
    /// kappa samples per k-line
    #[arg(long, global = true)]
    resolution: Option<usize>,
    /// Absolute tolerance, in units of gamma
    #[arg(long = "tol", global = true)]
    tolerance: Option<f64>,
    /// Axial magnetic flux strength beta (inverse length)
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Output file; standard output when absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Table format for tabular commands
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// JSON file with default values for the flags above
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Symmetry data, diameter and metallicity of a tube
    Classify {
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: String,
    },
    /// Sampled m-bands as a table (m, kappa, E_minus, E_plus)
    Bands {
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: String,
    },
    /// Band gap, minimized over all allowed k-lines
    Gap {
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: String,
    },
    /// Band gap as a function of axial magnetic flux
    Magsweep {
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: String,
        /// Number of flux periods covered
        #[arg(long, default_value_t = 1)]
        periods: u32,
        /// Samples per flux period
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// Graphene bands along straight segments between G, K and M
    GraphenePath {
        /// Comma-separated labels from {G, K, M}
        #[arg(long, default_value = "G,K,M,G")]
        path: String,
        #[arg(long, default_value_t = 300)]
        samples: usize,
    },
    /// Compare the analytic spectrum with diagonalization of a finite tube
    Verify {
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: String,
        /// Number of translational cells in the periodic segment
        #[arg(long, default_value_t = 4)]
        periods: i64,
    },
    /// Nearest and next-to-nearest neighbors of a site
    Neighbors {
        #[arg(long = "v", allow_hyphen_values = true)]
        site: String,
        #[arg(long = "c", allow_hyphen_values = true)]
        chirality: Option<String>,
    },
}

fn resolve_config(g: &GlobalArgs) -> Result<RunConfig, CliError> {
    let mut cfg = match &g.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(v) = g.gamma {
        cfg.gamma = v;
    }
    if let Some(v) = g.epsilon {
        cfg.epsilon = v;
    }
    if let Some(v) = g.bond_length {
        cfg.bond_length = v;
    }
    if let Some(v) = g.resolution {
        cfg.resolution = v;
    }
    if let Some(v) = g.tolerance {
        cfg.tolerance = v;
    }
    if g.beta.is_some() {
        cfg.beta = g.beta;
    }
    if g.format.is_some() {
        cfg.format = g.format;
    }
    if g.out.is_some() {
        cfg.out = g.out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = resolve_config(&cli.global)?;
    match cli.command {
        Command::Classify { chirality } => commands::classify(&chirality, &cfg),
        Command::Bands { chirality } => commands::bands(&chirality, &cfg),
        Command::Gap { chirality } => commands::gap(&chirality, &cfg),
        Command::Magsweep { chirality, periods, samples } => {
            commands::magsweep(&chirality, &cfg, periods, samples)
        }
        Command::GraphenePath { path, samples } => commands::graphene_path(&path, &cfg, samples),
        Command::Verify { chirality, periods } => commands::verify(&chirality, &cfg, periods),
        Command::Neighbors { site, chirality } => {
            commands::neighbors(&site, chirality.as_deref(), &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nanotube: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
