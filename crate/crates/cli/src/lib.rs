//! Command-line front end for `roton-core`: config parsing, CSV/SVG output
//! and the exit-code contract (0 ok, 1 config, 2 numerical, 3 I/O).

pub mod commands;
pub mod config;
pub mod error;
pub mod svg;
pub mod table;

use std::path::PathBuf;

use clap::Parser;

pub use config::{CommandName, Overrides, RunConfig};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "roton", version, about = "Polariton spectrum, roton minima and correlations of a cold-atom cloud with diffusive light")]
pub struct Cli {
    /// Subcommand; may be omitted when the config has a `command` field.
    #[arg(value_enum)]
    pub command: Option<CommandName>,

    /// JSON run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Output file (CSV or JSON report). Defaults to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Optional SVG plot.
    #[arg(long)]
    pub svg: Option<PathBuf>,

    /// Comma-separated reduced diffusion frequencies, e.g. `0,1.9,1.99`.
    #[arg(long = "omega-d", value_delimiter = ',', allow_hyphen_values = true)]
    pub omega_d: Option<Vec<f64>>,

    /// Reduced diffusion coefficient D̂ = D0/(λ_D² ω_p).
    #[arg(long, allow_hyphen_values = true)]
    pub d0: Option<f64>,

    /// Upper wavenumber: grid end for dispersion/structure, search window
    /// for roton, quadrature cutoff for correlation.
    #[arg(long, allow_hyphen_values = true)]
    pub kmax: Option<f64>,

    /// Tolerance: critical-ω_d bisection (roton), quadrature (correlation),
    /// root residual (verify).
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,
}

/// Resolves the config and runs the selected command.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let cmd = match (cli.command, cfg.command) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Config(format!(
                "subcommand `{}` does not match config command `{}`",
                a.as_str(),
                b.as_str()
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(CliError::Config("no command given on the command line or in the config".into())),
    };
    cfg.apply(
        cmd,
        &Overrides {
            omega_d: cli.omega_d.clone(),
            d0: cli.d0,
            k_max: cli.kmax,
            tol: cli.tol,
        },
    )?;
    commands::run(
        cmd,
        &cfg,
        &commands::Sink {
            out: cli.out,
            svg: cli.svg,
        },
    )
}
