use std::fmt;

/// Failure categories, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad config, bad flag or invalid parameter values. Exit code 1.
    Config(String),
    /// Non-convergence, quadrature failure, unstable regime. Exit code 2.
    Numerical(String),
    /// Reading or writing files. Exit code 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<roton_core::Error> for CliError {
    fn from(e: roton_core::Error) -> Self {
        use roton_core::Error::*;
        match e {
            NonPositiveCharge { .. } | InvalidParameter { .. } | SingularInput(_) => CliError::Config(e.to_string()),
            NoConvergence { .. }
            | OutsideRegime { .. }
            | UnstableMode { .. }
            | ZeroFrequency { .. }
            | QuadratureFailure { .. }
            | ScanFailure { .. } => CliError::Numerical(e.to_string()),
        }
    }
}
