use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The effective light-induced charge is not positive (`sigma_R <= sigma_L`).
    #[error(
        "effective charge is not positive: sigma_R ({sigma_r:e}) must exceed sigma_L ({sigma_l:e}) \
         for stable oscillations to exist"
    )]
    NonPositiveCharge { sigma_r: f64, sigma_l: f64 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("singular input: {0}")]
    SingularInput(&'static str),

    #[error(
        "root finder did not converge after {iterations} iterations \
         (last iterate {last_re} + {last_im}i, |residual| = {residual:e})"
    )]
    NoConvergence {
        last_re: f64,
        last_im: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("outside the expansion regime: |Omega|/(k v) = {ratio:.3} must exceed {required}")]
    OutsideRegime { ratio: f64, required: f64 },

    #[error("mode at k = {k_hat} is unstable (omega^2 = {omega_sq:e}); structure factor undefined")]
    UnstableMode { k_hat: f64, omega_sq: f64 },

    #[error("mode frequency vanishes at k = {k_hat} (omega^2 = {omega_sq:e}); structure factor diverges")]
    ZeroFrequency { k_hat: f64, omega_sq: f64 },

    #[error("quadrature error estimate {estimate:e} at r = {r} exceeds tolerance {tol:e}")]
    QuadratureFailure { r: f64, estimate: f64, tol: f64 },

    /// Per-point failures of a vectorised evaluation, keyed by grid index.
    #[error("{} scan point(s) failed; first at index {}", .failures.len(), first_index(.failures))]
    ScanFailure { failures: Vec<(usize, Error)> },
}

fn first_index(failures: &[(usize, Error)]) -> String {
    match failures.first() {
        Some((i, e)) => format!("{i}: {e}"),
        None => "-".to_owned(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}

pub(crate) fn require_non_negative(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        })
    }
}
