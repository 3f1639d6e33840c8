//! Full kinetic dispersion relation for the Maxwellian cloud coupled to
//! diffusing light, solved over complex frequency. This is the independent
//! oracle for the analytic branch in [`crate::dispersion`].
//!
//! In reduced units (`k` in `1/λ_D`, `Ω` in `ω_p`, velocities in `u_s`) the
//! one-dimensional Maxwellian has thermal speed `v̂ = 1/√3`. With `v = √2 v̂ t`
//! and `Ω/k = √2 v̂ ζ` the Landau velocity integral reduces to
//!
//! ```text
//! G(ζ) = ∫ F₀'(v) / (v − Ω/k) dv = −(1 + ζ Z(ζ)) / v̂² = Z'(ζ) / (2 v̂²)
//! ```
//!
//! and the dispersion relation reads
//!
//! ```text
//! R(k, Ω) = 1 − (1 + ω_d / (iΩ − D k²)) · χ(k, Ω) = 0,   χ = G / k².
//! ```
//!
//! For `|ζ| → ∞`, `χ → (1/Ω²)(1 + 3k²v̂²/Ω² + …) = (1/Ω²)(1 + k²/Ω² + …)`,
//! the cold-plasma expansion that yields the analytic dispersion.

pub mod zfunc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dispersion;
use crate::error::{Error, Result};
use crate::numeric::{muller, MullerOptions};
use crate::params::ReducedParams;

pub use zfunc::{faddeeva, plasma_z, plasma_z_prime};

/// Reduced thermal speed `v_th / u_s`.
pub const THERMAL_SPEED: f64 = 0.577_350_269_189_625_8;

/// Minimum `|Ω| / (k v̂)` for the two-term expansion to be used.
pub const EXPANSION_RATIO: f64 = 3.0;

/// Complex mode frequency `Ω = ω + iγ` in units of `ω_p`; `γ > 0` grows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexFrequency {
    pub re: f64,
    pub im: f64,
}

impl ComplexFrequency {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }
}

impl From<Complex64> for ComplexFrequency {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexFrequency> for Complex64 {
    fn from(f: ComplexFrequency) -> Self {
        Complex64::new(f.re, f.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticResidual {
    pub value: Complex64,
    /// Argument of `Z` used for this evaluation.
    pub zeta: Complex64,
}

/// Kinetic root together with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KineticRoot {
    pub omega: ComplexFrequency,
    pub residual: f64,
    pub iterations: usize,
}

fn check_k(k_hat: f64) -> Result<()> {
    if !(k_hat.is_finite() && k_hat > 0.0) {
        return Err(Error::SingularInput("k_hat must be finite and positive"));
    }
    Ok(())
}

/// Argument `ζ = Ω / (√2 k v̂)` of the plasma dispersion function.
pub fn zeta(k_hat: f64, omega: Complex64) -> Complex64 {
    omega / (std::f64::consts::SQRT_2 * THERMAL_SPEED * k_hat)
}

/// Normalized kinetic response `χ(k, Ω) = G(ζ) / k²`.
pub fn kinetic_response(k_hat: f64, omega: Complex64) -> Result<Complex64> {
    check_k(k_hat)?;
    let z = zeta(k_hat, omega);
    let vt2 = THERMAL_SPEED * THERMAL_SPEED;
    Ok(-zfunc::one_plus_zeta_z(z) / (vt2 * k_hat * k_hat))
}

/// Residual `R(k, Ω)` of the kinetic dispersion relation.
pub fn kinetic_residual(k_hat: f64, omega: Complex64, rp: &ReducedParams) -> Result<KineticResidual> {
    check_k(k_hat)?;
    if !omega.is_finite() {
        return Err(Error::SingularInput("frequency must be finite"));
    }
    let diffusion_pole = Complex64::i() * omega - rp.d_hat * k_hat * k_hat;
    if diffusion_pole.norm() == 0.0 {
        return Err(Error::SingularInput("i*Omega coincides with D*k^2"));
    }
    let coupling = 1.0 + rp.omega_d_hat / diffusion_pole;
    let value = 1.0 - coupling * kinetic_response(k_hat, omega)?;
    Ok(KineticResidual {
        value,
        zeta: zeta(k_hat, omega),
    })
}

/// Two-term principal-value expansion of [`kinetic_response`],
/// `(1/Ω²)(1 + 3k²v̂²/Ω²)`.
///
/// Only defined for `|Ω|/(k v̂) > 3`; its relative error against the exact
/// response scales as `(k v̂ / |Ω|)⁴`.
pub fn landau_integral_expansion(k_hat: f64, omega: Complex64) -> Result<Complex64> {
    if !(k_hat.is_finite() && k_hat >= 0.0) {
        return Err(Error::SingularInput("k_hat must be finite and non-negative"));
    }
    let ratio = omega.norm() / (k_hat * THERMAL_SPEED);
    if ratio.is_nan() || ratio <= EXPANSION_RATIO {
        return Err(Error::OutsideRegime {
            ratio,
            required: EXPANSION_RATIO,
        });
    }
    let w2 = omega * omega;
    let second_moment = 3.0 * THERMAL_SPEED * THERMAL_SPEED * k_hat * k_hat;
    Ok((1.0 + second_moment / w2) / w2)
}

/// Whether `(k, Ω)` lies in the fast-phase-speed regime of the expansion.
pub fn in_expansion_regime(k_hat: f64, omega: f64) -> bool {
    omega.abs() / (k_hat * THERMAL_SPEED) > EXPANSION_RATIO
}

/// Warm start on the physical branch: `ω` from the analytic dispersion with
/// the Landau damping rate as imaginary part. The diffusive gain in the
/// analytic growth rate is left out on purpose: starting at `+γ` sends the
/// iteration away from every kinetic root once `ω_d` is of order one.
/// Unstable points (`ω² < 0`) start on the imaginary axis at the purely
/// growing rate.
pub fn analytic_guess(k_hat: f64, rp: &ReducedParams) -> ComplexFrequency {
    let w2 = dispersion::omega_sq(k_hat, rp);
    let landau = dispersion::growth_rate(k_hat, &rp.with_omega_d(0.0)).unwrap_or(0.0);
    if w2 >= 0.0 {
        ComplexFrequency::new(w2.sqrt(), landau)
    } else {
        ComplexFrequency::new(0.0, (-w2).sqrt())
    }
}

/// Solves `R(k, Ω) = 0` with Muller's method from `guess`.
///
/// The two extra start points are `guess ± δ` with `δ = 10⁻³·max(|guess|, 0.1)`.
pub fn solve_kinetic_root(
    k_hat: f64,
    guess: ComplexFrequency,
    rp: &ReducedParams,
    tol: f64,
    max_iter: usize,
) -> Result<KineticRoot> {
    check_k(k_hat)?;
    let g: Complex64 = guess.into();
    if !g.is_finite() {
        return Err(Error::SingularInput("initial guess must be finite"));
    }
    let delta = 1e-3 * g.norm().max(0.1);
    let start = [g - delta, g + delta, g];
    let found = muller(
        |w| kinetic_residual(k_hat, w, rp).map(|r| r.value),
        start,
        MullerOptions { tol, max_iter },
    )?;
    Ok(KineticRoot {
        omega: found.root.into(),
        residual: found.residual,
        iterations: found.iterations,
    })
}

/// [`solve_kinetic_root`] warm-started from [`analytic_guess`] with the
/// default tolerance `1e-10` and 100 iterations.
pub fn kinetic_root(k_hat: f64, rp: &ReducedParams) -> Result<KineticRoot> {
    solve_kinetic_root(k_hat, analytic_guess(k_hat, rp), rp, 1e-10, 100)
}
