//! Dimensional trap and light parameters, the derived plasma-like scales, and
//! the reduced (dimensionless) parameter set consumed by every other module.
//!
//! Reduced units: frequencies in units of the effective plasma frequency
//! `omega_p`, lengths in units of the Debye length `lambda_D = u_s / omega_p`,
//! speeds in units of the sound speed `u_s = sqrt(3) v_th`.

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};

/// Boltzmann constant [J/K].
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Reduced Planck constant [J s].
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum [m/s].
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Experimental inputs in SI units. The speed of light is a fixed constant
/// and is not part of the record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalParams {
    /// Scattering cross section [m^2].
    #[serde(rename = "sigma_R")]
    pub sigma_r: f64,
    /// Absorption cross section [m^2].
    #[serde(rename = "sigma_L")]
    pub sigma_l: f64,
    /// Equilibrium light intensity `I0` [W/m^2].
    pub intensity: f64,
    /// Atomic density `n0` [m^-3].
    pub density: f64,
    /// Photon diffusion time [s].
    pub tau: f64,
    /// Atomic mass [kg].
    pub mass: f64,
    /// Temperature [K].
    pub temperature: f64,
    /// Light wavelength [m].
    pub lambda_light: f64,
    /// Cloud size `a` [m].
    pub cloud_size: f64,
    /// Length `L` over which the light intensity varies [m].
    pub intensity_scale: f64,
}

impl PhysicalParams {
    /// Checks that every field is finite and strictly positive.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in self.fields() {
            require_positive(name, value)?;
        }
        Ok(())
    }

    fn fields(&self) -> [(&'static str, f64); 10] {
        [
            ("sigma_R", self.sigma_r),
            ("sigma_L", self.sigma_l),
            ("intensity", self.intensity),
            ("density", self.density),
            ("tau", self.tau),
            ("mass", self.mass),
            ("temperature", self.temperature),
            ("lambda_light", self.lambda_light),
            ("cloud_size", self.cloud_size),
            ("intensity_scale", self.intensity_scale),
        ]
    }

    /// Photon mean free path `1 / (n0 sigma_L)` [m].
    pub fn mean_free_path(&self) -> f64 {
        1.0 / (self.density * self.sigma_l)
    }
}

/// Scales derived from [`PhysicalParams`], all in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedScales {
    /// Effective charge `sigma_L (sigma_R - sigma_L) I0 / c`.
    pub q_eff: f64,
    /// Effective plasma frequency [rad/s].
    pub omega_p: f64,
    /// Thermal speed `sqrt(k_B T / m)` [m/s].
    pub v_th: f64,
    /// Sound speed `sqrt(3) v_th` [m/s].
    pub u_s: f64,
    /// Debye length `u_s / omega_p` [m].
    pub lambda_d: f64,
    /// Photon mean free path [m].
    pub mean_free_path: f64,
    /// Light diffusion coefficient `1 / (sigma_L^2 tau^2 n0^2)` [m^2/s].
    pub d0: f64,
    /// Diffusion length `sqrt(D0 / omega_p)` [m].
    pub ell_d: f64,
    /// Diffusion frequency `2 D0 / L^2` [rad/s].
    pub omega_d: f64,
}

/// The dimensionless parameter triple that fixes all the physics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedParams {
    /// Diffusion coefficient in units of `lambda_D^2 omega_p`.
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    /// Diffusion frequency in units of `omega_p`.
    pub omega_d_hat: f64,
    /// Quantumness `hbar omega_p / (k_B T)`; zero is the classical limit.
    #[serde(default)]
    pub theta: f64,
}

impl ReducedParams {
    /// Builds a validated parameter set.
    pub fn new(d_hat: f64, omega_d_hat: f64, theta: f64) -> Result<Self> {
        let rp = Self {
            d_hat,
            omega_d_hat,
            theta,
        };
        rp.validate()?;
        Ok(rp)
    }

    /// Classical (`theta = 0`) parameter set.
    pub fn classical(d_hat: f64, omega_d_hat: f64) -> Result<Self> {
        Self::new(d_hat, omega_d_hat, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("D_hat", self.d_hat)?;
        require_non_negative("omega_d_hat", self.omega_d_hat)?;
        require_non_negative("theta", self.theta)
    }

    /// Same parameters with a different diffusion frequency.
    pub fn with_omega_d(self, omega_d_hat: f64) -> Self {
        Self {
            omega_d_hat,
            ..self
        }
    }
}

/// Computes the derived scales.
///
/// Fails with [`Error::NonPositiveCharge`] when `sigma_R <= sigma_L`.
pub fn derive_scales(p: &PhysicalParams) -> Result<DerivedScales> {
    p.validate()?;
    if p.sigma_r <= p.sigma_l {
        return Err(Error::NonPositiveCharge {
            sigma_r: p.sigma_r,
            sigma_l: p.sigma_l,
        });
    }

    let q_eff = p.sigma_l * (p.sigma_r - p.sigma_l) * p.intensity / SPEED_OF_LIGHT;
    let omega_p = (q_eff * p.density / p.mass).sqrt();
    let v_th = (BOLTZMANN * p.temperature / p.mass).sqrt();
    let u_s = 3f64.sqrt() * v_th;
    let lambda_d = u_s / omega_p;
    let mean_free_path = p.mean_free_path();
    let col = p.sigma_l * p.tau * p.density;
    let d0 = 1.0 / (col * col);
    let ell_d = (d0 / omega_p).sqrt();
    let omega_d = 2.0 * d0 / (p.intensity_scale * p.intensity_scale);

    Ok(DerivedScales {
        q_eff,
        omega_p,
        v_th,
        u_s,
        lambda_d,
        mean_free_path,
        d0,
        ell_d,
        omega_d,
    })
}

/// Reduces the dimensional inputs to the dimensionless set.
pub fn reduce(p: &PhysicalParams) -> Result<ReducedParams> {
    let s = derive_scales(p)?;
    Ok(reduce_scales(&s, p.temperature))
}

/// Reduction from already-derived scales.
pub fn reduce_scales(s: &DerivedScales, temperature: f64) -> ReducedParams {
    ReducedParams {
        d_hat: s.d0 / (s.lambda_d * s.lambda_d * s.omega_p),
        omega_d_hat: s.omega_d / s.omega_p,
        theta: HBAR * s.omega_p / (BOLTZMANN * temperature),
    }
}

/// One entry of the length-scale hierarchy `lambda << ell << a << L`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyRatio {
    pub name: String,
    pub value: f64,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub separation: f64,
    pub ratios: Vec<HierarchyRatio>,
    pub overall: bool,
}

/// Default factor by which consecutive length scales must be separated.
pub const DEFAULT_SEPARATION: f64 = 10.0;

/// Checks the diffusive-regime hierarchy. Each ratio passes when it exceeds
/// `separation`; the report is produced even when every ratio fails.
pub fn check_hierarchy(p: &PhysicalParams, separation: f64) -> ValidityReport {
    let ell = p.mean_free_path();
    let ratios: Vec<HierarchyRatio> = [
        ("ell/lambda", ell / p.lambda_light),
        ("a/ell", p.cloud_size / ell),
        ("L/a", p.intensity_scale / p.cloud_size),
    ]
    .into_iter()
    .map(|(name, value)| HierarchyRatio {
        name: name.to_string(),
        value,
        passes: value > separation,
    })
    .collect();
    let overall = ratios.iter().all(|r| r.passes);
    ValidityReport {
        separation,
        ratios,
        overall,
    }
}
