//! Analytic polariton dispersion, roton search, critical diffusion frequency
//! and stability phase scans.
//!
//! With `x = D k²` (reduced units) the real part of the spectrum is
//!
//! ```text
//! ω²(k) = (1 + k²) · (1 − ω_d x / (1 + x²))
//! ```
//!
//! and the growth rate is the diffusive gain minus the Landau term,
//!
//! ```text
//! γ(k) = (ω_d/2)(1 + k²)/(1 + D²k⁴) − (3/√(8π)) k⁻³ exp(−3/(2k²)).
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{bisect_threshold, golden_section_min};
use crate::params::ReducedParams;

/// `3/√(8π)`, the Landau damping prefactor.
const LANDAU_PREFACTOR: f64 = 0.598_413_420_602_149;

/// `ω²/ω_p²` of the polariton branch.
///
/// The diffusive factor is evaluated as
/// `((x − ω_d/2)² + (1 − ω_d/2)(1 + ω_d/2)) / (1 + x²)`, which keeps full
/// relative accuracy around the double zero at criticality.
pub fn omega_sq(k_hat: f64, rp: &ReducedParams) -> f64 {
    if k_hat == 0.0 {
        return 1.0;
    }
    let x = rp.d_hat * k_hat * k_hat;
    let half = 0.5 * rp.omega_d_hat;
    let shifted = x - half;
    let numer = shifted * shifted + (1.0 - half) * (1.0 + half);
    (1.0 + k_hat * k_hat) * numer / (1.0 + x * x)
}

/// Growth (positive) or damping (negative) rate `γ/ω_p`.
///
/// Singular at `k = 0` because of the Landau term; the limit of the full
/// expression there is [`growth_rate_long_wavelength_limit`].
pub fn growth_rate(k_hat: f64, rp: &ReducedParams) -> Result<f64> {
    if !(k_hat.is_finite() && k_hat > 0.0) {
        return Err(Error::SingularInput("growth rate requires k_hat > 0"));
    }
    let k2 = k_hat * k_hat;
    let x = rp.d_hat * k2;
    let diffusive = 0.5 * rp.omega_d_hat * (1.0 + k2) / (1.0 + x * x);
    let landau = LANDAU_PREFACTOR * (-1.5 / k2 - 3.0 * k_hat.ln()).exp();
    Ok(diffusive - landau)
}

/// `lim_{k→0} γ(k) = ω_d / 2`.
pub fn growth_rate_long_wavelength_limit(rp: &ReducedParams) -> f64 {
    0.5 * rp.omega_d_hat
}

/// Spectrum sample at a single wavenumber.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionPoint {
    pub k_hat: f64,
    pub omega_sq: f64,
    /// `√ω²` when `ω² ≥ 0`, else zero.
    pub omega: f64,
    pub growth: f64,
    /// `√(−ω²)` when `ω² < 0`, else zero.
    pub unstable_rate: f64,
}

impl DispersionPoint {
    pub fn at(k_hat: f64, rp: &ReducedParams) -> Self {
        let w2 = omega_sq(k_hat, rp);
        let growth = if k_hat == 0.0 {
            growth_rate_long_wavelength_limit(rp)
        } else {
            growth_rate(k_hat, rp).unwrap_or(f64::NAN)
        };
        let (omega, unstable_rate) = if w2 >= 0.0 {
            (w2.sqrt(), 0.0)
        } else {
            (0.0, (-w2).sqrt())
        };
        Self {
            k_hat,
            omega_sq: w2,
            omega,
            growth,
            unstable_rate,
        }
    }
}

/// Tabulates the spectrum on `k_grid`, one point per grid entry in order.
pub fn spectrum(rp: &ReducedParams, k_grid: &[f64]) -> Vec<DispersionPoint> {
    k_grid.iter().map(|&k| DispersionPoint::at(k, rp)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RotonKind {
    NoRoton,
    Roton,
    RotonZero,
    Unstable,
}

impl RotonKind {
    pub fn is_stable(self) -> bool {
        matches!(self, RotonKind::NoRoton | RotonKind::Roton)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RotonKind::NoRoton => "NoRoton",
            RotonKind::Roton => "Roton",
            RotonKind::RotonZero => "RotonZero",
            RotonKind::Unstable => "Unstable",
        }
    }
}

impl std::fmt::Display for RotonKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Search window and tolerances for [`find_roton`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotonSearch {
    pub k_min: f64,
    pub k_max: f64,
    pub grid_n: usize,
    /// Bracket width at which golden-section refinement stops.
    pub refine_tol: f64,
    /// `|ω²_min| ≤ zero_tol` classifies as a roton zero.
    pub zero_tol: f64,
}

impl Default for RotonSearch {
    fn default() -> Self {
        Self {
            k_min: 1e-3,
            k_max: 3.0,
            grid_n: 2000,
            refine_tol: 1e-10,
            zero_tol: 1e-6,
        }
    }
}

impl RotonSearch {
    /// Default window widened so that the critical wavenumber `1/√D` always
    /// lies well inside it.
    pub fn for_diffusion(d_hat: f64) -> Self {
        let k0 = 1.0 / d_hat.sqrt();
        Self {
            k_min: 1e-3 * k0.min(1.0),
            k_max: (3.0 * k0).max(3.0),
            ..Self::default()
        }
    }

    fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.grid_n.max(16);
        let h = (self.k_max - self.k_min) / (n - 1) as f64;
        (0..n).map(move |i| self.k_min + i as f64 * h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotonResult {
    pub kind: RotonKind,
    /// Location of the roton minimum (or of the most unstable mode).
    pub k_rot: Option<f64>,
    /// `√max(ω²_min, 0)` at `k_rot`.
    pub omega_rot: Option<f64>,
    /// Minimum of `ω²` over the search window.
    pub omega_sq_min: f64,
    /// `d²ω²/dk²` at `k_rot`.
    pub curvature: Option<f64>,
}

fn curvature_at(k: f64, rp: &ReducedParams) -> f64 {
    let h = 1e-4 * k.max(1e-2);
    (omega_sq(k + h, rp) - 2.0 * omega_sq(k, rp) + omega_sq(k - h, rp)) / (h * h)
}

struct Minimum {
    k: f64,
    value: f64,
    interior: bool,
}

fn refine(i: usize, ks: &[f64], rp: &ReducedParams, tol: f64) -> Minimum {
    let (k, value) = golden_section_min(|k| omega_sq(k, rp), ks[i - 1], ks[i + 1], tol);
    Minimum {
        k,
        value,
        interior: true,
    }
}

/// Lowest interior local minimum of `ω²` (refined), if any, and the global
/// minimum over the window (refined when interior).
fn scan_minima(rp: &ReducedParams, search: &RotonSearch) -> (Option<Minimum>, Minimum) {
    let ks: Vec<f64> = search.grid().collect();
    let vals: Vec<f64> = ks.iter().map(|&k| omega_sq(k, rp)).collect();
    let n = ks.len();

    let mut local: Option<Minimum> = None;
    for i in 1..n - 1 {
        if vals[i] < vals[i - 1] && vals[i] < vals[i + 1] {
            let m = refine(i, &ks, rp, search.refine_tol);
            if local.as_ref().map_or(true, |best| m.value < best.value) {
                local = Some(m);
            }
        }
    }

    let edge = if vals[0] <= vals[n - 1] {
        Minimum {
            k: ks[0],
            value: vals[0],
            interior: false,
        }
    } else {
        Minimum {
            k: ks[n - 1],
            value: vals[n - 1],
            interior: false,
        }
    };
    let global = match &local {
        Some(m) if m.value <= edge.value => Minimum {
            k: m.k,
            value: m.value,
            interior: true,
        },
        _ => edge,
    };
    (local, global)
}

/// Minimum of `ω²` over the search window, `(k, ω²_min)`.
pub fn min_omega_sq(rp: &ReducedParams, search: &RotonSearch) -> (f64, f64) {
    let (_, global) = scan_minima(rp, search);
    (global.k, global.value)
}

/// Locates and classifies the roton minimum by grid scan plus golden-section
/// refinement.
///
/// A roton is a strict interior local minimum of `ω²` lying below the gap
/// value `ω²(0) = 1`; monotone spectra and plateaus are `NoRoton`.
pub fn find_roton(rp: &ReducedParams, search: &RotonSearch) -> RotonResult {
    let (local, global) = scan_minima(rp, search);

    if global.value < -search.zero_tol {
        return RotonResult {
            kind: RotonKind::Unstable,
            k_rot: Some(global.k),
            omega_rot: Some(0.0),
            omega_sq_min: global.value,
            curvature: global.interior.then(|| curvature_at(global.k, rp)),
        };
    }

    match local {
        Some(m) if m.value < omega_sq(0.0, rp) => {
            let kind = if m.value.abs() <= search.zero_tol {
                RotonKind::RotonZero
            } else {
                RotonKind::Roton
            };
            RotonResult {
                kind,
                k_rot: Some(m.k),
                omega_rot: Some(m.value.max(0.0).sqrt()),
                omega_sq_min: m.value,
                curvature: Some(curvature_at(m.k, rp)),
            }
        }
        _ => RotonResult {
            kind: RotonKind::NoRoton,
            k_rot: None,
            omega_rot: None,
            omega_sq_min: global.value,
            curvature: None,
        },
    }
}

/// Smallest `ω_d` at which `min_k ω²` reaches zero, by bisection on the sign
/// of the refined scan minimum.
pub fn critical_omega_d(d_hat: f64, tol: f64) -> f64 {
    let search = RotonSearch::for_diffusion(d_hat);
    let unstable = |wd: f64| {
        let rp = ReducedParams {
            d_hat,
            omega_d_hat: wd,
            theta: 0.0,
        };
        min_omega_sq(&rp, &search).1 < 0.0
    };
    let mut hi = 1.0;
    while !unstable(hi) {
        hi *= 2.0;
        if hi > 1e6 {
            return f64::INFINITY;
        }
    }
    bisect_threshold(unstable, 0.0, hi, tol)
}

/// Analytic counterpart of [`critical_omega_d`]: `min_x (1 − ω_d x/(1+x²))`
/// is `1 − ω_d/2`, so the threshold is 2 for every `D`.
pub const CRITICAL_OMEGA_D: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseCell {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d_hat: f64,
    pub kind: RotonKind,
}

/// Stability classification over a `(D, ω_d)` grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseTable {
    pub d_values: Vec<f64>,
    pub omega_d_values: Vec<f64>,
    /// Row-major: `cells[i * d_values.len() + j]` is `(d_values[j], omega_d_values[i])`.
    pub cells: Vec<PhaseCell>,
}

impl PhaseTable {
    pub fn cell(&self, omega_d_index: usize, d_index: usize) -> &PhaseCell {
        &self.cells[omega_d_index * self.d_values.len() + d_index]
    }

    /// For each `D` column, the smallest `ω_d` classified `Unstable`.
    pub fn instability_onset(&self) -> Vec<Option<f64>> {
        (0..self.d_values.len())
            .map(|j| {
                (0..self.omega_d_values.len())
                    .map(|i| self.cell(i, j))
                    .find(|c| c.kind == RotonKind::Unstable)
                    .map(|c| c.omega_d_hat)
            })
            .collect()
    }
}

/// Evenly spaced values including both ends; a single point gives `lo`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let h = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { hi } else { lo + i as f64 * h }).collect()
        }
    }
}

/// Classifies every `(D, ω_d)` cell with [`find_roton`]. Each cell is
/// independent, so the scan runs in parallel; cell order is fixed.
pub fn phase_scan(
    d_range: (f64, f64),
    omega_d_range: (f64, f64),
    n_d: usize,
    n_omega_d: usize,
) -> Result<PhaseTable> {
    for (name, (lo, hi)) in [("D_hat", d_range), ("omega_d_hat", omega_d_range)] {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::InvalidParameter {
                name,
                value: lo,
                reason: "range must be finite with lo <= hi",
            });
        }
    }
    if d_range.0 <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "D_hat",
            value: d_range.0,
            reason: "must be strictly positive",
        });
    }
    if omega_d_range.0 < 0.0 {
        return Err(Error::InvalidParameter {
            name: "omega_d_hat",
            value: omega_d_range.0,
            reason: "must be non-negative",
        });
    }

    let d_values = linspace(d_range.0, d_range.1, n_d);
    let omega_d_values = linspace(omega_d_range.0, omega_d_range.1, n_omega_d);
    let pairs: Vec<(f64, f64)> = omega_d_values
        .iter()
        .flat_map(|&wd| d_values.iter().map(move |&d| (d, wd)))
        .collect();
    let cells = pairs
        .par_iter()
        .map(|&(d_hat, omega_d_hat)| {
            let rp = ReducedParams {
                d_hat,
                omega_d_hat,
                theta: 0.0,
            };
            PhaseCell {
                d_hat,
                omega_d_hat,
                kind: find_roton(&rp, &RotonSearch::for_diffusion(d_hat)).kind,
            }
        })
        .collect();
    Ok(PhaseTable {
        d_values,
        omega_d_values,
        cells,
    })
}
