//! Static structure factor from the Feynman relation and the pair
//! correlation function as a Fourier-sine transform.
//!
//! In reduced units the classical structure factor is `S = k²/ω²` and
//!
//! ```text
//! g(r) = 1 + (P/r) ∫₀^∞ k sin(kr) [S(k) − 1] dk,        P = 1/π² by default.
//! ```
//!
//! The integrand decays only like `sin(kr)/k`, so [`pair_correlation`] peels
//! off two pieces with closed-form transforms before integrating:
//!
//! * the plasma baseline `S₀ = k²/(1+k²)`, for which
//!   `∫ k sin(kr)(S₀ − 1) dk = −(π/2) e^{−r}`;
//! * the diffusive tail `(ω_d/D)/(1+k²)`, which matches `S − S₀` at large `k`
//!   and transforms to `+(ω_d/D)(π/2) e^{−r}`.
//!
//! What is left decays like `k⁻³` and goes to a Filon rule on `[0, k_max]`,
//! with the remainder past `k_max` from two terms of integration by parts.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispersion::{find_roton, omega_sq, RotonKind, RotonSearch};
use crate::error::{require_positive, Error, Result};
use crate::numeric::FilonSine;
use crate::params::ReducedParams;

/// `ω` below this is treated as a zero of the spectrum.
pub const ZERO_FREQUENCY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureForm {
    /// `S = k²/ω²`, the high-temperature limit used for the figures.
    #[default]
    Classical,
    /// `S = (θk²/(6ω)) coth(θω/2)`.
    ///
    /// Its `θ → 0` limit is `k²/(3ω²)`, a factor 3 below the classical form.
    /// The two are kept as stated rather than silently renormalised.
    Coth,
}

/// Static structure factor at one wavenumber.
///
/// Fails with [`Error::UnstableMode`] when `ω² < 0` and with
/// [`Error::ZeroFrequency`] at a zero of the spectrum, where `S` diverges.
pub fn structure_factor(k_hat: f64, rp: &ReducedParams, form: StructureForm) -> Result<f64> {
    if !(k_hat.is_finite() && k_hat >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "k_hat",
            value: k_hat,
            reason: "must be finite and non-negative",
        });
    }
    let w2 = omega_sq(k_hat, rp);
    if w2 < 0.0 {
        return Err(Error::UnstableMode {
            k_hat,
            omega_sq: w2,
        });
    }
    let omega = w2.sqrt();
    if omega < ZERO_FREQUENCY_TOL {
        return Err(Error::ZeroFrequency {
            k_hat,
            omega_sq: w2,
        });
    }
    let k2 = k_hat * k_hat;
    match form {
        StructureForm::Classical => Ok(k2 / w2),
        StructureForm::Coth => {
            require_positive("theta", rp.theta)?;
            let half = 0.5 * rp.theta * omega;
            Ok(rp.theta * k2 / (6.0 * omega) / half.tanh())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureTable {
    pub k_hat: Vec<f64>,
    /// `+∞` at the indices listed in `divergent`.
    #[serde(rename = "S")]
    pub s: Vec<f64>,
    pub form: StructureForm,
    /// Quantumness used; zero for the classical form.
    pub theta: f64,
    /// Grid indices where the spectrum has a zero and `S` diverges.
    pub divergent: Vec<usize>,
}

impl StructureTable {
    /// Tabulates `S` on `k_grid`. Zeros of the spectrum are flagged and
    /// stored as `+∞`; an unstable mode anywhere on the grid is an error.
    pub fn tabulate(rp: &ReducedParams, k_grid: &[f64], form: StructureForm) -> Result<Self> {
        let mut s = Vec::with_capacity(k_grid.len());
        let mut divergent = Vec::new();
        for (i, &k) in k_grid.iter().enumerate() {
            match structure_factor(k, rp, form) {
                Ok(v) => s.push(v),
                Err(Error::ZeroFrequency { .. }) => {
                    divergent.push(i);
                    s.push(f64::INFINITY);
                }
                Err(e) => return Err(e),
            }
        }
        Ok(Self {
            k_hat: k_grid.to_vec(),
            s,
            form,
            theta: match form {
                StructureForm::Classical => 0.0,
                StructureForm::Coth => rp.theta,
            },
            divergent,
        })
    }

    /// Grid point with the largest `S`, `(k, S)`.
    pub fn peak(&self) -> Option<(f64, f64)> {
        self.k_hat
            .iter()
            .zip(&self.s)
            .fold(None, |best: Option<(f64, f64)>, (&k, &s)| match best {
                Some((_, b)) if b >= s => best,
                _ => Some((k, s)),
            })
    }
}

/// Controls for the sine transform in [`pair_correlation`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureConfig {
    /// Upper limit of the numerical part, in `1/λ_D`.
    pub k_max: f64,
    /// Sample spacing in `k`.
    pub step: f64,
    /// Largest acceptable error estimate per point.
    pub tol: f64,
    /// Prefactor in front of the transform.
    pub prefactor: f64,
}

/// The `1/π²` normalisation used by default.
pub const DEFAULT_PREFACTOR: f64 = 1.0 / (PI * PI);

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            k_max: 50.0,
            step: 0.0025,
            tol: 1e-5,
            prefactor: DEFAULT_PREFACTOR,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("k_max", self.k_max)?;
        require_positive("step", self.step)?;
        require_positive("tol", self.tol)?;
        if !self.prefactor.is_finite() {
            return Err(Error::InvalidParameter {
                name: "prefactor",
                value: self.prefactor,
                reason: "must be finite",
            });
        }
        if self.step >= self.k_max {
            return Err(Error::InvalidParameter {
                name: "step",
                value: self.step,
                reason: "must be smaller than k_max",
            });
        }
        Ok(())
    }
}

/// `∫₀^∞ f(k) sin(kr) dk` for `f` sampled once on `[0, k_max]`.
struct SineTransform {
    filon: FilonSine,
    k_end: f64,
    f_end: f64,
    df_end: f64,
}

impl SineTransform {
    fn new<F: Fn(f64) -> f64>(f: F, quad: &QuadratureConfig) -> Self {
        let pairs = (quad.k_max / (2.0 * quad.step)).ceil() as usize;
        let filon = FilonSine::sample(&f, 0.0, quad.k_max, pairs);
        let k_end = filon.upper();
        let h = filon.step();
        let f_end = f(k_end);
        let df_end = (3.0 * f_end - 4.0 * f(k_end - h) + f(k_end - 2.0 * h)) / (2.0 * h);
        Self {
            filon,
            k_end,
            f_end,
            df_end,
        }
    }

    /// `(value, error)`; the error adds the Filon fine/coarse gap and the
    /// amplitude `|f'(k_max)|/r²` of the last tail term kept.
    fn eval(&self, r: f64) -> (f64, f64) {
        let est = self.filon.integrate_with_estimate(r);
        let (s, c) = (self.k_end * r).sin_cos();
        let tail_lead = self.f_end * c / r;
        let tail_bound = self.df_end.abs() / (r * r);
        (
            est.value + tail_lead - self.df_end * s / (r * r),
            est.error + tail_bound,
        )
    }
}

/// Rounding floor on the reported error: a few ulps of a number of order one.
const ROUNDING_FLOOR: f64 = 4.0 * f64::EPSILON;

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "must be finite and strictly positive",
        })
    }
}

fn check_tolerance(r: f64, g: f64, err: f64, tol: f64) -> Result<(f64, f64)> {
    if err.is_finite() && err <= tol && g.is_finite() {
        Ok((g, err))
    } else {
        Err(Error::QuadratureFailure {
            r,
            estimate: err,
            tol,
        })
    }
}

/// Refuses spectra on which the classical `S` is not integrable.
fn require_stable(rp: &ReducedParams) -> Result<()> {
    rp.validate()?;
    let roton = find_roton(rp, &RotonSearch::for_diffusion(rp.d_hat));
    let k_hat = roton.k_rot.unwrap_or(0.0);
    match roton.kind {
        RotonKind::Unstable => Err(Error::UnstableMode {
            k_hat,
            omega_sq: roton.omega_sq_min,
        }),
        RotonKind::RotonZero => Err(Error::ZeroFrequency {
            k_hat,
            omega_sq: roton.omega_sq_min,
        }),
        RotonKind::Roton | RotonKind::NoRoton => Ok(()),
    }
}

/// Prepared pair-correlation evaluator for one parameter set.
struct Correlation {
    transform: SineTransform,
    /// Coefficient of `(π/2)e^{−r}` from the closed-form pieces, `ω_d/D − 1`.
    closed_form: f64,
    quad: QuadratureConfig,
}

impl Correlation {
    fn new(rp: &ReducedParams, quad: &QuadratureConfig) -> Result<Self> {
        quad.validate()?;
        require_stable(rp)?;
        let tail = rp.omega_d_hat / rp.d_hat;
        let rp = *rp;
        let remainder = move |k: f64| {
            let k2 = k * k;
            let s = k2 / omega_sq(k, &rp);
            k * (s - (k2 + tail) / (1.0 + k2))
        };
        Ok(Self {
            transform: SineTransform::new(remainder, quad),
            closed_form: tail - 1.0,
            quad: *quad,
        })
    }

    fn at(&self, r: f64) -> Result<(f64, f64)> {
        check_radius(r)?;
        let (integral, err) = self.transform.eval(r);
        let scale = self.quad.prefactor / r;
        let g = 1.0 + scale * (integral + self.closed_form * FRAC_PI_2 * (-r).exp());
        let err = scale.abs() * err + ROUNDING_FLOOR * g.abs().max(1.0);
        check_tolerance(r, g, err, self.quad.tol)
    }
}

/// `g(r)` and its error estimate for the classical structure factor.
///
/// Fails with [`Error::UnstableMode`] or [`Error::ZeroFrequency`] when the
/// spectrum is unstable or touches zero anywhere, and with
/// [`Error::QuadratureFailure`] when the error estimate exceeds `quad.tol`.
pub fn pair_correlation(r: f64, rp: &ReducedParams, quad: &QuadratureConfig) -> Result<(f64, f64)> {
    check_radius(r)?;
    Correlation::new(rp, quad)?.at(r)
}

/// `g(r)` for an arbitrary structure factor, transformed directly without
/// the analytic split. `S ≡ 1` gives exactly 1.
///
/// `S − 1` must decay at least like `1/k` for the tail correction to hold.
pub fn pair_correlation_from_structure<S>(
    structure: S,
    r: f64,
    quad: &QuadratureConfig,
) -> Result<(f64, f64)>
where
    S: Fn(f64) -> f64,
{
    check_radius(r)?;
    quad.validate()?;
    let transform = SineTransform::new(|k| k * (structure(k) - 1.0), quad);
    let (integral, err) = transform.eval(r);
    let scale = quad.prefactor / r;
    let g = 1.0 + scale * integral;
    let err = scale.abs() * err + if integral == 0.0 { 0.0 } else { ROUNDING_FLOOR * g.abs().max(1.0) };
    check_tolerance(r, g, err, quad.tol)
}

/// Closed-form `g(r)` of the pure plasma branch (`ω_d = 0`):
/// `1 − P (π/2) e^{−r}/r`, which is `1 − e^{−r}/(2πr)` for `P = 1/π²`.
pub fn debye_pair_correlation(r: f64, prefactor: f64) -> f64 {
    1.0 - prefactor * FRAC_PI_2 * (-r).exp() / r
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationTable {
    pub r: Vec<f64>,
    pub g: Vec<f64>,
    /// Per-point error estimate.
    pub err: Vec<f64>,
    pub k_max: f64,
    /// Prefactor applied to the transform.
    pub normalization: f64,
}

impl CorrelationTable {
    /// Interior local maxima of `g − 1`, in increasing `r`.
    pub fn local_maxima(&self) -> Vec<f64> {
        self.g
            .windows(3)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0] && w[1] >= w[2])
            .map(|(i, _)| self.r[i + 1])
            .collect()
    }
}

/// [`pair_correlation`] over a grid. The transform samples are shared and the
/// points are evaluated in parallel; output order follows `r_grid`. Failing
/// points are collected into [`Error::ScanFailure`].
pub fn correlation_scan(
    rp: &ReducedParams,
    r_grid: &[f64],
    quad: &QuadratureConfig,
) -> Result<CorrelationTable> {
    let empty = CorrelationTable {
        r: Vec::new(),
        g: Vec::new(),
        err: Vec::new(),
        k_max: quad.k_max,
        normalization: quad.prefactor,
    };
    if r_grid.is_empty() {
        return Ok(empty);
    }
    let corr = Correlation::new(rp, quad)?;
    let results: Vec<Result<(f64, f64)>> = r_grid.par_iter().map(|&r| corr.at(r)).collect();

    let mut failures = Vec::new();
    let mut table = CorrelationTable {
        k_max: corr.transform.k_end,
        ..empty
    };
    for (i, (&r, res)) in r_grid.iter().zip(results).enumerate() {
        match res {
            Ok((g, e)) => {
                table.r.push(r);
                table.g.push(g);
                table.err.push(e);
            }
            Err(e) => failures.push((i, e)),
        }
    }
    if failures.is_empty() {
        Ok(table)
    } else {
        Err(Error::ScanFailure { failures })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::linspace;

    fn rp(d: f64, wd: f64) -> ReducedParams {
        ReducedParams::classical(d, wd).unwrap()
    }

    #[test]
    fn structure_factor_baseline() {
        let p = rp(2.0, 0.0);
        assert_eq!(structure_factor(0.0, &p, StructureForm::Classical).unwrap(), 0.0);
        assert_eq!(structure_factor(1.0, &p, StructureForm::Classical).unwrap(), 0.5);
        let big = structure_factor(1e4, &p, StructureForm::Classical).unwrap();
        assert!((big - 1.0).abs() < 1e-7);
    }

    #[test]
    fn structure_factor_errors() {
        let unstable = rp(2.0, 2.2);
        assert!(matches!(
            structure_factor(std::f64::consts::FRAC_1_SQRT_2, &unstable, StructureForm::Classical),
            Err(Error::UnstableMode { .. })
        ));
        let critical = rp(2.0, 2.0);
        assert!(matches!(
            structure_factor(std::f64::consts::FRAC_1_SQRT_2, &critical, StructureForm::Classical),
            Err(Error::ZeroFrequency { .. })
        ));
        assert!(structure_factor(-1.0, &critical, StructureForm::Classical).is_err());
        // Coth needs a finite temperature scale.
        assert!(structure_factor(1.0, &rp(2.0, 1.0), StructureForm::Coth).is_err());
    }

    #[test]
    fn coth_classical_limit_is_a_third() {
        let p = ReducedParams::new(2.0, 1.5, 1e-6).unwrap();
        for k in [0.3, 0.7, 2.0] {
            let c = structure_factor(k, &p, StructureForm::Coth).unwrap();
            let s = structure_factor(k, &p, StructureForm::Classical).unwrap();
            assert!((c / s - 1.0 / 3.0).abs() < 1e-9);
        }
    }

    #[test]
    fn coth_exceeds_its_classical_limit_at_finite_theta() {
        // x coth x > 1 for x > 0.
        let p = ReducedParams::new(2.0, 1.5, 2.0).unwrap();
        let c = structure_factor(1.0, &p, StructureForm::Coth).unwrap();
        let s = structure_factor(1.0, &p, StructureForm::Classical).unwrap();
        assert!(c > s / 3.0);
    }

    #[test]
    fn table_flags_divergence() {
        let ks = [0.5, std::f64::consts::FRAC_1_SQRT_2, 1.0];
        let t = StructureTable::tabulate(&rp(2.0, 2.0), &ks, StructureForm::Classical).unwrap();
        assert_eq!(t.divergent, vec![1]);
        assert!(t.s[1].is_infinite());
        assert!(StructureTable::tabulate(&rp(2.0, 2.2), &ks, StructureForm::Classical).is_err());
    }

    #[test]
    fn peak_rises_toward_criticality() {
        let ks = linspace(0.0, 3.0, 3001);
        let peak = |wd| {
            StructureTable::tabulate(&rp(2.0, wd), &ks, StructureForm::Classical)
                .unwrap()
                .peak()
                .unwrap()
        };
        let (k0, s0) = peak(0.0);
        let (_, s19) = peak(1.9);
        let (k199, s199) = peak(1.99);
        assert_eq!(k0, 3.0);
        assert!(s0 < 1.0);
        assert!(s199 > s19 && s19 > 1.0);
        assert!((k199 - 0.708).abs() < 2e-3);
    }

    #[test]
    fn debye_closed_form_recovered() {
        let q = QuadratureConfig::default();
        for r in linspace(0.5, 10.0, 20) {
            let (g, err) = pair_correlation(r, &rp(2.0, 0.0), &q).unwrap();
            let want = debye_pair_correlation(r, DEFAULT_PREFACTOR);
            assert!((g - want).abs() < 1e-12, "r={r}: {g} vs {want}");
            assert!(err <= q.tol);
        }
        assert!((debye_pair_correlation(1.0, DEFAULT_PREFACTOR) - (1.0 - (-1.0f64).exp() / (2.0 * PI))).abs() < 1e-15);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn matches_adaptive_quadrature_reference() {
        // mpmath quad on [0, 10] in 0.05 segments plus QUADPACK's QAWF rule
        // on [10, ∞), same split integrand. Reference uncertainty ~3e-9.
        const REFERENCE: &[(f64, f64, f64)] = &[
            (1.9, 0.5, 1.127_998_112_651_732_4),
            (1.9, 2.0, 1.055_066_696_568_337_1),
            (1.9, 5.0, 0.985_501_810_822_998_7),
            (1.9, 10.65, 1.004_630_227_333_376_6),
            (1.99, 0.5, 1.408_974_611_481_613_5),
            (1.99, 2.0, 1.240_490_546_497_091_7),
            (1.99, 5.0, 0.953_057_929_245_636_9),
            (1.99, 10.65, 1.033_624_883_355_440_9),
        ];
        let q = QuadratureConfig::default();
        for &(wd, r, want) in REFERENCE {
            let (g, err) = pair_correlation(r, &rp(2.0, wd), &q).unwrap();
            assert!((g - want).abs() < 1e-6, "wd={wd} r={r}: {g} vs {want}");
            assert!((g - want).abs() <= err + 3e-9, "wd={wd} r={r}: estimate {err:e}");
        }
    }

    #[test]
    fn unit_structure_gives_unit_correlation() {
        let q = QuadratureConfig::default();
        for r in [0.1, 1.0, 7.3, 40.0] {
            assert_eq!(pair_correlation_from_structure(|_| 1.0, r, &q).unwrap(), (1.0, 0.0));
        }
    }

    #[test]
    fn generic_path_agrees_with_closed_form() {
        // Without the split the integrand only decays like 1/k, so the tail
        // bound is far looser than on the split path.
        let q = QuadratureConfig {
            tol: 1e-3,
            ..QuadratureConfig::default()
        };
        for r in [0.5, 2.0, 6.0] {
            let (g, err) = pair_correlation_from_structure(|k| k * k / (1.0 + k * k), r, &q).unwrap();
            let want = debye_pair_correlation(r, DEFAULT_PREFACTOR);
            assert!((g - want).abs() < 1e-4, "r={r}: {g} vs {want}");
            assert!((g - want).abs() <= err, "r={r}: estimate {err:e} too small");
        }
    }

    #[test]
    fn refuses_critical_and_unstable_regimes() {
        let q = QuadratureConfig::default();
        assert!(matches!(pair_correlation(1.0, &rp(2.0, 2.0), &q), Err(Error::ZeroFrequency { .. })));
        assert!(matches!(pair_correlation(1.0, &rp(2.0, 2.5), &q), Err(Error::UnstableMode { .. })));
        assert!(pair_correlation(0.0, &rp(2.0, 1.0), &q).is_err());
    }

    #[test]
    fn tight_tolerance_reports_quadrature_failure() {
        let q = QuadratureConfig {
            step: 0.05,
            tol: 1e-12,
            ..QuadratureConfig::default()
        };
        assert!(matches!(
            pair_correlation(1.0, &rp(2.0, 1.99), &q),
            Err(Error::QuadratureFailure { .. })
        ));
    }

    #[test]
    fn scan_is_ordered_and_reports_bad_points() {
        let q = QuadratureConfig::default();
        let p = rp(2.0, 1.9);
        let t = correlation_scan(&p, &[], &q).unwrap();
        assert!(t.r.is_empty());

        let grid = [3.0, 1.0, 2.0];
        let t = correlation_scan(&p, &grid, &q).unwrap();
        assert_eq!(t.r, grid);
        assert_eq!(t.normalization, DEFAULT_PREFACTOR);
        for (i, &r) in grid.iter().enumerate() {
            assert_eq!(pair_correlation(r, &p, &q).unwrap(), (t.g[i], t.err[i]));
        }

        match correlation_scan(&p, &[1.0, -2.0, 0.0], &q) {
            Err(Error::ScanFailure { failures }) => {
                let idx: Vec<usize> = failures.iter().map(|f| f.0).collect();
                assert_eq!(idx, vec![1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn oscillation_grows_toward_criticality() {
        let q = QuadratureConfig::default();
        let grid = linspace(5.0, 25.0, 81);
        let amp = |wd| {
            let t = correlation_scan(&rp(2.0, wd), &grid, &q).unwrap();
            t.g.iter().map(|g| (g - 1.0).abs()).fold(0.0, f64::max)
        };
        assert!(amp(1.99) > amp(1.9));
    }

    /// Maximiser of S by golden section around the roton.
    fn structure_peak(p: &ReducedParams, k_rot: f64) -> f64 {
        let neg_s = |k: f64| -structure_factor(k, p, StructureForm::Classical).unwrap();
        crate::numeric::golden_section_min(neg_s, k_rot - 0.1, k_rot + 0.1, 1e-12).0
    }

    #[test]
    fn peak_sits_just_outside_the_roton_minimum() {
        // S = k²/ω² peaks where d ln ω²/dk = 2/k, displaced from the roton by
        // about 2ω²_min/(k ∂²ω²). The displacement vanishes only at criticality.
        let mut offsets = Vec::new();
        for wd in [1.9, 1.95, 1.99] {
            let p = rp(2.0, wd);
            let roton = find_roton(&p, &RotonSearch::default());
            let k_rot = roton.k_rot.unwrap();
            let offset = structure_peak(&p, k_rot) - k_rot;
            let predicted = 2.0 * roton.omega_sq_min / (k_rot * roton.curvature.unwrap());
            assert!(offset > 0.0);
            assert!((offset / predicted - 1.0).abs() < 0.25, "wd={wd}: {offset} vs {predicted}");
            offsets.push(offset);
        }
        assert!(offsets.windows(2).all(|w| w[1] < w[0]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn peak_height_grows_with_drive(d in 0.5f64..8.0, w1 in 0.0f64..1.9, dw in 1e-3f64..0.09) {
                let ks = linspace(1e-3, (3.0 / d.sqrt()).max(3.0), 1500);
                let peak = |wd: f64| {
                    StructureTable::tabulate(&rp(d, wd), &ks, StructureForm::Classical)
                        .unwrap()
                        .peak()
                        .unwrap()
                        .1
                };
                prop_assert!(peak(w1 + dw) >= peak(w1));
            }

            #[test]
            fn structure_factor_non_negative(d in 0.1f64..10.0, wd in 0.0f64..1.99, k in 0.0f64..20.0) {
                prop_assert!(structure_factor(k, &rp(d, wd), StructureForm::Classical).unwrap() >= 0.0);
            }
        }
    }
}
