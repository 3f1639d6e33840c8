//! Run configuration: a JSON document with a `command` field and one
//! optional section per command, plus command-line overrides.

use std::path::{Path, PathBuf};

use roton_core::dispersion::linspace;
use roton_core::{PhysicalParams, QuadratureConfig, RotonSearch, StructureForm};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    Params,
    Dispersion,
    Roton,
    Structure,
    Correlation,
    Verify,
    Phase,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Params => "params",
            CommandName::Dispersion => "dispersion",
            CommandName::Roton => "roton",
            CommandName::Structure => "structure",
            CommandName::Correlation => "correlation",
            CommandName::Verify => "verify",
            CommandName::Phase => "phase",
        }
    }
}

/// Sample points, either listed or evenly spaced.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Grid {
    Values(Vec<f64>),
    Range { min: f64, max: f64, n: usize },
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        match self {
            Grid::Values(v) => v.clone(),
            Grid::Range { min, max, n } => linspace(*min, *max, *n),
        }
    }

    /// Sorted strictly increasing, finite and above `floor` (inclusive when
    /// `allow_floor`).
    pub fn checked(&self, name: &str, floor: f64, allow_floor: bool) -> Result<Vec<f64>, CliError> {
        if let Grid::Range { min, max, .. } = self {
            if min.is_nan() || max.is_nan() || min > max {
                return Err(CliError::Config(format!("{name}: range min {min} exceeds max {max}")));
            }
        }
        let pts = self.points();
        for (i, &v) in pts.iter().enumerate() {
            let above = if allow_floor { v >= floor } else { v > floor };
            if !v.is_finite() || !above {
                let bound = if allow_floor { ">=" } else { ">" };
                return Err(CliError::Config(format!("{name}[{i}] = {v}: values must be finite and {bound} {floor}")));
            }
            if i > 0 && pts[i - 1] >= v {
                return Err(CliError::Config(format!("{name} must be sorted strictly increasing (index {i})")));
            }
        }
        Ok(pts)
    }

    fn with_max(&self, name: &str, new_max: f64) -> Result<Grid, CliError> {
        match self {
            Grid::Range { min, n, .. } => Ok(Grid::Range {
                min: *min,
                max: new_max,
                n: *n,
            }),
            Grid::Values(_) => Err(CliError::Config(format!("--kmax needs {name} given as a range"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    pub physical: PhysicalParams,
    #[serde(default = "default_separation")]
    pub separation: f64,
}

fn default_separation() -> f64 {
    roton_core::params::DEFAULT_SEPARATION
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DispersionSection {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d: Vec<f64>,
    pub k: Grid,
}

impl Default for DispersionSection {
    fn default() -> Self {
        Self {
            d_hat: 2.0,
            omega_d: vec![0.0, 1.9, 1.99, 2.2],
            k: Grid::Range {
                min: 0.0,
                max: 3.0,
                n: 301,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RotonSection {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d: Vec<f64>,
    /// Overrides the window chosen from `D_hat`.
    pub search: Option<RotonSearch>,
    /// Bisection tolerance for the critical `ω_d`.
    pub critical_tol: f64,
}

impl Default for RotonSection {
    fn default() -> Self {
        Self {
            d_hat: 2.0,
            omega_d: vec![0.0, 1.9, 1.99, 2.0, 2.2],
            search: None,
            critical_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StructureSection {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d: Vec<f64>,
    pub k: Grid,
    pub form: StructureForm,
    pub theta: f64,
}

impl Default for StructureSection {
    fn default() -> Self {
        Self {
            d_hat: 2.0,
            omega_d: vec![0.0, 1.9, 1.99],
            k: Grid::Range {
                min: 0.0,
                max: 3.0,
                n: 3001,
            },
            form: StructureForm::Classical,
            theta: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CorrelationSection {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d: Vec<f64>,
    pub r: Grid,
    pub quadrature: QuadratureConfig,
}

impl Default for CorrelationSection {
    fn default() -> Self {
        Self {
            d_hat: 2.0,
            omega_d: vec![0.0, 1.9, 1.99],
            r: Grid::Range {
                min: 0.5,
                max: 40.0,
                n: 396,
            },
            quadrature: QuadratureConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifySection {
    #[serde(rename = "D_hat")]
    pub d_hat: f64,
    pub omega_d: f64,
    pub k: Vec<f64>,
    /// Residual tolerance of the root finder.
    pub tol: f64,
    pub max_iter: usize,
    /// Largest accepted relative deviation inside the expansion regime.
    pub max_deviation: f64,
}

impl Default for VerifySection {
    fn default() -> Self {
        Self {
            d_hat: 2.0,
            omega_d: 0.0,
            k: vec![0.05, 0.1, 0.2, 0.5, 2.0],
            tol: 1e-10,
            max_iter: 100,
            max_deviation: 0.05,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Span {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhaseSection {
    #[serde(rename = "D_hat")]
    pub d_hat: Span,
    pub omega_d: Span,
}

impl Default for PhaseSection {
    fn default() -> Self {
        Self {
            d_hat: Span {
                min: 0.5,
                max: 10.0,
                n: 20,
            },
            omega_d: Span {
                min: 0.0,
                max: 3.0,
                n: 31,
            },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<CommandName>,
    pub params: Option<ParamsSection>,
    #[serde(default)]
    pub dispersion: DispersionSection,
    #[serde(default)]
    pub roton: RotonSection,
    #[serde(default)]
    pub structure: StructureSection,
    #[serde(default)]
    pub correlation: CorrelationSection,
    #[serde(default)]
    pub verify: VerifySection,
    #[serde(default)]
    pub phase: PhaseSection,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Command-line values that take precedence over the config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub omega_d: Option<Vec<f64>>,
    pub d0: Option<f64>,
    pub k_max: Option<f64>,
    pub tol: Option<f64>,
}

fn not_applicable(flag: &str, cmd: CommandName) -> CliError {
    CliError::Config(format!("{flag} does not apply to `{}`", cmd.as_str()))
}

fn positive(flag: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Config(format!("{flag} must be finite and positive, got {v}")))
    }
}

impl RunConfig {
    /// Applies `--omega-d`, `--d0`, `--kmax` and `--tol` to the section of
    /// `cmd`. A flag that has no meaning for `cmd` is a config error.
    pub fn apply(&mut self, cmd: CommandName, o: &Overrides) -> Result<(), CliError> {
        use CommandName::*;

        if let Some(wd) = &o.omega_d {
            match cmd {
                Dispersion => self.dispersion.omega_d = wd.clone(),
                Roton => self.roton.omega_d = wd.clone(),
                Structure => self.structure.omega_d = wd.clone(),
                Correlation => self.correlation.omega_d = wd.clone(),
                Verify => match wd.as_slice() {
                    [one] => self.verify.omega_d = *one,
                    _ => return Err(CliError::Config("verify takes a single --omega-d value".into())),
                },
                Params | Phase => return Err(not_applicable("--omega-d", cmd)),
            }
        }
        if let Some(d) = o.d0 {
            let d = positive("--d0", d)?;
            match cmd {
                Dispersion => self.dispersion.d_hat = d,
                Roton => self.roton.d_hat = d,
                Structure => self.structure.d_hat = d,
                Correlation => self.correlation.d_hat = d,
                Verify => self.verify.d_hat = d,
                Params | Phase => return Err(not_applicable("--d0", cmd)),
            }
        }
        if let Some(k) = o.k_max {
            let k = positive("--kmax", k)?;
            match cmd {
                Dispersion => self.dispersion.k = self.dispersion.k.with_max("dispersion.k", k)?,
                Structure => self.structure.k = self.structure.k.with_max("structure.k", k)?,
                Correlation => self.correlation.quadrature.k_max = k,
                Roton => {
                    let mut s = self
                        .roton
                        .search
                        .unwrap_or_else(|| RotonSearch::for_diffusion(self.roton.d_hat));
                    s.k_max = k;
                    self.roton.search = Some(s);
                }
                Params | Verify | Phase => return Err(not_applicable("--kmax", cmd)),
            }
        }
        if let Some(t) = o.tol {
            let t = positive("--tol", t)?;
            match cmd {
                Roton => self.roton.critical_tol = t,
                Correlation => self.correlation.quadrature.tol = t,
                Verify => self.verify.tol = t,
                Params | Dispersion | Structure | Phase => return Err(not_applicable("--tol", cmd)),
            }
        }
        Ok(())
    }
}

/// Output file for one series of a multi-series run: `fig.csv` becomes
/// `fig_wd1.99.csv`. A single series keeps the path as given.
pub fn series_path(base: &Path, omega_d: f64, series_count: usize) -> PathBuf {
    if series_count <= 1 {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_wd{omega_d}.{}", ext.to_string_lossy()),
        None => format!("{stem}_wd{omega_d}"),
    };
    base.with_file_name(name)
}
