//! One function per subcommand. Each builds its tables in memory and hands
//! them to [`Sink`], which writes files (or stdout) in grid order.

use std::io::Write;
use std::path::{Path, PathBuf};

use roton_core::dispersion::CRITICAL_OMEGA_D;
use roton_core::kinetics::{analytic_guess, in_expansion_regime, solve_kinetic_root};
use roton_core::params::reduce_scales;
use roton_core::{
    check_hierarchy, correlation_scan, critical_omega_d, derive_scales, find_roton, omega_sq, phase_scan,
    spectrum, ReducedParams, RotonKind, RotonResult, RotonSearch, StructureTable,
};
use serde::Serialize;

use crate::config::{series_path, CommandName, RunConfig};
use crate::error::CliError;
use crate::svg::{self, Panel, Series};
use crate::table::{fmt_num, Cell, Csv};

/// Where tables and plots go.
pub struct Sink {
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))
}

fn write_stdout(text: &str) -> Result<(), CliError> {
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Io(format!("writing stdout: {e}")))
}

impl Sink {
    /// Writes one document to `--out`, or to stdout.
    fn single(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => write_file(p, text),
            None => write_stdout(text),
        }
    }

    /// Writes one CSV per `ω_d` series. With `--out` and several series the
    /// files are named `<stem>_wd<value>.<ext>`; on stdout the series are
    /// separated by `# omega_d_hat = <value>` lines.
    fn series(&self, tables: &[(f64, String)]) -> Result<(), CliError> {
        match &self.out {
            Some(base) => {
                for (wd, text) in tables {
                    let path = series_path(base, *wd, tables.len());
                    write_file(&path, text)?;
                    eprintln!("wrote {}", path.display());
                }
                Ok(())
            }
            None if tables.len() == 1 => write_stdout(&tables[0].1),
            None => {
                let mut all = String::new();
                for (wd, text) in tables {
                    all.push_str(&format!("# omega_d_hat = {wd}\n"));
                    all.push_str(text);
                }
                write_stdout(&all)
            }
        }
    }

    fn plot(&self, title: &str, panels: &[Panel]) -> Result<(), CliError> {
        match &self.svg {
            Some(p) => write_file(p, &svg::render(title, panels)),
            None => Ok(()),
        }
    }
}

fn reduced(d_hat: f64, omega_d: f64, theta: f64) -> Result<ReducedParams, CliError> {
    Ok(ReducedParams::new(d_hat, omega_d, theta)?)
}

fn require_series(omega_d: &[f64]) -> Result<(), CliError> {
    if omega_d.is_empty() {
        return Err(CliError::Config("omega_d list is empty".into()));
    }
    Ok(())
}

fn series_label(wd: f64) -> String {
    format!("omega_d = {}", fmt_num(wd))
}

fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(format!("serializing report: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn run(cmd: CommandName, cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    match cmd {
        CommandName::Params => params(cfg, sink),
        CommandName::Dispersion => dispersion(cfg, sink),
        CommandName::Roton => roton(cfg, sink),
        CommandName::Structure => structure(cfg, sink),
        CommandName::Correlation => correlation(cfg, sink),
        CommandName::Verify => verify(cfg, sink),
        CommandName::Phase => phase(cfg, sink),
    }
}

fn params(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = cfg
        .params
        .as_ref()
        .ok_or_else(|| CliError::Config("missing `params` section with `physical` parameters".into()))?;
    let scales = derive_scales(&sec.physical)?;
    let reduced = reduce_scales(&scales, sec.physical.temperature);
    let validity = check_hierarchy(&sec.physical, sec.separation);
    eprintln!(
        "plasma frequency omega_p = {} rad/s, Debye length lambda_D = {} m",
        fmt_num(scales.omega_p),
        fmt_num(scales.lambda_d)
    );
    eprintln!(
        "mean free path ell = {} m, diffusion D0 = {} m^2/s, diffusion length ell_d = {} m",
        fmt_num(scales.mean_free_path),
        fmt_num(scales.d0),
        fmt_num(scales.ell_d)
    );
    eprintln!(
        "reduced: D_hat = {}, omega_d_hat = {}, theta = {}",
        fmt_num(reduced.d_hat),
        fmt_num(reduced.omega_d_hat),
        fmt_num(reduced.theta)
    );
    for r in validity.ratios.iter().filter(|r| !r.passes) {
        eprintln!(
            "warning: scale hierarchy violated: {} = {} is not above {}",
            r.name,
            fmt_num(r.value),
            fmt_num(sec.separation)
        );
    }

    #[derive(Serialize)]
    struct Report<'a> {
        derived: &'a roton_core::DerivedScales,
        reduced: &'a ReducedParams,
        validity: &'a roton_core::ValidityReport,
    }
    sink.single(&to_json(&Report {
        derived: &scales,
        reduced: &reduced,
        validity: &validity,
    })?)
}

fn dispersion(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.dispersion;
    require_series(&sec.omega_d)?;
    let ks = sec.k.checked("dispersion.k", 0.0, true)?;
    let mut tables = Vec::new();
    let mut real = Vec::new();
    let mut imag = Vec::new();
    for &wd in &sec.omega_d {
        let rp = reduced(sec.d_hat, wd, 0.0)?;
        let pts = spectrum(&rp, &ks);
        let mut csv = Csv::new(&["k_hat", "omega_sq", "omega", "growth", "unstable_rate"]);
        for p in &pts {
            csv.row(&[
                p.k_hat.into(),
                p.omega_sq.into(),
                p.omega.into(),
                p.growth.into(),
                p.unstable_rate.into(),
            ]);
        }
        tables.push((wd, csv.into_string()));
        real.push(Series {
            label: series_label(wd),
            points: pts.iter().map(|p| (p.k_hat, p.omega_sq)).collect(),
            dashed: wd == 0.0,
        });
        imag.push(Series {
            label: series_label(wd),
            points: pts.iter().map(|p| (p.k_hat, p.growth)).collect(),
            dashed: wd == 0.0,
        });
    }
    sink.series(&tables)?;
    sink.plot(
        &format!("Polariton dispersion, D = {}", fmt_num(sec.d_hat)),
        &[
            Panel {
                x_label: "k λ_D".into(),
                y_label: "ω²/ω_p²".into(),
                series: real,
            },
            Panel {
                x_label: "k λ_D".into(),
                y_label: "γ/ω_p".into(),
                series: imag,
            },
        ],
    )
}

fn roton(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.roton;
    require_series(&sec.omega_d)?;
    if !(sec.critical_tol.is_finite() && sec.critical_tol > 0.0) {
        return Err(CliError::Config("roton.critical_tol must be positive".into()));
    }
    let search = sec.search.unwrap_or_else(|| RotonSearch::for_diffusion(sec.d_hat));
    if !(search.k_min > 0.0 && search.k_min < search.k_max && search.grid_n >= 3) {
        return Err(CliError::Config("roton.search needs 0 < k_min < k_max and grid_n >= 3".into()));
    }

    #[derive(Serialize)]
    struct Entry {
        omega_d_hat: f64,
        #[serde(flatten)]
        result: RotonResult,
    }
    #[derive(Serialize)]
    struct Report {
        #[serde(rename = "D_hat")]
        d_hat: f64,
        search: RotonSearch,
        critical_omega_d: f64,
        critical_omega_d_analytic: f64,
        /// Location of the zero at criticality, `1/√D`.
        critical_k_hat: f64,
        /// `λ_D/ℓ_d² = 1/D` in reduced units, the text's roton scaling.
        k_rot_scaling: f64,
        /// Value quoted in the structure-factor figure caption.
        caption_k_rot: f64,
        results: Vec<Entry>,
    }

    let mut results = Vec::new();
    for &wd in &sec.omega_d {
        let rp = reduced(sec.d_hat, wd, 0.0)?;
        results.push(Entry {
            omega_d_hat: wd,
            result: find_roton(&rp, &search),
        });
    }
    let report = Report {
        d_hat: sec.d_hat,
        search,
        critical_omega_d: critical_omega_d(sec.d_hat, sec.critical_tol),
        critical_omega_d_analytic: CRITICAL_OMEGA_D,
        critical_k_hat: 1.0 / sec.d_hat.sqrt(),
        k_rot_scaling: 1.0 / sec.d_hat,
        caption_k_rot: 0.5,
        results,
    };
    sink.single(&to_json(&report)?)
}

fn structure(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.structure;
    require_series(&sec.omega_d)?;
    let ks = sec.k.checked("structure.k", 0.0, true)?;
    let mut tables = Vec::new();
    let mut series = Vec::new();
    let mut peaks = Vec::new();
    for &wd in &sec.omega_d {
        let rp = reduced(sec.d_hat, wd, sec.theta)?;
        let t = StructureTable::tabulate(&rp, &ks, sec.form).map_err(|e| match e {
            roton_core::Error::UnstableMode { .. } => CliError::Numerical(format!(
                "omega_d = {wd} is past the instability threshold; the structure factor is undefined there ({e})"
            )),
            other => other.into(),
        })?;
        if !t.divergent.is_empty() {
            let at: Vec<String> = t.divergent.iter().map(|&i| fmt_num(ks[i])).collect();
            eprintln!("warning: omega_d = {wd}: S diverges (written as inf) at k_hat = {}", at.join(", "));
        }
        let mut csv = Csv::new(&["k_hat", "S"]);
        for (k, s) in t.k_hat.iter().zip(&t.s) {
            csv.row(&[(*k).into(), (*s).into()]);
        }
        if let Some((k, s)) = t.peak() {
            eprintln!("omega_d = {wd}: max S = {} at k_hat = {}", fmt_num(s), fmt_num(k));
            peaks.push((wd, s));
        }
        tables.push((wd, csv.into_string()));
        series.push(Series {
            label: series_label(wd),
            points: t.k_hat.iter().copied().zip(t.s.iter().copied()).collect(),
            dashed: wd == 0.0,
        });
    }
    let mut by_drive = peaks.clone();
    by_drive.sort_by(|a, b| a.0.total_cmp(&b.0));
    let ordered = by_drive.windows(2).all(|w| w[1].1 >= w[0].1);
    eprintln!("peak height nondecreasing in omega_d: {ordered}");

    sink.series(&tables)?;
    sink.plot(
        &format!("Static structure factor, D = {}", fmt_num(sec.d_hat)),
        &[Panel {
            x_label: "k λ_D".into(),
            y_label: "S(k)".into(),
            series,
        }],
    )
}

fn correlation(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.correlation;
    require_series(&sec.omega_d)?;
    let rs = sec.r.checked("correlation.r", 0.0, false)?;
    sec.quadrature.validate()?;
    let mut tables = Vec::new();
    let mut series = Vec::new();
    for &wd in &sec.omega_d {
        let rp = reduced(sec.d_hat, wd, 0.0)?;
        let t = correlation_scan(&rp, &rs, &sec.quadrature)?;
        eprintln!(
            "omega_d = {wd}: k_max = {}, normalization = {}",
            fmt_num(t.k_max),
            fmt_num(t.normalization)
        );
        let mut csv = Csv::new(&["r", "g", "err"]);
        for i in 0..t.r.len() {
            csv.row(&[t.r[i].into(), t.g[i].into(), t.err[i].into()]);
        }
        tables.push((wd, csv.into_string()));
        series.push(Series {
            label: series_label(wd),
            points: t.r.iter().copied().zip(t.g.iter().copied()).collect(),
            dashed: wd == 0.0,
        });
    }
    sink.series(&tables)?;
    sink.plot(
        &format!("Pair correlation, D = {}", fmt_num(sec.d_hat)),
        &[Panel {
            x_label: "r / λ_D".into(),
            y_label: "g(r)".into(),
            series,
        }],
    )
}

fn verify(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.verify;
    if sec.k.is_empty() {
        return Err(CliError::Config("verify.k is empty".into()));
    }
    if let Some(k) = sec.k.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
        return Err(CliError::Config(format!("verify.k values must be positive, got {k}")));
    }
    let rp = reduced(sec.d_hat, sec.omega_d, 0.0)?;

    let mut csv = Csv::new(&["k_hat", "omega_analytic", "re_kinetic", "im_kinetic", "rel_dev", "in_regime"]);
    let (mut checked, mut passed, mut excluded) = (0, 0, 0);
    let mut failures = Vec::new();
    for &k in &sec.k {
        let w2 = omega_sq(k, &rp);
        let w = w2.max(0.0).sqrt();
        let in_regime = w2 > 0.0 && in_expansion_regime(k, w);
        let root = solve_kinetic_root(k, analytic_guess(k, &rp), &rp, sec.tol, sec.max_iter);
        let (re, im, dev) = match &root {
            Ok(r) => (r.omega.re, r.omega.im, (r.omega.re - w).abs() / w),
            Err(_) => (f64::NAN, f64::NAN, f64::NAN),
        };
        csv.row(&[
            k.into(),
            w.into(),
            re.into(),
            im.into(),
            dev.into(),
            Cell::from(in_regime),
        ]);
        if !in_regime {
            excluded += 1;
            eprintln!("k_hat = {}: outside expansion regime, excluded", fmt_num(k));
            continue;
        }
        checked += 1;
        match root {
            Ok(_) if dev <= sec.max_deviation => passed += 1,
            Ok(_) => failures.push(format!("k_hat = {}: deviation {}", fmt_num(k), fmt_num(dev))),
            Err(e) => failures.push(format!("k_hat = {}: {e}", fmt_num(k))),
        }
    }
    sink.single(&csv.into_string())?;

    let pass = checked > 0 && failures.is_empty();
    eprintln!(
        "verify: {} ({passed} of {checked} in-regime points within {}%, {excluded} excluded)",
        if pass { "PASS" } else { "FAIL" },
        fmt_num(100.0 * sec.max_deviation)
    );
    if pass {
        Ok(())
    } else if checked == 0 {
        Err(CliError::Numerical("no k value lies inside the expansion regime".into()))
    } else {
        Err(CliError::Numerical(failures.join("; ")))
    }
}

fn phase(cfg: &RunConfig, sink: &Sink) -> Result<(), CliError> {
    let sec = &cfg.phase;
    if sec.d_hat.n == 0 || sec.omega_d.n == 0 {
        return Err(CliError::Config("phase grids need at least one point".into()));
    }
    let table = phase_scan(
        (sec.d_hat.min, sec.d_hat.max),
        (sec.omega_d.min, sec.omega_d.max),
        sec.d_hat.n,
        sec.omega_d.n,
    )?;
    let mut csv = Csv::new(&["D_hat", "omega_d_hat", "kind"]);
    for c in &table.cells {
        csv.row(&[c.d_hat.into(), c.omega_d_hat.into(), c.kind.as_str().into()]);
    }
    for (d, onset) in table.d_values.iter().zip(table.instability_onset()) {
        match onset {
            Some(w) => eprintln!("D_hat = {}: unstable from omega_d_hat = {}", fmt_num(*d), fmt_num(w)),
            None => eprintln!("D_hat = {}: stable over the scanned range", fmt_num(*d)),
        }
    }
    let stable = table.cells.iter().filter(|c| c.kind != RotonKind::Unstable).count();
    eprintln!("{stable} of {} cells not unstable", table.cells.len());
    sink.single(&csv.into_string())
}
