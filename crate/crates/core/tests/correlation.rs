use roton_core::dispersion::linspace;
use roton_core::structure::{debye_pair_correlation, DEFAULT_PREFACTOR};
use roton_core::{correlation_scan, find_roton, QuadratureConfig, ReducedParams, RotonSearch};

fn rp(wd: f64) -> ReducedParams {
    ReducedParams::classical(2.0, wd).unwrap()
}

#[test]
fn undriven_cloud_reproduces_debye_screening() {
    let grid = linspace(0.5, 10.0, 50);
    let t = correlation_scan(&rp(0.0), &grid, &QuadratureConfig::default()).unwrap();
    for (r, g) in t.r.iter().zip(&t.g) {
        assert!((g - debye_pair_correlation(*r, DEFAULT_PREFACTOR)).abs() < 1e-3);
    }
}

#[test]
fn flat_at_large_separation() {
    let grid = linspace(30.5, 60.0, 40);
    let t = correlation_scan(&rp(0.0), &grid, &QuadratureConfig::default()).unwrap();
    for i in 0..grid.len() {
        assert!((t.g[i] - 1.0).abs() < 2.0 * t.err[i], "r={}", t.r[i]);
    }
}

#[test]
fn doubling_cutoff_stays_within_error_estimate() {
    let grid = linspace(0.5, 20.0, 40);
    let base = QuadratureConfig::default();
    let doubled = QuadratureConfig {
        k_max: 2.0 * base.k_max,
        ..base
    };
    for wd in [0.0, 1.5, 1.9, 1.99] {
        let a = correlation_scan(&rp(wd), &grid, &base).unwrap();
        let b = correlation_scan(&rp(wd), &grid, &doubled).unwrap();
        assert_eq!(b.k_max, 100.0);
        for (i, r) in grid.iter().enumerate() {
            assert!((a.g[i] - b.g[i]).abs() < a.err[i], "wd={wd} r={r}");
        }
    }
}

#[test]
fn oscillation_period_tracks_roton_wavelength() {
    let k_rot = find_roton(&rp(1.99), &RotonSearch::default()).k_rot.unwrap();
    let grid = linspace(0.5, 40.0, 791);
    let t = correlation_scan(&rp(1.99), &grid, &QuadratureConfig::default()).unwrap();
    let maxima = t.local_maxima();
    assert!(maxima.len() >= 3, "{maxima:?}");
    let period = std::f64::consts::TAU / k_rot;
    for w in maxima.windows(2) {
        assert!(((w[1] - w[0]) / period - 1.0).abs() < 0.15, "{maxima:?} vs {period}");
    }
}

#[test]
fn scan_is_deterministic() {
    let grid = linspace(0.5, 15.0, 64);
    let a = correlation_scan(&rp(1.9), &grid, &QuadratureConfig::default()).unwrap();
    let b = correlation_scan(&rp(1.9), &grid, &QuadratureConfig::default()).unwrap();
    assert_eq!(a, b);
}
