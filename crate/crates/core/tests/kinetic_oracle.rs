use proptest::prelude::*;
use roton_core::kinetics::{analytic_guess, kinetic_root, solve_kinetic_root};
use roton_core::{omega_sq, ComplexFrequency, Error, ReducedParams};

fn undriven() -> ReducedParams {
    ReducedParams::classical(2.0, 0.0).unwrap()
}

fn relative_deviation(k: f64) -> f64 {
    let rp = undriven();
    let root = kinetic_root(k, &rp).unwrap();
    let w = omega_sq(k, &rp).sqrt();
    (root.omega.re - w).abs() / w
}

#[test]
fn agrees_with_analytic_branch_at_long_wavelength() {
    let ks = [0.2, 0.1, 0.05];
    let devs: Vec<f64> = ks.iter().map(|&k| relative_deviation(k)).collect();
    assert!(devs[0] <= 0.05);
    assert!(devs[2] <= 0.01);
    assert!(devs.windows(2).all(|w| w[1] < w[0]), "{devs:?}");
}

#[test]
fn deviation_scales_like_k_to_the_fourth() {
    // The analytic branch keeps the first thermal correction, so what is
    // left over is the next order, k⁴.
    let ratio = relative_deviation(0.1) / relative_deviation(0.05);
    assert!((ratio - 16.0).abs() < 1.0, "{ratio}");
}

#[test]
fn guess_at_zero_frequency_honours_contract() {
    let rp = undriven();
    match solve_kinetic_root(0.5, ComplexFrequency::new(0.0, 0.0), &rp, 1e-10, 100) {
        Ok(root) => {
            assert!(root.residual < 1e-10);
            assert!(root.omega.im < 0.0);
        }
        Err(e) => assert!(matches!(e, Error::NoConvergence { .. } | Error::SingularInput(_))),
    }
}

#[test]
fn analytic_guess_of_unstable_mode_is_purely_growing() {
    let rp = ReducedParams::classical(2.0, 2.5).unwrap();
    let g = analytic_guess(std::f64::consts::FRAC_1_SQRT_2, &rp);
    assert_eq!(g.re, 0.0);
    assert!(g.im > 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn undriven_modes_are_damped(k in 0.05f64..1.0) {
        let root = kinetic_root(k, &undriven()).unwrap();
        prop_assert!(root.omega.im < 0.0);
        prop_assert!(root.residual < 1e-10);
    }
}
