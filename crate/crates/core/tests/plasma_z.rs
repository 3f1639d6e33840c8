use num_complex::Complex64;
use proptest::prelude::*;
use roton_core::{plasma_z, plasma_z_prime};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// 1000 points filling the disc |ζ| ≤ 5: 25 radii × 40 angles, with the
/// angles offset per ring so no two rings line up.
fn disc_points() -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(1000);
    for i in 0..25 {
        let r = 5.0 * (i as f64 + 1.0) / 25.0;
        for j in 0..40 {
            let phi = std::f64::consts::TAU * (j as f64 + 0.37 * i as f64) / 40.0;
            pts.push(Complex64::from_polar(r, phi));
        }
    }
    pts
}

fn derivative(z: Complex64) -> Complex64 {
    let h = 1e-3;
    let f = |d: f64| plasma_z(z + d);
    (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h)
}

#[test]
fn satisfies_its_differential_equation() {
    let pts = disc_points();
    assert_eq!(pts.len(), 1000);
    let mut worst: f64 = 0.0;
    for z in pts {
        let zz = plasma_z(z);
        let dz = derivative(z);
        let scale = 1.0f64.max((z * zz).norm()).max(dz.norm());
        let residual = (dz + 2.0 * (1.0 + z * zz)).norm() / scale;
        worst = worst.max(residual);
    }
    assert!(worst < 1e-9, "worst scaled residual {worst:e}");
}

#[test]
fn closed_form_derivative_matches_numerical_one() {
    for z in disc_points().into_iter().step_by(7) {
        let a = plasma_z_prime(z);
        let b = derivative(z);
        assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0), "{z}");
    }
}

#[test]
fn value_at_origin() {
    let z = plasma_z(Complex64::new(0.0, 0.0));
    assert!((z - Complex64::new(0.0, SQRT_PI)).norm() < 1e-10);
    assert!((plasma_z_prime(Complex64::new(0.0, 0.0)) + 2.0).norm() < 1e-12);
}

/// −Σ (2n−1)!!/(2ⁿ x^{2n+1}), summed until the terms start to grow.
fn asymptotic_real_part(x: f64) -> f64 {
    let mut term = 1.0 / x;
    let mut sum = 0.0;
    let mut n = 0.0;
    loop {
        sum += term;
        let next = term * (2.0 * n + 1.0) / (2.0 * x * x);
        if next.abs() >= term.abs() || next.abs() < 1e-18 * sum.abs() {
            break;
        }
        term = next;
        n += 1.0;
    }
    -sum
}

#[test]
fn large_real_argument_follows_asymptotic_series() {
    for x in [8.0, -8.0, 10.0] {
        let z = plasma_z(Complex64::new(x, 0.0));
        let re = asymptotic_real_part(x);
        assert!((z.re - re).abs() < 1e-13 * re.abs(), "x={x}: {} vs {re}", z.re);
        assert!((z.im - SQRT_PI * (-x * x).exp()).abs() < 1e-14 * SQRT_PI * (-x * x).exp());
    }
    // The two-term truncation −1/ζ − 1/(2ζ³) is only good to about 2e-4 at ζ = 8.
    let z8 = plasma_z(Complex64::new(8.0, 0.0)).re;
    let two_term = -1.0 / 8.0 - 1.0 / (2.0 * 512.0);
    let rel = (z8 - two_term).abs() / z8.abs();
    assert!(rel > 1e-4 && rel < 2e-4, "{rel:e}");
}

proptest! {
    #[test]
    fn reflection_symmetry(x in -9.0f64..9.0, y in -4.0f64..4.0) {
        let z = Complex64::new(x, y);
        let lhs = plasma_z(-z.conj());
        let rhs = -plasma_z(z).conj();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
    }

    #[test]
    fn upper_half_plane_conjugation(x in -9.0f64..9.0, y in 0.0f64..4.0) {
        // For Im ζ > 0 the Landau contour is the straight line, so
        // Z(ζ*) = Z(ζ)* + 2i√π e^{-ζ*²}.
        let z = Complex64::new(x, y);
        let lhs = plasma_z(z.conj());
        let rhs = plasma_z(z).conj() + Complex64::new(0.0, 2.0 * SQRT_PI) * (-z.conj() * z.conj()).exp();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(1.0));
    }
}
