//! Plasma dispersion function `Z(ζ) = i√π w(ζ)` on the Landau contour.
//!
//! `w` is the Faddeeva function. Three evaluation paths:
//!
//! * `|ζ| < 0.5`: Maclaurin series of `w`.
//! * `|Re ζ| ≥ 6`, `|Im ζ| < 1`: `Z = i√π e^{-ζ²} − 2F(ζ)` with the Dawson
//!   function `F` from its asymptotic series. Both pieces are accurate
//!   component by component, so the exponentially small imaginary part of
//!   `Z` near the real axis (the resonant-particle contribution) survives.
//! * everywhere else: Weideman's 40-term rational approximation in the upper
//!   half plane and the reflection `w(z) = 2e^{-z²} − w(−z)` below it.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

const WEIDEMAN_N: usize = 40;

struct Weideman {
    l: f64,
    /// Coefficients `a_1..a_N`; `a[0]` multiplies the constant term.
    a: Vec<f64>,
}

fn weideman() -> &'static Weideman {
    static TABLE: OnceLock<Weideman> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = WEIDEMAN_N;
        let m = 2 * n;
        let l = (n as f64 / 2f64.sqrt()).sqrt();
        // Samples of exp(-t^2)(L^2 + t^2) on t = L tan(theta/2), theta = k pi / M,
        // k = -M..M-1; the k = -M node sits at infinity and contributes zero.
        let samples: Vec<(f64, f64)> = (-(m as i64) + 1..m as i64)
            .map(|k| {
                let theta = k as f64 * PI / m as f64;
                let t = l * (0.5 * theta).tan();
                (k as f64, (-t * t).exp() * (l * l + t * t))
            })
            .collect();
        let a = (1..=n)
            .map(|j| {
                let s: f64 = samples
                    .iter()
                    .map(|&(k, f)| f * (PI * k * j as f64 / m as f64).cos())
                    .sum();
                s / (2 * m) as f64
            })
            .collect();
        Weideman { l, a }
    })
}

fn w_weideman_upper(z: Complex64) -> Complex64 {
    let tab = weideman();
    let iz = Complex64::i() * z;
    let lm = tab.l - iz;
    let zz = (tab.l + iz) / lm;
    let mut p = Complex64::new(0.0, 0.0);
    for &c in tab.a.iter().rev() {
        p = p * zz + c;
    }
    2.0 * p / (lm * lm) + FRAC_1_SQRT_PI / lm
}

fn w_series(z: Complex64) -> Complex64 {
    // w(z) = sum_n (iz)^n / Gamma(n/2 + 1), split into even and odd n.
    let iz = Complex64::i() * z;
    let iz2 = iz * iz;
    let mut even = Complex64::new(1.0, 0.0);
    let mut odd = iz * (2.0 * FRAC_1_SQRT_PI);
    let mut sum = even + odd;
    for m in 1..60 {
        let mf = m as f64;
        even = even * iz2 / mf;
        odd = odd * iz2 / (mf + 0.5);
        let term = even + odd;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// Faddeeva function `w(z) = e^{-z²} erfc(−iz)`.
pub fn faddeeva(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        return w_series(z);
    }
    if z.im >= 0.0 {
        w_weideman_upper(z)
    } else {
        2.0 * (-z * z).exp() - w_weideman_upper(-z)
    }
}

/// Dawson function `F(z) = e^{-z²} ∫_0^z e^{t²} dt` from its asymptotic series,
/// valid for `|Re z| ≥ 6`, `|Im z| < 1`.
fn dawson_asymptotic(z: Complex64) -> Complex64 {
    let inv_2z2 = 1.0 / (2.0 * z * z);
    let mut term = 0.5 / z;
    let mut sum = term;
    let mut prev = term.norm();
    for n in 0..200 {
        term *= (2 * n + 1) as f64 * inv_2z2;
        let size = term.norm();
        if size >= prev {
            break;
        }
        sum += term;
        if size <= 1e-17 * sum.norm() {
            break;
        }
        prev = size;
    }
    sum
}

fn in_asymptotic_band(z: Complex64) -> bool {
    z.re.abs() >= 6.0 && z.im.abs() < 1.0
}

/// Plasma dispersion function `Z(ζ) = π^{-1/2} ∫ e^{-t²}/(t − ζ) dt`, with
/// the integration path passing below the pole (analytic continuation from
/// the upper half plane).
pub fn plasma_z(zeta: Complex64) -> Complex64 {
    if in_asymptotic_band(zeta) {
        Complex64::i() * SQRT_PI * (-zeta * zeta).exp() - 2.0 * dawson_asymptotic(zeta)
    } else {
        Complex64::i() * SQRT_PI * faddeeva(zeta)
    }
}

/// `Z'(ζ) = −2(1 + ζ Z(ζ))`.
pub fn plasma_z_prime(zeta: Complex64) -> Complex64 {
    -2.0 * (1.0 + zeta * plasma_z(zeta))
}

/// `1 + ζ Z(ζ)`, evaluated so that the cancellation at large `|ζ|` does not
/// lose the leading `−1/(2ζ²)` behaviour.
pub(crate) fn one_plus_zeta_z(zeta: Complex64) -> Complex64 {
    if in_asymptotic_band(zeta) {
        // 1 - 2 ζ F(ζ) = -sum_{n>=1} (2n-1)!!/(2ζ²)^n, summed directly.
        let inv_2z2 = 1.0 / (2.0 * zeta * zeta);
        let mut term = Complex64::new(1.0, 0.0);
        let mut tail = Complex64::new(0.0, 0.0);
        let mut prev = f64::INFINITY;
        for n in 0..200 {
            term *= (2 * n + 1) as f64 * inv_2z2;
            let size = term.norm();
            if size >= prev {
                break;
            }
            tail += term;
            if size <= 1e-17 * tail.norm() {
                break;
            }
            prev = size;
        }
        Complex64::i() * SQRT_PI * zeta * (-zeta * zeta).exp() - tail
    } else {
        1.0 + zeta * plasma_z(zeta)
    }
}
