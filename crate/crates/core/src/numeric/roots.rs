//! Derivative-free complex root finding (Muller's method).

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MullerOptions {
    /// Required bound on `|f(root)|`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for MullerOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MullerRoot {
    pub root: Complex64,
    /// `|f(root)|`.
    pub residual: f64,
    /// Number of Muller updates performed.
    pub iterations: usize,
}

/// Finds a zero of `f` starting from three distinct points.
///
/// After `|f| < tol` is first reached the iteration keeps going until the
/// update drops to a few ulps of the iterate, so tiny imaginary parts are
/// resolved instead of being left at the size of the tolerance.
pub fn muller<F>(
    mut f: F,
    start: [Complex64; 3],
    opts: MullerOptions,
) -> Result<MullerRoot>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    let [mut x0, mut x1, mut x2] = start;
    let mut f0 = f(x0)?;
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;

    let mut best = (x2, f2.norm());
    for (x, fx) in [(x0, f0.norm()), (x1, f1.norm())] {
        if fx < best.1 {
            best = (x, fx);
        }
    }

    let mut stalls = 0;
    let mut done = opts.max_iter;
    for iter in 1..=opts.max_iter {
        let h1 = x1 - x0;
        let h2 = x2 - x1;
        let d1 = (f1 - f0) / h1;
        let d2 = (f2 - f1) / h2;
        let a = (d2 - d1) / (h2 + h1);
        let b = a * h2 + d2;
        let c = f2;

        let disc = (b * b - 4.0 * a * c).sqrt();
        let (p, m) = (b + disc, b - disc);
        let denom = if p.norm() >= m.norm() { p } else { m };
        let dx = if denom.norm() > 0.0 && denom.is_finite() {
            -2.0 * c / denom
        } else {
            // Flat model: nudge instead of dividing by zero.
            Complex64::new(1e-3 * (1.0 + x2.norm()), 0.0)
        };

        let x3 = x2 + dx;
        if !x3.is_finite() {
            done = iter;
            break;
        }
        let f3 = f(x3)?;
        let r3 = f3.norm();
        if r3 < best.1 {
            best = (x3, r3);
        } else if r3 < opts.tol {
            stalls += 1;
        }

        let settled = dx.norm() <= 4.0 * f64::EPSILON * x3.norm().max(f64::MIN_POSITIVE);
        if r3 == 0.0 || (r3 < opts.tol && settled) {
            return Ok(MullerRoot {
                root: x3,
                residual: r3,
                iterations: iter,
            });
        }
        // Residual stuck at the rounding floor.
        if stalls >= 3 {
            done = iter;
            break;
        }

        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        x2 = x3;
        f2 = f3;

        // Coincident points leave the divided differences undefined; the
        // best iterate is as good as it gets.
        if x1 == x2 || x0 == x1 {
            done = iter;
            break;
        }
    }

    if best.1 < opts.tol {
        return Ok(MullerRoot {
            root: best.0,
            residual: best.1,
            iterations: done,
        });
    }
    Err(Error::NoConvergence {
        last_re: best.0.re,
        last_im: best.0.im,
        residual: best.1,
        iterations: done,
    })
}
