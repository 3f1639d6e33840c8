//! One-dimensional minimization and threshold bracketing.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of `f` on `[a, b]`.
///
/// Stops once the bracket is narrower than `tol` (absolute) or stops shrinking.
/// Returns `(x_min, f_min)`; the result is never worse than the best of the
/// interior probes.
pub fn golden_section_min<F>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    // 200 iterations shrink any double-precision bracket below one ulp.
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            if x1 <= a || x1 >= x2 {
                break;
            }
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            if x2 >= b || x2 <= x1 {
                break;
            }
            f2 = f(x2);
        }
    }

    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Bisection for the boundary of a monotone predicate.
///
/// Requires `pred(lo) == false` and `pred(hi) == true`; returns the midpoint
/// of the final bracket, whose width is at most `tol`.
pub fn bisect_threshold<P>(pred: P, mut lo: f64, mut hi: f64, tol: f64) -> f64
where
    P: Fn(f64) -> bool,
{
    debug_assert!(!pred(lo) && pred(hi));
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_quadratic() {
        let (x, fx) = golden_section_min(|x| (x - 0.3) * (x - 0.3) + 2.0, -1.0, 2.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-14);
    }

    #[test]
    fn golden_reversed_bracket() {
        let (x, _) = golden_section_min(|x| (x - 1.5).powi(2), 3.0, 0.0, 1e-10);
        assert!((x - 1.5).abs() < 1e-5);
    }

    #[test]
    fn golden_double_zero_located_precisely() {
        // Relative-accurate function values let the bracket close well below sqrt(eps).
        let (x, fx) = golden_section_min(|x| (x - 0.7).powi(2), 0.0, 1.0, 1e-13);
        assert!((x - 0.7).abs() < 1e-12);
        assert!(fx < 1e-24);
    }

    #[test]
    fn bisection_finds_threshold() {
        let t = bisect_threshold(|x| x > std::f64::consts::E, 0.0, 10.0, 1e-12);
        assert!((t - std::f64::consts::E).abs() < 1e-12);
    }
}
