//! Sine-weighted Filon quadrature on a uniform grid.
//!
//! The smooth factor `f` is sampled once and reused for every frequency `t`,
//! which is what makes tabulating a Fourier-sine transform over many `t`
//! values cheap.

/// Samples `f(x_i)` on `x_i = a + i h`, `i = 0..=2n`.
#[derive(Debug, Clone)]
pub struct FilonSine {
    a: f64,
    h: f64,
    values: Vec<f64>,
}

/// Integral value together with a Richardson-style error estimate obtained by
/// repeating the rule on every other sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl FilonSine {
    /// Samples `f` on `[a, b]` with `panels` panel pairs rounded up to a
    /// multiple of two, so the coarse rule also has whole panel pairs.
    pub fn sample<F>(f: F, a: f64, b: f64, panels: usize) -> Self
    where
        F: Fn(f64) -> f64,
    {
        let pairs = panels.max(2).div_ceil(2) * 2;
        let n = 2 * pairs;
        let h = (b - a) / n as f64;
        let values = (0..=n).map(|i| f(a + i as f64 * h)).collect();
        Self { a, h, values }
    }

    pub fn from_samples(a: f64, h: f64, values: Vec<f64>) -> Self {
        assert!(values.len() >= 3 && values.len() % 2 == 1, "need an odd number of samples");
        Self { a, h, values }
    }

    pub fn step(&self) -> f64 {
        self.h
    }

    pub fn upper(&self) -> f64 {
        self.a + self.h * (self.values.len() - 1) as f64
    }

    /// `∫_a^b f(x) sin(t x) dx`.
    pub fn integrate(&self, t: f64) -> f64 {
        filon_sin(self.a, self.h, self.values.iter().copied(), self.values.len(), t)
    }

    /// Fine rule plus `|fine - coarse|` as the error estimate. The coarse rule
    /// uses every other sample and is only available when the sample count
    /// allows it; otherwise the estimate is the fine value with zero error.
    pub fn integrate_with_estimate(&self, t: f64) -> Estimate {
        let fine = self.integrate(t);
        let n = self.values.len() - 1;
        if n % 4 != 0 {
            return Estimate {
                value: fine,
                error: 0.0,
            };
        }
        let coarse = filon_sin(
            self.a,
            2.0 * self.h,
            self.values.iter().step_by(2).copied(),
            n / 2 + 1,
            t,
        );
        Estimate {
            value: fine,
            error: (fine - coarse).abs(),
        }
    }
}

/// Filon weights `(alpha, beta, gamma)` for `theta = t h`.
pub fn filon_weights(theta: f64) -> (f64, f64, f64) {
    if theta.abs() < 1.0 / 6.0 {
        let t2 = theta * theta;
        let t3 = t2 * theta;
        let alpha = t3
            * (2.0 / 45.0
                + t2 * (-2.0 / 315.0
                    + t2 * (2.0 / 4725.0
                        + t2 * (-8.0 / 467_775.0 + t2 * (4.0 / 8_513_505.0 - t2 * (2.0 / 212_837_625.0))))));
        let beta = 2.0 / 3.0
            + t2 * (2.0 / 15.0
                + t2 * (-4.0 / 105.0
                    + t2 * (2.0 / 567.0
                        + t2 * (-4.0 / 22_275.0 + t2 * (4.0 / 675_675.0 - t2 * (8.0 / 58_046_625.0))))));
        let gamma = 4.0 / 3.0
            + t2 * (-2.0 / 15.0
                + t2 * (1.0 / 210.0
                    + t2 * (-1.0 / 11_340.0
                        + t2 * (1.0 / 997_920.0 + t2 * (-1.0 / 129_729_600.0 + t2 / 23_351_328_000.0)))));
        (alpha, beta, gamma)
    } else {
        let (s, c) = theta.sin_cos();
        let t3 = theta * theta * theta;
        let alpha = (theta * theta + theta * s * c - 2.0 * s * s) / t3;
        let beta = 2.0 * (theta * (1.0 + c * c) - 2.0 * s * c) / t3;
        let gamma = 4.0 * (s - theta * c) / t3;
        (alpha, beta, gamma)
    }
}

fn filon_sin<I>(a: f64, h: f64, values: I, len: usize, t: f64) -> f64
where
    I: Iterator<Item = f64>,
{
    let n = len - 1;
    let (alpha, beta, gamma) = filon_weights(t * h);
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut first = 0.0;
    let mut last = 0.0;
    for (i, fi) in values.enumerate() {
        let x = a + i as f64 * h;
        let v = fi * (t * x).sin();
        if i == 0 {
            first = fi * (t * x).cos();
            even += 0.5 * v;
        } else if i == n {
            last = fi * (t * x).cos();
            even += 0.5 * v;
        } else if i % 2 == 0 {
            even += v;
        } else {
            odd += v;
        }
    }
    h * (alpha * (first - last) + beta * even + gamma * odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_continuous_at_switch() {
        let th = 1.0 / 6.0;
        let lo = filon_weights(th * (1.0 - 1e-12));
        let hi = filon_weights(th * (1.0 + 1e-12));
        assert!((lo.0 - hi.0).abs() < 1e-12);
        assert!((lo.1 - hi.1).abs() < 1e-12);
        assert!((lo.2 - hi.2).abs() < 1e-12);
    }

    #[test]
    fn exact_for_quadratics() {
        // ∫_0^2 x^2 sin(3x) dx, closed form.
        let t = 3.0;
        let b: f64 = 2.0;
        let exact = (2.0 * b * (t * b).sin() / (t * t))
            + (2.0 / t.powi(3) - b * b / t) * (t * b).cos()
            - 2.0 / t.powi(3);
        let q = FilonSine::sample(|x| x * x, 0.0, b, 4);
        assert!((q.integrate(t) - exact).abs() < 1e-13);
    }

    #[test]
    fn highly_oscillatory_exponential() {
        // ∫_0^1 e^x sin(100 x) dx = [e^x (sin 100x - 100 cos 100x)] / (1 + 100^2)
        let t: f64 = 100.0;
        let e = std::f64::consts::E;
        let exact = (e * ((t).sin() - t * (t).cos()) + t) / (1.0 + t * t);
        let q = FilonSine::sample(f64::exp, 0.0, 1.0, 32);
        let est = q.integrate_with_estimate(t);
        assert!((est.value - exact).abs() < 1e-8, "{} vs {}", est.value, exact);
        assert!(est.error >= (est.value - exact).abs());
    }

    #[test]
    fn zero_frequency_is_zero() {
        let q = FilonSine::sample(|x| 1.0 + x, 0.0, 3.0, 10);
        assert_eq!(q.integrate(0.0), 0.0);
    }
}
