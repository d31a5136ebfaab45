use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::Serialize;

use super::quad::integrate;
use crate::error::{Error, Result};

const QUAD_TOL: f64 = 1e-13;

fn integer_order(n: f64) -> Option<u64> {
    (n.fract() == 0.0 && (1.0..1e9).contains(&n)).then_some(n as u64)
}

/// `int_0^x sin(ns) / (2 sin s) ds` for real `n > 0`, `x` in `[0, pi]`.
///
/// Integer orders use the finite trigonometric sums: `sum_{j<=n/2} sin((2j-1)x)/(2j-1)`
/// for even `n`, `x/2 + sum_{j<=(n-1)/2} sin(2jx)/(2j)` for odd `n`. Other orders
/// are integrated numerically; there the integrand is singular at `pi`.
pub fn f_n(n: f64, x: f64) -> Result<f64> {
    if n.is_nan() || n <= 0.0 || !n.is_finite() {
        return Err(Error::OutOfDomain(n));
    }
    if !(0.0..=PI).contains(&x) {
        return Err(Error::OutOfDomain(x));
    }
    match integer_order(n) {
        Some(m) if m % 2 == 0 => Ok((1..=m / 2).map(|j| ((2 * j - 1) as f64 * x).sin() / (2 * j - 1) as f64).sum()),
        Some(m) => Ok(x / 2.0 + (1..=(m - 1) / 2).map(|j| ((2 * j) as f64 * x).sin() / (2 * j) as f64).sum::<f64>()),
        None if x == PI => Err(Error::OutOfDomain(x)),
        None => Ok(f_n_quadrature(n, x)),
    }
}

/// Numerical integral of `sin(ns) / (2 sin s)` on `[0, x]`, `x < pi`.
pub fn f_n_quadrature(n: f64, x: f64) -> f64 {
    let kernel = move |s: f64| if s.abs() < 1e-12 { n / 2.0 } else { (n * s).sin() / (2.0 * s.sin()) };
    let panels = ((x * n.max(1.0)) / PI).ceil() as usize + 1;
    integrate(&kernel, 0.0, x, QUAD_TOL, panels)
}

/// Values of a function at its critical points, with extremum labels.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalProfile {
    pub order: usize,
    pub points: Vec<f64>,
    pub values: Vec<f64>,
    /// `"max"` or `"min"` per point.
    pub labels: Vec<&'static str>,
    /// The local minima increase from left to right.
    pub minima_increasing: bool,
    pub smallest_minimum: f64,
}

/// Critical points `x_j = j pi / n` of `f_n` in `(0, pi/2]`; odd `j` are
/// maxima and even `j` minima.
pub fn f_n_profile(n: usize) -> Result<CriticalProfile> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("order {n} below 4")));
    }
    let mut points = Vec::new();
    let mut values = Vec::new();
    let mut labels = Vec::new();
    let mut j = 1;
    while 2 * j <= n {
        let x = j as f64 * PI / n as f64;
        points.push(x);
        values.push(f_n(n as f64, x)?);
        labels.push(if j % 2 == 1 { "max" } else { "min" });
        j += 1;
    }
    let minima: Vec<f64> = values.iter().zip(&labels).filter(|(_, l)| **l == "min").map(|(v, _)| *v).collect();
    Ok(CriticalProfile {
        order: n,
        minima_increasing: minima.windows(2).all(|w| w[0] < w[1]),
        smallest_minimum: minima.iter().copied().fold(f64::INFINITY, f64::min),
        points,
        values,
        labels,
    })
}

/// `f_n(2 pi / n)`.
pub fn f_n_x2(n: usize) -> f64 {
    f_n(n as f64, 2.0 * PI / n as f64).expect("in domain")
}

fn check_hat(m: usize, y: f64) -> Result<()> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("order {m} must be odd and at least 3")));
    }
    if !(0.0..=FRAC_PI_2).contains(&y) {
        return Err(Error::OutOfDomain(y));
    }
    Ok(())
}

/// `(-1)^((m+1)/2) int_0^y cos(mt) / (2 cos t) dt`, via `f_m(pi/2 - y) - f_m(pi/2)`.
pub fn g_hat(m: usize, y: f64) -> Result<f64> {
    check_hat(m, y)?;
    Ok(f_n(m as f64, FRAC_PI_2 - y)? - f_n(m as f64, FRAC_PI_2)?)
}

/// The same integral by direct quadrature.
pub fn g_hat_quadrature(m: usize, y: f64) -> Result<f64> {
    check_hat(m, y)?;
    let mf = m as f64;
    let sign = if m.div_ceil(2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let kernel = move |t: f64| {
        let c = t.cos();
        if c.abs() < 1e-12 {
            // removable: cos(mt)/cos(t) -> m (-1)^((m-1)/2) at pi/2
            let s = if ((m - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            mf * s / 2.0
        } else {
            (mf * t).cos() / (2.0 * c)
        }
    };
    let panels = ((y * mf) / PI).ceil() as usize + 1;
    Ok(sign * integrate(&kernel, 0.0, y, QUAD_TOL, panels))
}

/// Critical point `y_i = (m - 2i) pi / (2m)`, numbered from the right.
pub fn g_critical_point(m: usize, i: usize) -> f64 {
    (m as f64 - 2.0 * i as f64) * PI / (2.0 * m as f64)
}

/// `g_m(y_i) - g_m(y_j)`.
pub fn g_difference(m: usize, i: usize, j: usize) -> Result<f64> {
    Ok(g_hat(m, g_critical_point(m, i))? - g_hat(m, g_critical_point(m, j))?)
}

/// `h_n(t) = 1/(2n sin(t/n)) - 1/(2(n+1) sin(t/(n+1)))`, evaluated without
/// cancellation for small `t`.
pub fn h_n(n: usize, t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let (a, b) = (n as f64, n as f64 + 1.0);
    // m sin(t/m) = t + d(m); h = (d(b) - d(a)) / (2 (t + d(a)) (t + d(b)))
    let d = |m: f64| m * sin_minus_id(t / m);
    let (da, db) = (d(a), d(b));
    (db - da) / (2.0 * (t + da) * (t + db))
}

/// `sin(u) - u`, accurate for small `u`.
fn sin_minus_id(u: f64) -> f64 {
    if u.abs() > 0.5 {
        return u.sin() - u;
    }
    let u2 = u * u;
    let mut term = -u * u2 / 6.0;
    let mut sum = term;
    let mut k = 3.0;
    while term.abs() > 1e-18 * sum.abs() {
        term *= -u2 / ((k + 1.0) * (k + 2.0));
        sum += term;
        k += 2.0;
    }
    sum
}

/// `xi` in its usual displayed form:
/// `2cos^2(t/n) + t sin^2(t/n) - 2n cos(t/n) sin(t/n)`.
pub fn xi_displayed(n: usize, t: f64) -> f64 {
    let u = t / n as f64;
    2.0 * u.cos().powi(2) + t * u.sin().powi(2) - 2.0 * n as f64 * u.cos() * u.sin()
}

/// Numerator of `-d^2 k_n / dn dt` over `2 n^4 sin^3(t/n)`:
/// `t sin^2(t/n) + 2t cos^2(t/n) - 2n cos(t/n) sin(t/n)`.
pub fn xi(n: usize, t: f64) -> f64 {
    let u = t / n as f64;
    t * u.sin().powi(2) + 2.0 * t * u.cos().powi(2) - 2.0 * n as f64 * u.cos() * u.sin()
}

/// `3 sin(t/n) - (2t/n) cos(t/n)`, with `xi' = sin(t/n) xi_2`.
pub fn xi2(n: usize, t: f64) -> f64 {
    let u = t / n as f64;
    3.0 * u.sin() - 2.0 * u * u.cos()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HMonotonicity {
    pub n_from: usize,
    pub n_to: usize,
    pub grid_points: usize,
    pub positive: bool,
    pub increasing: bool,
    pub xi_nonneg: bool,
    pub xi2_nonneg: bool,
    /// First `(n, t)` where any check failed.
    pub first_failure: Option<(usize, f64)>,
    /// Value of the displayed form at `t = 0` (independent of `n`).
    pub xi_displayed_at_zero: f64,
    /// Smallest value of the displayed form over the grid.
    pub xi_displayed_min: f64,
}

impl HMonotonicity {
    pub fn holds(&self) -> bool {
        self.positive && self.increasing && self.xi_nonneg && self.xi2_nonneg
    }
}

/// Positivity and monotonicity of `h_n` on `(0, 2 pi]`, and the signs of
/// `xi`, `xi_2` on `[0, 2 pi]`, for `n` in `n_from..=n_to`.
pub fn h_k_monotonicity(n_from: usize, n_to: usize) -> Result<HMonotonicity> {
    if n_from < 4 || n_to < n_from {
        return Err(Error::InvalidArgument(format!("range {n_from}..={n_to}")));
    }
    const GRID: usize = 4000;
    let step = 2.0 * PI / GRID as f64;
    struct Row {
        positive: bool,
        increasing: bool,
        xi: bool,
        xi2: bool,
        failure: Option<f64>,
        disp_min: f64,
    }
    let rows: Vec<(usize, Row)> = (n_from..=n_to)
        .into_par_iter()
        .map(|n| {
            let mut row =
                Row { positive: true, increasing: true, xi: true, xi2: true, failure: None, disp_min: f64::INFINITY };
            let mut prev = 0.0;
            for i in 0..=GRID {
                let t = step * i as f64;
                let h = h_n(n, t);
                if i > 0 && h <= 0.0 {
                    row.positive = false;
                    row.failure.get_or_insert(t);
                }
                if i > 1 && h <= prev {
                    row.increasing = false;
                    row.failure.get_or_insert(t);
                }
                prev = h;
                if xi(n, t) < -1e-13 {
                    row.xi = false;
                    row.failure.get_or_insert(t);
                }
                if xi2(n, t) < -1e-13 {
                    row.xi2 = false;
                    row.failure.get_or_insert(t);
                }
                row.disp_min = row.disp_min.min(xi_displayed(n, t));
            }
            (n, row)
        })
        .collect();
    Ok(HMonotonicity {
        n_from,
        n_to,
        grid_points: GRID + 1,
        positive: rows.iter().all(|r| r.1.positive),
        increasing: rows.iter().all(|r| r.1.increasing),
        xi_nonneg: rows.iter().all(|r| r.1.xi),
        xi2_nonneg: rows.iter().all(|r| r.1.xi2),
        first_failure: rows.iter().find_map(|(n, r)| r.failure.map(|t| (*n, t))),
        xi_displayed_at_zero: xi_displayed(n_from, 0.0),
        xi_displayed_min: rows.iter().map(|r| r.1.disp_min).fold(f64::INFINITY, f64::min),
    })
}

/// `73542/103909 - tan(x/4)/2 - (4347/10000)(sin x + sin(2x)/2)`.
pub fn f1_tail(x: f64) -> f64 {
    73542.0 / 103909.0 - (x / 4.0).tan() / 2.0 - 0.4347 * (x.sin() + (2.0 * x).sin() / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_and_endpoints() {
        assert!((f_n(4.0, FRAC_PI_2).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(f_n(7.0, 0.0).unwrap(), 0.0);
        assert_eq!(f_n(4.5, 0.0).unwrap(), 0.0);
        assert!(f_n(4.0, 3.5).is_err());
        assert!(f_n(4.5, PI).is_err());
    }

    #[test]
    fn integer_orders_match_quadrature() {
        for n in [3.0, 4.0, 9.0, 20.0, 37.0] {
            for x in [0.1, 0.7, 1.5, 2.9] {
                let closed = f_n(n, x).unwrap();
                assert!((closed - f_n_quadrature(n, x)).abs() < 1e-10, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn reflection_matches_quadrature() {
        for m in [3, 5, 7, 43] {
            for y in [0.1, 0.5, 1.0, 1.5] {
                let a = g_hat(m, y).unwrap();
                let b = g_hat_quadrature(m, y).unwrap();
                assert!((a - b).abs() < 1e-10, "m={m} y={y}: {a} vs {b}");
            }
        }
        assert!(g_hat(4, 0.1).is_err());
        assert_eq!(g_hat(43, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn xi_is_the_mixed_derivative_numerator() {
        let k = |n: f64, t: f64| 1.0 / (2.0 * n * (t / n).sin());
        for n in [4usize, 9, 30] {
            for t in [0.5, 2.0, 5.5] {
                let (nf, e) = (n as f64, 1e-4);
                let mixed = (k(nf + e, t + e) - k(nf + e, t - e) - k(nf - e, t + e) + k(nf - e, t - e)) / (4.0 * e * e);
                let u = t / nf;
                let predicted = xi(n, t) / (2.0 * nf.powi(4) * u.sin().powi(3));
                assert!((-mixed - predicted).abs() < 1e-5 * predicted.abs().max(1e-3), "n={n} t={t}");
            }
        }
        assert_eq!(xi(5, 0.0), 0.0);
        assert_eq!(xi_displayed(5, 0.0), 2.0);
    }

    #[test]
    fn h_small_t_is_stable() {
        let t = 1e-6;
        let direct = 1.0 / (2.0 * 4.0 * (t / 4.0f64).sin()) - 1.0 / (2.0 * 5.0 * (t / 5.0f64).sin());
        assert!(h_n(4, t) > 0.0);
        assert!((h_n(4, 1.0) - (1.0 / (8.0 * 0.25f64.sin()) - 1.0 / (10.0 * 0.2f64.sin()))).abs() < 1e-15);
        assert!(direct.abs() < 1e-6);
    }

    #[test]
    fn profile_of_f23() {
        let p = f_n_profile(23).unwrap();
        assert!(p.minima_increasing);
        assert_eq!(p.smallest_minimum, p.values[1]);
    }
}
