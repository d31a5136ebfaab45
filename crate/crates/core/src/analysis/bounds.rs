use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::Serialize;

use super::functions::{f1_tail, g_critical_point, g_hat};

/// Grid density for the bound sweeps.
const PER_UNIT: f64 = 10_000.0;

/// `lhs(x) <= rhs(x)` on an interval, checked on a grid with refinement at
/// the tightest sample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
    /// Smallest `rhs - lhs` found.
    pub margin: f64,
    pub at: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TailReport {
    pub checks: Vec<BoundCheck>,
}

impl TailReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Minimum of `slack` over `[a, b]`: grid, then golden-section around the
/// lowest sample.
fn min_slack(slack: &(dyn Fn(f64) -> f64 + Sync), a: f64, b: f64) -> (f64, f64) {
    let m = (((b - a) * PER_UNIT).ceil() as usize).max(16);
    let h = (b - a) / m as f64;
    let (i, v) = (0..=m)
        .into_par_iter()
        .map(|i| (i, slack(a + h * i as f64)))
        .reduce(|| (0, f64::INFINITY), |x, y| if y.1 < x.1 || (y.1 == x.1 && y.0 < x.0) { y } else { x });
    let (mut lo, mut hi) = ((a + h * (i as f64 - 1.0)).max(a), (a + h * (i as f64 + 1.0)).min(b));
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut best_x, mut best_v) = (a + h * i as f64, v);
    for _ in 0..60 {
        let c = hi - g * (hi - lo);
        let d = lo + g * (hi - lo);
        let (fc, fd) = (slack(c), slack(d));
        for (x, f) in [(c, fc), (d, fd)] {
            if f < best_v {
                best_x = x;
                best_v = f;
            }
        }
        if fc < fd {
            hi = d;
        } else {
            lo = c;
        }
    }
    (best_v, best_x)
}

fn check(name: &str, slack: &(dyn Fn(f64) -> f64 + Sync), a: f64, b: f64) -> BoundCheck {
    let (margin, at) = min_slack(slack, a, b);
    BoundCheck { name: name.into(), holds: margin >= 0.0, margin, at }
}

/// Largest of `g_m` over `[0, upper]`: the grid maximum combined with the
/// values at the critical points inside the interval.
pub fn g_max(m: usize, upper: f64) -> (f64, f64) {
    let g = |y: f64| g_hat(m, y.clamp(0.0, FRAC_PI_2)).expect("odd order");
    let (neg, at) = min_slack(&|y| -g(y), 0.0, upper);
    let mut best = (-neg, at);
    for i in 1..=(m - 1) / 2 {
        let y = g_critical_point(m, i);
        if y <= upper {
            let v = g(y);
            if v > best.0 {
                best = (v, y);
            }
        }
    }
    best
}

/// Numeric checks of the auxiliary bounds used in the tail estimates.
pub fn tail_bound_checks() -> TailReport {
    let mut checks = vec![
        check("F1 >= 0 on [0, pi]", &f1_tail, 0.0, PI),
        check("tan(x/4) <= 0.32 x on [0, pi]", &|x: f64| 0.32 * x - (x / 4.0).tan(), 0.0, PI),
        check("1/cos(t) <= 1.06 on [0, 1/3]", &|t: f64| 1.06 - 1.0 / t.cos(), 0.0, 1.0 / 3.0),
    ];
    let odd: Vec<usize> = (43..=201).step_by(2).collect();
    for (bound, upper, label) in
        [(0.22, FRAC_PI_2, "g <= 0.22 on [0, pi/2]"), (0.06, 11.0 / 9.0, "g <= 0.06 on [0, 11/9]")]
    {
        let worst = odd
            .par_iter()
            .map(|&m| {
                let (v, y) = g_max(m, upper);
                (bound - v, y, m)
            })
            .reduce(|| (f64::INFINITY, 0.0, 0), |x, y| if y.0 < x.0 { y } else { x });
        checks.push(BoundCheck {
            name: format!("{label}, odd m in 43..=201 (tightest m = {})", worst.2),
            holds: worst.0 >= 0.0,
            margin: worst.0,
            at: worst.1,
        });
    }
    TailReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tan_bound_endpoint() {
        let c = check("tan", &|x: f64| 0.32 * x - (x / 4.0).tan(), 0.0, PI);
        assert!(c.holds);
    }

    #[test]
    fn g43_maxima() {
        let (v, y) = g_max(43, FRAC_PI_2);
        assert!(v <= 0.22);
        assert!((y - g_critical_point(43, 1)).abs() < 1e-3);
        assert!(g_max(43, 11.0 / 9.0).0 <= 0.06);
    }
}
