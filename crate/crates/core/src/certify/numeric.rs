use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::trigpoly::{eval_coeffs, SinePoly};

/// Grid and refinement settings for [`numeric_min`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinOptions {
    /// Grid points per `n * max_k` (total `grid_factor * n * max_k + 1`).
    pub grid_factor: usize,
    /// Golden-section iterations around the best grid point.
    pub iterations: usize,
    /// Search interval; `[0, pi]` when absent.
    pub interval: Option<(f64, f64)>,
}

impl Default for MinOptions {
    fn default() -> Self {
        MinOptions { grid_factor: 20, iterations: 40, interval: None }
    }
}

/// Smallest value found, with a Lipschitz lower bound over the grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericMin {
    pub min: f64,
    pub argmin: f64,
    pub grid_step: f64,
    pub grid_points: usize,
    /// `sum k |a_k|`.
    pub derivative_bound: f64,
    /// `min over grid - derivative_bound * grid_step / 2`.
    pub lower_bound: f64,
}

fn highest_index(c: &[f64]) -> usize {
    c.iter().rposition(|&a| a != 0.0).map_or(0, |i| i + 1)
}

fn grid(opts: &MinOptions, n: usize) -> (f64, f64, usize) {
    let (a, b) = opts.interval.unwrap_or((0.0, PI));
    let m = (opts.grid_factor * n.max(1) * n.max(1)).max(16);
    (a, b, m)
}

fn derivative_bound(c: &[f64]) -> f64 {
    c.iter().enumerate().map(|(i, a)| (i + 1) as f64 * a.abs()).sum()
}

/// Golden-section descent on `[lo, hi]` starting from the grid minimum `(x0, f0)`.
fn refine(f: impl Fn(f64) -> f64, lo: f64, hi: f64, x0: f64, f0: f64, iterations: usize) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let (mut best_x, mut best_f) = (x0, f0);
    for _ in 0..iterations {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
        for (x, v) in [(c, fc), (d, fd)] {
            if v < best_f {
                best_x = x;
                best_f = v;
            }
        }
    }
    (best_x, best_f)
}

/// Minimum of `sp` on `[0, pi]` (or `opts.interval`) by uniform sampling and
/// golden-section refinement around the lowest sample.
pub fn numeric_min(sp: &SinePoly, opts: &MinOptions) -> NumericMin {
    let c = sp.coeffs_f64();
    let n = highest_index(&c);
    let c = &c[..n];
    let (a, b, m) = grid(opts, n);
    let h = (b - a) / m as f64;
    let (i, f0) = (0..=m)
        .into_par_iter()
        .map(|i| (i, eval_coeffs(c, a + h * i as f64)))
        .reduce(|| (0, f64::INFINITY), |x, y| if y.1 < x.1 || (y.1 == x.1 && y.0 < x.0) { y } else { x });
    let x0 = a + h * i as f64;
    let lo = (x0 - h).max(a);
    let hi = (x0 + h).min(b);
    let (argmin, min) = refine(|x| eval_coeffs(c, x), lo, hi, x0, f0, opts.iterations);
    let l = derivative_bound(c);
    NumericMin { min, argmin, grid_step: h, grid_points: m + 1, derivative_bound: l, lower_bound: f0 - l * h / 2.0 }
}

/// [`NumericMin`] of every partial sum `n = 1..=coeffs.len()` on a shared
/// grid sized for the longest one.
pub fn partial_sum_minima(coeffs: &[f64], opts: &MinOptions) -> Vec<NumericMin> {
    let nmax = coeffs.len();
    if nmax == 0 {
        return Vec::new();
    }
    let (a, b, m) = grid(opts, nmax);
    let h = (b - a) / m as f64;
    // Per chunk of grid points: running partial sums, tracking the per-n minimum.
    let chunk = 512;
    let best: Vec<(usize, f64)> = (0..=m)
        .collect::<Vec<_>>()
        .par_chunks(chunk)
        .map(|idx| {
            let mut best = vec![(0usize, f64::INFINITY); nmax];
            let mut prefix = vec![0.0f64; nmax];
            for &i in idx {
                let x = a + h * i as f64;
                prefix_sums(coeffs, x, &mut prefix);
                for (bn, &v) in best.iter_mut().zip(&prefix) {
                    if v < bn.1 {
                        *bn = (i, v);
                    }
                }
            }
            best
        })
        .reduce(
            || vec![(0usize, f64::INFINITY); nmax],
            |x, y| {
                x.into_iter().zip(y).map(|(p, q)| if q.1 < p.1 || (q.1 == p.1 && q.0 < p.0) { q } else { p }).collect()
            },
        );
    best.into_par_iter()
        .enumerate()
        .map(|(k, (i, f0))| {
            let c = &coeffs[..=k];
            let x0 = a + h * i as f64;
            let (argmin, min) =
                refine(|x| eval_coeffs(c, x), (x0 - h).max(a), (x0 + h).min(b), x0, f0, opts.iterations);
            let l = derivative_bound(c);
            NumericMin {
                min,
                argmin,
                grid_step: h,
                grid_points: m + 1,
                derivative_bound: l,
                lower_bound: f0 - l * h / 2.0,
            }
        })
        .collect()
}

/// Compensated running sums `sum_{k<=n} c_k sin(kx)` for every `n`.
fn prefix_sums(c: &[f64], x: f64, out: &mut [f64]) {
    if x == 0.0 || x == PI {
        out.iter_mut().for_each(|v| *v = 0.0);
        return;
    }
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for (i, &a) in c.iter().enumerate() {
        if a != 0.0 {
            let term = a * ((i + 1) as f64 * x).sin();
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
        }
        out[i] = sum + comp;
    }
}
