//! Acceptance run: one PASS/FAIL line per criterion. Each criterion combines
//! the library's reproduction rows with oracles computed here in plain f64,
//! independently of the library code paths.
//!
//! Four criteria contain a literal claim that does not hold as stated. Those
//! rows are listed in `LITERAL_FAILURES`; their criterion prints FAIL, and the
//! run only errors when some other row or any oracle fails.

use std::f64::consts::PI;
use std::process::ExitCode;

use sinecert::analysis;
use sinecert::reproduce::{self, Row, CRITERIA};

/// Grid for sampled minima of sine sums.
const GRID: usize = 20_000;
/// Sampled minima of nonnegative sums are allowed this much rounding.
const SAMPLE_TOL: f64 = 1e-12;
const ALPHA_TOL: f64 = 1e-12;
const SIGMA_TOL: f64 = 1e-12;
const QUAD_TOL: f64 = 1e-10;

const LITERAL_FAILURES: [(u8, &str); 4] = [
    (5, "reconstruction from F1 equals printed P(T)"),
    (9, "2 cos(x) C(n) = 1 - cos(2nx), n <= 30"),
    (10, "dominance c_odd >= inv_sqrt"),
    (11, "gamma_exp = 0.23, N = 60"),
];

fn sine_sum(a: &[f64], x: f64) -> f64 {
    a.iter().enumerate().map(|(i, c)| c * ((i + 1) as f64 * x).sin()).sum()
}

fn sampled_min(a: &[f64], points: usize) -> f64 {
    (1..points).map(|i| sine_sum(a, PI * i as f64 / points as f64)).fold(f64::INFINITY, f64::min)
}

fn gamma(n: usize) -> Vec<f64> {
    (1..=n).map(|k| if k % 2 == 1 { (k + 1) as f64 / k as f64 } else { 1.0 }).collect()
}

fn delta(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            let k = k as f64;
            if k as usize % 2 == 1 {
                (2.0 * k + 1.0) / k
            } else {
                (2.0 * k - 1.0) / k
            }
        })
        .collect()
}

fn phi1(a: f64, n: usize) -> Vec<f64> {
    let mut c = gamma(n);
    c[0] = 2.0 * a;
    if n > 1 {
        c[1] = a;
    }
    c
}

fn power_family(g: f64, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            let w = (k.div_ceil(2) as f64).powf(-g);
            if k % 2 == 1 {
                w
            } else {
                w * (k - 1) as f64 / k as f64
            }
        })
        .collect()
}

fn newton(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, mut x: f64) -> f64 {
    for _ in 0..60 {
        x -= f(x) / df(x);
    }
    x
}

fn alpha_oracle() -> f64 {
    let q = [54675.0, -2442195.0, 2182800.0, -115424.0, -96429.0];
    let f = |x: f64| q.iter().fold(0.0, |s, c| s * x + c);
    let df = |x: f64| q[..4].iter().enumerate().fold(0.0, |s, (i, c)| s * x + (4 - i) as f64 * c);
    newton(f, df, 0.78)
}

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut s = f(a) + f(b);
    for i in 1..panels {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check { name: name.into(), pass, detail }
}

fn oracles(c: u8) -> Vec<Check> {
    match c {
        1 => {
            let g = (1..=30).map(|n| sampled_min(&gamma(n), GRID)).fold(f64::INFINITY, f64::min);
            let d = (1..=30).map(|n| sampled_min(&delta(n), GRID)).fold(f64::INFINITY, f64::min);
            vec![
                check("sampled gamma minima >= 0", g >= -SAMPLE_TOL, format!("{g:.3e}")),
                check("sampled delta minima >= 0", d >= -SAMPLE_TOL, format!("{d:.3e}")),
            ]
        }
        2 => {
            let lo = sampled_min(&phi1(3913.0 / 5000.0, 5), GRID);
            let hi = sampled_min(&phi1(7827.0 / 10000.0, 5), GRID);
            vec![
                check("sampled a = 3913/5000, n = 5 negative", lo < 0.0, format!("{lo:.3e}")),
                check("sampled a = 7827/10000, n = 5 nonnegative", hi >= -SAMPLE_TOL, format!("{hi:.3e}")),
            ]
        }
        3 => {
            let a = alpha_oracle();
            let lib = analysis::alpha().value;
            let below = sampled_min(&phi1(a - 1e-6, 5), 200_000);
            let above = sampled_min(&phi1(a + 1e-6, 5), 200_000);
            vec![
                check("Newton alpha", (a - lib).abs() <= ALPHA_TOL, format!("{a:.14} vs {lib:.14}")),
                check(
                    "alpha is where n = 5 first touches zero",
                    below < 0.0 && above >= -SAMPLE_TOL,
                    format!("{below:.2e}, {above:.2e}"),
                ),
            ]
        }
        4 => {
            let s = newton(|z| z.tan() - z, |z| z.tan().powi(2), 4.49);
            let lib = analysis::sigma().value;
            vec![check("Newton on tan z = z", (s - lib).abs() <= SIGMA_TOL, format!("{s:.14} vs {lib:.14}"))]
        }
        5 => {
            let printed = [
                -45963750.0,
                91927500.0,
                267837423.0,
                367710000.0,
                -1630859769.0,
                551565000.0,
                1171222269.0,
                367710000.0,
                -497656173.0,
                91927500.0,
            ];
            let p = |t: f64| printed.iter().fold(0.0, |s, c| s * t + c);
            let min = (0..=100_000).map(|i| p(i as f64 / 100_000.0)).fold(f64::INFINITY, f64::min);
            let same = analysis::P_PRINTED.iter().zip(printed).all(|(&a, b)| a as f64 == b);
            vec![
                check("printed coefficients transcribed", same, String::new()),
                check("sampled printed P(T) > 0 on [0, 1]", min > 0.0, format!("min {min:.4e}")),
            ]
        }
        6 => {
            let f_even = |n: usize, x: f64| {
                (1..=n / 2).map(|j| ((2 * j - 1) as f64 * x).sin() / (2 * j - 1) as f64).sum::<f64>()
            };
            let f4 = f_even(4, PI / 2.0);
            let f20 = f_even(20, PI / 10.0);
            let integral = |n: usize| {
                simpson(
                    |s| if s == 0.0 { n as f64 / 2.0 } else { (n as f64 * s).sin() / (2.0 * s.sin()) },
                    0.0,
                    2.0 * PI / n as f64,
                    4000,
                )
            };
            let worst =
                [5usize, 7, 21, 64].iter().map(|&n| (integral(n) - analysis::f_n_x2(n)).abs()).fold(0.0, f64::max);
            vec![
                check("direct f_4(pi/2)", (f4 - 2.0 / 3.0).abs() <= 1e-15, format!("{f4:.17}")),
                check("direct f_20(pi/10)", (f20 - analysis::f_n_x2(20)).abs() <= 1e-14, format!("{f20:.15}")),
                check("Simpson integral of sin(ns)/(2 sin s)", worst <= QUAD_TOL, format!("{worst:.2e}")),
            ]
        }
        7 => {
            let m = 43.0;
            let y = |i: f64| (m - 2.0 * i) * PI / (2.0 * m);
            // (-1)^((m+1)/2) = 1 for m = 43
            let g = |a: f64, b: f64| simpson(|t| (m * t).cos() / (2.0 * t.cos()), a, b, 20_000);
            let d12 = g(y(2.0), y(1.0));
            let d56 = g(y(6.0), y(5.0));
            vec![
                check("Simpson g_43(y1) - g_43(y2)", (d12 - 0.21731814075).abs() <= 1e-8, format!("{d12:.13}")),
                check("Simpson g_43(y5) - g_43(y6)", (d56 - 0.059552923006).abs() <= 1e-8, format!("{d56:.13}")),
            ]
        }
        8 => [8usize, 10]
            .iter()
            .map(|&m| {
                let mut a = gamma(5);
                a.resize(m, 0.0);
                a[m - 1] = 6.0 / m as f64;
                let min = sampled_min(&a, GRID);
                check(&format!("sampled m = {m} negative"), min < 0.0, format!("{min:.3e}"))
            })
            .collect(),
        9 => {
            let c = |n: usize, x: f64| (1..=n).map(|k| ((2 * k - 1) as f64 * x).sin()).sum::<f64>();
            let xs = [0.3f64, 0.7, 1.0, 1.9, 2.6];
            let err = |w: fn(f64) -> f64| {
                xs.iter().map(|&x| (2.0 * w(x) * c(3, x) - (1.0 - (6.0 * x).cos())).abs()).fold(0.0, f64::max)
            };
            let lit = err(f64::cos);
            let cor = err(f64::sin);
            let m1 = sampled_min(&[2.0, 1.0, 1.0 + 3f64.sqrt() / 2.0], GRID);
            let m2 = sampled_min(&[3.0, 1.0, 1.5 + 2f64.sqrt()], GRID);
            vec![
                check("literal cos form is off for n = 3", lit.abs() > 0.1, format!("{lit:.4}")),
                check("sin form holds for n = 3", cor.abs() <= 1e-14, format!("{cor:.1e}")),
                check("sampled examples >= 0", m1 >= -SAMPLE_TOL && m2 >= -SAMPLE_TOL, format!("{m1:.2e}, {m2:.2e}")),
            ]
        }
        10 => {
            let c: Vec<f64> = (1..=50)
                .scan(1.0, |p, j| {
                    let v = *p;
                    *p *= (2 * j - 1) as f64 / (2 * j) as f64;
                    Some(v)
                })
                .collect();
            let s: Vec<f64> = (1..=50).map(|j| 1.0 / (j as f64).sqrt()).collect();
            let nonincreasing = |a: &[f64], b: &[f64]| {
                a.iter().zip(b).map(|(x, y)| y / x).collect::<Vec<_>>().windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12))
            };
            vec![
                check("ratios show inv_sqrt >= c_odd", nonincreasing(&s, &c), String::new()),
                check("ratios refute c_odd >= inv_sqrt", !nonincreasing(&c, &s), String::new()),
            ]
        }
        11 => {
            let a = alpha_oracle();
            let beta = (8.0 - 9.0 * a * a) / (9.0 * a * a - 4.0);
            let failing =
                |g: f64| (1..=60).filter(|&n| sampled_min(&power_family(g, n), GRID) < -1e-9).collect::<Vec<_>>();
            let f23 = failing(0.23);
            let f26 = failing(0.26);
            vec![
                check("beta* from Newton alpha", (beta - analysis::beta_star()).abs() <= 1e-10, format!("{beta:.8}")),
                check("sampled failures at 0.23 agree with the scan", f23 == vec![5, 6], format!("{f23:?}")),
                check("sampled 0.26 all pass", f26.is_empty(), format!("{f26:?}")),
            ]
        }
        12 => {
            let mut worst: f64 = 0.0;
            for n in 1..=30usize {
                for i in 1..40 {
                    let x = PI * i as f64 / 40.0;
                    let lhs: f64 = (1..=n).map(|k| (k as f64 * x).sin()).sum();
                    let rhs = (n as f64 * x / 2.0).sin() * ((n + 1) as f64 * x / 2.0).sin() / (x / 2.0).sin();
                    worst = worst.max((lhs - rhs).abs());
                }
            }
            let fejer: Vec<f64> = (1..=40).map(|k| 1.0 / k as f64).collect();
            let phi2: Vec<f64> = gamma(40).iter().zip(&fejer).map(|(g, f)| 2.0 * g - f).collect();
            let phi2_ok = phi2.iter().zip(delta(40)).all(|(a, b)| (a - b).abs() <= 1e-15 * b.abs().max(1.0) * 4.0);
            vec![
                check("Lagrange sine sum by direct summation", worst <= 1e-12, format!("{worst:.2e}")),
                check("2 gamma - fejer = delta coefficientwise", phi2_ok, String::new()),
            ]
        }
        _ => Vec::new(),
    }
}

fn main() -> ExitCode {
    // Honor `cargo test -- --list` and filters without running the suite twice.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let mut unexpected = Vec::new();
    for c in 1..=CRITERIA {
        let rows: Vec<Row> = match reproduce::run_criterion(c) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {c:>2}: FAIL {} (error: {e})", reproduce::title(c));
                unexpected.push(format!("criterion {c}: {e}"));
                continue;
            }
        };
        let checks = oracles(c);
        let pass = rows.iter().all(|r| r.pass) && checks.iter().all(|k| k.pass);
        println!("criterion {c:>2}: {} {}", if pass { "PASS" } else { "FAIL" }, reproduce::title(c));
        for r in rows.iter().filter(|r| !r.pass) {
            let literal = LITERAL_FAILURES.contains(&(c, r.name.as_str()));
            println!(
                "    {} {}: expected {}, observed {}",
                if literal { "literal" } else { "row" },
                r.name,
                r.expected,
                r.observed
            );
            if !literal {
                unexpected.push(format!("criterion {c}: {}", r.name));
            }
        }
        for k in checks.iter().filter(|k| !k.pass) {
            println!("    oracle {}: {}", k.name, k.detail);
            unexpected.push(format!("criterion {c} oracle: {}", k.name));
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: no failures beyond the literal claims listed in LITERAL_FAILURES");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures {unexpected:?}");
        ExitCode::FAILURE
    }
}
