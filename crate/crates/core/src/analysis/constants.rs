use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::functions::f_n_x2;
use crate::coeffseq::{alpha_quartic, alpha_root, check_condition, check_condition_from, CoeffSeq, Condition};
use crate::exactnum::{rat, AlgebraicReal, Rational};

/// A named constant with its defining form and value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofConstant {
    pub name: String,
    /// Defining expression.
    pub exact: String,
    pub value: f64,
    /// Isolating interval, for algebraic and bracketed constants.
    pub interval: Option<(f64, f64)>,
}

/// `sin z - z cos z`.
pub fn sigma_fn(z: f64) -> f64 {
    z.sin() - z * z.cos()
}

/// First positive zero of `sin z - z cos z`, by bisection on `[pi, 3pi/2]`.
pub fn sigma() -> ProofConstant {
    let (mut a, mut b) = (PI, 1.5 * PI);
    debug_assert!(sigma_fn(a) > 0.0 && sigma_fn(b) < 0.0);
    while b - a > 1e-12 {
        let m = 0.5 * (a + b);
        if sigma_fn(m) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    ProofConstant {
        name: "sigma".into(),
        exact: "first positive zero of sin(z) - z cos(z)".into(),
        value: 0.5 * (a + b),
        interval: Some((a, b)),
    }
}

fn pow10_inv(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

/// `alpha` refined to an isolating interval of width at most `1e-12`.
pub fn alpha_refined() -> AlgebraicReal {
    alpha_root().refine(&pow10_inv(12))
}

pub fn alpha() -> ProofConstant {
    let a = alpha_refined();
    let (lo, hi) = a.interval();
    ProofConstant {
        name: "alpha".into(),
        exact: format!("second largest real root of {}", alpha_quartic()),
        value: a.to_f64(),
        interval: Some((crate::exactnum::to_f64(lo), crate::exactnum::to_f64(hi))),
    }
}

/// All real roots of the quartic defining alpha, ascending.
pub fn alpha_quartic_roots() -> Vec<f64> {
    AlgebraicReal::real_roots(&alpha_quartic()).expect("nonzero").iter().map(AlgebraicReal::to_f64).collect()
}

/// `(8 - 9 alpha^2) / (9 alpha^2 - 4)`.
pub fn beta_star() -> f64 {
    let a2 = alpha_root().to_f64().powi(2);
    (8.0 - 9.0 * a2) / (9.0 * a2 - 4.0)
}

/// Exponent thresholds obtained by bisecting the hypothesis predicates over
/// the `j^-gamma` block family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Thresholds {
    pub beta_star: f64,
    /// Smallest exponent meeting `alpha_hypotheses`.
    pub gamma_first: f64,
    /// `log(10/9) / log(3/2)`.
    pub gamma_first_closed_form: f64,
    /// Smallest exponent meeting `kv2_hypotheses`.
    pub gamma_second: f64,
    /// `log(9/7) / log 2`.
    pub gamma_second_closed_form: f64,
}

/// Hypotheses of the first theorem: (v), the sharpened first condition and
/// (kv) from `j = 2`.
pub fn alpha_hypotheses(seq: &CoeffSeq, n: usize) -> bool {
    check_condition(Condition::V, seq, n).holds
        && check_condition(Condition::Thm1First, seq, n).holds
        && check_condition_from(Condition::KV, seq, n, 2).holds
}

/// Hypotheses of the second theorem: (v) and (kv2).
pub fn kv2_hypotheses(seq: &CoeffSeq, n: usize) -> bool {
    check_condition(Condition::V, seq, n).holds && check_condition(Condition::KV2, seq, n).holds
}

fn bisect_exponent(pred: impl Fn(&CoeffSeq) -> bool) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    debug_assert!(!pred(&CoeffSeq::PowerPhi(lo)) && pred(&CoeffSeq::PowerPhi(hi)));
    while hi - lo > 1e-10 {
        let m = 0.5 * (lo + hi);
        if pred(&CoeffSeq::PowerPhi(m)) {
            hi = m;
        } else {
            lo = m;
        }
    }
    hi
}

pub fn thresholds() -> Thresholds {
    const N: usize = 200;
    Thresholds {
        beta_star: beta_star(),
        gamma_first: bisect_exponent(|s| alpha_hypotheses(s, N)),
        gamma_first_closed_form: (10f64 / 9.0).ln() / 1.5f64.ln(),
        gamma_second: bisect_exponent(|s| kv2_hypotheses(s, N)),
        gamma_second_closed_form: (9f64 / 7.0).ln() / 2f64.ln(),
    }
}

/// Every named constant used in the proofs.
pub fn constants_table() -> Vec<ProofConstant> {
    let a = alpha();
    let av = a.value;
    let c = |name: &str, exact: &str, value: f64| ProofConstant {
        name: name.into(),
        exact: exact.into(),
        value,
        interval: None,
    };
    let f20 = f_n_x2(20);
    vec![
        sigma(),
        a,
        c("three_alpha_over_4", "3 alpha / 4", 0.75 * av),
        c("lambda", "2 - 2 alpha", 2.0 - 2.0 * av),
        c("beta_star", "(8 - 9 alpha^2) / (9 alpha^2 - 4)", beta_star()),
        c("f20_x2", "2/15 + (1580/4641) cos(pi/5) + (1820/1881) cos(2pi/5)", f20),
        c("f20_lower", "73542/103909", crate::exactnum::to_f64(&rat(73542, 103909))),
        c("alpha_lower", "3913/5000", 0.7826),
        c("alpha_upper", "7827/10000", 0.7827),
        c("tan_slope", "tan(x/4) <= 0.32 x on [0, pi]", 0.32),
        c("sec_bound", "1/cos(1/3) < 1.06", 1.0 / (1.0f64 / 3.0).cos()),
        c("g_bound_wide", "g <= 0.22 on [0, pi/2]", 0.22),
        c("g_bound_narrow", "g <= 0.06 on [0, 11/9]", 0.06),
        c("h_slope", "h_n(x) <= 0.18 x", 0.18),
        c("gamma_first", "log(10/9) / log(3/2)", (10f64 / 9.0).ln() / 1.5f64.ln()),
        c("gamma_second", "log(9/7) / log 2", (9f64 / 7.0).ln() / 2f64.ln()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_value() {
        let s = sigma();
        assert!((s.value - 4.493409458).abs() < 1e-8);
        assert!(sigma_fn(s.value).abs() < 1e-11);
    }

    #[test]
    fn alpha_value_and_roots() {
        let a = alpha();
        assert!((a.value - 0.78265213271).abs() < 1e-9);
        let (lo, hi) = a.interval.unwrap();
        assert!(hi - lo <= 1e-12 && lo <= a.value && a.value <= hi);
        let r = alpha_quartic_roots();
        for (x, e) in r.iter().zip([-0.17, 0.30, 0.78, 43.76]) {
            assert!((x - e).abs() < 5e-3);
        }
    }

    #[test]
    fn exponent_thresholds() {
        let t = thresholds();
        assert!((t.gamma_first - t.gamma_first_closed_form).abs() < 1e-8);
        assert!((t.gamma_second - t.gamma_second_closed_form).abs() < 1e-8);
        assert!((t.beta_star - 1.64393).abs() < 1e-4);
    }
}
