use serde::Serialize;

use super::{partial_sum_minima, MinOptions};
use crate::coeffseq::{sum_coeffs, Coeff, CoeffSeq};
use crate::error::{Error, Result};

/// One-parameter families scanned for the PS boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanParam {
    /// Blocks weighted by `1/sqrt(beta + j)`.
    Beta,
    /// Blocks weighted by `j^-gamma`.
    GammaExp,
}

impl ScanParam {
    pub fn family(self, value: f64) -> CoeffSeq {
        match self {
            ScanParam::Beta => CoeffSeq::ShiftedSqrtPhi(value),
            ScanParam::GammaExp => CoeffSeq::PowerPhi(value),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(ScanParam::Beta),
            "gamma_exp" | "gamma" => Ok(ScanParam::GammaExp),
            _ => Err(Error::Unknown { kind: "scan parameter", name: s.into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanPoint {
    pub value: f64,
    /// Partial-sum indices whose sampled minimum is below `-tol`.
    pub failing: Vec<usize>,
    pub first_failing: Option<usize>,
    /// Smallest sampled value over all partial sums, and where it occurs.
    pub min_value: f64,
    pub min_n: usize,
}

impl ScanPoint {
    pub fn passes(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Numeric PS test of every partial sum `n <= n_max` at one parameter value.
pub fn scan_point(param: ScanParam, value: f64, n_max: usize, tol: f64) -> Result<ScanPoint> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let c: Vec<f64> = param.family(value).coeffs(n_max).iter().map(Coeff::to_f64).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::OutOfDomain(value));
    }
    let mins = partial_sum_minima(&c, &MinOptions::default());
    let failing: Vec<usize> = mins.iter().enumerate().filter(|(_, m)| m.min < -tol).map(|(i, _)| i + 1).collect();
    let (min_n, min_value) = mins.iter().enumerate().map(|(i, m)| (i + 1, m.min)).fold((0, f64::INFINITY), |acc, x| {
        if x.1 < acc.1 {
            x
        } else {
            acc
        }
    });
    Ok(ScanPoint { value, first_failing: failing.first().copied(), failing, min_value, min_n })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub param: ScanParam,
    pub n_max: usize,
    pub tol: f64,
    pub points: Vec<ScanPoint>,
    /// Bisected pass/fail boundary, when the grid contains a transition.
    pub boundary: Option<f64>,
    /// Whether values above the boundary pass.
    pub passes_above: Option<bool>,
}

/// Uniform grid of `steps + 1` values in `[lo, hi]`, then bisection of the
/// outermost pass/fail transition down to `bisect_tol`.
pub fn scan_threshold(
    param: ScanParam,
    lo: f64,
    hi: f64,
    steps: usize,
    n_max: usize,
    tol: f64,
    bisect_tol: f64,
) -> Result<ScanReport> {
    if lo.is_nan() || hi.is_nan() || lo >= hi || steps == 0 {
        return Err(Error::InvalidArgument(format!("empty scan range {lo}:{hi}")));
    }
    let points = (0..=steps)
        .map(|i| scan_point(param, lo + (hi - lo) * i as f64 / steps as f64, n_max, tol))
        .collect::<Result<Vec<_>>>()?;
    let last = points.len() - 1;
    let bracket = if points[last].passes() {
        points.iter().rposition(|p| !p.passes()).map(|i| (i, i + 1, true))
    } else if points[0].passes() {
        points.iter().position(|p| !p.passes()).map(|i| (i - 1, i, false))
    } else {
        None
    };
    let (boundary, passes_above) = match bracket {
        None => (None, None),
        Some((i, j, above)) => {
            let (mut a, mut b) = (points[i].value, points[j].value);
            while b - a > bisect_tol {
                let m = 0.5 * (a + b);
                let ok = scan_point(param, m, n_max, tol)?.passes();
                if ok == above {
                    b = m;
                } else {
                    a = m;
                }
            }
            (Some(0.5 * (a + b)), Some(above))
        }
    };
    Ok(ScanReport { param, n_max, tol, points, boundary, passes_above })
}

/// Alternating sums `a_2 - a_3 + a_4 - ... ` of even length for the two
/// extremal families; a cosine analogue would need them nonnegative.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CosineAnalogReport {
    pub max_len: usize,
    pub gamma_sums: Vec<Coeff>,
    pub delta_sums: Vec<Coeff>,
    /// Every listed sum is negative.
    pub holds: bool,
}

pub fn cosine_analog_check(max_len: usize) -> Result<CosineAnalogReport> {
    if max_len < 2 || !max_len.is_multiple_of(2) {
        return Err(Error::InvalidArgument("length must be even and at least 2".into()));
    }
    let sums = |seq: &CoeffSeq| -> Vec<Coeff> {
        (1..=max_len / 2)
            .map(|half| {
                sum_coeffs((0..2 * half).map(|i| {
                    let c = seq.coeff(2 + i);
                    if i % 2 == 0 {
                        c
                    } else {
                        Coeff::Exact(-c.as_exact().expect("exact family").clone())
                    }
                }))
            })
            .collect()
    };
    let gamma_sums = sums(&CoeffSeq::Gamma);
    let delta_sums = sums(&CoeffSeq::Delta);
    let holds = gamma_sums.iter().chain(&delta_sums).all(Coeff::is_negative);
    Ok(CosineAnalogReport { max_len, gamma_sums, delta_sums, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn cosine_analog_first_terms() {
        let r = cosine_analog_check(40).unwrap();
        assert!(r.holds);
        assert_eq!(r.gamma_sums[0], Coeff::Exact(rat(-1, 3)));
        assert_eq!(r.delta_sums[0], Coeff::Exact(rat(-5, 6)));
        assert!(cosine_analog_check(3).is_err());
    }

    #[test]
    fn gamma_exponent_point() {
        let p = scan_point(ScanParam::GammaExp, 0.26, 30, 1e-9).unwrap();
        assert!(p.passes());
        let q = scan_point(ScanParam::GammaExp, 0.20, 30, 1e-9).unwrap();
        assert!(!q.passes());
    }
}
