//! Positivity certificates for sine polynomials and their partial sums.

mod numeric;
mod scan;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeffseq::{Coeff, CoeffSeq};
use crate::error::{Error, Result};
use crate::exactnum::{is_nonneg_on, rat, to_f64, Nonnegativity, Rational, SturmEvidence, UniPoly};
use crate::trigpoly::SinePoly;

pub use numeric::{numeric_min, partial_sum_minima, MinOptions, NumericMin};
pub use scan::{cosine_analog_check, scan_point, scan_threshold, CosineAnalogReport, ScanParam, ScanPoint, ScanReport};

/// Values below `-NUMERIC_TOL` count as violations in numeric mode.
pub const NUMERIC_TOL: f64 = 1e-9;

/// Rational just below the critical constant alpha.
pub fn alpha_lower() -> Rational {
    rat(3913, 5000)
}

/// Rational just above the critical constant alpha.
pub fn alpha_upper() -> Rational {
    rat(7827, 10000)
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict")]
pub enum Certificate {
    /// `sum a_k sin(kx) = sin(x) p(cos x)` with `p >= 0` on `[-1, 1]`, proved
    /// by Sturm counting. `evidence` is absent for the zero polynomial.
    ExactNonneg {
        #[serde(serialize_with = "ser_display")]
        poly: UniPoly,
        evidence: Option<SturmEvidence>,
    },
    /// Sampled minimum above `-NUMERIC_TOL`. Not a proof.
    NumericEvidence(NumericMin),
    /// A point `x` in `(0, pi)` where the sum is negative.
    Violation {
        x: f64,
        value: f64,
        /// Exact witness `Y = cos x` and `p(Y)`, when found by Sturm.
        y_witness: Option<String>,
        p_value: Option<String>,
    },
}

impl Certificate {
    pub fn passes(&self) -> bool {
        !matches!(self, Certificate::Violation { .. })
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Certificate::ExactNonneg { .. } => "ExactNonneg",
            Certificate::NumericEvidence(_) => "NumericEvidence",
            Certificate::Violation { .. } => "Violation",
        }
    }
}

/// Decides nonnegativity on `[0, pi]` exactly through the image in `cos x`.
pub fn certify_nonneg_exact(sp: &SinePoly) -> Result<Certificate> {
    let p = sp.to_algebraic()?;
    if p.is_zero() {
        return Ok(Certificate::ExactNonneg { poly: p, evidence: None });
    }
    let one = Rational::one();
    Ok(match is_nonneg_on(&p, &-one.clone(), &one)? {
        Nonnegativity::Nonneg(ev) => Certificate::ExactNonneg { poly: p, evidence: Some(ev) },
        Nonnegativity::Negative { witness, value } => {
            let y = to_f64(&witness);
            // sin(x) p(cos x) with sin(x) = sqrt(1 - Y^2) > 0 for interior Y.
            let value_f = (1.0 - y * y).sqrt() * to_f64(&value);
            Certificate::Violation {
                x: y.acos(),
                value: value_f,
                y_witness: Some(witness.to_string()),
                p_value: Some(value.to_string()),
            }
        }
    })
}

/// Numeric certificate from a sampled minimum.
pub fn certify_numeric(m: NumericMin, tol: f64) -> Certificate {
    if m.min >= -tol {
        Certificate::NumericEvidence(m)
    } else {
        Certificate::Violation { x: m.argmin, value: m.min, y_witness: None, p_value: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact when every coefficient is rational, numeric otherwise.
    Auto,
    Exact,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsEntry {
    pub n: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsReport {
    pub family: String,
    pub n_max: usize,
    pub mode: Mode,
    pub entries: Vec<PsEntry>,
    pub first_violation: Option<usize>,
}

impl PsReport {
    pub fn all_pass(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn violations(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| !e.certificate.passes()).map(|e| e.n).collect()
    }
}

/// Certifies every partial sum `n = 1..=n_max` of `seq`.
pub fn certify_ps(seq: &CoeffSeq, n_max: usize, mode: Mode) -> Result<PsReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let exact = match mode {
        Mode::Auto => seq.is_exact(),
        Mode::Exact if !seq.is_exact() => return Err(Error::ExactRequired),
        Mode::Exact => true,
        Mode::Numeric => false,
    };
    let certificates: Vec<Certificate> = if exact {
        (1..=n_max).into_par_iter().map(|n| certify_nonneg_exact(&seq.partial_sum(n))).collect::<Result<_>>()?
    } else {
        let c: Vec<f64> = seq.coeffs(n_max).iter().map(Coeff::to_f64).collect();
        if let Some(bad) = c.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite coefficient {bad}")));
        }
        partial_sum_minima(&c, &MinOptions::default()).into_iter().map(|m| certify_numeric(m, NUMERIC_TOL)).collect()
    };
    let entries: Vec<PsEntry> =
        certificates.into_iter().enumerate().map(|(i, certificate)| PsEntry { n: i + 1, certificate }).collect();
    let first_violation = entries.iter().find(|e| !e.certificate.passes()).map(|e| e.n);
    Ok(PsReport {
        family: seq.id(),
        n_max,
        mode: if exact { Mode::Exact } else { Mode::Numeric },
        entries,
        first_violation,
    })
}

/// Whether the exact image `p(Y)` is nonnegative on `[-1, 1]`.
pub fn algebraic_nonneg(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let one = Rational::one();
    Ok(is_nonneg_on(p, &-one.clone(), &one)?.holds())
}
