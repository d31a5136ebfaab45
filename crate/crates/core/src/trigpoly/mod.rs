//! Sine polynomials `sum a_k sin(kx)`: evaluation, reduction to an algebraic
//! polynomial in `cos x`, block decompositions and closed-form identities.

mod blocks;
mod identities;

use std::f64::consts::PI;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{to_f64, Rational, UniPoly};

pub use blocks::{block_decompose, phi_theta, BlockForm, BlockKind};
pub use identities::{closed_form, Identity};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "flavor", content = "coeffs", rename_all = "lowercase")]
enum Coeffs {
    Exact(#[serde(serialize_with = "ser_rationals")] Vec<Rational>),
    Numeric(Vec<f64>),
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Finite sine polynomial. Entry `i` of the coefficient list multiplies
/// `sin((i + 1) x)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SinePoly {
    #[serde(flatten)]
    coeffs: Coeffs,
}

impl SinePoly {
    pub fn exact(coeffs: Vec<Rational>) -> Self {
        SinePoly { coeffs: Coeffs::Exact(coeffs) }
    }

    /// Non-finite entries are rejected.
    pub fn numeric(coeffs: Vec<f64>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite coefficient {bad}")));
        }
        Ok(SinePoly { coeffs: Coeffs::Numeric(coeffs) })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.coeffs, Coeffs::Exact(_))
    }

    /// Highest index `n` (trailing zeros included).
    pub fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Exact(c) => c.len(),
            Coeffs::Numeric(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact_coeffs(&self) -> Option<&[Rational]> {
        match &self.coeffs {
            Coeffs::Exact(c) => Some(c),
            Coeffs::Numeric(_) => None,
        }
    }

    /// Coefficient of `sin(kx)`, `k >= 1`, as a double.
    pub fn coeff_f64(&self, k: usize) -> f64 {
        if k == 0 {
            return 0.0;
        }
        match &self.coeffs {
            Coeffs::Exact(c) => c.get(k - 1).map(to_f64).unwrap_or(0.0),
            Coeffs::Numeric(c) => c.get(k - 1).copied().unwrap_or(0.0),
        }
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        (1..=self.len()).map(|k| self.coeff_f64(k)).collect()
    }

    /// First `n` terms.
    pub fn truncate(&self, n: usize) -> SinePoly {
        let coeffs = match &self.coeffs {
            Coeffs::Exact(c) => Coeffs::Exact(c.iter().take(n).cloned().collect()),
            Coeffs::Numeric(c) => Coeffs::Numeric(c.iter().take(n).copied().collect()),
        };
        SinePoly { coeffs }
    }

    /// Coefficient-wise sum; exact only if both operands are exact.
    pub fn add(&self, other: &SinePoly) -> SinePoly {
        let n = self.len().max(other.len());
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => SinePoly::exact(
                (0..n)
                    .map(|i| {
                        a.get(i).cloned().unwrap_or_else(Rational::zero)
                            + b.get(i).cloned().unwrap_or_else(Rational::zero)
                    })
                    .collect(),
            ),
            _ => {
                SinePoly { coeffs: Coeffs::Numeric((1..=n).map(|k| self.coeff_f64(k) + other.coeff_f64(k)).collect()) }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SinePoly {
        match &self.coeffs {
            Coeffs::Exact(a) => SinePoly::exact(a.iter().map(|v| v * c).collect()),
            Coeffs::Numeric(a) => SinePoly { coeffs: Coeffs::Numeric(a.iter().map(|v| v * to_f64(c)).collect()) },
        }
    }

    /// `sum a_k sin(kx)`; see [`eval_coeffs`].
    pub fn eval(&self, x: f64) -> f64 {
        match &self.coeffs {
            Coeffs::Numeric(c) => eval_coeffs(c, x),
            Coeffs::Exact(_) => eval_coeffs(&self.coeffs_f64(), x),
        }
    }

    /// `p` with `sum a_k sin(kx) = sin(x) p(cos x)`, built from the Chebyshev
    /// recurrence `U_k = 2Y U_{k-1} - U_{k-2}` and `p = sum a_k U_{k-1}`.
    pub fn to_algebraic(&self) -> Result<UniPoly> {
        let coeffs = self.exact_coeffs().ok_or(Error::ExactRequired)?;
        let two_y = UniPoly::new(vec![Rational::zero(), Rational::from_integer(2.into())]);
        let mut prev = UniPoly::zero();
        let mut cur = UniPoly::one();
        let mut acc = UniPoly::zero();
        for a in coeffs {
            if !a.is_zero() {
                acc = &acc + &cur.scale(a);
            }
            let next = &(&two_y * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(acc)
    }

    /// `x -> pi - x`: `b_k = (-1)^(k+1) a_k`.
    pub fn reflect(&self) -> SinePoly {
        let coeffs = match &self.coeffs {
            Coeffs::Exact(c) => {
                Coeffs::Exact(c.iter().enumerate().map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a }).collect())
            }
            Coeffs::Numeric(c) => {
                Coeffs::Numeric(c.iter().enumerate().map(|(i, a)| if i % 2 == 0 { *a } else { -a }).collect())
            }
        };
        SinePoly { coeffs }
    }

    /// `sum k |a_k|`, a Lipschitz constant on the real line.
    pub fn derivative_bound(&self) -> f64 {
        (1..=self.len()).map(|k| k as f64 * self.coeff_f64(k).abs()).sum()
    }
}

/// `sum coeffs[k-1] sin(kx)` with Neumaier-compensated summation and every
/// `sin(kx)` evaluated directly. Exactly zero at `x = 0` and `x = pi`.
pub fn eval_coeffs(coeffs: &[f64], x: f64) -> f64 {
    if x == 0.0 || x == PI {
        return 0.0;
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (i, &a) in coeffs.iter().enumerate() {
        if a == 0.0 {
            continue;
        }
        let term = a * ((i + 1) as f64 * x).sin();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Exact sine polynomial from integer-ratio pairs.
pub fn sine_poly(pairs: &[(i64, i64)]) -> SinePoly {
    SinePoly::exact(pairs.iter().map(|&(n, d)| crate::exactnum::rat(n, d)).collect())
}

/// `sin x + sin 3x + ... + sin((2n-1)x)`.
pub fn odd_sine_comb(n: usize) -> SinePoly {
    SinePoly::exact((1..2 * n).map(|k| if k % 2 == 1 { Rational::one() } else { Rational::zero() }).collect())
}
