//! Closed-form coefficient families and the predicates stated over them.

mod alpha;
mod conditions;
mod order;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{from_f64, parse_rational, rat, to_f64, Rational};
use crate::trigpoly::SinePoly;

pub use alpha::{alpha_quartic, alpha_root};
pub use conditions::{check_condition, check_condition_from, Condition, ConditionReport};
pub use order::{dominance, dominates, dominates_slices, odd_order_check, DominanceReport, OrderMatrix};

/// A single coefficient: exact whenever the family parameters are rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Coeff {
    Exact(Rational),
    Real(f64),
}

impl Coeff {
    pub fn to_f64(&self) -> f64 {
        match self {
            Coeff::Exact(r) => to_f64(r),
            Coeff::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Coeff::Exact(r) => Some(r),
            Coeff::Real(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(r) => r.is_zero(),
            Coeff::Real(x) => *x == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Exact(r) => r.is_negative(),
            Coeff::Real(x) => *x < 0.0,
        }
    }

    pub fn int(n: i64) -> Self {
        Coeff::Exact(rat(n, 1))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Exact(r) => write!(f, "{r}"),
            Coeff::Real(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Coeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coeff::Exact(r) => s.serialize_str(&r.to_string()),
            Coeff::Real(x) => s.serialize_f64(*x),
        }
    }
}

/// Sum of coefficients, exact when every operand is.
pub fn sum_coeffs(items: impl IntoIterator<Item = Coeff>) -> Coeff {
    let mut exact = Some(Rational::zero());
    let mut real = 0.0;
    for c in items {
        real += c.to_f64();
        exact = match (exact, &c) {
            (Some(acc), Coeff::Exact(r)) => Some(acc + r),
            _ => None,
        };
    }
    exact.map(Coeff::Exact).unwrap_or(Coeff::Real(real))
}

/// Coefficient families, each producing `a_k` for any `k >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum CoeffSeq {
    /// Maximal Vietoris sequence `1, 1/2, 1/2, 3/8, 3/8, 5/16, ...`.
    VietorisC,
    /// Maximal sequence of the relaxed-monotonicity theorem:
    /// `a_{2j-1} = 1/sqrt(j)`, `a_{2j} = (2j-1)/(2j) a_{2j-1}`.
    TheoremCMax,
    /// `(k+1)/k` for odd `k`, `1` for even `k`.
    Gamma,
    /// `{2a, a, gamma_3, gamma_4, ...}`.
    Phi1Max(Rational),
    /// `2 - (-1)^k / k`.
    Delta,
    /// `b_1, 0, b_2, 0, ...`
    OddComb(Box<CoeffSeq>),
    /// Blocks `phi_{2j} / j^g`: `a_{2j-1} = j^-g`, `a_{2j} = (2j-1)/(2j) j^-g`.
    PowerPhi(f64),
    /// Blocks `phi_{2j} / sqrt(b + j)`.
    ShiftedSqrtPhi(f64),
    /// `1/k`.
    Fejer,
    Ones,
    /// Explicit list; zero beyond its end.
    Custom(Vec<Coeff>),
}

impl CoeffSeq {
    /// `a_k` for `k >= 1`; `k = 0` is treated as outside the sequence and gives zero.
    pub fn coeff(&self, k: usize) -> Coeff {
        if k == 0 {
            return Coeff::int(0);
        }
        let ki = k as i64;
        let j = k.div_ceil(2);
        match self {
            CoeffSeq::VietorisC => {
                // c_{2j-1} = prod_{i<j} (2i-1)/(2i), c_{2j} = c_{2j-1} (2j-1)/(2j)
                let mut c = Rational::one();
                for i in 1..j as i64 {
                    c *= rat(2 * i - 1, 2 * i);
                }
                if k.is_multiple_of(2) {
                    c *= rat(ki - 1, ki);
                }
                Coeff::Exact(c)
            }
            CoeffSeq::TheoremCMax => {
                let odd = 1.0 / (j as f64).sqrt();
                Coeff::Real(if k % 2 == 1 { odd } else { odd * (ki - 1) as f64 / ki as f64 })
            }
            CoeffSeq::Gamma => Coeff::Exact(gamma(ki)),
            CoeffSeq::Phi1Max(a) => Coeff::Exact(match k {
                1 => a * rat(2, 1),
                2 => a.clone(),
                _ => gamma(ki),
            }),
            CoeffSeq::Delta => {
                Coeff::Exact(if k.is_multiple_of(2) { rat(2 * ki - 1, ki) } else { rat(2 * ki + 1, ki) })
            }
            CoeffSeq::OddComb(b) => {
                if k % 2 == 1 {
                    b.coeff(j)
                } else {
                    Coeff::int(0)
                }
            }
            CoeffSeq::PowerPhi(g) => block_coeff(k, (j as f64).powf(-g)),
            CoeffSeq::ShiftedSqrtPhi(b) => block_coeff(k, 1.0 / (b + j as f64).sqrt()),
            CoeffSeq::Fejer => Coeff::Exact(rat(1, ki)),
            CoeffSeq::Ones => Coeff::int(1),
            CoeffSeq::Custom(v) => v.get(k - 1).cloned().unwrap_or(Coeff::int(0)),
        }
    }

    pub fn coeffs(&self, n: usize) -> Vec<Coeff> {
        (1..=n).map(|k| self.coeff(k)).collect()
    }

    /// Partial sum `sum_{k<=n} a_k sin(kx)`; exact when every coefficient is.
    pub fn partial_sum(&self, n: usize) -> SinePoly {
        let cs = self.coeffs(n);
        if cs.iter().all(|c| c.as_exact().is_some()) {
            SinePoly::exact(cs.into_iter().map(|c| c.as_exact().unwrap().clone()).collect())
        } else {
            SinePoly::numeric(cs.iter().map(Coeff::to_f64).collect()).expect("finite coefficients")
        }
    }

    /// Whether every coefficient is rational.
    pub fn is_exact(&self) -> bool {
        match self {
            CoeffSeq::TheoremCMax | CoeffSeq::PowerPhi(_) | CoeffSeq::ShiftedSqrtPhi(_) => false,
            CoeffSeq::OddComb(b) => b.is_exact(),
            CoeffSeq::Custom(v) => v.iter().all(|c| c.as_exact().is_some()),
            _ => true,
        }
    }

    /// Natural length for finite families.
    pub fn natural_len(&self) -> Option<usize> {
        match self {
            CoeffSeq::Custom(v) => Some(v.len()),
            _ => None,
        }
    }

    /// Parses a family identifier:
    /// `vietoris_c`, `theorem_c`, `gamma`, `delta`, `fejer`, `ones`,
    /// `phi1:<p/q>`, `power_phi:<g>`, `sqrt_phi:<b>`, `odd_comb:<family>`.
    pub fn parse(id: &str) -> Result<CoeffSeq> {
        let id = id.trim();
        let unknown = || Error::Unknown { kind: "family", name: id.to_string() };
        let (head, arg) = match id.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (id, None),
        };
        let real_arg = |a: Option<&str>| -> Result<f64> {
            let a = a.ok_or_else(unknown)?;
            a.trim().parse::<f64>().map_err(|_| Error::Parse(a.to_string()))
        };
        Ok(match (head, arg) {
            ("vietoris_c" | "vietoris", None) => CoeffSeq::VietorisC,
            ("theorem_c" | "theoremC_max", None) => CoeffSeq::TheoremCMax,
            ("gamma" | "phi", None) => CoeffSeq::Gamma,
            ("delta" | "phi2", None) => CoeffSeq::Delta,
            ("fejer", None) => CoeffSeq::Fejer,
            ("ones", None) => CoeffSeq::Ones,
            ("phi1" | "phi1_max", Some(a)) => CoeffSeq::Phi1Max(parse_rational(a)?),
            ("power_phi" | "gamma_exp", a @ Some(_)) => CoeffSeq::PowerPhi(real_arg(a)?),
            ("sqrt_phi" | "shifted_sqrt_phi" | "beta", a @ Some(_)) => CoeffSeq::ShiftedSqrtPhi(real_arg(a)?),
            ("custom", Some(list)) => CoeffSeq::parse_custom(list, true)?,
            ("odd_comb", Some(b)) => CoeffSeq::OddComb(Box::new(CoeffSeq::parse(b)?)),
            _ => return Err(unknown()),
        })
    }

    /// Identifier accepted by [`CoeffSeq::parse`] (custom lists print their entries).
    pub fn id(&self) -> String {
        match self {
            CoeffSeq::VietorisC => "vietoris_c".into(),
            CoeffSeq::TheoremCMax => "theorem_c".into(),
            CoeffSeq::Gamma => "gamma".into(),
            CoeffSeq::Phi1Max(a) => format!("phi1:{a}"),
            CoeffSeq::Delta => "delta".into(),
            CoeffSeq::OddComb(b) => format!("odd_comb:{}", b.id()),
            CoeffSeq::PowerPhi(g) => format!("power_phi:{g}"),
            CoeffSeq::ShiftedSqrtPhi(b) => format!("sqrt_phi:{b}"),
            CoeffSeq::Fejer => "fejer".into(),
            CoeffSeq::Ones => "ones".into(),
            CoeffSeq::Custom(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                format!("custom:{}", parts.join(","))
            }
        }
    }

    /// Parses a comma-separated coefficient list. Entries are rationals
    /// (`p/q`, integers, terminating decimals); with `allow_float` any
    /// float literal is also accepted and kept as a real coefficient.
    pub fn parse_custom(list: &str, allow_float: bool) -> Result<CoeffSeq> {
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match parse_rational(item) {
                Ok(r) => out.push(Coeff::Exact(r)),
                Err(e) if !allow_float => return Err(e),
                Err(_) => {
                    let x: f64 = item.parse().map_err(|_| Error::Parse(item.to_string()))?;
                    out.push(Coeff::Real(x));
                }
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient list".into()));
        }
        Ok(CoeffSeq::Custom(out))
    }
}

fn gamma(k: i64) -> Rational {
    if k % 2 == 1 {
        rat(k + 1, k)
    } else {
        Rational::one()
    }
}

fn block_coeff(k: usize, weight: f64) -> Coeff {
    if k % 2 == 1 {
        Coeff::Real(weight)
    } else {
        Coeff::Real(weight * (k - 1) as f64 / k as f64)
    }
}

/// `sum_{k=1}^n (-1)^(k-1) k a_k`.
pub fn belov_partial(seq: &CoeffSeq, n: usize) -> Coeff {
    sum_coeffs((1..=n).map(|k| signed_weighted(&seq.coeff(k), k, k % 2 == 1)))
}

fn signed_weighted(c: &Coeff, k: usize, positive: bool) -> Coeff {
    let s = if positive { 1 } else { -1 } * k as i64;
    match c {
        Coeff::Exact(r) => Coeff::Exact(r * rat(s, 1)),
        Coeff::Real(x) => Coeff::Real(x * s as f64),
    }
}

/// Limits of `P(x)/(pi - x)` at `pi` and `P(x)/x` at `0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EndpointSums {
    /// `sum (-1)^(k-1) k a_k`
    pub at_pi: Coeff,
    /// `sum k a_k`
    pub at_zero: Coeff,
}

pub fn endpoint_sums(sp: &SinePoly) -> EndpointSums {
    let coeff = |k: usize| match sp.exact_coeffs() {
        Some(c) => Coeff::Exact(c[k - 1].clone()),
        None => Coeff::Real(sp.coeff_f64(k)),
    };
    let n = sp.len();
    EndpointSums {
        at_pi: sum_coeffs((1..=n).map(|k| signed_weighted(&coeff(k), k, k % 2 == 1))),
        at_zero: sum_coeffs((1..=n).map(|k| signed_weighted(&coeff(k), k, true))),
    }
}

/// Exact rational for a real coefficient, for comparisons that must not round.
pub(crate) fn exact_or_binary(c: &Coeff) -> Rational {
    match c {
        Coeff::Exact(r) => r.clone(),
        Coeff::Real(x) => from_f64(*x).unwrap_or_else(|_| Rational::zero()),
    }
}
