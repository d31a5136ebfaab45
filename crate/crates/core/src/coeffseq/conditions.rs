use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{alpha_root, exact_or_binary, Coeff, CoeffSeq};
use crate::exactnum::{rat, Rational};

/// Relative tolerance for equality between real coefficients.
const REL_EQ: f64 = 1e-12;

/// Hypothesis predicates on coefficient sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `a_{2j-1} >= 2j/(2j-1) a_{2j}`, `j >= 1`.
    V,
    /// `a_{2j} >= (2j+1)/(2j+2) a_{2j+1}`, `j >= 1`.
    KV,
    /// `a_{2j} >= (2j+1)(4j-1)/(2j(4j+3)) a_{2j+1}`, `j >= 1`.
    KV2,
    /// `a_2 >= (3 alpha / 4) a_3`.
    Thm1First,
    /// `a_{2j} >= (2j-1) sqrt(j+1) / (2j sqrt(j)) a_{2j+1}`, `j >= 1`.
    ThmC,
}

impl Condition {
    pub fn parse(s: &str) -> crate::Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "V" => Condition::V,
            "KV" => Condition::KV,
            "KV2" => Condition::KV2,
            "THM1_FIRST" => Condition::Thm1First,
            "THMC" => Condition::ThmC,
            _ => return Err(crate::Error::Unknown { kind: "condition", name: s.into() }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub holds: bool,
    /// Smallest `j` at which the inequality fails.
    pub first_failing: Option<usize>,
    /// Indices `j` where the inequality is attained with equality.
    pub equalities: Vec<usize>,
    /// Number of indices `j` tested.
    pub checked: usize,
}

/// Tests `cond` at every `j` whose coefficients all lie within `1..=n`.
pub fn check_condition(cond: Condition, seq: &CoeffSeq, n: usize) -> ConditionReport {
    check_condition_from(cond, seq, n, 1)
}

/// As [`check_condition`], skipping indices `j < j0`.
pub fn check_condition_from(cond: Condition, seq: &CoeffSeq, n: usize, j0: usize) -> ConditionReport {
    let mut first_failing = None;
    let mut equalities = Vec::new();
    let mut checked = 0;
    let mut record = |j: usize, ord: Ordering| {
        checked += 1;
        match ord {
            Ordering::Less => {
                first_failing.get_or_insert(j);
            }
            Ordering::Equal => equalities.push(j),
            Ordering::Greater => {}
        }
    };
    match cond {
        Condition::Thm1First => {
            if n >= 3 && j0 <= 1 {
                record(1, thm1_first(&seq.coeff(2), &seq.coeff(3)));
            }
        }
        _ => {
            let mut j = j0.max(1);
            loop {
                let (lhs_k, rhs_k) = match cond {
                    Condition::V => (2 * j - 1, 2 * j),
                    _ => (2 * j, 2 * j + 1),
                };
                if lhs_k.max(rhs_k) > n {
                    break;
                }
                let ji = j as i64;
                let (lhs, rhs) = (seq.coeff(lhs_k), seq.coeff(rhs_k));
                let ord = match cond {
                    Condition::V => cmp_scaled(&lhs, &rat(2 * ji, 2 * ji - 1), &rhs),
                    Condition::KV => cmp_scaled(&lhs, &rat(2 * ji + 1, 2 * ji + 2), &rhs),
                    Condition::KV2 => cmp_scaled(&lhs, &rat((2 * ji + 1) * (4 * ji - 1), 2 * ji * (4 * ji + 3)), &rhs),
                    Condition::ThmC => cmp_thm_c(&lhs, ji, &rhs),
                    Condition::Thm1First => unreachable!(),
                };
                record(j, ord);
                j += 1;
            }
        }
    }
    ConditionReport { condition: cond, holds: first_failing.is_none(), first_failing, equalities, checked }
}

/// Sign of `lhs - factor * rhs`.
fn cmp_scaled(lhs: &Coeff, factor: &Rational, rhs: &Coeff) -> Ordering {
    match (lhs, rhs) {
        (Coeff::Exact(l), Coeff::Exact(r)) => l.cmp(&(factor * r)),
        _ => cmp_real(lhs.to_f64(), crate::exactnum::to_f64(factor) * rhs.to_f64()),
    }
}

fn cmp_real(l: f64, r: f64) -> Ordering {
    if (l - r).abs() <= REL_EQ * l.abs().max(r.abs()) {
        Ordering::Equal
    } else if l < r {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Sign of `a_{2j} - (2j-1) sqrt(j+1) / (2j sqrt(j)) a_{2j+1}`.
fn cmp_thm_c(lhs: &Coeff, j: i64, rhs: &Coeff) -> Ordering {
    if let (Coeff::Exact(l), Coeff::Exact(r)) = (lhs, rhs) {
        // Compare l and c r with c = (2j-1)/(2j) sqrt((j+1)/j) > 0 through squares.
        let cr_sign = r.signum();
        let l_sign = l.signum();
        if l_sign != cr_sign {
            return l_sign.cmp(&cr_sign);
        }
        let c2 = rat((2 * j - 1) * (2 * j - 1) * (j + 1), 4 * j * j * j);
        let ord = (l * l).cmp(&(c2 * r * r));
        return if l.is_negative() { ord.reverse() } else { ord };
    }
    let jf = j as f64;
    let c = (2.0 * jf - 1.0) * (jf + 1.0).sqrt() / (2.0 * jf * jf.sqrt());
    cmp_real(lhs.to_f64(), c * rhs.to_f64())
}

/// Sign of `a_2 - (3 alpha / 4) a_3`, decided against the exact root.
fn thm1_first(a2: &Coeff, a3: &Coeff) -> Ordering {
    let a2 = exact_or_binary(a2);
    let a3 = exact_or_binary(a3);
    if a3.is_zero() {
        return a2.cmp(&Rational::zero());
    }
    // a2 - (3 alpha/4) a3 = (3 a3 / 4) (r - alpha) with r = 4 a2 / (3 a3).
    let r = &a2 * rat(4, 3) / &a3;
    let r_minus_alpha = alpha_root().cmp_rational(&r).reverse();
    if a3.is_positive() {
        r_minus_alpha
    } else {
        r_minus_alpha.reverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_attains_v_and_kv2() {
        let v = check_condition(Condition::V, &CoeffSeq::Delta, 20);
        assert!(v.holds);
        assert_eq!(v.equalities, (1..=10).collect::<Vec<_>>());
        let kv2 = check_condition(Condition::KV2, &CoeffSeq::Delta, 20);
        assert!(kv2.holds);
        assert_eq!(kv2.equalities.len(), kv2.checked);
        assert_eq!(kv2.checked, 9);
    }

    #[test]
    fn gamma_attains_kv_and_v() {
        let kv = check_condition(Condition::KV, &CoeffSeq::Gamma, 20);
        assert!(kv.holds && kv.equalities.len() == kv.checked);
        let v = check_condition(Condition::V, &CoeffSeq::Gamma, 20);
        assert!(v.holds && v.equalities.len() == v.checked);
        let t = check_condition(Condition::Thm1First, &CoeffSeq::Gamma, 20);
        assert!(t.holds && t.equalities.is_empty());
    }

    #[test]
    fn thm1_first_boundary() {
        // phi1(a): a_2 = a, a_3 = 4/3, so the condition reads a >= alpha.
        let below = CoeffSeq::Phi1Max(rat(78265, 100000));
        let above = CoeffSeq::Phi1Max(rat(78266, 100000));
        assert_eq!(check_condition(Condition::Thm1First, &below, 5).first_failing, Some(1));
        assert!(check_condition(Condition::Thm1First, &above, 5).holds);
    }

    #[test]
    fn kv2_is_weaker_than_kv() {
        let g = check_condition(Condition::KV2, &CoeffSeq::Gamma, 40);
        assert!(g.holds && g.equalities.is_empty());
        // delta_2 = 3/2 < (3/4)(7/3)
        assert_eq!(check_condition(Condition::KV, &CoeffSeq::Delta, 40).first_failing, Some(1));
    }

    #[test]
    fn theorem_c_maximal_attains_equality() {
        let r = check_condition(Condition::ThmC, &CoeffSeq::TheoremCMax, 40);
        assert!(r.holds);
        assert_eq!(r.equalities.len(), r.checked);
        let v = check_condition(Condition::V, &CoeffSeq::TheoremCMax, 40);
        assert!(v.holds && v.equalities.len() == v.checked);
    }

    #[test]
    fn theorem_c_exact_branch() {
        // a_2 = 1/2, a_3 = 1/sqrt(2) is irrational; check an exact case instead:
        // j=1 factor sqrt(2)/2, a_2 = 1, a_3 = 1 -> 1 > 0.707
        let s = CoeffSeq::parse_custom("1,1,1", false).unwrap();
        assert!(check_condition(Condition::ThmC, &s, 3).holds);
        let s = CoeffSeq::parse_custom("1,7/10,1", false).unwrap();
        assert_eq!(check_condition(Condition::ThmC, &s, 3).first_failing, Some(1));
    }
}
