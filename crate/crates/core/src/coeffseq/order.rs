use std::cmp::Ordering;

use serde::Serialize;

use super::{alpha_root, Coeff, CoeffSeq};
use crate::exactnum::{rat, Rational};

const REL_EQ: f64 = 1e-12;

/// Outcome of a finite-`N` dominance test `a ⪰ b`. Only the monotonicity of
/// the ratios is checked; their limit is not decidable from finitely many terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub holds: bool,
    /// First `k` with `a_k = 0` but `b_k != 0`.
    pub zero_violation: Option<usize>,
    /// First `k` where `b_k / a_k` exceeds the previous ratio.
    pub increase_at: Option<usize>,
}

pub fn dominance(a: &CoeffSeq, b: &CoeffSeq, n: usize) -> DominanceReport {
    dominates_slices(&a.coeffs(n), &b.coeffs(n))
}

pub fn dominates(a: &CoeffSeq, b: &CoeffSeq, n: usize) -> bool {
    dominance(a, b, n).holds
}

enum Ratio {
    Exact(Rational),
    Real(f64),
}

fn ratio(b: &Coeff, a: &Coeff) -> Ratio {
    match (b, a) {
        (Coeff::Exact(b), Coeff::Exact(a)) => Ratio::Exact(b / a),
        _ => Ratio::Real(b.to_f64() / a.to_f64()),
    }
}

fn cmp_ratio(x: &Ratio, y: &Ratio) -> Ordering {
    match (x, y) {
        (Ratio::Exact(x), Ratio::Exact(y)) => x.cmp(y),
        _ => {
            let f = |r: &Ratio| match r {
                Ratio::Exact(q) => crate::exactnum::to_f64(q),
                Ratio::Real(v) => *v,
            };
            let (x, y) = (f(x), f(y));
            if (x - y).abs() <= REL_EQ * x.abs().max(y.abs()) {
                Ordering::Equal
            } else {
                x.partial_cmp(&y).unwrap_or(Ordering::Equal)
            }
        }
    }
}

/// Dominance on explicit coefficient lists (1-based positions), compared up
/// to the shorter length.
pub fn dominates_slices(a: &[Coeff], b: &[Coeff]) -> DominanceReport {
    let mut zero_violation = None;
    let mut increase_at = None;
    let mut prev: Option<Ratio> = None;
    for (i, (ak, bk)) in a.iter().zip(b).enumerate() {
        let k = i + 1;
        if ak.is_zero() {
            if !bk.is_zero() && zero_violation.is_none() {
                zero_violation = Some(k);
            }
            continue;
        }
        let r = ratio(bk, ak);
        if let Some(p) = &prev {
            if cmp_ratio(&r, p) == Ordering::Greater && increase_at.is_none() {
                increase_at = Some(k);
            }
        }
        prev = Some(r);
    }
    DominanceReport { holds: zero_violation.is_none() && increase_at.is_none(), zero_violation, increase_at }
}

/// Pairwise dominance among the odd-index coefficient sequences
/// `{c_{2j-1}}`, `{1/sqrt(j)}`, `{2 alpha, gamma_3, gamma_5, ...}`,
/// `{delta_{2j-1}}` and `{1, 1, ...}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderMatrix {
    pub names: Vec<&'static str>,
    pub n: usize,
    /// `matrix[i][j]` is `names[i] ⪰ names[j]`.
    pub matrix: Vec<Vec<bool>>,
    /// Relations asserted for these sequences, as `(i, j, observed)`.
    pub claims: Vec<(usize, usize, bool)>,
}

impl OrderMatrix {
    pub fn all_claims_hold(&self) -> bool {
        self.claims.iter().all(|c| c.2)
    }
}

pub fn odd_order_check() -> OrderMatrix {
    const N: usize = 50;
    let two_alpha = 2.0 * alpha_root().to_f64();
    let seqs: Vec<Vec<Coeff>> = vec![
        (1..=N).map(|j| CoeffSeq::VietorisC.coeff(2 * j - 1)).collect(),
        (1..=N).map(|j| Coeff::Real(1.0 / (j as f64).sqrt())).collect(),
        (1..=N)
            .map(|j| if j == 1 { Coeff::Real(two_alpha) } else { Coeff::Exact(rat(2 * j as i64, 2 * j as i64 - 1)) })
            .collect(),
        (1..=N).map(|j| CoeffSeq::Delta.coeff(2 * j - 1)).collect(),
        vec![Coeff::int(1); N],
    ];
    let matrix: Vec<Vec<bool>> =
        seqs.iter().map(|a| seqs.iter().map(|b| dominates_slices(a, b).holds).collect()).collect();
    let claimed = [(0, 1), (2, 0), (2, 1), (3, 0), (3, 1), (4, 2), (4, 3)];
    OrderMatrix {
        names: vec!["c_odd", "inv_sqrt", "phi1_odd", "delta_odd", "ones"],
        n: N,
        claims: claimed.iter().map(|&(i, j)| (i, j, matrix[i][j])).collect(),
        matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn custom(s: &str) -> CoeffSeq {
        CoeffSeq::parse_custom(s, false).unwrap()
    }

    #[test]
    fn small_examples() {
        assert!(dominates(&CoeffSeq::Gamma, &CoeffSeq::Gamma, 30));
        let r = dominance(&custom("1,0,1"), &custom("1,1,1"), 3);
        assert_eq!(r.zero_violation, Some(2));
        let r = dominance(&CoeffSeq::Gamma, &CoeffSeq::Delta, 20);
        assert!(!r.holds);
        assert_eq!(r.increase_at, Some(3));
    }

    #[test]
    fn vietoris_dominates_fejer_odd_part() {
        assert!(dominates(&CoeffSeq::Ones, &CoeffSeq::Fejer, 40));
        assert!(!dominates(&CoeffSeq::Fejer, &CoeffSeq::Ones, 40));
    }

    #[test]
    fn order_matrix_shape() {
        let m = odd_order_check();
        for i in 0..5 {
            assert!(m.matrix[i][i]);
        }
        // c_{2j-1} sqrt(j) grows, so the first relation goes the other way.
        assert!(!m.matrix[0][1]);
        assert!(m.matrix[1][0]);
        for &(i, j, ok) in &m.claims[1..] {
            assert!(ok, "{} vs {}", m.names[i], m.names[j]);
        }
    }
}
