use num_traits::{One, Zero};
use serde::Serialize;

use super::SinePoly;
use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    /// `sin((k-1)x) + (k-1)/k sin(kx)`
    Phi,
    /// `sin((k-1)x) - (k-1)/k sin(kx)`
    Theta,
}

/// Two-term block `phi_k` or `theta_k`, `k >= 2`.
pub fn phi_theta(k: usize, kind: BlockKind) -> Result<SinePoly> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("block index {k} must be at least 2")));
    }
    let mut coeffs = vec![Rational::zero(); k];
    coeffs[k - 2] = Rational::one();
    let tail = rat(k as i64 - 1, k as i64);
    coeffs[k - 1] = match kind {
        BlockKind::Phi => tail,
        BlockKind::Theta => -tail,
    };
    Ok(SinePoly::exact(coeffs))
}

/// Partial sum of the gamma family (or its reflection) written as weighted
/// blocks plus, for odd `n`, a lone `sin(nx)` term.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockForm {
    pub kind: BlockKind,
    pub n: usize,
    /// `(k, weight)` for each block `phi_k` / `theta_k`, `k = 2, 4, ..., 2*floor(n/2)`.
    #[serde(serialize_with = "ser_weights")]
    pub block_weights: Vec<(usize, Rational)>,
    #[serde(serialize_with = "ser_opt")]
    pub trailing_term: Option<Rational>,
}

fn ser_weights<S: serde::Serializer>(v: &[(usize, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(k, w)| (k, w.to_string())))
}

fn ser_opt<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl BlockForm {
    pub fn expand(&self) -> SinePoly {
        let mut coeffs = vec![Rational::zero(); self.n];
        for (k, w) in &self.block_weights {
            let block = phi_theta(*k, self.kind).expect("block index >= 2");
            for (i, c) in block.exact_coeffs().unwrap().iter().enumerate() {
                coeffs[i] += w * c;
            }
        }
        if let Some(w) = &self.trailing_term {
            coeffs[self.n - 1] += w;
        }
        SinePoly::exact(coeffs)
    }
}

/// Weights `2j/(2j-1)` on blocks `2j`, `j = 1..floor(n/2)`, and weight
/// `(2m+2)/(2m+1)` on `sin(nx)` when `n = 2m+1` is odd.
pub fn block_decompose(n: usize, kind: BlockKind) -> Result<BlockForm> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let half = n / 2;
    let block_weights = (1..=half).map(|j| (2 * j, rat(2 * j as i64, 2 * j as i64 - 1))).collect();
    let trailing_term = (n % 2 == 1).then(|| rat(2 * half as i64 + 2, 2 * half as i64 + 1));
    Ok(BlockForm { kind, n, block_weights, trailing_term })
}
