//! Sturm chains, distinct-root counting and exact nonnegativity on an interval.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Canonical Sturm sequence `p, p', -rem(p, p'), ...`.
///
/// Remainders past the first two entries are rescaled by positive constants to
/// keep coefficients small; positive scaling leaves every sign variation
/// unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let dp = p.derivative();
        if dp.is_zero() {
            return Ok(SturmChain { polys });
        }
        polys.push(dp);
        loop {
            let n = polys.len();
            let (_, r) = polys[n - 2].div_rem(&polys[n - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push(-r.positive_primitive());
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of sign changes along the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        count_variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    /// Distinct roots in `(lo, hi)`; both endpoints must be non-roots of the
    /// first chain element.
    pub fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Divide out every factor `(Y - r)` for each endpoint `r` that is a root.
pub(crate) fn deflate_endpoints(p: &UniPoly, lo: &Rational, hi: &Rational) -> UniPoly {
    let mut q = p.clone();
    for r in [lo, hi] {
        while !q.is_constant() && q.sign_at(r) == Ordering::Equal {
            q = q.div_exact(&UniPoly::linear_root(r)).expect("root factor divides");
        }
    }
    q
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_real_roots(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let q = deflate_endpoints(p, lo, hi);
    if q.is_constant() {
        return Ok(0);
    }
    Ok(SturmChain::new(&q)?.count_between(lo, hi))
}

/// Isolating intervals `(a, b)` for the distinct roots of `p` in `(lo, hi)`,
/// sorted ascending. Intervals are pairwise separated by a gap, never touch
/// `lo` or `hi`, and their endpoints are never roots of `p`.
pub fn isolate_roots(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let q = deflate_endpoints(p, lo, hi).square_free_part();
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&q)?;
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count_between(lo, hi))];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let m = split_point(&q, &a, &b);
                let left = chain.count_between(&a, &m);
                stack.push((m.clone(), b, n - left));
                stack.push((a, m, left));
            }
        }
    }
    out.sort();
    // Pull every interval strictly away from its neighbours and the outer
    // bounds. Each interval keeps exactly one root strictly inside, so this
    // terminates.
    loop {
        let mut touched = false;
        for i in 0..out.len() {
            let left_bound = if i == 0 { lo } else { &out[i - 1].1 };
            let right_bound = if i + 1 == out.len() { hi } else { &out[i + 1].0 };
            if &out[i].0 == left_bound || &out[i].1 == right_bound {
                let (a, b) = out[i].clone();
                out[i] = bisect_once(&chain, &q, &a, &b);
                touched = true;
            }
        }
        if !touched {
            break;
        }
    }
    Ok(out)
}

/// One bisection step on an isolating interval of `q` (one root inside,
/// endpoints non-roots). The result is at most half as wide.
pub(crate) fn bisect_once(chain: &SturmChain, q: &UniPoly, a: &Rational, b: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    let mid = (a + b) / &two;
    if q.sign_at(&mid) == Ordering::Equal {
        let quarter = (b - a) / Rational::from_integer(4.into());
        return (&mid - &quarter, &mid + &quarter);
    }
    if chain.count_between(a, &mid) == 1 {
        (a.clone(), mid)
    } else {
        (mid, b.clone())
    }
}

/// A point of `(a, b)` close to the midpoint that is not a root of `q`.
pub(crate) fn split_point(q: &UniPoly, a: &Rational, b: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mid = (a + b) / &two;
    if q.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    let mut step = (b - a) / Rational::from_integer(8.into());
    loop {
        for cand in [&mid + &step, &mid - &step] {
            if q.sign_at(&cand) != Ordering::Equal {
                return cand;
            }
        }
        step /= &two;
    }
}

/// Exact evidence that `p >= 0` on a closed interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SturmEvidence {
    /// Degree of the product of odd-multiplicity square-free factors.
    pub odd_part_degree: usize,
    /// Length of the Sturm chain built for the odd part.
    pub chain_length: usize,
    /// Sign-changing roots found in the open interval (always zero here).
    pub odd_roots_inside: usize,
    /// Interior point where the odd part was evaluated to fix the sign.
    pub sample: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nonnegativity {
    Nonneg(SturmEvidence),
    /// `p(witness) = value < 0` with `witness` strictly inside the interval.
    Negative {
        witness: Rational,
        value: Rational,
    },
}

impl Nonnegativity {
    pub fn holds(&self) -> bool {
        matches!(self, Nonnegativity::Nonneg(_))
    }
}

/// Decide `p(Y) >= 0` for all `Y` in `[lo, hi]`.
///
/// Even-multiplicity factors never change sign, so only the product of the
/// odd-multiplicity square-free factors is Sturm-counted. Tangential double
/// roots are therefore admitted.
pub fn is_nonneg_on(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<Nonnegativity> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let (lc, parts) = p.square_free_decomposition();
    let odd = parts.iter().filter(|(_, m)| m % 2 == 1).fold(UniPoly::constant(lc), |acc, (f, _)| &acc * f);

    let roots = if odd.is_constant() { Vec::new() } else { isolate_roots(&odd, lo, hi)? };
    if roots.is_empty() {
        let mid = split_point(&odd, lo, hi);
        if odd.sign_at(&mid) == Ordering::Greater {
            debug_assert!(p.sign_at(lo) != Ordering::Less && p.sign_at(hi) != Ordering::Less);
            let chain_length = if odd.is_constant() { 1 } else { SturmChain::new(&odd)?.len() };
            return Ok(Nonnegativity::Nonneg(SturmEvidence {
                odd_part_degree: odd.degree().unwrap_or(0),
                chain_length,
                odd_roots_inside: 0,
                sample: mid.to_string(),
            }));
        }
    }

    // Root-free segments of the odd part; it has constant sign on each.
    let mut bounds = vec![lo.clone()];
    for (a, b) in &roots {
        bounds.push(a.clone());
        bounds.push(b.clone());
    }
    bounds.push(hi.clone());
    for seg in bounds.chunks(2) {
        let (a, b) = (&seg[0], &seg[1]);
        if a >= b {
            continue;
        }
        let mut x = split_point(&odd, a, b);
        if odd.sign_at(&x) != Ordering::Less {
            continue;
        }
        // p vanishes only where the square part does; finitely many points.
        loop {
            let v = p.eval(&x);
            if v < Rational::zero() {
                return Ok(Nonnegativity::Negative { witness: x, value: v });
            }
            x = (&x + b) / Rational::from_integer(2.into());
        }
    }
    unreachable!("odd part has negative sign somewhere when p is not nonnegative")
}
