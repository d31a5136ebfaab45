//! Real algebraic numbers represented by an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use super::sturm::{bisect_once, deflate_endpoints, isolate_roots, SturmChain};
use super::{to_f64, Rational, UniPoly};
use crate::error::{Error, Result};

/// The unique root of `poly` in the open interval `(lo, hi)`.
///
/// `poly` is stored square-free and the interval endpoints are never roots,
/// so any bisection step can be decided by a Sturm count.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: UniPoly,
    chain: SturmChain,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    /// Checks the isolation property before accepting the interval.
    pub fn new(poly: &UniPoly, lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        let q = deflate_endpoints(poly, &lo, &hi).square_free_part();
        if q.is_constant() {
            return Err(Error::InvalidArgument("no root in interval".into()));
        }
        let chain = SturmChain::new(&q)?;
        let n = chain.count_between(&lo, &hi);
        if n != 1 {
            return Err(Error::InvalidArgument(format!("interval ({lo}, {hi}) holds {n} roots, expected exactly one")));
        }
        Ok(AlgebraicReal { poly: q, chain, lo, hi })
    }

    /// All real roots of `p`, ascending.
    pub fn real_roots(p: &UniPoly) -> Result<Vec<AlgebraicReal>> {
        let b = p.cauchy_bound();
        let q = p.square_free_part();
        let chain = SturmChain::new(&q)?;
        Ok(isolate_roots(p, &-b.clone(), &b)?
            .into_iter()
            .map(|(lo, hi)| AlgebraicReal { poly: q.clone(), chain: chain.clone(), lo, hi })
            .collect())
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Number of roots of the defining polynomial inside the interval; 1 by
    /// construction.
    pub fn root_count(&self) -> usize {
        self.chain.count_between(&self.lo, &self.hi)
    }

    /// Same root, isolating interval no wider than `width`.
    pub fn refine(&self, width: &Rational) -> AlgebraicReal {
        let mut out = self.clone();
        while &out.width() > width {
            out = out.bisect();
        }
        out
    }

    /// One bisection step; the width at least halves.
    pub fn bisect(&self) -> AlgebraicReal {
        let (lo, hi) = bisect_once(&self.chain, &self.poly, &self.lo, &self.hi);
        AlgebraicReal { poly: self.poly.clone(), chain: self.chain.clone(), lo, hi }
    }

    pub fn to_f64(&self) -> f64 {
        let fine = self.refine(&Rational::new(1.into(), num_bigint::BigInt::from(10).pow(17)));
        to_f64(&((&fine.lo + &fine.hi) / Rational::from_integer(2.into())))
    }

    /// Exact comparison of the root against a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if self.poly.sign_at(r) == Ordering::Equal && r > &self.lo && r < &self.hi {
            return Ordering::Equal;
        }
        let mut cur = self.clone();
        loop {
            if r <= &cur.lo {
                return Ordering::Greater;
            }
            if r >= &cur.hi {
                return Ordering::Less;
            }
            cur = cur.bisect();
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi)
    }
}
