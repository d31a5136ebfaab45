//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `Y^i`. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `Y`.
    pub fn identity() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `Y - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` computed exactly.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let numer = x.numer();
        let denom = x.denom();
        // p(n/d) * d^deg has the same sign and stays in the integers once the
        // coefficient denominators are cleared.
        let ints = self.clear_denominators();
        let Some(deg) = ints.len().checked_sub(1) else {
            return Ordering::Equal;
        };
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for (i, c) in ints.iter().enumerate().rev() {
            if i == deg {
                acc = c.clone();
            } else {
                dpow *= denom;
                acc = acc * numer + c * &dpow;
            }
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + super::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Composition `self(inner(Y))`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top / &lc;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Mismatch(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.positive_primitive();
        }
        x.monic()
    }

    /// Integer coefficient vector of `m * self` for the least positive `m`
    /// that clears all denominators.
    fn clear_denominators(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
    }

    /// Positive rational multiple of `self` with coprime integer coefficients.
    /// Sign pattern and roots are preserved.
    pub fn positive_primitive(&self) -> Self {
        let ints = self.clear_denominators();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Self::zero();
        }
        Self::new(ints.into_iter().map(|c| Rational::from_integer(c / &content)).collect())
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn primitive_normalized(&self) -> Self {
        let p = self.positive_primitive();
        match p.leading_coeff() {
            Some(lc) if lc.is_negative() => -p,
            _ => p,
        }
    }

    pub fn is_square_free(&self) -> bool {
        Self::gcd(self, &self.derivative()).is_constant()
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: returns `(c, factors)` with `self = c * prod f_i^i`,
    /// each `f_i` monic square-free and pairwise coprime. Only nonconstant
    /// factors are listed.
    pub fn square_free_decomposition(&self) -> (Rational, Vec<(UniPoly, usize)>) {
        let Some(lc) = self.leading_coeff().cloned() else {
            return (Rational::zero(), Vec::new());
        };
        let mut out = Vec::new();
        if self.is_constant() {
            return (lc, out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = Self::gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        (lc, out)
    }

    /// Lagrange interpolation through the given nodes (distinct abscissae).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::InvalidArgument("repeated interpolation node".into()));
                }
                basis = &basis * &Self::linear_root(xj);
                denom *= xi - xj;
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        Ok(acc)
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        let Some(lc) = self.leading_coeff() else {
            return Rational::one();
        };
        let max =
            self.coeffs[..self.coeffs.len() - 1].iter().map(|c| (c / lc).abs()).max().unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*Y")?,
                1 => write!(f, "Y")?,
                _ if show_coeff => write!(f, "*Y^{i}")?,
                _ => write!(f, "Y^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn trims_trailing_zeros() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(UniPoly::from_ints(&[0, 0]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[-1, 0, 3, 5, 7]);
        let b = UniPoly::from_ints(&[2, -1, 4]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert_eq!(a.div_rem(&UniPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = UniPoly::from_ints(&[-1, 1]); // Y - 1
        let a = &f * &UniPoly::from_ints(&[2, 1]);
        let b = &f * &UniPoly::from_ints(&[-3, 0, 1]);
        assert_eq!(UniPoly::gcd(&a, &b), f);
    }

    #[test]
    fn sign_at_matches_eval() {
        let p = UniPoly::new(vec![rat(-1, 4), rat(0, 1), rat(1, 1)]);
        for x in [rat(-1, 1), rat(1, 2), rat(1, 3), rat(7, 5)] {
            assert_eq!(p.sign_at(&x), p.eval(&x).cmp(&Rational::zero()));
        }
    }

    #[test]
    fn yun_separates_multiplicities() {
        // 3 (Y-1)^3 (Y+2)^2 (Y - 1/2)
        let a = UniPoly::from_ints(&[-1, 1]);
        let b = UniPoly::from_ints(&[2, 1]);
        let c = UniPoly::new(vec![rat(-1, 2), rat(1, 1)]);
        let p = (&(&a.pow(3) * &b.pow(2)) * &c).scale(&rat(3, 1));
        let (lc, parts) = p.square_free_decomposition();
        assert_eq!(lc, rat(3, 1));
        assert_eq!(parts, vec![(c, 1), (b, 2), (a, 3)]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_ints(&[4, -3, 0, 2]);
        let pts: Vec<_> = (0..5)
            .map(|i| {
                let x = rat(i, 1);
                (x.clone(), p.eval(&x))
            })
            .collect();
        assert_eq!(UniPoly::interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn display_is_readable() {
        let p = UniPoly::from_ints(&[-1, 0, -68, 60, 144]);
        assert_eq!(p.to_string(), "144*Y^4 + 60*Y^3 - 68*Y^2 - 1");
    }
}
