//! Resultants and discriminants via the Sylvester matrix.

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Determinant by Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

/// `res(p, q)` as the determinant of the Sylvester matrix.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    if m + n == 0 {
        return Ok(Rational::one());
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (count, poly, deg) in [(n, p, m), (m, q, n)] {
        for shift in 0..count {
            let mut row = vec![Rational::zero(); size];
            for i in 0..=deg {
                row[shift + i] = poly.coeff(deg - i);
            }
            rows.push(row);
        }
    }
    Ok(determinant(rows))
}

/// `(-1)^(n(n-1)/2) res(p, p') / lc(p)`; for `aY^2 + bY + c` this is `b^2 - 4ac`.
pub fn discriminant(p: &UniPoly) -> Result<Rational> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.leading_coeff().expect("nonzero");
    let sign = if (n * (n - 1) / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
    Ok(sign * res / lc)
}
