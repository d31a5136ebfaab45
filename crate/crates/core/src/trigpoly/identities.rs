//! Closed forms for four classical trigonometric sums, returned as
//! `(lhs, rhs)` pairs so callers can probe them numerically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identity {
    /// `sum_{j=1}^n sin((2j-1)x) = (1 - cos 2nx) / (2 sin x)`
    S3,
    /// `sum_{k=1}^n sin(kx) = (cos(x/2) - cos((2n+1)x/2)) / (2 sin(x/2))`
    S1,
    /// `sum_{j=1}^n cos((2j-1)x) = sin(2nx) / (2 sin x)`
    C3,
    /// `sum_{k=1}^n (-1)^(k+1) cos(kx) = 1/2 - (-1)^n cos((2n+1)x/2) / (2 cos(x/2))`
    C1,
}

const SINGULAR_EPS: f64 = 1e-9;

pub fn closed_form(id: Identity, n: usize, x: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let nf = n as f64;
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let out = match id {
        Identity::S3 => {
            let d = 2.0 * x.sin();
            check(d)?;
            let lhs: f64 = (1..=n).map(|j| ((2 * j - 1) as f64 * x).sin()).sum();
            (lhs, (1.0 - (2.0 * nf * x).cos()) / d)
        }
        Identity::S1 => {
            let d = 2.0 * (x / 2.0).sin();
            check(d)?;
            let lhs: f64 = (1..=n).map(|k| (k as f64 * x).sin()).sum();
            (lhs, ((x / 2.0).cos() - ((2.0 * nf + 1.0) * x / 2.0).cos()) / d)
        }
        Identity::C3 => {
            let d = 2.0 * x.sin();
            check(d)?;
            let lhs: f64 = (1..=n).map(|j| ((2 * j - 1) as f64 * x).cos()).sum();
            (lhs, (2.0 * nf * x).sin() / d)
        }
        Identity::C1 => {
            let d = 2.0 * (x / 2.0).cos();
            check(d)?;
            let lhs: f64 = (1..=n).map(|k| if k % 2 == 1 { 1.0 } else { -1.0 } * (k as f64 * x).cos()).sum();
            (lhs, 0.5 - sign_n * ((2.0 * nf + 1.0) * x / 2.0).cos() / d)
        }
    };
    Ok(out)
}

fn check(denominator: f64) -> Result<()> {
    if denominator.abs() < SINGULAR_EPS {
        Err(Error::Singular)
    } else {
        Ok(())
    }
}
