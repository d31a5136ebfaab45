use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeffseq::{alpha_quartic, CoeffSeq};
use crate::error::{Error, Result};
use crate::exactnum::{count_real_roots, discriminant, is_nonneg_on, rat, Rational, UniPoly};

/// `2a sin x + a sin 2x + gamma_3 sin 3x + gamma_4 sin 4x + gamma_5 sin 5x`
/// reduces to `sin x * q(cos x)` with `q = (2/15) p_a`.
pub const PA_SCALE: (i64, i64) = (15, 2);

/// `144 Y^4 + 60 Y^3 - 68 Y^2 + (15a - 30) Y + (15a - 1)`.
pub fn pa_printed(a: &Rational) -> UniPoly {
    let fifteen_a = a * rat(15, 1);
    UniPoly::new(vec![&fifteen_a - rat(1, 1), &fifteen_a - rat(30, 1), rat(-68, 1), rat(60, 1), rat(144, 1)])
}

/// `p_a` obtained by reducing the five-term sine polynomial.
pub fn pa_from_sine(a: &Rational) -> UniPoly {
    let q = CoeffSeq::Phi1Max(a.clone()).partial_sum(5).to_algebraic().expect("exact family");
    q.scale(&rat(PA_SCALE.0, PA_SCALE.1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaPipeline {
    /// Reduced and printed forms of `p_a` agree at every sample.
    pub pa_matches: bool,
    /// `disc_Y p_a` as a polynomial in `a`.
    #[serde(serialize_with = "ser_display")]
    pub discriminant: UniPoly,
    /// Primitive integer form with positive leading coefficient.
    #[serde(serialize_with = "ser_display")]
    pub normalized: UniPoly,
    /// `discriminant = factor * normalized`.
    #[serde(serialize_with = "ser_display")]
    pub factor: Rational,
    pub matches_quartic: bool,
    /// `p_2 >= 0` on `[-1, 1]`.
    pub p2_nonneg: bool,
    /// Real roots of `p_0` in `(-1, 1)`.
    pub p0_roots: usize,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Rebuilds the quartic for alpha from the discriminant of `p_a`.
///
/// The discriminant has degree at most 6 in `a` (degree 6 in coefficients
/// that are affine in `a`), so it is interpolated from 7 samples and checked
/// at 3 more.
pub fn alpha_pipeline_check() -> Result<AlphaPipeline> {
    let samples: Vec<Rational> = (-3..7).map(|i| rat(i, 1)).collect();
    let mut pa_matches = true;
    let mut points = Vec::new();
    for a in &samples {
        let p = pa_from_sine(a);
        pa_matches &= p == pa_printed(a);
        points.push((a.clone(), discriminant(&p)?));
    }
    let disc = UniPoly::interpolate(&points[..7])?;
    for (a, d) in &points[7..] {
        if &disc.eval(a) != d {
            return Err(Error::Mismatch(format!("discriminant degree exceeds 6 at a = {a}")));
        }
    }
    let normalized = disc.primitive_normalized();
    let factor = disc.leading_coeff().cloned().unwrap_or_else(Rational::zero)
        / normalized.leading_coeff().cloned().unwrap_or_else(Rational::one);
    let quartic = alpha_quartic();
    let matches_quartic = normalized == quartic;
    if !matches_quartic {
        return Err(Error::Mismatch(format!("discriminant {normalized} vs quartic {quartic}")));
    }
    let one = Rational::one();
    Ok(AlphaPipeline {
        pa_matches,
        discriminant: disc,
        normalized,
        factor,
        matches_quartic,
        p2_nonneg: is_nonneg_on(&pa_printed(&rat(2, 1)), &-one.clone(), &one)?.holds(),
        p0_roots: count_real_roots(&pa_printed(&Rational::zero()), &-one.clone(), &one)?,
    })
}

/// Coefficients of `P(T)` as printed, highest degree first.
pub const P_PRINTED: [i64; 10] =
    [-45963750, 91927500, 267837423, 367710000, -1630859769, 551565000, 1171222269, 367710000, -497656173, 91927500];

/// Common denominator clearing `F_1`: `103909 * 1250`.
pub const P_SCALE: i64 = 129886250;

pub fn p_printed() -> UniPoly {
    UniPoly::from_ints(&P_PRINTED.iter().rev().copied().collect::<Vec<_>>())
}

fn one_plus_t2_pow(k: u32) -> UniPoly {
    UniPoly::from_ints(&[1, 0, 1]).pow(k)
}

/// `P_SCALE (1+T^2)^4 F_1` with `T = tan(x/4)`, using
/// `sin x + sin(2x)/2 = 8T(1-T^2)^3 / (1+T^2)^4`.
pub fn p_from_f1() -> UniPoly {
    let c = rat(73542, 103909);
    let t = UniPoly::identity();
    let one_minus_t2_cubed = UniPoly::from_ints(&[1, 0, -1]).pow(3);
    let w = one_plus_t2_pow(4);
    let p = &(&w.scale(&c) - &(&t * &w).scale(&rat(1, 2))) - &(&t * &one_minus_t2_cubed).scale(&rat(4347, 1250));
    p.scale(&rat(P_SCALE, 1))
}

/// The printed coefficients are reproduced when `c` multiplies `1 - T/2`
/// instead of the constant term alone.
pub fn p_variant() -> UniPoly {
    let c = rat(73542, 103909);
    let t = UniPoly::identity();
    let w = one_plus_t2_pow(4);
    let one_minus_half_t = UniPoly::new(vec![rat(1, 1), rat(-1, 2)]);
    let p =
        &(&one_minus_half_t * &w).scale(&c) - &(&t * &UniPoly::from_ints(&[1, 0, -1]).pow(3)).scale(&rat(4347, 1250));
    p.scale(&rat(P_SCALE, 1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PositivityOnUnit {
    pub roots_in_open: usize,
    pub at_zero: String,
    pub at_one: String,
    pub positive: bool,
}

fn positivity_on_unit(p: &UniPoly) -> Result<PositivityOnUnit> {
    let (zero, one) = (Rational::zero(), Rational::one());
    let roots = count_real_roots(p, &zero, &one)?;
    let (p0, p1) = (p.eval(&zero), p.eval(&one));
    Ok(PositivityOnUnit {
        roots_in_open: roots,
        positive: roots == 0 && p0 > zero && p1 > zero,
        at_zero: p0.to_string(),
        at_one: p1.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PofT {
    #[serde(serialize_with = "ser_display")]
    pub printed: UniPoly,
    #[serde(serialize_with = "ser_display")]
    pub derived: UniPoly,
    pub matches_printed: bool,
    pub variant_matches_printed: bool,
    pub printed_positivity: PositivityOnUnit,
    pub derived_positivity: PositivityOnUnit,
}

impl PofT {
    /// Error unless the reconstruction equals the printed polynomial.
    pub fn verify(&self) -> Result<()> {
        if self.matches_printed {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("derived {} vs printed {}", self.derived, self.printed)))
        }
    }
}

pub fn p_of_t_check() -> Result<PofT> {
    let printed = p_printed();
    let derived = p_from_f1();
    Ok(PofT {
        matches_printed: derived == printed,
        variant_matches_printed: p_variant() == printed,
        printed_positivity: positivity_on_unit(&printed)?,
        derived_positivity: positivity_on_unit(&derived)?,
        printed,
        derived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pa_reduction_scale() {
        for a in [rat(0, 1), rat(3, 4), rat(-5, 2)] {
            assert_eq!(pa_from_sine(&a), pa_printed(&a));
        }
    }

    #[test]
    fn pipeline_reproduces_quartic() {
        let r = alpha_pipeline_check().unwrap();
        assert!(r.pa_matches && r.matches_quartic && r.p2_nonneg);
        assert!(r.p0_roots > 0);
        // (15/2)^6 times the factor for the unscaled reduction, -16384/5625
        assert_eq!(r.factor, rat(-518400, 1));
    }

    #[test]
    fn p_of_t_reconstruction() {
        let r = p_of_t_check().unwrap();
        assert!(r.variant_matches_printed);
        assert!(!r.matches_printed);
        assert!(r.derived_positivity.positive && r.printed_positivity.positive);
        assert_eq!(r.printed_positivity.at_zero, "91927500");
        // F_1 sampled against the exact reconstruction at T = tan(x/4)
        let x: f64 = 1.3;
        let t = (x / 4.0).tan();
        let val = r.derived.eval_f64(t) / ((1.0 + t * t).powi(4) * P_SCALE as f64);
        assert!((val - super::super::functions::f1_tail(x)).abs() < 1e-12);
    }
}
