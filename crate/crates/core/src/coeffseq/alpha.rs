use std::sync::OnceLock;

use crate::exactnum::{AlgebraicReal, UniPoly};

/// `54675 a^4 - 2442195 a^3 + 2182800 a^2 - 115424 a - 96429`.
pub fn alpha_quartic() -> UniPoly {
    UniPoly::from_ints(&[-96429, -115424, 2182800, -2442195, 54675])
}

/// Second largest real root of [`alpha_quartic`], about `0.7826521329`.
pub fn alpha_root() -> &'static AlgebraicReal {
    static ALPHA: OnceLock<AlgebraicReal> = OnceLock::new();
    ALPHA.get_or_init(|| {
        let roots = AlgebraicReal::real_roots(&alpha_quartic()).expect("nonzero quartic");
        assert_eq!(roots.len(), 4, "quartic has four real roots");
        roots[2].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use std::cmp::Ordering;

    #[test]
    fn alpha_brackets() {
        let a = alpha_root();
        assert_eq!(a.cmp_rational(&rat(78265, 100000)), Ordering::Greater);
        assert_eq!(a.cmp_rational(&rat(78266, 100000)), Ordering::Less);
        assert!((a.to_f64() - 0.782652132952182).abs() < 1e-13);
    }
}
