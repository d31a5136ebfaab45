use quadrature::double_exponential;

/// `int_a^b f` by double-exponential quadrature on `panels` equal pieces,
/// bisecting any piece whose error estimate exceeds its share of `tol`.
pub fn integrate(f: &(dyn Fn(f64) -> f64 + Sync), a: f64, b: f64, tol: f64, panels: usize) -> f64 {
    if a == b {
        return 0.0;
    }
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let share = (tol / panels as f64).max(1e-15);
    (0..panels)
        .map(|i| {
            let lo = a + h * i as f64;
            let hi = if i + 1 == panels { b } else { lo + h };
            adaptive(f, lo, hi, share, 10)
        })
        .sum()
}

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let out = double_exponential::integrate(f, a, b, tol);
    // the estimate cannot drop far below rounding of the result
    if out.error_estimate <= tol.max(1e-15 * out.integral.abs()) || depth == 0 {
        return out.integral;
    }
    let m = 0.5 * (a + b);
    let half = (tol / 2.0).max(1e-16);
    adaptive(f, a, m, half, depth - 1) + adaptive(f, m, b, half, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_oscillatory() {
        let v = integrate(&|x: f64| x * x, 0.0, 3.0, 1e-13, 1);
        assert!((v - 9.0).abs() < 1e-12);
        let w = integrate(&|x: f64| (50.0 * x).sin(), 0.0, 1.0, 1e-13, 16);
        assert!((w - (1.0 - 50f64.cos()) / 50.0).abs() < 1e-12);
    }
}
