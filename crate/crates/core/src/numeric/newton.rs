/// Outcome of Newton's method on a polynomial with `f64` coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polish {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
    /// Set when `|P'(x)|` became too small to divide by; `x` is the last
    /// safe iterate.
    pub derivative_too_small: bool,
}

const MAX_ITER: usize = 50;
const REL_TOL: f64 = 1e-13;

/// `(P(x), P'(x), sum |c_i| |x|^i)`, coefficients ascending.
pub(crate) fn eval_with_scale(coeffs: &[f64], x: f64) -> (f64, f64, f64) {
    let (mut p, mut dp, mut scale) = (0.0, 0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
        scale = scale * x.abs() + c.abs();
    }
    (p, dp, scale)
}

/// Refines `x0` until `|P(x)| <= 1e-13 * scale` or 50 iterations.
pub fn newton_polish(coeffs: &[f64], x0: f64) -> Polish {
    let mut x = x0;
    let mut iterations = 0;
    loop {
        let (p, dp, scale) = eval_with_scale(coeffs, x);
        if p.abs() <= REL_TOL * scale.max(f64::MIN_POSITIVE) || iterations == MAX_ITER {
            return Polish { x, residual: p.abs(), iterations, derivative_too_small: false };
        }
        if dp.abs() <= f64::EPSILON * scale {
            return Polish { x, residual: p.abs(), iterations, derivative_too_small: true };
        }
        let next = x - p / dp;
        let (pn, _, _) = eval_with_scale(coeffs, next);
        if pn.abs() >= p.abs() && p.abs() <= 1e-10 * scale {
            // Rounding floor reached.
            return Polish { x, residual: p.abs(), iterations: iterations + 1, derivative_too_small: false };
        }
        x = next;
        iterations += 1;
    }
}
