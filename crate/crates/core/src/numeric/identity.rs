use super::quad::{gauss_kronrod, quad_side};
use super::NumericError;
use crate::algebra::{rat, UPoly, Var};
use crate::derivation::{
    build_integrands, factorize, IntegrandKind, IntegrandOptions, IntegrandSide, IntegrandSpec, ProblemSpec, Surd,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub x: f64,
    pub q: f64,
    /// `phi(x)`, the integral of the left side from 0 to `x`.
    pub lhs: f64,
    /// `varphi(q)`, the integral of the right side from 0 to `q`.
    pub rhs: f64,
    pub diff: f64,
}

/// Evaluates both integrals of the separated-variables identity at a root
/// `x` of `R(x) = q` supplied by the caller.
pub fn check_identity(spec: &IntegrandSpec, x: f64, q: f64, tol: f64) -> Result<IdentityCheck, NumericError> {
    let lhs = quad_side(&spec.lhs, 0.0, x, tol)?.value;
    let rhs = quad_side(&spec.rhs, 0.0, q, tol)?.value;
    Ok(IdentityCheck { x, q, lhs, rhs, diff: (lhs - rhs).abs() })
}

/// Solves `phi(x) = target` for `x` in `[lo, hi]` with
/// `phi(x) = int_0^x side`, by Newton steps safeguarded with bisection.
pub fn invert_phi(side: &IntegrandSide, target: f64, lo: f64, hi: f64, tol: f64) -> Result<f64, NumericError> {
    let quad_tol = (tol * 1e-3).max(1e-14);
    let phi = |x: f64| quad_side(side, 0.0, x, quad_tol).map(|r| r.value);
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let (fa, fb) = (phi(a)? - target, phi(b)? - target);
    if fa.abs() <= tol {
        return Ok(a);
    }
    if fb.abs() <= tol {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(NumericError::BadBracket { lo, hi });
    }
    let increasing = fb > fa;
    let mut x = if a <= 0.0 && 0.0 <= b { 0.0 } else { 0.5 * (a + b) };
    for _ in 0..200 {
        let v = phi(x)? - target;
        if v.abs() <= tol {
            return Ok(x);
        }
        if (v < 0.0) == increasing {
            a = x;
        } else {
            b = x;
        }
        let step = x - v / side.eval(x);
        x = if step.is_finite() && step > a && step < b { step } else { 0.5 * (a + b) };
        if b - a <= f64::EPSILON * x.abs().max(1.0) {
            return Ok(x);
        }
    }
    Err(NumericError::NonConvergence(200))
}

/// The repeated-root quintic `x^5 + 5x^3 = q` evaluated three ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BettiCheck {
    pub q: f64,
    /// Real root with the sign of `q`, by bisection.
    pub x: f64,
    /// `int_0^{x^2} u / sqrt(u (u^3 + 4u^2 - 8u + 12)) du`.
    pub lhs: f64,
    /// `int_0^q 2 / (5 sqrt(t^2 + 108)) dt`.
    pub rhs: f64,
    /// Twice the left integral built from the factorization.
    pub phi2: f64,
    /// Twice the right integral built from the factorization.
    pub varphi2: f64,
    /// Largest pairwise gap among the four values.
    pub diff: f64,
}

pub(crate) fn betti_spec() -> Result<IntegrandSpec, NumericError> {
    let spec = ProblemSpec::new(UPoly::from_ints(Var::X, &[0, 0, 0, 5, 0, 1]))?;
    let f = factorize(&spec)?;
    let opts = IntegrandOptions { scalar: Surd::new(rat::int(5), rat::int(5)), degenerate: true };
    Ok(build_integrands(&f, &UPoly::from_ints(Var::Q, &[0, 1]), IntegrandKind::Radical, &opts)?)
}

fn bisect_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let up = f(hi) > f(lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if (f(mid) < 0.0) == up {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

pub fn betti_identity(q: f64, tol: f64) -> Result<BettiCheck, NumericError> {
    let r = |x: f64| x.powi(5) + 5.0 * x.powi(3) - q;
    let bound = q.abs().max(1.0);
    let x = bisect_root(r, -bound, bound);
    let lhs =
        gauss_kronrod(|u: f64| u / (u * (u * u * u + 4.0 * u * u - 8.0 * u + 12.0)).sqrt(), 0.0, x * x, tol)?.value;
    let rhs = gauss_kronrod(|t: f64| 2.0 / (5.0 * (t * t + 108.0).sqrt()), 0.0, q, tol)?.value;
    let spec = betti_spec()?;
    let phi2 = 2.0 * quad_side(&spec.lhs, 0.0, x, tol)?.value;
    let varphi2 = 2.0 * quad_side(&spec.rhs, 0.0, q, tol)?.value;
    let vals = [lhs, rhs, phi2, varphi2];
    let max = vals.iter().cloned().fold(f64::MIN, f64::max);
    let min = vals.iter().cloned().fold(f64::MAX, f64::min);
    Ok(BettiCheck { q, x, lhs, rhs, phi2, varphi2, diff: max - min })
}
