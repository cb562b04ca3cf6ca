use std::collections::BinaryHeap;

use num_traits::Zero;

use super::NumericError;
use crate::algebra::rat;
use crate::derivation::IntegrandSide;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Sum of the local Gauss/Kronrod differences.
    pub error: f64,
    pub evaluations: usize,
}

const MAX_DEPTH: usize = 40;
const MAX_INTERVALS: usize = 200_000;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights at XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: usize,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&o.error)
    }
}

fn g7k15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64), NumericError> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let d = h * XGK[i];
        let s = f(c - d) + f(c + d);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    if !k.is_finite() {
        return Err(NumericError::SingularIntegrand { a, b });
    }
    Ok((k * h, ((k - g) * h).abs()))
}

/// Adaptive 7/15-point Gauss-Kronrod quadrature: the interval with the
/// largest error estimate is bisected until the total estimate is at most
/// `tol * (1 + |value|)`.
pub fn gauss_kronrod(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<Quadrature, NumericError> {
    if a == b {
        return Ok(Quadrature { value: 0.0, error: 0.0, evaluations: 0 });
    }
    let (value, error) = g7k15(&f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error, depth: 0 });
    let (mut total, mut total_err) = (value, error);
    let mut evaluations = 15;
    while total_err > tol * (1.0 + total.abs()) {
        let worst = heap.pop().expect("heap is never empty");
        if worst.depth >= MAX_DEPTH || heap.len() >= MAX_INTERVALS {
            return Err(NumericError::NonConvergence(MAX_DEPTH));
        }
        let m = 0.5 * (worst.a + worst.b);
        let (v1, e1) = g7k15(&f, worst.a, m)?;
        let (v2, e2) = g7k15(&f, m, worst.b)?;
        evaluations += 30;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Piece { a: worst.a, b: m, value: v1, error: e1, depth: worst.depth + 1 });
        heap.push(Piece { a: m, b: worst.b, value: v2, error: e2, depth: worst.depth + 1 });
    }
    // Re-sum to shed drift from the running updates.
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    Ok(Quadrature { value, error, evaluations })
}

/// Integral of one side of the identity over `[a, b]`. Fails when a
/// denominator or radicand vanishes on the closed interval.
pub fn quad_side(side: &IntegrandSide, a: f64, b: f64, tol: f64) -> Result<Quadrature, NumericError> {
    let (lo, hi) = (a.min(b), a.max(b));
    let lo_r = rat::from_f64(lo).ok_or(NumericError::NonFinite)?;
    let hi_r = rat::from_f64(hi).ok_or(NumericError::NonFinite)?;
    for p in side.singular_factors() {
        if p.degree().unwrap_or(0) > 0 && (p.eval(&lo_r).is_zero() || p.count_real_roots(&lo_r, &hi_r) > 0) {
            return Err(NumericError::SingularIntegrand { a, b });
        }
    }
    gauss_kronrod(|s| side.eval(s), a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{UPoly, Var};
    use crate::derivation::{build_integrands, factorize, IntegrandKind, ProblemSpec};

    fn quadratic(kind: IntegrandKind) -> crate::derivation::IntegrandSpec {
        let f = factorize(&ProblemSpec::trinomial(2, rat::int(1)).unwrap()).unwrap();
        build_integrands(&f, &UPoly::one(Var::Q), kind, &Default::default()).unwrap()
    }

    #[test]
    fn hyperelliptic_quadratic() {
        let s = quadratic(IntegrandKind::Radical);
        let v = quad_side(&s.rhs, 0.0, 2.0, 1e-12).unwrap();
        assert!((v.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rational_quadratic_is_a_logarithm() {
        let s = quadratic(IntegrandKind::Rational);
        let v = quad_side(&s.rhs, 0.0, 2.0, 1e-12).unwrap();
        assert!((v.value - 9.0f64.ln() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn empty_interval() {
        let s = quadratic(IntegrandKind::Radical);
        assert_eq!(quad_side(&s.rhs, 0.0, 0.0, 1e-12).unwrap().value, 0.0);
    }

    #[test]
    fn reversed_interval_changes_sign() {
        let v = gauss_kronrod(|t| t.exp(), 1.0, 0.0, 1e-13).unwrap();
        assert!((v.value + (1.0f64.exp() - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn endpoint_square_root_converges() {
        let v = gauss_kronrod(|t| t.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert!((v.value - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn singularity_inside_is_rejected() {
        let s = quadratic(IntegrandKind::Rational);
        assert!(matches!(quad_side(&s.rhs, -1.0, 0.0, 1e-10), Err(NumericError::SingularIntegrand { .. })));
    }

    #[test]
    fn nonintegrable_singularity_does_not_converge() {
        assert!(gauss_kronrod(|t: f64| 1.0 / t, 0.0, 1.0, 1e-10).is_err());
    }
}
