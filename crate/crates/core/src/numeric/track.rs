use num_traits::Zero;

use super::newton::{eval_with_scale, newton_polish};
use crate::algebra::{rat, Rat, UPoly, Var};
use crate::derivation::AbelOde;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackOptions {
    pub atol: f64,
    pub rtol: f64,
    /// Bound on `|P(x)|` at the target for an `Ok` status.
    pub residual_tol: f64,
    /// Fraction of the distance to a branch point that is still tracked.
    pub branch_margin: f64,
    pub max_steps: usize,
}

impl Default for TrackOptions {
    fn default() -> Self {
        Self { atol: 1e-12, rtol: 1e-10, residual_tol: 1e-10, branch_margin: 0.99, max_steps: 100_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrackStatus {
    Ok,
    /// `D(q_star) = 0` lies between 0 and the target; tracking stopped at
    /// `q_reached`, short of it.
    HitBranchPoint {
        q_star: f64,
    },
    StepUnderflow,
    /// The target was reached but the polished residual exceeds the bound.
    ResidualAboveTolerance,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackResult {
    pub q_target: f64,
    pub q_reached: f64,
    pub x: f64,
    /// `|P(x)|` at `q_reached`.
    pub residual: f64,
    pub steps: usize,
    pub rejected: usize,
    pub polish_iters: usize,
    pub status: TrackStatus,
}

/// First real zero of `d` on the segment from 0 to `q_target` (0 excluded
/// unless `d(0) = 0`), located by Sturm sequences in exact arithmetic.
pub fn first_branch_point(d: &UPoly, q_target: f64) -> Option<f64> {
    if d.coeff(0).is_zero() {
        return Some(0.0);
    }
    if q_target == 0.0 || !q_target.is_finite() {
        return None;
    }
    let dir = q_target.signum();
    let poly = if dir < 0.0 { d.compose(&UPoly::from_ints(Var::Q, &[0, -1])) } else { d.clone() };
    let hi = rat::from_f64(q_target.abs())?;
    let width = rat::from_f64(1e-15 * q_target.abs().max(1.0))?;
    poly.first_real_root(&Rat::zero(), &hi, &width).map(|r| dir * rat::to_f64(&r))
}

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] =
    [5179.0 / 57600.0, 0.0, 7571.0 / 16695.0, 393.0 / 640.0, -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0];

fn dp_step(f: &impl Fn(f64, f64) -> f64, q: f64, x: f64, h: f64) -> (f64, f64) {
    let mut k = [0.0; 7];
    for i in 0..7 {
        let xi = x + h * (0..i).map(|j| A[i][j] * k[j]).sum::<f64>();
        k[i] = f(q + C[i] * h, xi);
    }
    let x5 = x + h * (0..7).map(|i| B5[i] * k[i]).sum::<f64>();
    let err = h * (0..7).map(|i| (B5[i] - B4[i]) * k[i]).sum::<f64>();
    (x5, err)
}

/// Follows the branch with `x(0) = 0` of `R(x) = q` from `q = 0` to
/// `q_target` by integrating the first-order equation, polishing with
/// Newton's method after every accepted step.
pub fn track_root(abel: &AbelOde, q_target: f64, opts: &TrackOptions) -> TrackResult {
    let r: Vec<f64> = abel.r.to_f64_coeffs();
    let p_at = |q: f64| {
        let mut c = r.clone();
        c[0] -= q;
        c
    };
    let branch = first_branch_point(&abel.denominator, q_target);
    let end = match branch {
        Some(qs) => opts.branch_margin * qs,
        None => q_target,
    };
    let mut out = TrackResult {
        q_target,
        q_reached: 0.0,
        x: 0.0,
        residual: 0.0,
        steps: 0,
        rejected: 0,
        polish_iters: 0,
        status: TrackStatus::Ok,
    };
    let f = |q: f64, x: f64| abel.rhs(q, x);
    let (mut q, mut x) = (0.0f64, 0.0f64);
    let dir = end.signum();
    let mut h = end / 64.0;
    let min_step = 1e-14 * q_target.abs();
    while end != 0.0 && q != end {
        if out.steps + out.rejected >= opts.max_steps {
            out.status = TrackStatus::StepUnderflow;
            break;
        }
        let last = (q + h - end) * dir >= 0.0;
        if last {
            h = end - q;
        }
        if h.abs() < min_step && !last {
            out.status = TrackStatus::StepUnderflow;
            break;
        }
        let (x_new, err) = dp_step(&f, q, x, h);
        let scale = opts.atol + opts.rtol * x.abs().max(x_new.abs());
        let ratio = (err / scale).abs();
        if ratio <= 1.0 && x_new.is_finite() {
            q = if last { end } else { q + h };
            let pol = newton_polish(&p_at(q), x_new);
            x = pol.x;
            out.polish_iters += pol.iterations;
            out.steps += 1;
        } else {
            out.rejected += 1;
            if !x_new.is_finite() {
                h *= 0.2;
                continue;
            }
        }
        let factor = if ratio == 0.0 { 5.0 } else { (0.9 * ratio.powf(-0.2)).clamp(0.2, 5.0) };
        h *= factor;
    }
    let pol = newton_polish(&p_at(q), x);
    out.polish_iters += pol.iterations;
    out.x = pol.x;
    out.q_reached = q;
    out.residual = eval_with_scale(&p_at(q), out.x).0.abs();
    if out.status == TrackStatus::Ok {
        if let Some(q_star) = branch {
            out.status = TrackStatus::HitBranchPoint { q_star };
        } else if out.residual > opts.residual_tol {
            out.status = TrackStatus::ResidualAboveTolerance;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::{abel_ode, ProblemSpec};

    fn abel(n: usize, p: i64) -> AbelOde {
        abel_ode(&ProblemSpec::trinomial(n, rat::int(p)).unwrap()).unwrap()
    }

    #[test]
    fn reaches_exact_roots() {
        for n in 2..=4 {
            let t = track_root(&abel(n, 1), 2.0, &TrackOptions::default());
            assert_eq!(t.status, TrackStatus::Ok);
            assert!((t.x - 1.0).abs() < 1e-12, "n = {n}: {t:?}");
            assert!(t.residual <= 1e-12);
        }
    }

    #[test]
    fn negative_target() {
        // x^3 + x = -2 at x = -1.
        let t = track_root(&abel(3, 1), -2.0, &TrackOptions::default());
        assert_eq!(t.status, TrackStatus::Ok);
        assert!((t.x + 1.0).abs() < 1e-12);
    }

    #[test]
    fn stops_at_branch_point() {
        let t = track_root(&abel(3, -1), 1.0, &TrackOptions::default());
        let expected = (4.0f64 / 27.0).sqrt();
        match t.status {
            TrackStatus::HitBranchPoint { q_star } => assert!((q_star - expected).abs() < 1e-10),
            other => panic!("unexpected {other:?}"),
        }
        assert!(t.q_reached < expected);
        assert!(t.residual < 1e-12);
    }

    #[test]
    fn zero_target() {
        let t = track_root(&abel(3, 1), 0.0, &TrackOptions::default());
        assert_eq!((t.x, t.steps, t.status), (0.0, 0, TrackStatus::Ok));
    }

    #[test]
    fn repeated_root_at_origin_is_a_branch_point() {
        let spec = ProblemSpec::new(UPoly::from_ints(Var::X, &[0, 0, 0, 5, 0, 1])).unwrap();
        let t = track_root(&abel_ode(&spec).unwrap(), 1.0, &TrackOptions::default());
        assert_eq!(t.status, TrackStatus::HitBranchPoint { q_star: 0.0 });
    }
}
