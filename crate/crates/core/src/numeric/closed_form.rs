use super::newton::newton_polish;
use super::NumericError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormMethod {
    Babylonian,
    Cardano,
    VietaTrig,
    VietaHyp,
    Ferrari,
    QuarticW,
}

impl ClosedFormMethod {
    pub fn name(self) -> &'static str {
        match self {
            Self::Babylonian => "babylonian",
            Self::Cardano => "cardano",
            Self::VietaTrig => "vieta_trig",
            Self::VietaHyp => "vieta_hyp",
            Self::Ferrari => "ferrari",
            Self::QuarticW => "quartic_w",
        }
    }
}

/// The root through the origin of `x^n + p x = q` from a radical formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormRoot {
    pub method: ClosedFormMethod,
    pub value: f64,
    pub validity: &'static str,
}

fn root(method: ClosedFormMethod, value: f64, validity: &'static str) -> Result<ClosedFormRoot, NumericError> {
    if value.is_finite() {
        Ok(ClosedFormRoot { method, value, validity })
    } else {
        Err(NumericError::NonFinite)
    }
}

/// `x^2 + p x = q`, written without cancellation.
pub fn babylonian(p: f64, q: f64) -> Result<ClosedFormRoot, NumericError> {
    let disc = p * p + 4.0 * q;
    if disc < 0.0 || p == 0.0 {
        return Err(NumericError::OutOfDomain("babylonian"));
    }
    let value = 2.0 * q / (p + p.signum() * disc.sqrt());
    root(ClosedFormMethod::Babylonian, value, "p != 0, p^2 + 4q >= 0")
}

/// `x^3 + p x = q` with real cube roots.
pub fn cardano(p: f64, q: f64) -> Result<ClosedFormRoot, NumericError> {
    let disc = q * q / 4.0 + p * p * p / 27.0;
    if disc < 0.0 {
        return Err(NumericError::OutOfDomain("cardano"));
    }
    let s = disc.sqrt();
    let value = (q / 2.0 + s).cbrt() + (q / 2.0 - s).cbrt();
    root(ClosedFormMethod::Cardano, value, "q^2/4 + p^3/27 >= 0")
}

/// Trigonometric form for three real roots, `p < 0`, `|q| < sqrt(-4p^3/27)`.
pub fn vieta_trig(p: f64, q: f64) -> Result<ClosedFormRoot, NumericError> {
    if p >= 0.0 || q.abs() >= (-4.0 * p * p * p / 27.0).sqrt() {
        return Err(NumericError::OutOfDomain("vieta_trig"));
    }
    let m = (-p / 3.0).sqrt();
    let theta = (-q / (2.0 * m * m * m)).asin() / 3.0;
    root(ClosedFormMethod::VietaTrig, 2.0 * m * theta.sin(), "p < 0, |q| < sqrt(-4p^3/27)")
}

/// Hyperbolic form for `p > 0`.
pub fn vieta_hyp(p: f64, q: f64) -> Result<ClosedFormRoot, NumericError> {
    if p <= 0.0 {
        return Err(NumericError::OutOfDomain("vieta_hyp"));
    }
    let m = (p / 3.0).sqrt();
    let theta = (q / (2.0 * m * m * m)).asinh() / 3.0;
    root(ClosedFormMethod::VietaHyp, 2.0 * m * theta.sinh(), "p > 0")
}

/// Bisection for the sign change of a continuous function on `[lo, hi]`.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `x^4 + p x = q` through `-p^2 w^6 + 4 q w^4 + 1 = 0` on the branch
/// `w(0) = p^(-1/3)`.
pub fn quartic_w(p: f64, q: f64) -> Result<ClosedFormRoot, NumericError> {
    if p == 0.0 {
        return Err(NumericError::OutOfDomain("quartic_w"));
    }
    // y = w^2 is the unique positive zero of -p^2 y^3 + 4 q y^2 + 1.
    let f = |y: f64| -p * p * y * y * y + 4.0 * q * y * y + 1.0;
    let mut hi = 1.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(NumericError::NonFinite);
        }
    }
    let y = bisect(f, 0.0, hi);
    let w = p.signum() * y.sqrt();
    let t = 2.0 * p * w * w * w;
    if t < 1.0 {
        return Err(NumericError::OutOfDomain("quartic_w"));
    }
    // (sqrt(t - 1) - 1) / (2w) without cancellation near t = 2.
    let value = (t - 2.0) / (2.0 * w * ((t - 1.0).sqrt() + 1.0));
    root(ClosedFormMethod::QuarticW, value, "p != 0, 2 p w^3 >= 1")
}

/// Real roots of `x^3 + a2 x^2 + a1 x + a0`, ascending and polished.
pub fn real_cubic_roots(a2: f64, a1: f64, a0: f64) -> Vec<f64> {
    let (p, q, shift) = depress_cubic(a2, a1, a0);
    // y^3 + p y = q.
    let mut ys = Vec::new();
    let disc = q * q / 4.0 + p * p * p / 27.0;
    if p < 0.0 && disc < 0.0 {
        let m = (-p / 3.0).sqrt();
        let theta = (-q / (2.0 * m * m * m)).clamp(-1.0, 1.0).asin() / 3.0;
        for k in 0..3 {
            let angle = theta + 2.0 * std::f64::consts::PI * k as f64 / 3.0;
            ys.push(2.0 * m * angle.sin());
        }
    } else {
        let s = disc.max(0.0).sqrt();
        ys.push((q / 2.0 + s).cbrt() + (q / 2.0 - s).cbrt());
    }
    let coeffs = [a0, a1, a2, 1.0];
    let mut xs: Vec<f64> = ys.into_iter().map(|y| newton_polish(&coeffs, y - shift).x).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// `x^3 + a2 x^2 + a1 x + a0` with `x = y - shift` becomes `y^3 + p y - q`.
/// Returns `(p, q, shift)`.
pub fn depress_cubic(a2: f64, a1: f64, a0: f64) -> (f64, f64, f64) {
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let c = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    (p, -c, shift)
}

/// `x^4 + a3 x^3 + a2 x^2 + a1 x + a0` with `x = y - shift` becomes
/// `y^4 + c y^2 + d y + e`. Returns `(c, d, e, shift)`.
pub fn depress_quartic(a3: f64, a2: f64, a1: f64, a0: f64) -> (f64, f64, f64, f64) {
    let s = a3 / 4.0;
    let c = a2 - 6.0 * s * s;
    let d = a1 - 2.0 * a2 * s + 8.0 * s * s * s;
    let e = a0 - a1 * s + a2 * s * s - 3.0 * s * s * s * s;
    (c, d, e, s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FerrariRoots {
    /// Positive square root of the largest positive resolvent root, signed
    /// like `d`.
    pub u: f64,
    /// `-(u/2)(1 - sqrt(2d/u^3 - 2c/u^2 - 1))`, the root continuing
    /// `x = 0` when `e = 0`.
    pub branch: Option<f64>,
    /// All real roots, ascending.
    pub roots: Vec<f64>,
}

/// Ferrari's construction for `x^4 + c x^2 + d x + e`, `d != 0`, through
/// the resolvent `v^3 + 2c v^2 + (c^2 - 4e) v - d^2 = 0` with `v = u^2`.
pub fn ferrari(c: f64, d: f64, e: f64) -> Result<FerrariRoots, NumericError> {
    if d == 0.0 {
        return Err(NumericError::ZeroLinearTerm);
    }
    let v = real_cubic_roots(2.0 * c, c * c - 4.0 * e, -d * d)
        .into_iter()
        .rfind(|&v| v > 0.0)
        .ok_or(NumericError::NonFinite)?;
    let u = d.signum() * v.sqrt();
    let mut roots = Vec::new();
    let plus = -2.0 * d / (u * u * u) - 2.0 * c / (u * u) - 1.0;
    let minus = 2.0 * d / (u * u * u) - 2.0 * c / (u * u) - 1.0;
    if plus >= 0.0 {
        roots.push(u / 2.0 * (1.0 + plus.sqrt()));
        roots.push(u / 2.0 * (1.0 - plus.sqrt()));
    }
    let branch = (minus >= 0.0).then(|| -u / 2.0 * (1.0 - minus.sqrt()));
    if minus >= 0.0 {
        roots.push(-u / 2.0 * (1.0 + minus.sqrt()));
        roots.push(-u / 2.0 * (1.0 - minus.sqrt()));
    }
    roots.sort_by(f64::total_cmp);
    Ok(FerrariRoots { u, branch, roots })
}

/// Real roots of `x^4 + c x^2 + d x + e`, ascending; `d = 0` is solved as a
/// quadratic in `x^2`.
pub fn depressed_quartic_real_roots(c: f64, d: f64, e: f64) -> Vec<f64> {
    if d != 0.0 {
        return ferrari(c, d, e).map(|f| f.roots).unwrap_or_default();
    }
    let disc = c * c - 4.0 * e;
    if disc < 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    let mut roots = Vec::new();
    for z in [(-c + s) / 2.0, (-c - s) / 2.0] {
        if z > 0.0 {
            roots.push(z.sqrt());
            roots.push(-z.sqrt());
        } else if z == 0.0 {
            roots.push(0.0);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}

/// Dispatches to the formula `method` for `x^n + p x = q`.
pub fn closed_form_root(n: usize, p: f64, q: f64, method: ClosedFormMethod) -> Result<ClosedFormRoot, NumericError> {
    use ClosedFormMethod::*;
    match (n, method) {
        (2, Babylonian) => babylonian(p, q),
        (3, Cardano) => cardano(p, q),
        (3, VietaTrig) => vieta_trig(p, q),
        (3, VietaHyp) => vieta_hyp(p, q),
        (4, QuarticW) => quartic_w(p, q),
        (4, Ferrari) => {
            let f = ferrari(0.0, p, -q)?;
            let value = f.branch.ok_or(NumericError::OutOfDomain("ferrari"))?;
            root(Ferrari, value, "d != 0")
        }
        _ => Err(NumericError::OutOfDomain(method.name())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn exact_integer_roots() {
        close(babylonian(1.0, 2.0).unwrap().value, 1.0, 1e-15);
        close(cardano(3.0, 4.0).unwrap().value, 1.0, 1e-14);
        close(vieta_hyp(3.0, 4.0).unwrap().value, 1.0, 1e-14);
        close(quartic_w(1.0, 2.0).unwrap().value, 1.0, 1e-13);
        close(closed_form_root(4, 1.0, 2.0, ClosedFormMethod::Ferrari).unwrap().value, 1.0, 1e-13);
    }

    #[test]
    fn negative_parameters() {
        // x^2 - x = 2 has roots 2 and -1; the branch through 0 is -1.
        close(babylonian(-1.0, 2.0).unwrap().value, -1.0, 1e-15);
        // x^3 - 4x = 0.5 near x = -0.125.
        let v = vieta_trig(-4.0, 0.5).unwrap().value;
        close(v * v * v - 4.0 * v, 0.5, 1e-14);
        assert!(v < 0.0 && v > -0.2);
        // x^4 - x = q, negative w branch.
        let x = quartic_w(-1.0, 0.1).unwrap().value;
        close(x.powi(4) - x, 0.1, 1e-14);
        assert!(x < 0.0 && x > -0.2);
    }

    #[test]
    fn vieta_trig_domain() {
        let edge = (4.0f64 / 27.0).sqrt();
        assert!(vieta_trig(-1.0, edge * 1.01).is_err());
        assert!(vieta_trig(1.0, 0.1).is_err());
        assert!(cardano(-1.0, 0.1).is_err());
    }

    #[test]
    fn cubic_roots_and_depression() {
        let r = real_cubic_roots(-6.0, 11.0, -6.0);
        assert_eq!(r.len(), 3);
        for (a, b) in r.iter().zip([1.0, 2.0, 3.0]) {
            close(*a, b, 1e-13);
        }
        let (p, q, shift) = depress_cubic(3.0, 3.0, 1.0);
        // (x + 1)^3 = y^3.
        close(p, 0.0, 0.0);
        close(q, 0.0, 1e-15);
        close(shift, 1.0, 0.0);
    }

    #[test]
    fn ferrari_all_roots() {
        // (x - 1)(x + 2)(x^2 - x + 3) = x^4 + 5x - 6.
        let f = ferrari(0.0, 5.0, -6.0).unwrap();
        assert_eq!(f.roots.len(), 2);
        close(f.roots[0], -2.0, 1e-12);
        close(f.roots[1], 1.0, 1e-12);
        assert!(ferrari(1.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn biquadratic_fallback() {
        // x^4 - 5x^2 + 4 = (x^2 - 1)(x^2 - 4).
        let r = depressed_quartic_real_roots(-5.0, 0.0, 4.0);
        assert_eq!(r, vec![-2.0, -1.0, 1.0, 2.0]);
    }

    #[test]
    fn quartic_depression_round_trip() {
        let (c, d, e, s) = depress_quartic(-2.0, 2.0, -1.0, -0.75);
        close(c, 0.5, 1e-15);
        close(d, 0.0, 1e-15);
        close(e, -0.1875 - 0.75, 1e-15);
        close(s, -0.5, 0.0);
    }
}
