use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{DerivationError, Factorization};
use crate::algebra::{rat, Rat, UPoly, Var};

/// Positive-or-negative scalar `coeff * sqrt(radicand)`, `radicand > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rat,
    pub radicand: Rat,
}

impl Surd {
    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn rational(coeff: Rat) -> Self {
        Self { coeff, radicand: Rat::one() }
    }

    pub fn new(coeff: Rat, radicand: Rat) -> Self {
        Self { coeff, radicand }.simplified()
    }

    /// Pulls a perfect-square radicand into the rational coefficient.
    fn simplified(self) -> Self {
        match rat::sqrt_exact(&self.radicand) {
            Some(s) => Self::rational(self.coeff * s),
            None => self,
        }
    }

    pub fn value(&self) -> f64 {
        rat::to_f64(&self.coeff) * rat::to_f64(&self.radicand).sqrt()
    }

    fn times(&self, coeff: &Rat, radicand: &Rat) -> Self {
        Self::new(&self.coeff * coeff, &self.radicand * radicand)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrandKind {
    /// `G(R(s)) / sqrt(U(s))` against `G(t) / sqrt(D(t))`.
    Radical,
    /// `H(R(s)) / (R'(s) U(s))` against `H(t) / D(t)`.
    Rational,
}

/// Sign multiplier of an integrand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignFactor {
    Constant(i8),
    /// Sign of the polynomial at the integration point.
    SignOf(UPoly),
}

/// One side of the separated-variables identity:
///
/// `scalar * sign(s) * sgn(cancelled(s)) * numerator(s) / (den(s) * sqrt(radicand(s)))`
///
/// With a radicand present the denominator enters as `|den(s)|`, since it
/// came out of a square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrandSide {
    pub var: Var,
    pub scalar: Surd,
    pub sign: SignFactor,
    pub numerator: UPoly,
    pub cancelled: Option<UPoly>,
    pub denominator: UPoly,
    pub radicand: Option<UPoly>,
}

fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

impl IntegrandSide {
    /// Value at `s`; non-finite where the integrand is singular.
    pub fn eval(&self, s: f64) -> f64 {
        let mut den = self.denominator.eval_f64(s);
        if self.radicand.is_some() {
            den = den.abs();
        }
        let mut v = self.scalar.value() * self.numerator.eval_f64(s) / den;
        if let Some(r) = &self.radicand {
            v /= r.eval_f64(s).sqrt();
        }
        match &self.sign {
            SignFactor::Constant(c) => v *= *c as f64,
            SignFactor::SignOf(p) => v *= sgn(p.eval_f64(s)),
        }
        if let Some(g) = &self.cancelled {
            v *= sgn(g.eval_f64(s));
        }
        v
    }

    /// Polynomials whose zeros make the integrand singular.
    pub fn singular_factors(&self) -> Vec<&UPoly> {
        let mut out = vec![&self.denominator];
        if let Some(r) = &self.radicand {
            out.push(r);
        }
        out
    }
}

impl fmt::Display for IntegrandSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::X => "s",
            Var::Q => "t",
        };
        let show = |p: &UPoly| p.to_string().replace(['x', 'q'], v);
        let mut coeff = self.scalar.coeff.clone();
        if let SignFactor::Constant(c) = &self.sign {
            coeff *= rat::int(*c as i64);
        }
        let mut prefix = Vec::new();
        if !self.scalar.radicand.is_one() {
            prefix.push(Surd { coeff: coeff.clone(), radicand: self.scalar.radicand.clone() }.to_string());
            coeff = Rat::one();
        }
        if let SignFactor::SignOf(p) = &self.sign {
            prefix.push(format!("sgn({})", show(p)));
        }
        if let Some(g) = &self.cancelled {
            prefix.push(format!("sgn({})", show(g)));
        }
        for p in &prefix {
            write!(f, "{p}*")?;
        }
        write!(f, "({})", show(&self.numerator.scale(&coeff)))?;
        let den_is_one = self.denominator.degree() == Some(0) && self.denominator.coeff(0).is_one();
        match (&self.radicand, den_is_one) {
            (None, true) => Ok(()),
            (None, false) => write!(f, "/({})", show(&self.denominator)),
            (Some(r), true) => write!(f, "/sqrt({})", show(r)),
            (Some(r), false) => write!(f, "/(|{}|*sqrt({}))", show(&self.denominator), show(r)),
        }
    }
}

/// Both sides of the identity `phi(x) = varphi(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrandSpec {
    pub kind: IntegrandKind,
    pub weight: UPoly,
    pub weight_scalar: Surd,
    /// Degenerate-branch mode: `R'(0) = 0` or a weight vanishing at 0 is
    /// accepted, invertibility is not claimed, and the constant sign
    /// `sgn(R'(0))` becomes the pointwise sign of `R'`.
    pub degenerate: bool,
    pub lhs: IntegrandSide,
    pub rhs: IntegrandSide,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrandOptions {
    /// Positive surd multiplying the weight polynomial.
    pub scalar: Surd,
    pub degenerate: bool,
}

impl Default for IntegrandOptions {
    fn default() -> Self {
        Self { scalar: Surd::one(), degenerate: false }
    }
}

/// `c * A^2 * B` with `A`, `B` primitive integer polynomials (positive
/// leading coefficients) and `B` square-free.
fn square_split(p: &UPoly) -> (Rat, UPoly, UPoly) {
    let var = p.var();
    let parts = p.squarefree_decomposition();
    let mut a = UPoly::one(var);
    let mut b = UPoly::one(var);
    for (i, f) in parts.iter().enumerate() {
        let mult = i + 1;
        a = a * f.pow(mult / 2);
        if mult % 2 == 1 {
            b = b * f;
        }
    }
    let (_, a) = a.primitive_part();
    let (_, b) = b.primitive_part();
    let c = p.lc().expect("nonzero") / (a.lc().expect("nonzero").pow(2) * b.lc().expect("nonzero"));
    (c, a, b)
}

/// Cancels the common factor of `num / den` and moves rational content into
/// the scalar. Returns `(scalar factor, numerator, denominator, cancelled)`.
fn reduce(num: &UPoly, den: &UPoly) -> (Rat, UPoly, UPoly, UPoly) {
    let g = UPoly::gcd(num, den).expect("same variable");
    let n = num.exact_div(&g).expect("gcd divides");
    let d = den.exact_div(&g).expect("gcd divides");
    let (cn, n) = n.primitive_part();
    let (cd, d) = d.primitive_part();
    (cn / cd, n, d, g)
}

fn radical_side(var: Var, weighted: &UPoly, under_root: &UPoly, scalar: &Surd, sign: SignFactor) -> IntegrandSide {
    let (c, a, b) = square_split(under_root);
    let (k, numerator, denominator, g) = reduce(weighted, &a);
    // |k * den| = |k| |den|; the sign of k stays in front.
    let scalar = scalar.times(&k, &c.recip());
    let cancelled = (g.degree().unwrap_or(0) > 0).then_some(g);
    let radicand = (b.degree().unwrap_or(0) > 0).then_some(b);
    IntegrandSide { var, scalar, sign, numerator, cancelled, denominator, radicand }
}

fn rational_side(var: Var, num: &UPoly, den: &UPoly, scalar: &Surd) -> IntegrandSide {
    let (k, numerator, denominator, _) = reduce(num, den);
    IntegrandSide {
        var,
        scalar: scalar.times(&k, &Rat::one()),
        sign: SignFactor::Constant(1),
        numerator,
        cancelled: None,
        denominator,
        radicand: None,
    }
}

/// Builds the integrands of the separated-variables identity for a weight
/// polynomial `G` (or `H`) given in the variable `q` (playing `t`).
pub fn build_integrands(
    f: &Factorization,
    weight: &UPoly,
    kind: IntegrandKind,
    opts: &IntegrandOptions,
) -> Result<IntegrandSpec, DerivationError> {
    let weight = weight.clone().with_var(Var::Q);
    if !opts.degenerate {
        if weight.coeff(0).is_zero() {
            return Err(DerivationError::WeightVanishesAtZero);
        }
        if f.sign_rp0 == 0 {
            return Err(DerivationError::DerivativeVanishesAtZero);
        }
    }
    if weight.is_zero() || opts.scalar.coeff.is_zero() || !opts.scalar.radicand.is_positive() {
        return Err(DerivationError::WeightVanishesAtZero);
    }
    let weighted = weight.compose(&f.r);
    let rp = f.r.derivative();
    let (lhs, rhs) = match kind {
        IntegrandKind::Radical => {
            let sign = if opts.degenerate { SignFactor::SignOf(rp) } else { SignFactor::Constant(f.sign_rp0) };
            let lhs = radical_side(Var::X, &weighted, &f.script_u, &opts.scalar, sign);
            let rhs = radical_side(Var::Q, &weight, &f.script_d, &opts.scalar, SignFactor::Constant(1));
            (lhs, rhs)
        }
        IntegrandKind::Rational => {
            let lhs = rational_side(Var::X, &weighted, &(&rp * &f.u), &opts.scalar);
            let rhs = rational_side(Var::Q, &weight, &f.d, &opts.scalar);
            (lhs, rhs)
        }
    };
    Ok(IntegrandSpec { kind, weight, weight_scalar: opts.scalar.clone(), degenerate: opts.degenerate, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use crate::derivation::{factorize, ProblemSpec};

    fn x(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::X, c)
    }
    fn q(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::Q, c)
    }
    fn fact(c: &[i64]) -> Factorization {
        factorize(&ProblemSpec::new(x(c)).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_radical() {
        let s = build_integrands(&fact(&[0, 1, 1]), &q(&[1]), IntegrandKind::Radical, &Default::default()).unwrap();
        assert_eq!(s.lhs.numerator, x(&[1]));
        assert_eq!(s.lhs.radicand, None);
        assert_eq!(s.lhs.sign, SignFactor::Constant(1));
        assert_eq!(s.lhs.eval(0.7), 1.0);
        assert_eq!(s.rhs.radicand, Some(q(&[1, 4])));
        assert!((s.rhs.eval(2.0) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_rational() {
        let s = build_integrands(&fact(&[0, 1, 1]), &q(&[1]), IntegrandKind::Rational, &Default::default()).unwrap();
        assert_eq!(s.lhs.denominator, x(&[1, 2]));
        assert_eq!(s.rhs.denominator, q(&[1, 4]));
        assert_eq!(s.lhs.scalar, Surd::one());
        assert_eq!(s.lhs.to_string(), "(1)/(2*s + 1)");
        assert_eq!(s.rhs.to_string(), "(1)/(4*t + 1)");
    }

    #[test]
    fn degree_four_fixture_with_weight_minus_two() {
        let s = build_integrands(&fact(&[0, -1, 2, -2, 1]), &q(&[-2]), IntegrandKind::Radical, &Default::default())
            .unwrap();
        // 2 / ((2s^2 - 2s + 1) sqrt(4s^2 - 4s + 3))
        assert_eq!(s.lhs.denominator, x(&[1, -2, 2]));
        assert_eq!(s.lhs.radicand, Some(x(&[3, -4, 4])));
        let lhs_at = |v: f64| 2.0 / ((2.0 * v * v - 2.0 * v + 1.0) * (4.0 * v * v - 4.0 * v + 3.0).sqrt());
        for v in [-0.4, 0.0, 0.3, 1.7] {
            assert!((s.lhs.eval(v) - lhs_at(v)).abs() < 1e-14);
        }
        // -2 / ((4t + 1) sqrt(16t + 3))
        let rhs_at = |t: f64| -2.0 / ((4.0 * t + 1.0) * (16.0 * t + 3.0).sqrt());
        for t in [0.0, 0.25, 0.75] {
            assert!((s.rhs.eval(t) - rhs_at(t)).abs() < 1e-14);
        }
        assert_eq!(s.lhs.to_string(), "(2)/(|2*s^2 - 2*s + 1|*sqrt(4*s^2 - 4*s + 3))");
    }

    #[test]
    fn betti_weight_simplifies_scalars() {
        let opts = IntegrandOptions { scalar: Surd::new(int(5), int(5)), degenerate: true };
        let s = build_integrands(&fact(&[0, 0, 0, 5, 0, 1]), &q(&[0, 1]), IntegrandKind::Radical, &opts).unwrap();
        assert_eq!(s.lhs.scalar, Surd::one());
        assert_eq!(s.lhs.numerator, x(&[0, 0, 1]));
        assert_eq!(s.lhs.radicand, Some(x(&[12, 0, -8, 0, 4, 0, 1])));
        assert_eq!(s.rhs.scalar, Surd::rational(crate::algebra::rat::rat(1, 5)));
        assert_eq!(s.rhs.radicand, Some(q(&[108, 0, 1])));
        let t = 0.8;
        assert!((s.rhs.eval(t) - 1.0 / (5.0 * (t * t + 108.0f64).sqrt())).abs() < 1e-15);
        let v = 0.6f64;
        let b = v.powi(6) + 4.0 * v.powi(4) - 8.0 * v * v + 12.0;
        assert!((s.lhs.eval(v) - v * v / b.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn weight_zero_needs_degenerate_mode() {
        let f = fact(&[0, 1, 0, 1]);
        assert_eq!(
            build_integrands(&f, &q(&[0, 1]), IntegrandKind::Radical, &Default::default()),
            Err(DerivationError::WeightVanishesAtZero)
        );
        let f = fact(&[0, 0, 0, 5, 0, 1]);
        assert_eq!(
            build_integrands(&f, &q(&[1]), IntegrandKind::Radical, &Default::default()),
            Err(DerivationError::DerivativeVanishesAtZero)
        );
    }
}
