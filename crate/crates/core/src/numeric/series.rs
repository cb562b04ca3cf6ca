use num_traits::{One, Signed, Zero};

use super::NumericError;
use crate::algebra::{rat, Rat, UPoly};
use crate::derivation::{LinearOde, ProblemSpec};

/// Truncated power series `sum_{m <= order} coeffs[m] q^m`, known modulo
/// `q^(order + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rat>,
}

impl SeriesQ {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new((0..=order).map(|m| self.coeff(m)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        Self::new((0..=order).map(|m| self.coeff(m) + o.coeff(m)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let mut c = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn mul_poly(&self, p: &UPoly) -> Self {
        self.mul(&Self::new((0..=self.order()).map(|m| p.coeff(m)).collect()))
    }

    /// Term-wise derivative; the order drops by one (floored at 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new((1..=self.order()).map(|m| &self.coeffs[m] * rat::int(m as i64)).collect())
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * q + rat::to_f64(c))
    }
}

/// `R(s)` truncated to the order of `s`.
fn compose(r: &UPoly, s: &SeriesQ) -> SeriesQ {
    let order = s.order();
    r.coeffs().iter().rev().fold(SeriesQ::zero(order), |acc, c| {
        let mut next = acc.mul(s);
        next.coeffs[0] += c;
        next
    })
}

/// Power series of the branch with `x(0) = 0`, solving `R(x(q)) = q`
/// order by order through `q^order`.
pub fn lagrange_series(spec: &ProblemSpec, order: usize) -> Result<SeriesQ, NumericError> {
    let slope = spec.slope_at_zero();
    if slope.is_zero() {
        return Err(NumericError::DerivativeVanishesAtZero);
    }
    let mut s = SeriesQ::zero(order);
    if order == 0 {
        return Ok(s);
    }
    s.coeffs[1] = slope.recip();
    for m in 2..=order {
        // R(s + c q^m) = R(s) + R'(0) c q^m + O(q^(m+1)).
        let head = compose(spec.r(), &s.truncate(m));
        s.coeffs[m] = -head.coeff(m) / &slope;
    }
    Ok(s)
}

/// Coefficients of `sum_k b_k s^(k) + inhomogeneous` that the truncation of
/// `s` determines exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResidual {
    pub coeffs: Vec<Rat>,
    /// Highest power of `q` covered; `coeffs.len() == valid_through + 1`.
    pub valid_through: usize,
}

impl SeriesResidual {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

pub fn series_ode_residual(ode: &LinearOde, s: &SeriesQ) -> Result<SeriesResidual, NumericError> {
    let order = ode.order();
    let degree =
        ode.coeffs.iter().chain(std::iter::once(&ode.inhomogeneous)).filter_map(UPoly::degree).max().unwrap_or(0);
    let have = s.order();
    if have < degree + order {
        return Err(NumericError::SeriesTooShort { have, order, degree });
    }
    let valid = have - degree - order;
    let mut acc = SeriesQ::zero(valid).add(&SeriesQ::new((0..=valid).map(|m| ode.inhomogeneous.coeff(m)).collect()));
    let mut deriv = s.clone();
    for b in &ode.coeffs {
        acc = acc.add(&deriv.truncate(valid.min(deriv.order())).mul_poly(b));
        deriv = deriv.derivative();
    }
    let coeffs = acc.truncate(valid).coeffs;
    Ok(SeriesResidual { coeffs, valid_through: valid })
}

/// `pFq(upper; lower; kappa q^power)` through `q^order`.
pub fn hypergeometric_pfq(
    upper: &[Rat],
    lower: &[Rat],
    kappa: &Rat,
    power: usize,
    order: usize,
) -> Result<SeriesQ, NumericError> {
    for b in lower {
        if !b.is_positive() && b.is_integer() {
            return Err(NumericError::ParameterPole(b.to_string()));
        }
    }
    let mut s = SeriesQ::zero(order);
    s.coeffs[0] = Rat::one();
    if power == 0 {
        return Err(NumericError::OutOfDomain("hypergeometric argument without a power of q"));
    }
    let mut term = Rat::one();
    let mut k = 0usize;
    while (k + 1) * power <= order {
        let kr = rat::int(k as i64);
        let num: Rat = upper.iter().map(|a| a + &kr).product();
        let den: Rat = lower.iter().map(|b| b + &kr).product::<Rat>() * rat::int(k as i64 + 1);
        term = term * num / den * kappa;
        k += 1;
        s.coeffs[k * power] = term.clone();
    }
    Ok(s)
}

/// `(q / p) * f`, truncated to `order`.
fn times_q_over_p(f: &SeriesQ, p: &Rat, order: usize) -> SeriesQ {
    let mut c = vec![Rat::zero(); order + 1];
    for (m, slot) in c.iter_mut().enumerate().skip(1) {
        *slot = f.coeff(m - 1) / p;
    }
    SeriesQ::new(c)
}

fn quartic_argument(p: &Rat) -> Result<Rat, NumericError> {
    if p.is_zero() {
        return Err(NumericError::OutOfDomain("quartic series with p = 0"));
    }
    Ok(rat::rat(-256, 27) / num_traits::pow(p.clone(), 4))
}

/// `3F2(1/4, 1/2, 3/4; 2/3, 4/3; -256 q^3 / (27 p^4)) * q / p`, the branch of
/// `x^4 + p x = q` through the origin.
pub fn quartic_x1(p: &Rat, order: usize) -> Result<SeriesQ, NumericError> {
    let kappa = quartic_argument(p)?;
    let f = hypergeometric_pfq(
        &[rat::rat(1, 4), rat::rat(1, 2), rat::rat(3, 4)],
        &[rat::rat(2, 3), rat::rat(4, 3)],
        &kappa,
        3,
        order.saturating_sub(1),
    )?;
    Ok(times_q_over_p(&f, p, order))
}

/// The same branch as a product of two `2F1`.
pub fn quartic_x2(p: &Rat, order: usize) -> Result<SeriesQ, NumericError> {
    let kappa = quartic_argument(p)?;
    let inner = order.saturating_sub(1);
    let f1 = hypergeometric_pfq(&[rat::rat(-1, 24), rat::rat(5, 24)], &[rat::rat(2, 3)], &kappa, 3, inner)?;
    let f2 = hypergeometric_pfq(&[rat::rat(7, 24), rat::rat(13, 24)], &[rat::rat(4, 3)], &kappa, 3, inner)?;
    Ok(times_q_over_p(&f1.mul(&f2), p, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;
    use crate::derivation::linear_ode;

    fn ints(c: &[i64]) -> Vec<Rat> {
        c.iter().map(|&v| rat::int(v)).collect()
    }

    #[test]
    fn quadratic_series_has_catalan_coefficients() {
        let s = lagrange_series(&ProblemSpec::trinomial(2, rat::int(1)).unwrap(), 4).unwrap();
        assert_eq!(s.coeffs(), &ints(&[0, 1, -1, 2, -5])[..]);
    }

    #[test]
    fn trinomial_series_head() {
        for n in 2..=6 {
            let s = lagrange_series(&ProblemSpec::trinomial(n, rat::int(1)).unwrap(), n).unwrap();
            let mut expected = vec![rat::int(0); n + 1];
            expected[1] = rat::int(1);
            expected[n] += rat::int(-1);
            assert_eq!(s.coeffs(), &expected[..]);
        }
    }

    #[test]
    fn first_order_only() {
        let s = lagrange_series(&ProblemSpec::trinomial(3, rat::int(4)).unwrap(), 1).unwrap();
        assert_eq!(s.coeffs(), &[rat::int(0), rat::rat(1, 4)][..]);
    }

    #[test]
    fn series_satisfies_equation_exactly() {
        let spec = ProblemSpec::new(UPoly::from_ints(Var::X, &[0, 2, -1, 3])).unwrap();
        let s = lagrange_series(&spec, 10).unwrap();
        let back = compose(spec.r(), &s);
        let mut expected = vec![rat::int(0); 11];
        expected[1] = rat::int(1);
        assert_eq!(back.coeffs(), &expected[..]);
    }

    #[test]
    fn residual_of_cubic_vanishes() {
        let spec = ProblemSpec::trinomial(3, rat::int(1)).unwrap();
        let r = series_ode_residual(&linear_ode(&spec).unwrap(), &lagrange_series(&spec, 12).unwrap()).unwrap();
        assert_eq!(r.valid_through, 8);
        assert!(r.is_zero());
    }

    #[test]
    fn residual_detects_wrong_series() {
        let spec = ProblemSpec::trinomial(3, rat::int(1)).unwrap();
        let mut s = lagrange_series(&spec, 12).unwrap();
        s.coeffs[5] += rat::int(1);
        let r = series_ode_residual(&linear_ode(&spec).unwrap(), &s).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn zero_series_under_homogeneous_equation() {
        let ode = LinearOde {
            coeffs: vec![UPoly::from_ints(Var::Q, &[-3]), UPoly::from_ints(Var::Q, &[1, 2])],
            inhomogeneous: UPoly::zero(Var::Q),
            kernel_dim: 1,
        };
        assert!(series_ode_residual(&ode, &SeriesQ::zero(5)).unwrap().is_zero());
    }

    #[test]
    fn short_series_is_rejected() {
        let spec = ProblemSpec::trinomial(4, rat::int(1)).unwrap();
        let err = series_ode_residual(&linear_ode(&spec).unwrap(), &lagrange_series(&spec, 4).unwrap());
        assert!(matches!(err, Err(NumericError::SeriesTooShort { .. })));
    }

    #[test]
    fn hypergeometric_forms_match_lagrange() {
        let spec = ProblemSpec::trinomial(4, rat::int(1)).unwrap();
        let l = lagrange_series(&spec, 12).unwrap();
        assert_eq!(quartic_x1(&rat::int(1), 12).unwrap(), l);
        assert_eq!(quartic_x2(&rat::int(1), 12).unwrap(), l);
    }

    #[test]
    fn zero_argument_gives_linear_term() {
        let f = hypergeometric_pfq(&[rat::rat(1, 2)], &[rat::rat(1, 3)], &rat::int(0), 1, 5).unwrap();
        let s = times_q_over_p(&f, &rat::int(2), 6);
        let mut expected = vec![rat::int(0); 7];
        expected[1] = rat::rat(1, 2);
        assert_eq!(s.coeffs(), &expected[..]);
    }

    #[test]
    fn pole_parameter() {
        let e = hypergeometric_pfq(&[rat::int(1)], &[rat::int(-2)], &rat::int(1), 1, 3);
        assert!(matches!(e, Err(NumericError::ParameterPole(_))));
    }
}
