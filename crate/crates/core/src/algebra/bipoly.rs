use num_traits::One;

use super::rat::{self, Rat};
use super::upoly::{UPoly, Var};
use super::AlgebraError;

/// Polynomial in `x` with univariate polynomial coefficients.
///
/// `coeffs[j]` is the coefficient of `x^j`. All coefficients share one
/// variable tag (normally `q`); trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeff_var: Var,
    coeffs: Vec<UPoly>,
}

impl BiPoly {
    /// Panics if the coefficients carry different variable tags.
    pub fn new(coeff_var: Var, mut coeffs: Vec<UPoly>) -> Self {
        assert!(coeffs.iter().all(|c| c.var() == coeff_var), "mixed coefficient variables");
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeff_var, coeffs }
    }

    pub fn zero(coeff_var: Var) -> Self {
        Self { coeff_var, coeffs: Vec::new() }
    }

    /// Embeds a polynomial in `x` with constant coefficients in `q`.
    pub fn from_x_poly(p: &UPoly) -> Self {
        let coeffs = p.coeffs().iter().map(|c| UPoly::constant(Var::Q, c.clone())).collect();
        Self::new(Var::Q, coeffs)
    }

    /// `R(x) - q`.
    pub fn minus_q(r: &UPoly) -> Self {
        let mut p = Self::from_x_poly(r);
        if p.coeffs.is_empty() {
            p.coeffs.push(UPoly::zero(Var::Q));
        }
        p.coeffs[0] = &p.coeffs[0] - &UPoly::identity(Var::Q);
        Self::new(Var::Q, p.coeffs)
    }

    pub fn coeff_var(&self) -> Var {
        self.coeff_var
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> UPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(|| UPoly::zero(self.coeff_var))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest degree of any coefficient.
    pub fn degree_coeff(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UPoly::degree).max()
    }

    pub fn lc(&self) -> Option<&UPoly> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.coeff_var, (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.coeff_var, (0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.coeff_var);
        }
        let mut out = vec![UPoly::zero(self.coeff_var); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.coeff_var, out)
    }

    /// Multiplies every coefficient by a polynomial in the coefficient variable.
    pub fn scale(&self, c: &UPoly) -> Self {
        Self::new(self.coeff_var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        Self::new(self.coeff_var, self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn partial_x(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c.scale(&rat::int(j as i64))).collect();
        Self::new(self.coeff_var, coeffs)
    }

    pub fn partial_coeff(&self) -> Self {
        Self::new(self.coeff_var, self.coeffs.iter().map(UPoly::derivative).collect())
    }

    /// Division by a divisor that is monic in `x`:
    /// `self = quot * b + rem` with `deg_x rem < deg_x b`.
    pub fn divrem_x(&self, b: &Self) -> Result<(Self, Self), AlgebraError> {
        let db = b.degree_x().ok_or(AlgebraError::DivisionByZero)?;
        let lc = &b.coeffs[db];
        if !(lc.degree() == Some(0) && lc.coeff(0).is_one()) {
            return Err(AlgebraError::NonMonicDivisor);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(self.coeff_var), self.clone()));
        }
        let mut quot = vec![UPoly::zero(self.coeff_var); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let t = rem[k + db].clone();
            if t.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&t * bc);
            }
            quot[k] = t;
        }
        rem.truncate(db);
        Ok((Self::new(self.coeff_var, quot), Self::new(self.coeff_var, rem)))
    }

    pub fn rem_x(&self, b: &Self) -> Result<Self, AlgebraError> {
        self.divrem_x(b).map(|(_, r)| r)
    }

    /// Substitutes a value for the coefficient variable, giving a polynomial in `x`.
    pub fn eval_coeff(&self, t: &Rat) -> UPoly {
        UPoly::new(Var::X, self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    /// Evaluates at a point `(x, t)` in floating point.
    pub fn eval_f64(&self, x: f64, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.eval_f64(t))
    }

    /// Makes the polynomial monic in `x` when its leading coefficient is a
    /// nonzero constant.
    pub fn monic_x(&self) -> Result<Self, AlgebraError> {
        let lc = self.lc().ok_or(AlgebraError::ZeroPolynomial)?;
        if lc.degree() != Some(0) {
            return Err(AlgebraError::DegenerateLeadingCoefficient);
        }
        let inv = lc.coeff(0).recip();
        Ok(self.scale_rat(&inv))
    }

    pub fn is_constant_in_coeff_var(&self) -> bool {
        self.coeffs.iter().all(UPoly::is_constant)
    }
}
