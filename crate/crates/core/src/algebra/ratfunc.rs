use std::fmt;

use num_traits::{One, Zero};

use super::rat::Rat;
use super::upoly::{UPoly, Var};
use super::AlgebraError;

/// Reduced rational function in `q`: `num / den` with `den` monic and
/// coprime to `num`; zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(AlgebraError::VariableMismatch { left: num.var(), right: den.var() });
        }
        if num.is_zero() {
            return Ok(Self::zero_in(num.var()));
        }
        let g = UPoly::gcd(&num, &den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc_inv = den.lc().expect("nonzero").recip();
        Ok(Self { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    /// `num / base^k`, reducing against one copy of `base` at a time; much
    /// cheaper than a gcd with the expanded power when `base` is small.
    pub fn over_power(num: UPoly, base: &UPoly, k: usize) -> Result<Self, AlgebraError> {
        if base.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.var() != base.var() {
            return Err(AlgebraError::VariableMismatch { left: num.var(), right: base.var() });
        }
        if num.is_zero() {
            return Ok(Self::zero_in(num.var()));
        }
        let mut num = num;
        let mut den = UPoly::one(num.var());
        for _ in 0..k {
            let h = UPoly::gcd(&num, base)?;
            if h.degree() == Some(0) {
                den = &den * base;
            } else {
                num = num.exact_div(&h)?;
                den = &den * &base.exact_div(&h)?;
            }
        }
        let lc_inv = den.lc().expect("nonzero").recip();
        Ok(Self { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn zero_in(var: Var) -> Self {
        Self { num: UPoly::zero(var), den: UPoly::one(var) }
    }

    pub fn from_poly(p: UPoly) -> Self {
        let var = p.var();
        Self { num: p, den: UPoly::one(var) }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &o.den - &o.num * &self.den, &self.den * &o.den)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0) && self.den.coeff(0).is_one()
    }

    /// `num / den` rescaled so that the denominator is an integer polynomial
    /// with content 1 and positive leading coefficient.
    pub fn integer_form(&self) -> (UPoly, UPoly) {
        let (c, den) = self.den.primitive_part();
        let num = if c.is_zero() { self.num.clone() } else { self.num.scale(&c.recip()) };
        (num, den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            let (n, d) = self.integer_form();
            write!(f, "({n}) / ({d})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::Q, c)
    }

    #[test]
    fn canonical_form_reduces_and_makes_monic() {
        // (2q^2 - 2) / (4q - 4) = (q + 1) / 2
        let r = RatFunc::new(q(&[-2, 0, 2]), q(&[-4, 4])).unwrap();
        assert_eq!(r.den(), &q(&[1]));
        assert_eq!(r.num(), &UPoly::new(Var::Q, vec![rat(1, 2), rat(1, 2)]));
        let z = RatFunc::new(q(&[]), q(&[3, 1])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.den(), &q(&[1]));
    }

    #[test]
    fn field_operations() {
        let a = RatFunc::new(q(&[1]), q(&[1, 4])).unwrap();
        let b = RatFunc::new(q(&[2]), q(&[1, 4])).unwrap();
        assert_eq!(a.add(&a).unwrap(), b);
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(b.div(&a).unwrap(), RatFunc::from_poly(q(&[2])));
        assert_eq!(a.mul(&RatFunc::from_poly(q(&[1, 4]))).unwrap(), RatFunc::from_poly(q(&[1])));
        assert_eq!(a.eval(&int(2)), Some(rat(1, 9)));
        assert_eq!(a.eval(&rat(-1, 4)), None);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(q(&[1]), q(&[])), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn integer_form_matches_display_convention() {
        let a = RatFunc::new(q(&[2]), q(&[1, 4])).unwrap();
        let (n, d) = a.integer_form();
        assert_eq!(n, q(&[2]));
        assert_eq!(d, q(&[1, 4]));
    }
}
