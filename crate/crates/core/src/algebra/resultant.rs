use num_traits::Zero;

use super::bipoly::BiPoly;
use super::elimination::{determinant, poly_determinant, ExactRing};
use super::rat::{self, Rat};
use super::upoly::UPoly;
use super::AlgebraError;

/// Sylvester matrix of two coefficient lists (ascending order, nonzero
/// leading entries).
fn sylvester<T: ExactRing>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let zero = a[0].zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Sylvester resultant of two nonzero polynomials over the rationals.
pub fn resultant(a: &UPoly, b: &UPoly) -> Result<Rat, AlgebraError> {
    if a.var() != b.var() {
        return Err(AlgebraError::VariableMismatch { left: a.var(), right: b.var() });
    }
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(determinant(sylvester(a.coeffs(), b.coeffs()), rat::int(1)))
}

/// Resultant in the main variable of two polynomials whose coefficients are
/// univariate polynomials, computed by fraction-free elimination of the
/// Sylvester matrix.
pub fn resultant_bipoly(a: &BiPoly, b: &BiPoly) -> Result<UPoly, AlgebraError> {
    if a.coeff_var() != b.coeff_var() {
        return Err(AlgebraError::VariableMismatch { left: a.coeff_var(), right: b.coeff_var() });
    }
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(poly_determinant(&sylvester(a.coeffs(), b.coeffs()), a.coeff_var()))
}

/// Discriminant in `x`: `(-1)^{n(n-1)/2} Res_x(P, dP/dx) / lc(P)`.
///
/// The leading coefficient of `P` must be a nonzero constant.
pub fn discriminant_in_x(p: &BiPoly) -> Result<UPoly, AlgebraError> {
    let n = p.degree_x().ok_or(AlgebraError::ZeroPolynomial)?;
    if n < 2 {
        return Err(AlgebraError::DegreeTooSmall(n));
    }
    let lc = p.lc().expect("nonzero");
    if lc.degree() != Some(0) {
        return Err(AlgebraError::DegenerateLeadingCoefficient);
    }
    let res = resultant_bipoly(p, &p.partial_x())?;
    let mut factor = lc.coeff(0).recip();
    if (n * (n - 1) / 2) % 2 == 1 {
        factor = -factor;
    }
    debug_assert!(!factor.is_zero());
    Ok(res.scale(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use crate::algebra::Var;

    fn x(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::X, c)
    }

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::Q, c)
    }

    #[test]
    fn linear_resultant() {
        // Res(x - 3, x - 5) = 3 - 5
        assert_eq!(resultant(&x(&[-3, 1]), &x(&[-5, 1])).unwrap(), int(-2));
        assert_eq!(resultant(&x(&[1]), &UPoly::zero(Var::X)), Err(AlgebraError::ZeroPolynomial));
        assert_eq!(resultant(&x(&[4]), &x(&[1, 1, 1])).unwrap(), int(16));
    }

    #[test]
    fn quadratic_resultant_in_q() {
        let p = BiPoly::minus_q(&x(&[0, 1, 1]));
        let res = resultant_bipoly(&p, &p.partial_x()).unwrap();
        assert_eq!(res, q(&[-1, -4]));
    }

    #[test]
    fn known_discriminants() {
        assert_eq!(discriminant_in_x(&BiPoly::minus_q(&x(&[0, 1, 1]))).unwrap(), q(&[1, 4]));
        assert_eq!(discriminant_in_x(&BiPoly::minus_q(&x(&[0, 1, 0, 1]))).unwrap(), q(&[-4, 0, -27]));
        let quartic = discriminant_in_x(&BiPoly::minus_q(&x(&[0, -1, 2, -2, 1]))).unwrap();
        // Standard sign: the negative of the sign-normalized form shown with this example.
        assert_eq!(quartic, -(q(&[1, 4]).pow(2) * q(&[3, 16])));
    }

    #[test]
    fn degenerate_inputs() {
        let p = BiPoly::new(Var::Q, vec![q(&[0]), q(&[1]), q(&[0, 1])]);
        assert_eq!(discriminant_in_x(&p), Err(AlgebraError::DegenerateLeadingCoefficient));
        let lin = BiPoly::minus_q(&x(&[0, 1]));
        assert_eq!(discriminant_in_x(&lin), Err(AlgebraError::DegreeTooSmall(1)));
    }
}
