use num_traits::Zero;

use super::{DerivationError, ProblemSpec};
use crate::algebra::{discriminant_in_x, rat, AlgebraError, UPoly};

/// `D(R(x)) = R'(x)^2 U(x)` together with the sign-normalized pair
/// `script_d = s * D`, `script_u = s * U`.
///
/// `s` is `sgn(D(0))`. When `D(0) = 0` (R has a repeated root) the sign of
/// the lowest-order nonzero coefficient of `D` is used instead, which is the
/// sign of `D` just to the right of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub r: UPoly,
    pub d: UPoly,
    pub u: UPoly,
    pub script_d: UPoly,
    pub script_u: UPoly,
    pub d_sign: i8,
    /// `sgn(R'(0))`.
    pub sign_rp0: i8,
    /// `D(0) != 0`, i.e. all roots of `R` are simple.
    pub simple_roots: bool,
}

pub fn factorize(spec: &ProblemSpec) -> Result<Factorization, DerivationError> {
    let n = spec.degree();
    let r = spec.r().clone();
    let d = discriminant_in_x(&spec.p())?;
    let rp = r.derivative();
    let composed = UPoly::compose_q(&d, &r)?;
    let u = match composed.exact_div(&(&rp * &rp)) {
        Ok(u) => u,
        Err(AlgebraError::NonExactDivision) => return Err(DerivationError::NonExactDivision),
        Err(e) => return Err(e.into()),
    };
    if d.degree() != Some(n - 1) {
        return Err(DerivationError::Certificate("deg D != n - 1"));
    }
    if u.degree() != Some((n - 1) * (n - 2)) {
        return Err(DerivationError::Certificate("deg U != (n-1)(n-2)"));
    }
    let d0 = d.coeff(0);
    let simple_roots = !d0.is_zero();
    if simple_roots && u.coeff(0).is_zero() {
        return Err(DerivationError::Certificate("U(0) = 0 although R has simple roots"));
    }
    let d_sign = d.coeffs().iter().find(|c| !c.is_zero()).map(rat::sign).expect("D is nonzero");
    let s = rat::int(d_sign as i64);
    Ok(Factorization {
        script_d: d.scale(&s),
        script_u: u.scale(&s),
        sign_rp0: rat::sign(&spec.slope_at_zero()),
        r,
        d,
        u,
        d_sign,
        simple_roots,
    })
}
