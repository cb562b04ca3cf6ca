//! Published closed forms of the linear equations, used as cross-checks.

use std::fmt;

use num_traits::Zero;

use super::{linear_ode, DerivationError, LinearOde, ProblemSpec};
use crate::algebra::{rat, Rat, UPoly, Var};

/// Lower coefficients `b_{n-2}, ..., b_0` as `(coefficient, power of q)`;
/// none of them depends on `p`.
fn trinomial_lower(n: usize) -> Option<&'static [(i64, usize)]> {
    Some(match n {
        3 => &[(27, 1), (-3, 0)],
        4 => &[(1152, 2), (688, 1), (-40, 0)],
        5 => &[(31250, 3), (73125, 2), (31875, 1), (-1155, 0)],
        6 => &[(816480, 4), (4153680, 3), (6658200, 2), (2307456, 1), (-57456, 0)],
        _ => return None,
    })
}

/// The tabulated equation for `x^n + p x - q`, `n = 3..=6`, normalized.
pub fn trinomial_reference(n: usize, p: &Rat) -> Result<LinearOde, DerivationError> {
    let lower = trinomial_lower(n).ok_or(DerivationError::NoReference(n))?;
    if p.is_zero() {
        return Err(DerivationError::ZeroParameter);
    }
    let m = rat::int(n as i64 - 1);
    let lead_const = num_traits::pow(m.clone(), n - 1) * num_traits::pow(p.clone(), n);
    let lead_q = num_traits::pow(rat::int(n as i64), n);
    let lead = &UPoly::constant(Var::Q, lead_const) + &UPoly::monomial(Var::Q, lead_q, n - 1);
    let mut coeffs: Vec<UPoly> = lower.iter().rev().map(|&(c, e)| UPoly::monomial(Var::Q, rat::int(c), e)).collect();
    coeffs.push(lead);
    let mut ode = LinearOde { coeffs, inhomogeneous: UPoly::zero(Var::Q), kernel_dim: 1 };
    ode.normalize();
    Ok(ode)
}

/// The equation for `x^3 + s x^2 + p x - q`, normalized.
pub fn cubic_reference(s: &Rat, p: &Rat) -> LinearOde {
    let c = |v: Rat| UPoly::constant(Var::Q, v);
    let qv = UPoly::identity(Var::Q);
    let b2 = &(&(&c(rat::int(4) * p * p * p) + &qv.pow(2).scale(&rat::int(27)))
        + &qv.scale(&(rat::int(18) * p * s - rat::int(4) * s * s * s)))
        - &c(p * p * s * s);
    let b1 = &qv.scale(&rat::int(27)) + &c(rat::int(9) * p * s - rat::int(2) * s * s * s);
    let mut ode = LinearOde { coeffs: vec![c(rat::int(-3)), b1, b2], inhomogeneous: c(-s.clone()), kernel_dim: 1 };
    ode.normalize();
    ode
}

/// Outcome of comparing a derived equation against its tabulated form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialCheck {
    pub n: usize,
    pub p: Rat,
    pub derived: LinearOde,
    pub expected: LinearOde,
}

impl TrinomialCheck {
    pub fn matches(&self) -> bool {
        self.derived.coeffs == self.expected.coeffs && self.derived.inhomogeneous == self.expected.inhomogeneous
    }
}

impl fmt::Display for TrinomialCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.matches() { "match" } else { "MISMATCH" };
        writeln!(f, "n = {}, p = {}: {verdict}", self.n, self.p)?;
        writeln!(f, "  derived:  {}", self.derived)?;
        write!(f, "  expected: {}", self.expected)
    }
}

pub fn verify_trinomial_table(n: usize, p: &Rat) -> Result<TrinomialCheck, DerivationError> {
    let expected = trinomial_reference(n, p)?;
    let derived = linear_ode(&ProblemSpec::trinomial(n, p.clone())?)?;
    Ok(TrinomialCheck { n, p: p.clone(), derived, expected })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_for_all_degrees_at_p_one() {
        for n in 3..=6 {
            let check = verify_trinomial_table(n, &rat::int(1)).unwrap();
            assert!(check.matches(), "{check}");
        }
    }

    #[test]
    fn cubic_at_p_two() {
        let check = verify_trinomial_table(3, &rat::int(2)).unwrap();
        assert!(check.matches(), "{check}");
        assert_eq!(check.derived.coeffs[2], UPoly::from_ints(Var::Q, &[32, 0, 27]));
    }

    #[test]
    fn fractional_parameter() {
        let check = verify_trinomial_table(4, &rat::rat(-3, 2)).unwrap();
        assert!(check.matches(), "{check}");
    }

    #[test]
    fn cubic_with_quadratic_term() {
        let spec = ProblemSpec::new(UPoly::from_ints(Var::X, &[0, 1, 2, 1])).unwrap();
        let derived = linear_ode(&spec).unwrap();
        let expected = cubic_reference(&rat::int(2), &rat::int(1));
        assert_eq!(derived, expected);
        assert_eq!(expected.coeffs[2], UPoly::from_ints(Var::Q, &[0, 4, 27]));
        assert_eq!(expected.coeffs[1], UPoly::from_ints(Var::Q, &[2, 27]));
        assert_eq!(expected.inhomogeneous, UPoly::from_ints(Var::Q, &[-2]));
    }

    #[test]
    fn missing_degree() {
        assert_eq!(verify_trinomial_table(7, &rat::int(1)), Err(DerivationError::NoReference(7)));
        assert_eq!(trinomial_reference(3, &rat::int(0)), Err(DerivationError::ZeroParameter));
    }
}
