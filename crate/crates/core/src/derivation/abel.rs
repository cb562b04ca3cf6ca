use num_traits::{Signed, Zero};

use super::{factorize, DerivationError, ProblemSpec};
use crate::algebra::{rat, BiPoly, Rat, RatFunc, UPoly, Var};

/// `x' = sum_j a_j(q) x^j` with `a_j = w_j / D`, `j = 0..n-1`.
///
/// `numerators` and `denominator` are scaled jointly to integer
/// coefficients with overall content 1 and a positive leading coefficient
/// of `D`; `a` holds the reduced quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelOde {
    pub n: usize,
    pub r: UPoly,
    pub numerators: Vec<UPoly>,
    pub denominator: UPoly,
    pub a: Vec<RatFunc>,
}

/// Scales every polynomial by one rational so that all coefficients are
/// integers with gcd 1 and `polys[lead]` has a positive leading coefficient.
pub(crate) fn normalize_jointly(polys: &mut [UPoly], lead: usize) {
    let all: Vec<Rat> = polys.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
    if all.iter().all(Zero::is_zero) {
        return;
    }
    let l = Rat::from_integer(rat::denominator_lcm(&all));
    let scaled: Vec<Rat> = all.iter().map(|c| c * &l).collect();
    let g = Rat::from_integer(rat::numerator_gcd(&scaled));
    let mut factor = l / g;
    if polys[lead].lc().is_some_and(|c| (c * &factor).is_negative()) {
        factor = -factor;
    }
    for p in polys.iter_mut() {
        *p = p.scale(&factor);
    }
}

impl AbelOde {
    /// `W(x, q) = sum_j w_j(q) x^j`.
    pub fn w(&self) -> BiPoly {
        BiPoly::new(Var::Q, self.numerators.clone())
    }

    /// Right-hand side in floating point.
    pub fn rhs(&self, q: f64, x: f64) -> f64 {
        let num = self.numerators.iter().rev().fold(0.0, |acc, w| acc * x + w.eval_f64(q));
        num / self.denominator.eval_f64(q)
    }
}

pub fn abel_ode(spec: &ProblemSpec) -> Result<AbelOde, DerivationError> {
    let n = spec.degree();
    let f = factorize(spec)?;
    let c1 = BiPoly::from_x_poly(&(&f.r.derivative() * &f.u));
    let p = spec.p_monic();
    let (quot, w) = c1.divrem_x(&p)?;
    if quot.mul(&p).add(&w) != c1 {
        return Err(DerivationError::Certificate("R'U != Q P + W"));
    }
    let mut polys: Vec<UPoly> = (0..n).map(|j| w.coeff(j)).collect();
    polys.push(f.d.clone());
    normalize_jointly(&mut polys, n);
    let denominator = polys.pop().expect("pushed above");
    let a = polys.iter().map(|wj| RatFunc::new(wj.clone(), denominator.clone())).collect::<Result<Vec<_>, _>>()?;
    Ok(AbelOde { n, r: f.r, numerators: polys, denominator, a })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::Q, c)
    }

    #[test]
    fn quadratic_is_linear() {
        let ode = abel_ode(&ProblemSpec::trinomial(2, rat::int(1)).unwrap()).unwrap();
        assert_eq!(ode.denominator, q(&[1, 4]));
        assert_eq!(ode.numerators, vec![q(&[1]), q(&[2])]);
    }

    #[test]
    fn cubic_is_riccati() {
        let ode = abel_ode(&ProblemSpec::trinomial(3, rat::int(1)).unwrap()).unwrap();
        assert_eq!(ode.denominator, q(&[4, 0, 27]));
        assert_eq!(ode.numerators, vec![q(&[4]), q(&[0, 9]), q(&[6])]);
    }

    #[test]
    fn quartic_is_abel() {
        let ode = abel_ode(&ProblemSpec::trinomial(4, rat::int(1)).unwrap()).unwrap();
        assert_eq!(ode.denominator, q(&[27, 0, 0, 256]));
        assert_eq!(ode.numerators, vec![q(&[27]), q(&[0, 0, 64]), q(&[0, 48]), q(&[36])]);
        assert_eq!(ode.a[3], RatFunc::new(q(&[36]), q(&[27, 0, 0, 256])).unwrap());
    }

    #[test]
    fn rhs_matches_implicit_derivative() {
        // On the branch x' = 1 / R'(x); x = 1 at q = 2 for x^3 + x.
        let ode = abel_ode(&ProblemSpec::trinomial(3, rat::int(1)).unwrap()).unwrap();
        assert!((ode.rhs(2.0, 1.0) - 0.25).abs() < 1e-15);
    }
}
