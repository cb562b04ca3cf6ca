use num_traits::Zero;

use super::DerivationError;
use crate::algebra::{rat, BiPoly, Rat, UPoly, Var};

/// The polynomial `R` of the equation `R(x) = q`, with `R(0) = 0` and degree
/// at least 2. `R'(0) != 0` is checked by the operations that need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    r: UPoly,
}

impl ProblemSpec {
    pub fn new(r: UPoly) -> Result<Self, DerivationError> {
        if r.var() != Var::X {
            return Err(DerivationError::NotInX);
        }
        if !r.coeff(0).is_zero() {
            return Err(DerivationError::NonzeroConstantTerm);
        }
        let n = r.degree().unwrap_or(0);
        if n < 2 {
            return Err(DerivationError::DegreeTooSmall(n));
        }
        Ok(Self { r })
    }

    /// `x^n + p x`.
    pub fn trinomial(n: usize, p: Rat) -> Result<Self, DerivationError> {
        let mut c = vec![Rat::zero(); n + 1];
        c[1] = p;
        c[n] += rat::int(1);
        Self::new(UPoly::new(Var::X, c))
    }

    pub fn r(&self) -> &UPoly {
        &self.r
    }

    pub fn degree(&self) -> usize {
        self.r.degree().expect("degree >= 2")
    }

    /// `R'(0)`.
    pub fn slope_at_zero(&self) -> Rat {
        self.r.coeff(1)
    }

    /// `P(x) = R(x) - q`.
    pub fn p(&self) -> BiPoly {
        BiPoly::minus_q(&self.r)
    }

    /// `P` divided by its (constant) leading coefficient.
    pub fn p_monic(&self) -> BiPoly {
        self.p().monic_x().expect("leading coefficient is a nonzero constant")
    }
}
