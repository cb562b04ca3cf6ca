//! Exact polynomial arithmetic over the rationals.
//!
//! Univariate polynomials carry a variable tag (`x` or `q`) so that the two
//! roles never get mixed silently. [`BiPoly`] is a polynomial in `x` whose
//! coefficients are univariate polynomials, which is enough to hold
//! `P(x) = R(x) - q` and everything derived from it.

mod bipoly;
pub mod elimination;
pub mod rat;
mod ratfunc;
mod resultant;
mod upoly;

pub use bipoly::BiPoly;
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use resultant::{discriminant_in_x, resultant, resultant_bipoly};
pub use upoly::{upoly_arith, ArithOp, UPoly, Var};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NonExactDivision,
    #[error("zero polynomial has no resultant")]
    ZeroPolynomial,
    #[error("leading coefficient in x must be a nonzero constant")]
    DegenerateLeadingCoefficient,
    #[error("divisor is not monic in x")]
    NonMonicDivisor,
    #[error("degree {0} is too small for a discriminant")]
    DegreeTooSmall(usize),
}
