//! Constructive derivations for the root branch `x(q)` of `R(x) - q = 0`.
//!
//! * [`factorize`]: `D(R(x)) = R'(x)^2 U(x)` with an exact division certificate.
//! * [`build_integrands`]: the separated-variables integrands (hyperelliptic
//!   form, or rational form using `R'U` and `D`).
//! * [`abel_ode`]: `x' = W(x, q) / D(q)` with `deg_x W <= n - 1`.
//! * [`derivative_tower`]: `x^(k) = B_k(x, q) / D(q)^k` reduced modulo `P`.
//! * [`linear_ode`]: the order `n - 1` linear equation, as the left kernel of
//!   the tower.

mod abel;
mod factor;
mod integrand;
mod linear;
mod problem;
pub mod reference;
mod tower;

pub use abel::{abel_ode, AbelOde};
pub use factor::{factorize, Factorization};
pub use integrand::{
    build_integrands, IntegrandKind, IntegrandOptions, IntegrandSide, IntegrandSpec, SignFactor, Surd,
};
pub use linear::{linear_ode, linear_ode_from_tower, LinearOde};
pub use problem::ProblemSpec;
pub use reference::{verify_trinomial_table, TrinomialCheck};
pub use tower::{derivative_tower, tower_step, DerivativeTower};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("R must be a polynomial in x")]
    NotInX,
    #[error("R(0) must be zero")]
    NonzeroConstantTerm,
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("D(R(x)) is not divisible by R'(x)^2 (internal error)")]
    NonExactDivision,
    #[error("certificate check failed: {0}")]
    Certificate(&'static str),
    #[error("weight vanishes at 0; enable the degenerate-branch mode to proceed")]
    WeightVanishesAtZero,
    #[error("R'(0) = 0; enable the degenerate-branch mode to proceed")]
    DerivativeVanishesAtZero,
    #[error("linear system has an empty kernel (internal error)")]
    EmptyKernel,
    #[error("reference table has no entry for n = {0}")]
    NoReference(usize),
    #[error("trinomial parameter p must be nonzero")]
    ZeroParameter,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
