//! Differential equations for the root branch of a polynomial equation.
//!
//! For `P(x) = R(x) - q` with `R(0) = 0`, the root `x(q)` with `x(0) = 0`
//! satisfies a separated-variables equation, a first-order generalized Abel
//! equation `x' = sum a_j(q) x^j`, and a linear equation of order `n - 1`
//! with polynomial coefficients. [`derivation`] builds all of them exactly
//! over the rationals; [`numeric`] uses them to track, verify, and
//! cross-check roots.

pub mod algebra;
pub mod derivation;
pub mod numeric;
