//! Floating-point use of the derived equations: root tracking, quadrature
//! of the separated-variables identity, closed-form oracles, and exact
//! rational series.

mod closed_form;
mod identity;
mod newton;
mod quad;
mod series;
mod track;

pub use closed_form::{
    babylonian, cardano, closed_form_root, depress_cubic, depress_quartic, depressed_quartic_real_roots, ferrari,
    quartic_w, real_cubic_roots, vieta_hyp, vieta_trig, ClosedFormMethod, ClosedFormRoot, FerrariRoots,
};
pub use identity::{betti_identity, check_identity, invert_phi, BettiCheck, IdentityCheck};
pub use newton::{newton_polish, Polish};
pub use quad::{gauss_kronrod, quad_side, Quadrature};
pub use series::{
    hypergeometric_pfq, lagrange_series, quartic_x1, quartic_x2, series_ode_residual, SeriesQ, SeriesResidual,
};
pub use track::{first_branch_point, track_root, TrackOptions, TrackResult, TrackStatus};

use thiserror::Error;

use crate::derivation::DerivationError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("integrand is singular on [{a}, {b}]")]
    SingularIntegrand { a: f64, b: f64 },
    #[error("quadrature did not converge within depth {0}")]
    NonConvergence(usize),
    #[error("bracket [{lo}, {hi}] does not straddle the target")]
    BadBracket { lo: f64, hi: f64 },
    #[error("outside the validity domain of {0}")]
    OutOfDomain(&'static str),
    #[error("Ferrari's construction needs d != 0")]
    ZeroLinearTerm,
    #[error("lower hypergeometric parameter {0} is a nonpositive integer")]
    ParameterPole(String),
    #[error("R'(0) = 0: the branch through the origin is not a power series in q")]
    DerivativeVanishesAtZero,
    #[error("series of order {have} is too short for an equation of order {order} with coefficient degree {degree}")]
    SeriesTooShort { have: usize, order: usize, degree: usize },
    #[error("value is not finite")]
    NonFinite,
    #[error(transparent)]
    Derivation(#[from] DerivationError),
}
