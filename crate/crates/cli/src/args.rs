use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "rootode", version, about = "Differential equations for the root branch of R(x) = q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Absolute tolerance for tracking and quadrature.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_abs: f64,

    /// Relative tolerance for tracking.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol_rel: f64,

    /// Leave the wall-clock timing out of the report.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// First-order equation x' = sum a_j(q) x^j.
    DeriveAbel {
        #[arg(allow_hyphen_values = true)]
        problem: String,
    },
    /// Linear equation of order n - 1 with polynomial coefficients.
    DeriveLinear {
        #[arg(allow_hyphen_values = true)]
        problem: String,
    },
    /// D(q) = disc_x(R(x) - q) and the cofactor U(x).
    Discriminant {
        #[arg(allow_hyphen_values = true)]
        problem: String,
    },
    /// Tracks the root with x(0) = 0 to the target q.
    Solve {
        #[arg(allow_hyphen_values = true)]
        problem: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Checks the separated-variables identity at q.
    Check {
        #[arg(allow_hyphen_values = true)]
        problem: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Weight polynomial in t (or q).
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        weight: String,
        #[arg(long, value_enum, default_value_t = Kind::Radical)]
        kind: Kind,
        /// Accept R'(0) = 0 or a weight vanishing at 0.
        #[arg(long)]
        degenerate: bool,
        /// Bound on the difference of the two integrals.
        #[arg(long, default_value_t = 1e-8)]
        tol_check: f64,
    },
    /// Exact power series of the root and its residual in the linear equation.
    Series {
        #[arg(allow_hyphen_values = true)]
        problem: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Built-in worked examples, each reporting pass or fail per check.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// G(R(s)) / sqrt(U(s)) against G(t) / sqrt(D(t)).
    Radical,
    /// H(R(s)) / (R'(s) U(s)) against H(t) / D(t).
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    Babylonian,
    Cardano,
    Quartic23,
    Betti,
    Hypergeom,
    Remark5,
}

impl DemoName {
    pub fn name(self) -> &'static str {
        match self {
            Self::Babylonian => "babylonian",
            Self::Cardano => "cardano",
            Self::Quartic23 => "quartic23",
            Self::Betti => "betti",
            Self::Hypergeom => "hypergeom",
            Self::Remark5 => "remark5",
        }
    }
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Self::DeriveAbel { .. } => "derive-abel",
            Self::DeriveLinear { .. } => "derive-linear",
            Self::Discriminant { .. } => "discriminant",
            Self::Solve { .. } => "solve",
            Self::Check { .. } => "check",
            Self::Series { .. } => "series",
            Self::Demo { .. } => "demo",
        }
    }

    pub fn supports_latex(&self) -> bool {
        matches!(self, Self::DeriveAbel { .. } | Self::DeriveLinear { .. } | Self::Discriminant { .. })
    }
}
