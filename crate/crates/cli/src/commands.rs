//! Dispatch from a parsed command line to the library, producing a report.

use std::time::Instant;

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use rootode_core::algebra::{rat, Rat, UPoly, Var};
use rootode_core::derivation::{
    abel_ode, build_integrands, derivative_tower, factorize, linear_ode, linear_ode_from_tower, AbelOde,
    DerivationError, IntegrandKind, IntegrandOptions, LinearOde, ProblemSpec, Surd,
};
use rootode_core::numeric::{
    babylonian, cardano, check_identity, lagrange_series, newton_polish, quartic_w, series_ode_residual, track_root,
    ClosedFormRoot, NumericError, TrackOptions, TrackResult, TrackStatus,
};

use crate::args::{Cli, Command, Format, Kind};
use crate::parse::{parse_number, parse_problem, parse_weight, ProblemError};
use crate::report::{num, object, poly_coeffs, poly_json, rat_str, Input, Report, Status};
use crate::{demos, latex};

/// Runs the command and stamps the elapsed time unless disabled.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let mut report = dispatch(cli);
    if !cli.no_timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report
}

/// Text for stdout and stderr in the requested format.
pub fn render(cli: &Cli, report: &Report) -> (String, String) {
    let stderr: String = report.errors.iter().map(|e| format!("error[{}]: {}\n", e.code, e.message)).collect();
    match cli.format {
        Format::Json => (report.to_json() + "\n", String::new()),
        Format::Text => (report.to_text(), String::new()),
        Format::Latex => match report.result.get("latex").and_then(Value::as_str) {
            Some(tex) => (format!("{tex}\n"), stderr),
            None => (String::new(), stderr),
        },
    }
}

fn derivation_code(e: &DerivationError) -> &'static str {
    match e {
        DerivationError::NotInX => "not_in_x",
        DerivationError::NonzeroConstantTerm => "nonzero_constant_term",
        DerivationError::DegreeTooSmall(_) => "degree_too_small",
        DerivationError::NonExactDivision => "non_exact_division",
        DerivationError::Certificate(_) => "certificate",
        DerivationError::WeightVanishesAtZero => "weight_vanishes_at_zero",
        DerivationError::DerivativeVanishesAtZero => "derivative_vanishes_at_zero",
        DerivationError::EmptyKernel => "empty_kernel",
        DerivationError::NoReference(_) => "no_reference",
        DerivationError::ZeroParameter => "zero_parameter",
        DerivationError::Algebra(_) => "algebra",
    }
}

fn numeric_code(e: &NumericError) -> &'static str {
    match e {
        NumericError::SingularIntegrand { .. } => "singular_integrand",
        NumericError::NonConvergence(_) => "non_convergence",
        NumericError::BadBracket { .. } => "bad_bracket",
        NumericError::OutOfDomain(_) => "out_of_domain",
        NumericError::ZeroLinearTerm => "zero_linear_term",
        NumericError::ParameterPole(_) => "parameter_pole",
        NumericError::DerivativeVanishesAtZero => "derivative_vanishes_at_zero",
        NumericError::SeriesTooShort { .. } => "series_too_short",
        NumericError::NonFinite => "non_finite",
        NumericError::Derivation(d) => derivation_code(d),
    }
}

/// Failure of a verb body, carrying the status it maps to.
struct Failure {
    status: Status,
    code: String,
    message: String,
    /// Partial result reported alongside the error.
    result: Value,
}

impl Failure {
    fn usage(code: &str, message: impl Into<String>) -> Self {
        Self { status: Status::UsageError, code: code.into(), message: message.into(), result: Value::Null }
    }

    fn domain(code: &str, message: impl Into<String>) -> Self {
        Self { status: Status::DomainError, code: code.into(), message: message.into(), result: Value::Null }
    }
}

impl From<DerivationError> for Failure {
    fn from(e: DerivationError) -> Self {
        Self::domain(derivation_code(&e), e.to_string())
    }
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        Self::domain(numeric_code(&e), e.to_string())
    }
}

/// Successful verb body: the result and whether every check passed.
type Outcome = Result<(Value, bool), Failure>;

fn dispatch(cli: &Cli) -> Report {
    let cmd = &cli.command;
    let mut input = Input { tol_abs: Some(cli.tol_abs), tol_rel: Some(cli.tol_rel), ..Default::default() };
    let report_base = |input: &Input| Report::new(cmd.verb(), input.clone());
    if cli.format == Format::Latex && !cmd.supports_latex() {
        return report_base(&input).fail(
            Status::UsageError,
            "unsupported_format",
            "latex output is available for derive-abel, derive-linear and discriminant",
        );
    }
    if let Command::Demo { name } = cmd {
        input.demo = Some(name.name().to_string());
        return finish(report_base(&input), Ok(demos::run(*name)), "check_failed", "one or more demo checks failed");
    }
    let problem = match cmd {
        Command::DeriveAbel { problem }
        | Command::DeriveLinear { problem }
        | Command::Discriminant { problem }
        | Command::Solve { problem, .. }
        | Command::Check { problem, .. }
        | Command::Series { problem, .. } => problem,
        Command::Demo { .. } => unreachable!("handled above"),
    };
    input.problem = Some(problem.clone());
    let spec = match parse_problem(problem) {
        Ok(s) => s,
        Err(e) => {
            let code = match &e {
                ProblemError::Syntax(_) => "syntax",
                ProblemError::Invalid(d) => derivation_code(d),
            };
            return report_base(&input).fail(Status::UsageError, code, e.to_string());
        }
    };
    input.r = Some(poly_coeffs(spec.r()));
    let outcome = match cmd {
        Command::DeriveAbel { .. } => derive_abel(&spec),
        Command::DeriveLinear { .. } => derive_linear(&spec),
        Command::Discriminant { .. } => discriminant(&spec),
        Command::Solve { q, .. } => {
            input.q = Some(q.clone());
            solve(&spec, q, cli)
        }
        Command::Check { q, weight, kind, degenerate, tol_check, .. } => {
            input.q = Some(q.clone());
            input.kind = Some(kind_name(*kind).into());
            input.degenerate = Some(*degenerate);
            match parse_weight(weight) {
                Ok(w) => {
                    input.weight = Some(poly_coeffs(&w));
                    check(&spec, q, &w, *kind, *degenerate, *tol_check, cli)
                }
                Err(e) => Err(Failure::usage("syntax", format!("weight: syntax error at {e}"))),
            }
        }
        Command::Series { order, .. } => {
            input.order = Some(*order);
            series(&spec, *order)
        }
        Command::Demo { .. } => unreachable!("handled above"),
    };
    finish(report_base(&input), outcome, "identity_mismatch", "the identity does not hold within tolerance")
}

fn finish(mut report: Report, outcome: Outcome, code: &str, message: &str) -> Report {
    match outcome {
        Ok((result, pass)) => {
            report.result = result;
            if pass {
                report
            } else {
                report.fail(Status::CheckFailed, code, message)
            }
        }
        Err(f) => {
            report.result = f.result;
            report.fail(f.status, &f.code, f.message)
        }
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Radical => "radical",
        Kind::Rational => "rational",
    }
}

fn coefficient_text(c: &UPoly) -> String {
    if c.coeffs().iter().filter(|v| !v.is_zero()).count() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// `x' = (6*x^2 + 9*q*x + 4) / (27*q^2 + 4)`.
pub fn abel_text(abel: &AbelOde) -> String {
    let terms: Vec<String> = abel
        .numerators
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, w)| !w.is_zero())
        .map(|(j, w)| match j {
            0 => coefficient_text(w),
            1 => format!("{}*x", coefficient_text(w)),
            _ => format!("{}*x^{j}", coefficient_text(w)),
        })
        .collect();
    let num = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    format!("x' = ({num}) / ({})", abel.denominator)
}

/// Name of the first-order equation by its degree in `x`.
fn abel_class(degree: usize) -> &'static str {
    match degree {
        0 => "quadrature",
        1 => "linear",
        2 => "riccati",
        3 => "abel",
        _ => "generalized_abel",
    }
}

fn derive_abel(spec: &ProblemSpec) -> Outcome {
    let abel = abel_ode(spec)?;
    let degree = abel.a.iter().rposition(|a| !a.is_zero()).unwrap_or(0);
    let a: Vec<Value> = abel
        .a
        .iter()
        .map(|f| {
            let (n, d) = f.integer_form();
            object(vec![("num", poly_json(&n)), ("den", poly_json(&d))])
        })
        .collect();
    let result = object(vec![
        ("n", abel.n.into()),
        ("degree_in_x", degree.into()),
        ("class", abel_class(degree).into()),
        ("denominator", poly_json(&abel.denominator)),
        ("numerators", abel.numerators.iter().map(poly_json).collect()),
        ("a", Value::Array(a)),
        ("display", abel_text(&abel).into()),
        ("latex", latex::abel_ode(&abel).into()),
    ]);
    Ok((result, true))
}

/// `[b_{n-1}, ..., b_1, b_0, b_n]`, each as ascending coefficient strings.
pub fn linear_b(ode: &LinearOde) -> Value {
    let mut b: Vec<Value> = ode.coeffs.iter().rev().map(poly_json).collect();
    b.push(poly_json(&ode.inhomogeneous));
    Value::Array(b)
}

fn derive_linear(spec: &ProblemSpec) -> Outcome {
    let tower = derivative_tower(spec, spec.degree() - 1)?;
    let ode = linear_ode_from_tower(&tower)?;
    let annihilates = ode.apply_to_tower(&tower)?;
    let result = object(vec![
        ("order", ode.order().into()),
        ("b", linear_b(&ode)),
        ("homogeneous", ode.inhomogeneous.is_zero().into()),
        ("kernel_dim", ode.kernel_dim.into()),
        ("ambiguous", ode.ambiguous().into()),
        ("normalized", ode.is_normalized().into()),
        ("annihilates_tower", annihilates.into()),
        ("display", ode.to_string().into()),
        ("latex", latex::linear_ode(&ode).into()),
    ]);
    Ok((result, annihilates))
}

fn discriminant(spec: &ProblemSpec) -> Outcome {
    let f = factorize(spec)?;
    let mut warnings = Vec::new();
    if !f.simple_roots {
        warnings.push(Value::from("R has a repeated root: D(0) = 0, invertibility at 0 is not claimed"));
    }
    let result = object(vec![
        ("d", poly_json(&f.d)),
        ("u", poly_json(&f.u)),
        ("sign", f.d_sign.into()),
        ("script_d", poly_json(&f.script_d)),
        ("script_u", poly_json(&f.script_u)),
        ("sign_rp0", f.sign_rp0.into()),
        ("simple_roots", f.simple_roots.into()),
        ("display", object(vec![("d", f.d.to_string().into()), ("u", f.u.to_string().into())])),
        ("latex", format!("D(q)={},\\quad U(x)={}", latex::poly(&f.d), latex::poly(&f.u)).into()),
        ("warnings", Value::Array(warnings)),
    ]);
    Ok((result, true))
}

fn parse_q(text: &str) -> Result<Rat, Failure> {
    parse_number(text).ok_or_else(|| Failure::usage("invalid_number", format!("cannot read '{text}' as a number")))
}

fn track_options(cli: &Cli) -> TrackOptions {
    TrackOptions { atol: cli.tol_abs, rtol: cli.tol_rel, ..Default::default() }
}

fn status_name(s: &TrackStatus) -> &'static str {
    match s {
        TrackStatus::Ok => "ok",
        TrackStatus::HitBranchPoint { .. } => "hit_branch_point",
        TrackStatus::StepUnderflow => "step_underflow",
        TrackStatus::ResidualAboveTolerance => "residual_above_tolerance",
    }
}

fn track_json(t: &TrackResult) -> Value {
    let q_star = match t.status {
        TrackStatus::HitBranchPoint { q_star } => num(q_star),
        _ => Value::Null,
    };
    object(vec![
        ("q", num(t.q_target)),
        ("q_reached", num(t.q_reached)),
        ("x", num(t.x)),
        ("residual", num(t.residual)),
        ("status", status_name(&t.status).into()),
        ("branch_point", q_star),
        ("steps", t.steps.into()),
        ("rejected", t.rejected.into()),
        ("polish_iters", t.polish_iters.into()),
    ])
}

fn track_failure(t: &TrackResult) -> Option<Failure> {
    let failure = match t.status {
        TrackStatus::Ok => None,
        TrackStatus::HitBranchPoint { q_star } => Some(Failure::domain(
            "branch_point",
            format!(
                "D vanishes at q* = {q_star:e} between 0 and the target; tracking stopped at q = {:e}",
                t.q_reached
            ),
        )),
        TrackStatus::StepUnderflow => Some(Failure::domain("step_underflow", "step size underflow before the target")),
        TrackStatus::ResidualAboveTolerance => Some(Failure::domain(
            "residual_above_tolerance",
            format!("|P(x)| = {:e} at the target exceeds the bound", t.residual),
        )),
    };
    failure.map(|f| Failure { result: object(vec![("track", track_json(t))]), ..f })
}

/// `Some(p)` when `R = x^n + p x`.
fn trinomial_parameter(r: &UPoly) -> Option<Rat> {
    let n = r.degree()?;
    let c = r.coeffs();
    (c[n].is_one() && c[2..n].iter().all(Zero::is_zero)).then(|| c[1].clone())
}

fn closed_form_oracle(spec: &ProblemSpec, q: f64) -> Option<ClosedFormRoot> {
    let p = rat::to_f64(&trinomial_parameter(spec.r())?);
    match spec.degree() {
        2 => babylonian(p, q).ok(),
        3 => cardano(p, q).ok(),
        4 => quartic_w(p, q).ok(),
        _ => None,
    }
}

fn solve(spec: &ProblemSpec, q_text: &str, cli: &Cli) -> Outcome {
    let q = parse_q(q_text)?;
    let qf = rat::to_f64(&q);
    let abel = abel_ode(spec)?;
    let t = track_root(&abel, qf, &track_options(cli));
    if let Some(f) = track_failure(&t) {
        return Err(f);
    }
    let oracle = closed_form_oracle(spec, qf).map_or(Value::Null, |c| {
        object(vec![("method", c.method.name().into()), ("value", num(c.value)), ("diff", num((c.value - t.x).abs()))])
    });
    let mut result = track_json(&t);
    result["closed_form"] = oracle;
    Ok((result, true))
}

/// Real root of `R(x) = q` of least modulus (positive on a tie), isolated
/// with Sturm sequences and polished.
pub fn least_real_root(r: &UPoly, q: &Rat) -> Option<f64> {
    if q.is_zero() {
        return Some(0.0);
    }
    let p = r - &UPoly::constant(Var::X, q.clone());
    let lc = p.lc()?.abs();
    let bound = rat::int(1) + p.coeffs().iter().map(|c| c.abs() / &lc).fold(Rat::zero(), |a, b| a.max(b));
    let width = &bound / rat::int(1 << 60);
    let zero = Rat::zero();
    let pos = p.first_real_root(&zero, &bound, &width);
    let reflected = p.compose(&UPoly::from_ints(Var::X, &[0, -1]));
    let neg = reflected.first_real_root(&zero, &bound, &width).map(|v| -v);
    let x = match (pos, neg) {
        (Some(a), Some(b)) => {
            if b.abs() < a {
                b
            } else {
                a
            }
        }
        (a, b) => a.or(b)?,
    };
    Some(newton_polish(&p.to_f64_coeffs(), rat::to_f64(&x)).x)
}

fn check(
    spec: &ProblemSpec,
    q_text: &str,
    weight: &UPoly,
    kind: Kind,
    degenerate: bool,
    tol_check: f64,
    cli: &Cli,
) -> Outcome {
    let q = parse_q(q_text)?;
    let qf = rat::to_f64(&q);
    let f = factorize(spec)?;
    let opts = IntegrandOptions { scalar: Surd::one(), degenerate };
    let ik = match kind {
        Kind::Radical => IntegrandKind::Radical,
        Kind::Rational => IntegrandKind::Rational,
    };
    let integrands = build_integrands(&f, weight, ik, &opts)?;
    let (x, source) = if degenerate {
        let x = least_real_root(spec.r(), &q)
            .ok_or_else(|| Failure::domain("no_real_root", "R(x) = q has no real root"))?;
        (x, "sturm")
    } else {
        let t = track_root(&abel_ode(spec)?, qf, &track_options(cli));
        if let Some(f) = track_failure(&t) {
            return Err(f);
        }
        (t.x, "tracked")
    };
    let c = check_identity(&integrands, x, qf, cli.tol_abs)?;
    let pass = c.diff <= tol_check;
    let result = object(vec![
        ("kind", kind_name(kind).into()),
        ("lhs_integrand", integrands.lhs.to_string().into()),
        ("rhs_integrand", integrands.rhs.to_string().into()),
        ("q", num(qf)),
        ("x", num(x)),
        ("root_source", source.into()),
        ("lhs", num(c.lhs)),
        ("rhs", num(c.rhs)),
        ("diff", num(c.diff)),
        ("tol_check", num(tol_check)),
        ("pass", pass.into()),
    ]);
    Ok((result, pass))
}

fn series(spec: &ProblemSpec, order: usize) -> Outcome {
    let s = lagrange_series(spec, order)?;
    let ode = linear_ode(spec)?;
    let residual = match series_ode_residual(&ode, &s) {
        Ok(r) => object(vec![
            ("valid_through", r.valid_through.into()),
            ("zero", r.is_zero().into()),
            ("coeffs", r.coeffs.iter().map(rat_str).collect()),
        ]),
        Err(NumericError::SeriesTooShort { .. }) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let pass = residual.get("zero").and_then(Value::as_bool).unwrap_or(true);
    let result = object(vec![
        ("order", order.into()),
        ("coeffs", s.coeffs().iter().map(rat_str).collect()),
        ("ode", ode.to_string().into()),
        ("residual", residual),
    ]);
    Ok((result, pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_root_picks_the_branch_through_zero() {
        let r = UPoly::from_ints(Var::X, &[0, 0, 0, 5, 0, 1]);
        let x = least_real_root(&r, &rat::int(6)).unwrap();
        assert!((x - 1.0).abs() < 1e-14);
        let x = least_real_root(&r, &rat::int(-6)).unwrap();
        assert!((x + 1.0).abs() < 1e-14);
        let sq = UPoly::from_ints(Var::X, &[0, 0, 1]);
        assert_eq!(least_real_root(&sq, &rat::int(-1)), None);
        assert_eq!(least_real_root(&sq, &rat::int(4)), Some(2.0));
    }

    #[test]
    fn trinomial_detection() {
        assert_eq!(trinomial_parameter(&UPoly::from_ints(Var::X, &[0, 3, 0, 1])), Some(rat::int(3)));
        assert_eq!(trinomial_parameter(&UPoly::from_ints(Var::X, &[0, 3, 1, 1])), None);
        assert_eq!(trinomial_parameter(&UPoly::from_ints(Var::X, &[0, 3, 0, 2])), None);
    }
}
