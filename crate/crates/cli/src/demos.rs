//! Built-in worked examples. Each demo runs a list of named checks and
//! reports every one of them, passing or not.

use serde_json::Value;

use rootode_core::algebra::{rat, Rat, UPoly, Var};
use rootode_core::derivation::reference::{cubic_reference, trinomial_reference};
use rootode_core::derivation::{
    abel_ode, build_integrands, factorize, linear_ode, IntegrandKind, IntegrandSpec, LinearOde, ProblemSpec,
};
use rootode_core::numeric::{
    babylonian, betti_identity, cardano, check_identity, depress_quartic, depressed_quartic_real_roots,
    lagrange_series, quartic_x1, quartic_x2, track_root, TrackOptions, TrackStatus,
};

use crate::args::DemoName;
use crate::report::{num, object, poly_json};

/// Tracked roots against closed forms.
const ROOT_TOL: f64 = 1e-9;
/// Closed-form roots against each other.
const CLOSED_TOL: f64 = 1e-10;
/// Difference of the two integrals of an identity.
const IDENTITY_TOL: f64 = 1e-8;
/// Quadrature tolerance.
const QUAD_TOL: f64 = 1e-12;

struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: Value) {
        self.0.push(object(vec![("name", Value::from(name.into())), ("pass", pass.into()), ("detail", detail)]));
    }

    /// Records a failed check for an error raised while computing it.
    fn error(&mut self, name: impl Into<String>, e: impl std::fmt::Display) {
        self.push(name, false, object(vec![("error", e.to_string().into())]));
    }
}

/// The demo's report body and whether all checks passed.
pub fn run(name: DemoName) -> (Value, bool) {
    let mut c = Checks(Vec::new());
    match name {
        DemoName::Babylonian => babylonian_demo(&mut c),
        DemoName::Cardano => cardano_demo(&mut c),
        DemoName::Quartic23 => quartic_demo(&mut c),
        DemoName::Betti => betti_demo(&mut c),
        DemoName::Hypergeom => hypergeom_demo(&mut c),
        DemoName::Remark5 => inhomogeneous_cubic_demo(&mut c),
    }
    let total = c.0.len();
    let passed = c.0.iter().filter(|v| v["pass"] == Value::Bool(true)).count();
    let result = object(vec![
        ("demo", name.name().into()),
        ("passed", passed.into()),
        ("total", total.into()),
        ("checks", Value::Array(c.0)),
    ]);
    (result, passed == total)
}

fn spec(coeffs: &[i64]) -> ProblemSpec {
    ProblemSpec::new(UPoly::from_ints(Var::X, coeffs)).expect("valid built-in problem")
}

fn q_poly(coeffs: &[i64]) -> UPoly {
    UPoly::from_ints(Var::Q, coeffs)
}

fn x_poly(coeffs: &[i64]) -> UPoly {
    UPoly::from_ints(Var::X, coeffs)
}

fn poly_check(c: &mut Checks, name: &str, got: &UPoly, want: &UPoly) {
    c.push(name, got == want, object(vec![("got", poly_json(got)), ("expected", poly_json(want))]));
}

fn ode_check(c: &mut Checks, name: &str, got: &LinearOde, want: &LinearOde) {
    let pass = got.coeffs == want.coeffs && got.inhomogeneous == want.inhomogeneous;
    c.push(name, pass, object(vec![("got", got.to_string().into()), ("expected", want.to_string().into())]));
}

/// Tracks the branch of `s` to `q` and compares with `oracle`.
fn tracked_check(c: &mut Checks, s: &ProblemSpec, q: f64, oracle: f64, label: &str) {
    let name = format!("tracked root equals {label} at q = {q}");
    let abel = match abel_ode(s) {
        Ok(a) => a,
        Err(e) => return c.error(name, e),
    };
    let t = track_root(&abel, q, &TrackOptions::default());
    let diff = (t.x - oracle).abs();
    let pass = t.status == TrackStatus::Ok && diff <= ROOT_TOL && t.residual <= 1e-10;
    c.push(
        name,
        pass,
        object(vec![
            ("tracked", num(t.x)),
            ("oracle", num(oracle)),
            ("diff", num(diff)),
            ("residual", num(t.residual)),
        ]),
    );
}

fn integrands(c: &mut Checks, s: &ProblemSpec, weight: &UPoly, kind: IntegrandKind) -> Option<IntegrandSpec> {
    let built = factorize(s).and_then(|f| build_integrands(&f, weight, kind, &Default::default()));
    match built {
        Ok(i) => Some(i),
        Err(e) => {
            c.error("integrands", e);
            None
        }
    }
}

fn identity_check(c: &mut Checks, name: String, i: &IntegrandSpec, x: f64, q: f64) -> Option<(f64, f64)> {
    match check_identity(i, x, q, QUAD_TOL) {
        Ok(r) => {
            c.push(
                name,
                r.diff <= IDENTITY_TOL,
                object(vec![("x", num(x)), ("lhs", num(r.lhs)), ("rhs", num(r.rhs)), ("diff", num(r.diff))]),
            );
            Some((r.lhs, r.rhs))
        }
        Err(e) => {
            c.error(name, e);
            None
        }
    }
}

/// `x^2 + x = q`.
fn babylonian_demo(c: &mut Checks) {
    let s = spec(&[0, 1, 1]);
    match factorize(&s) {
        Ok(f) => {
            poly_check(c, "D = 4q + 1", &f.d, &q_poly(&[1, 4]));
            poly_check(c, "U = 1", &f.u, &x_poly(&[1]));
        }
        Err(e) => c.error("factorization", e),
    }
    match abel_ode(&s) {
        Ok(a) => {
            let want = vec![q_poly(&[1]), q_poly(&[2])];
            let pass = a.numerators == want && a.denominator == q_poly(&[1, 4]);
            c.push("x' = (2x + 1)/(4q + 1)", pass, crate::commands::abel_text(&a).into());
        }
        Err(e) => c.error("abel equation", e),
    }
    for q in [-0.2, 0.25, 1.0, 3.0] {
        match babylonian(1.0, q) {
            Ok(r) => tracked_check(c, &s, q, r.value, "babylonian formula"),
            Err(e) => c.error(format!("babylonian formula at q = {q}"), e),
        }
    }
    for kind in [IntegrandKind::Radical, IntegrandKind::Rational] {
        if let Some(i) = integrands(c, &s, &q_poly(&[1]), kind) {
            for q in [0.5, 2.0] {
                let x = babylonian(1.0, q).map(|r| r.value).unwrap_or(f64::NAN);
                identity_check(c, format!("{kind:?} identity at q = {q}"), &i, x, q);
            }
        }
    }
}

/// `x^3 + x = q` against the radical formula at five values of `q`.
fn cardano_demo(c: &mut Checks) {
    let s = spec(&[0, 1, 0, 1]);
    match factorize(&s) {
        Ok(f) => {
            poly_check(c, "D = -(27q^2 + 4)", &f.d, &q_poly(&[-4, 0, -27]));
            poly_check(c, "U = -(3x^2 + 4)", &f.u, &x_poly(&[-4, 0, -3]));
        }
        Err(e) => c.error("factorization", e),
    }
    for q in [-2.0, -0.5, 0.5, 1.0, 2.0] {
        match cardano(1.0, q) {
            Ok(r) => tracked_check(c, &s, q, r.value, "Cardano's formula"),
            Err(e) => c.error(format!("Cardano's formula at q = {q}"), e),
        }
    }
    if let Some(i) = integrands(c, &s, &q_poly(&[1]), IntegrandKind::Radical) {
        let x = cardano(1.0, 0.5).map(|r| r.value).unwrap_or(f64::NAN);
        identity_check(c, "identity at q = 0.5".into(), &i, x, 0.5);
    }
}

/// `x^4 - 2x^3 + 2x^2 - x = q`.
fn quartic_demo(c: &mut Checks) {
    let s = spec(&[0, -1, 2, -2, 1]);
    match factorize(&s) {
        Ok(f) => {
            let d = &q_poly(&[1, 4]).pow(2) * &q_poly(&[3, 16]);
            poly_check(c, "script D = (4q + 1)^2 (16q + 3)", &f.script_d, &d);
            let u = &x_poly(&[1, -2, 2]).pow(2) * &x_poly(&[3, -4, 4]);
            poly_check(c, "script U = (2x^2 - 2x + 1)^2 (4x^2 - 4x + 3)", &f.script_u, &u);
        }
        Err(e) => c.error("factorization", e),
    }
    let weight = q_poly(&[-2]);
    let spec_i = integrands(c, &s, &weight, IntegrandKind::Radical);
    for q in [0.25f64, 0.75] {
        let inner = (-1.0 + 2.0 * (1.0 + 4.0 * q).sqrt()).sqrt();
        let closed = [0.5 - 0.5 * inner, 0.5 + 0.5 * inner];
        tracked_check(c, &s, q, closed[0], "the closed form");
        let (cc, d, e, shift) = depress_quartic(-2.0, 2.0, -1.0, -q);
        let ferrari: Vec<f64> = depressed_quartic_real_roots(cc, d, e).into_iter().map(|y| y - shift).collect();
        let diff = if ferrari.len() == 2 {
            (ferrari[0] - closed[0]).abs().max((ferrari[1] - closed[1]).abs())
        } else {
            f64::INFINITY
        };
        c.push(
            format!("Ferrari roots equal the closed forms at q = {q}"),
            diff <= CLOSED_TOL,
            object(vec![("ferrari", ferrari.iter().map(|&v| num(v)).collect()), ("diff", num(diff))]),
        );
        if let Some(i) = &spec_i {
            let x = closed[0];
            if let Some((lhs, rhs)) = identity_check(c, format!("identity at q = {q}"), i, x, q) {
                let third = std::f64::consts::PI / 3.0;
                let lhs_closed = 2.0 * ((2.0 * x - 1.0) / (4.0 * x * x - 4.0 * x + 3.0).sqrt()).atan() + third;
                let rhs_closed = third - (16.0 * q + 3.0).sqrt().atan();
                let diff = (lhs - lhs_closed).abs().max((rhs - rhs_closed).abs());
                c.push(
                    format!("arctan forms of both integrals at q = {q}"),
                    diff <= IDENTITY_TOL,
                    object(vec![("lhs_closed", num(lhs_closed)), ("rhs_closed", num(rhs_closed)), ("diff", num(diff))]),
                );
            }
        }
    }
}

/// `x^5 + 5x^3 = q`, whose root at 0 is triple.
fn betti_demo(c: &mut Checks) {
    let s = spec(&[0, 0, 0, 5, 0, 1]);
    match factorize(&s) {
        Ok(f) => {
            let d = &q_poly(&[0, 0, 3125]) * &q_poly(&[108, 0, 1]);
            poly_check(c, "script D = 5^5 q^2 (q^2 + 108)", &f.script_d, &d);
            let u = &(&x_poly(&[0, 0, 125]) * &x_poly(&[5, 0, 1]).pow(2)) * &x_poly(&[12, 0, -8, 0, 4, 0, 1]);
            poly_check(c, "script U = 5^3 x^2 (x^2 + 5)^2 (x^6 + 4x^4 - 8x^2 + 12)", &f.script_u, &u);
        }
        Err(e) => c.error("factorization", e),
    }
    for q in [0.5, 1.0, 2.0] {
        let name = format!("double-integral identity at q = {q}");
        match betti_identity(q, QUAD_TOL) {
            Ok(b) => c.push(
                name,
                b.diff <= IDENTITY_TOL,
                object(vec![
                    ("x", num(b.x)),
                    ("lhs", num(b.lhs)),
                    ("rhs", num(b.rhs)),
                    ("phi2", num(b.phi2)),
                    ("varphi2", num(b.varphi2)),
                    ("diff", num(b.diff)),
                ]),
            ),
            Err(e) => c.error(name, e),
        }
    }
}

/// Two hypergeometric forms of the branch of `x^4 + x = q`.
fn hypergeom_demo(c: &mut Checks) {
    const ORDER: usize = 12;
    let p = rat::int(1);
    let series = lagrange_series(&spec(&[0, 1, 0, 0, 1]), ORDER).and_then(|l| {
        let x1 = quartic_x1(&p, ORDER)?;
        let x2 = quartic_x2(&p, ORDER)?;
        Ok((l, x1, x2))
    });
    let (l, x1, x2) = match series {
        Ok(v) => v,
        Err(e) => return c.error("series", e),
    };
    let strs = |s: &[Rat]| -> Value { s.iter().map(|v| v.to_string()).collect() };
    c.push(
        "3F2 form equals the Lagrange series through q^12",
        x1.coeffs() == l.coeffs(),
        object(vec![("x1", strs(x1.coeffs())), ("lagrange", strs(l.coeffs()))]),
    );
    c.push(
        "2F1 product form equals the Lagrange series through q^12",
        x2.coeffs() == l.coeffs(),
        object(vec![("x2", strs(x2.coeffs())), ("lagrange", strs(l.coeffs()))]),
    );
}

/// `x^3 + s x^2 + p x = q` and its inhomogeneous linear equation.
fn inhomogeneous_cubic_demo(c: &mut Checks) {
    for (sv, pv) in [(1, 1), (2, 1)] {
        let name = format!("derived equation matches the closed form at (s, p) = ({sv}, {pv})");
        match linear_ode(&spec(&[0, pv, sv, 1])) {
            Ok(ode) => ode_check(c, &name, &ode, &cubic_reference(&rat::int(sv), &rat::int(pv))),
            Err(e) => c.error(name, e),
        }
    }
    let name = "s = 0 reduces to the trinomial equation";
    match trinomial_reference(3, &rat::int(1)) {
        Ok(t) => ode_check(c, name, &cubic_reference(&rat::int(0), &rat::int(1)), &t),
        Err(e) => c.error(name, e),
    }
}
