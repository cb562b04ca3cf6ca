//! LaTeX renderings of the derived equations, descending in derivative
//! order (or in powers of `x`), with integer polynomial coefficients in `q`.

use num_traits::{One, Signed, Zero};

use rootode_core::algebra::{Rat, UPoly, Var};
use rootode_core::derivation::{AbelOde, LinearOde};

fn rat_tex(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn monomial(var: char, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{k}}}"),
    }
}

fn var_char(v: Var) -> char {
    match v {
        Var::X => 'x',
        Var::Q => 'q',
    }
}

/// Descending powers, e.g. `27q^{2}+4`.
pub fn poly(p: &UPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = var_char(p.var());
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if !(a.is_one() && k > 0) {
            out.push_str(&rat_tex(&a));
        }
        out.push_str(&monomial(var, k));
    }
    out
}

fn term_count(p: &UPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Coefficient written in front of `factor`: bare for a monomial, in
/// parentheses otherwise, with `1` and `-1` elided.
fn coefficient(c: &UPoly, factor: &str) -> String {
    if factor.is_empty() {
        return if term_count(c) > 1 { format!("({})", poly(c)) } else { poly(c) };
    }
    if term_count(c) > 1 {
        return format!("({}){factor}", poly(c));
    }
    if c.is_constant() {
        let v = c.coeff(0);
        if v.is_one() {
            return factor.to_string();
        }
        if (-v).is_one() {
            return format!("-{factor}");
        }
    }
    format!("{}{factor}", poly(c))
}

fn join(terms: &[String]) -> String {
    let mut out = String::new();
    for t in terms {
        if !out.is_empty() && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(t);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn derivative(k: usize) -> String {
    match k {
        0 => "x".into(),
        1..=5 => format!("x{}", "'".repeat(k)),
        _ => format!("x^{{({k})}}"),
    }
}

/// `(27q^{2}+4)x''+27qx'-3x=0`; a zero inhomogeneous term is omitted.
pub fn linear_ode(ode: &LinearOde) -> String {
    let mut terms: Vec<String> = (0..ode.coeffs.len())
        .rev()
        .filter(|&k| !ode.coeffs[k].is_zero())
        .map(|k| coefficient(&ode.coeffs[k], &derivative(k)))
        .collect();
    if !ode.inhomogeneous.is_zero() {
        terms.push(coefficient(&ode.inhomogeneous, ""));
    }
    format!("{}=0", join(&terms))
}

/// `x'=\frac{2}{4q+1}x+\frac{1}{4q+1}`.
pub fn abel_ode(abel: &AbelOde) -> String {
    let mut terms = Vec::new();
    for (j, a) in abel.a.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let factor = monomial('x', j);
        let (num, den) = a.integer_form();
        if den.is_constant() && den.coeff(0).is_one() {
            terms.push(coefficient(&num, &factor));
            continue;
        }
        let (sign, num) =
            if num.lc().is_some_and(|c| c.is_negative()) && term_count(&num) == 1 { ("-", -&num) } else { ("", num) };
        terms.push(format!("{sign}\\frac{{{}}}{{{}}}{factor}", poly(&num), poly(&den)));
    }
    format!("x'={}", join(&terms))
}
