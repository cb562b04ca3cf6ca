//! The structured result of one invocation, with JSON and text renderings.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use rootode_core::algebra::{Rat, UPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// A verification ran and at least one check failed.
    CheckFailed,
    DomainError,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Ok => 0,
            Self::UsageError => 1,
            Self::CheckFailed | Self::DomainError => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::CheckFailed => "check_failed",
            Self::DomainError => "domain_error",
            Self::UsageError => "usage_error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEntry {
    pub code: String,
    pub message: String,
}

/// Echo of the parsed invocation. Absent options are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Input {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
    /// Ascending coefficients of `R(x)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub demo: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_abs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_rel: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verb: String,
    pub input: Input,
    pub result: Value,
    pub status: Status,
    pub errors: Vec<ErrorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(verb: &str, input: Input) -> Self {
        Self {
            verb: verb.to_string(),
            input,
            result: Value::Null,
            status: Status::Ok,
            errors: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn fail(mut self, status: Status, code: &str, message: impl Into<String>) -> Self {
        self.status = status;
        self.errors.push(ErrorEntry { code: code.to_string(), message: message.into() });
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Aligned `key  value` lines; nested objects flatten to dotted keys.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> =
            vec![("verb".into(), self.verb.clone()), ("status".into(), self.status.name().into())];
        if let Ok(Value::Object(input)) = serde_json::to_value(&self.input) {
            flatten("input", &Value::Object(input), &mut rows);
        }
        flatten("result", &self.result, &mut rows);
        for e in &self.errors {
            rows.push((format!("error.{}", e.code), e.message.clone()));
        }
        if let Some(t) = self.timing_ms {
            rows.push(("timing_ms".into(), format!("{t:.3}")));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar_text(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&format!("{prefix}.{k}"), child, rows);
            }
        }
        Value::Array(items) => match inline(v) {
            Some(s) => rows.push((prefix.to_string(), s)),
            None => {
                for (i, child) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), child, rows);
                }
            }
        },
        _ => rows.push((prefix.to_string(), scalar_text(v).expect("scalar"))),
    }
}

/// `"-3"`, `"27/4"`.
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

/// Ascending coefficients as rational strings; the zero polynomial is `[]`.
pub fn poly_coeffs(p: &UPoly) -> Vec<String> {
    if p.is_zero() {
        return Vec::new();
    }
    p.coeffs().iter().map(rat_str).collect()
}

pub fn poly_json(p: &UPoly) -> Value {
    Value::from(poly_coeffs(p))
}

/// A JSON number, or `null` when not finite.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rootode_core::algebra::{rat, Var};

    #[test]
    fn rationals_are_strings() {
        let p = UPoly::new(Var::Q, vec![rat::rat(27, 4), rat::int(0), rat::int(-3)]);
        assert_eq!(poly_coeffs(&p), ["27/4", "0", "-3"]);
        assert!(poly_coeffs(&UPoly::zero(Var::Q)).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let mut r =
            Report::new("solve", Input { problem: Some("x^3+x".into()), q: Some("2".into()), ..Default::default() });
        r.result =
            object(vec![("x", num(0.1 + 0.2)), ("b", Value::from(vec!["4", "0", "27"])), ("nan", num(f64::NAN))]);
        r.timing_ms = Some(1.25);
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let r = r.fail(Status::DomainError, "branch_point", "hit");
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn text_is_aligned() {
        let mut r = Report::new("demo", Input::default());
        r.result =
            object(vec![("checks", Value::from(vec![object(vec![("name", "a".into()), ("pass", true.into())])]))]);
        let text = r.to_text();
        assert!(text.contains("result.checks[0].name  a\n"), "{text}");
        let width = "result.checks[0].name".len() + 2;
        assert!(
            text.lines().all(|l| l.len() > width && l.as_bytes()[width - 1] == b' ' && l.as_bytes()[width] != b' '),
            "{text}"
        );
    }
}
