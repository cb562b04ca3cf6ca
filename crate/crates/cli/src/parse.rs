//! Polynomial input syntax: a sum of terms `c*v^k`, where `c` is an integer,
//! fraction `a/b` or decimal, `*` may be omitted (`2x^3`) and `v` is one of
//! the accepted variable letters.

use std::fmt;

use rootode_core::algebra::{rat, Rat, UPoly, Var};
use rootode_core::derivation::{DerivationError, ProblemSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [char],
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: at + 1, message: message.into() })
    }

    fn number(&mut self) -> Result<Option<Rat>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '.' || *c == '/') {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(None);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match rat::parse(&text) {
            Some(v) => Ok(Some(v)),
            None => self.err(start, format!("invalid number '{text}'")),
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<usize>().or_else(|_| self.err(start, "expected a nonnegative integer exponent"))
    }

    fn term(&mut self) -> Result<(Rat, usize), ParseError> {
        let start = self.pos;
        let coeff = self.number()?;
        let mut saw_star = false;
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            saw_star = true;
        }
        match self.peek() {
            Some(c) if self.vars.contains(&c) => {
                self.pos += 1;
                let k = self.exponent()?;
                Ok((coeff.unwrap_or_else(|| rat::int(1)), k))
            }
            _ if saw_star => self.err(self.pos, "expected a variable after '*'"),
            _ => match coeff {
                Some(c) => Ok((c, 0)),
                None => self.err(start.max(self.pos), "expected a number or variable"),
            },
        }
    }
}

/// Parses a polynomial in one of `vars` into ascending coefficients in `var`.
pub fn parse_polynomial(text: &str, vars: &[char], var: Var) -> Result<UPoly, ParseError> {
    let mut cur = Cursor { chars: text.chars().collect(), pos: 0, vars };
    let mut coeffs: Vec<Rat> = Vec::new();
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if first => return cur.err(cur.pos, "empty polynomial"),
            None => break,
            Some('+') => {
                cur.pos += 1;
                1
            }
            Some('-') => {
                cur.pos += 1;
                -1
            }
            Some(_) if first => 1,
            Some(c) => return cur.err(cur.pos, format!("expected '+' or '-', found '{c}'")),
        };
        first = false;
        let (c, k) = cur.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, rat::int(0));
        }
        coeffs[k] += c * rat::int(sign);
    }
    Ok(UPoly::new(var, coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemError {
    Syntax(ParseError),
    Invalid(DerivationError),
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Syntax(e) => write!(f, "syntax error at {e}"),
            Self::Invalid(e) => write!(f, "{e}"),
        }
    }
}

/// `R(x)` from text; `R(0) = 0` and degree at least 2 are enforced.
pub fn parse_problem(text: &str) -> Result<ProblemSpec, ProblemError> {
    let r = parse_polynomial(text, &['x'], Var::X).map_err(ProblemError::Syntax)?;
    ProblemSpec::new(r).map_err(ProblemError::Invalid)
}

/// Weight polynomial `G(t)`, written in `t` or `q`.
pub fn parse_weight(text: &str) -> Result<UPoly, ParseError> {
    parse_polynomial(text, &['t', 'q'], Var::Q)
}

/// A rational or decimal number, or any float literal (converted exactly).
pub fn parse_number(text: &str) -> Option<Rat> {
    let t = text.trim();
    rat::parse(t).or_else(|| t.parse::<f64>().ok().and_then(rat::from_f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: &[i64]) -> UPoly {
        UPoly::from_ints(Var::X, c)
    }

    #[test]
    fn accepts_the_usual_spellings() {
        assert_eq!(parse_problem("x^3+x").unwrap().r(), &x(&[0, 1, 0, 1]));
        assert_eq!(parse_problem("x^4-2x^3+2x^2-x").unwrap().r(), &x(&[0, -1, 2, -2, 1]));
        assert_eq!(parse_problem(" 2*x^2 - 3/2 x ").unwrap().r().coeff(1), rat::rat(-3, 2));
        assert_eq!(parse_problem("0.5x^2+x").unwrap().r().coeff(2), rat::rat(1, 2));
        assert_eq!(parse_problem("-x^2 + x + x").unwrap().r(), &x(&[0, 2, -1]));
    }

    #[test]
    fn rejects_invalid_problems() {
        assert_eq!(parse_problem("x^2+1"), Err(ProblemError::Invalid(DerivationError::NonzeroConstantTerm)));
        assert_eq!(parse_problem("3x"), Err(ProblemError::Invalid(DerivationError::DegreeTooSmall(1))));
        assert_eq!(parse_problem("x^2-x^2+x"), Err(ProblemError::Invalid(DerivationError::DegreeTooSmall(1))));
    }

    #[test]
    fn reports_positions() {
        let e = parse_polynomial("x^3 + y", &['x'], Var::X).unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_polynomial("x^ + 1", &['x'], Var::X).unwrap_err();
        assert_eq!(e.column, 4);
        let e = parse_polynomial("2* + x", &['x'], Var::X).unwrap_err();
        assert_eq!(e.column, 4);
        let e = parse_polynomial("x x", &['x'], Var::X).unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_polynomial("", &['x'], Var::X).is_err());
        assert!(parse_polynomial("1/0 x", &['x'], Var::X).is_err());
    }

    #[test]
    fn weights_and_numbers() {
        assert_eq!(parse_weight("-2").unwrap(), UPoly::from_ints(Var::Q, &[-2]));
        assert_eq!(parse_weight("5t").unwrap(), UPoly::from_ints(Var::Q, &[0, 5]));
        assert_eq!(parse_number("3/4"), Some(rat::rat(3, 4)));
        assert_eq!(parse_number("0.25"), Some(rat::rat(1, 4)));
        assert_eq!(parse_number("1e-1"), rat::from_f64(0.1));
        assert_eq!(parse_number("abc"), None);
    }
}
