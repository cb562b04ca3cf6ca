//! Helpers around the arbitrary-precision rational scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always reduced, with a positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 can fail when both parts overflow f64; fall back to
        // a shifted quotient.
        let n = r.numer();
        let d = r.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(900);
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact conversion of a finite float.
pub fn from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Square root when both numerator and denominator are perfect squares.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Parses `a`, `a/b`, or a plain decimal like `-0.125` exactly.
pub fn parse(text: &str) -> Option<Rat> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((a, b)) = t.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(w) => (true, w),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if frac.is_empty() && whole.is_empty() {
            return None;
        }
        if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{whole}{frac}");
        let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = Rat::new(n, d);
        return Some(if neg { -v } else { v });
    }
    t.parse::<BigInt>().ok().map(Rat::from_integer)
}

/// Lowest common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of the numerators (zero when all values are zero).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}
