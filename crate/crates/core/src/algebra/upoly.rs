use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::{self, Rat};
use super::AlgebraError;

/// Variable tag of a univariate polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Q,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Q => "q",
        })
    }
}

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[k]` is the coefficient of `var^k`; there are never trailing
/// zeros, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    var: Var,
    coeffs: Vec<Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; fails when the variable tags differ.
pub fn upoly_arith(a: &UPoly, b: &UPoly, op: ArithOp) -> Result<UPoly, AlgebraError> {
    a.check_var(b)?;
    Ok(match op {
        ArithOp::Add => a.add_raw(b),
        ArithOp::Sub => a.sub_raw(b),
        ArithOp::Mul => a.mul_raw(b),
    })
}

impl UPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| rat::int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Self::new(var, vec![c])
    }

    pub fn monomial(var: Var, c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self { var, coeffs }
    }

    /// The polynomial `var` itself.
    pub fn identity(var: Var) -> Self {
        Self::monomial(var, Rat::one(), 1)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Relabels the variable without touching coefficients.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check_var(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    fn add_raw(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(self.var, coeffs)
    }

    fn sub_raw(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::new(self.var, coeffs)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.var, coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// Euclidean division `self = quot * b + rem` with `deg rem < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self), AlgebraError> {
        self.check_var(b)?;
        let Some(db) = b.degree() else {
            return Err(AlgebraError::DivisionByZero);
        };
        let lc_inv = b.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let t = &rem[k + db] * &lc_inv;
            if t.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[k + j] -= &t * bc;
            }
            quot[k] = t;
        }
        rem.truncate(db);
        Ok((Self::new(self.var, quot), Self::new(self.var, rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, b: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NonExactDivision)
        }
    }

    /// Monic version; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor. Remainders are kept primitive so
    /// coefficient size stays bounded by the inputs.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        a.check_var(b)?;
        if coprime_mod_p(a, b) {
            return Ok(Self::one(a.var));
        }
        let (mut r0, mut r1) = (a.primitive_part().1, b.primitive_part().1);
        while !r1.is_zero() {
            let (_, r) = r0.divrem(&r1)?;
            r0 = r1;
            r1 = r.primitive_part().1;
        }
        Ok(r0.monic())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * rat::int(k as i64)).collect();
        Self::new(self.var, coeffs)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + rat::to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat::to_f64).collect()
    }

    /// Substitutes `inner` for the variable; the result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(inner.var), |acc, c| acc.mul_raw(inner).add_raw(&Self::constant(inner.var, c.clone())))
    }

    /// `f(q) -> f(r(x))`.
    pub fn compose_q(f: &Self, r: &Self) -> Result<Self, AlgebraError> {
        if f.var != Var::Q {
            return Err(AlgebraError::VariableMismatch { left: f.var, right: Var::Q });
        }
        if r.var != Var::X {
            return Err(AlgebraError::VariableMismatch { left: r.var, right: Var::X });
        }
        Ok(f.compose(r))
    }

    /// Writes `self = c * p` with `p` integer, content 1, positive leading
    /// coefficient. Zero gives `(0, 0)`.
    pub fn primitive_part(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let l = rat::denominator_lcm(&self.coeffs);
        let scaled: Vec<Rat> = self.coeffs.iter().map(|c| c * Rat::from_integer(l.clone())).collect();
        let g = rat::numerator_gcd(&scaled);
        let mut factor = Rat::from_integer(g) / Rat::from_integer(l);
        if self.lc().is_some_and(Signed::is_negative) {
            factor = -factor;
        }
        let inv = factor.recip();
        (factor, self.scale(&inv))
    }

    /// Yun's square-free decomposition: monic `f_1, f_2, ...` with
    /// `self = lc * f_1 * f_2^2 * f_3^3 ...`. Zero or constant input gives an
    /// empty list.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df).expect("same variable");
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = c.sub_raw(&b.derivative());
        let mut out = Vec::new();
        loop {
            let a = Self::gcd(&b, &d).expect("same variable");
            out.push(a.clone());
            b = b.exact_div(&a).expect("gcd divides");
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a).expect("gcd divides");
            d = c.sub_raw(&b.derivative());
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Square-free part (monic), `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one(self.var);
        }
        let g = Self::gcd(self, &self.derivative()).expect("same variable");
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Sturm sequence of the square-free part.
    fn sturm_sequence(&self) -> Vec<Self> {
        let p0 = self.squarefree_part();
        let p1 = p0.derivative();
        let mut seq = vec![p0, p1];
        while !seq[seq.len() - 1].is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero divisor");
            seq.push(-&r);
        }
        seq.pop();
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_real_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        if self.degree().unwrap_or(0) == 0 || lo >= hi {
            return 0;
        }
        sturm_count(&self.sturm_sequence(), lo, hi)
    }

    /// Smallest real root in `(lo, hi]`, isolated by exact bisection to
    /// width `width`. Returns the midpoint of the final bracket, or the root
    /// itself if a bisection point hits it.
    pub fn first_real_root(&self, lo: &Rat, hi: &Rat, width: &Rat) -> Option<Rat> {
        if self.degree().unwrap_or(0) == 0 || lo >= hi {
            return None;
        }
        let seq = self.sturm_sequence();
        if sturm_count(&seq, lo, hi) == 0 {
            return None;
        }
        let (mut a, mut b) = (lo.clone(), hi.clone());
        let two = rat::int(2);
        while &b - &a > *width {
            let m = (&a + &b) / &two;
            if sturm_count(&seq, &a, &m) > 0 {
                if seq[0].eval(&m).is_zero() && sturm_count(&seq, &a, &m) == 1 {
                    return Some(m);
                }
                b = m;
            } else {
                a = m;
            }
        }
        Some((a + b) / two)
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod_p(c: &Rat) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let n = c.numer().mod_floor(&p).to_u64()?;
    let d = c.denom().mod_floor(&p).to_u64()?;
    (d != 0).then(|| mulmod(n, powmod(d, PRIME - 2)))
}

/// Sufficient test for `gcd(a, b) = 1`: the images modulo a large prime are
/// coprime and both keep their degree.
fn coprime_mod_p(a: &UPoly, b: &UPoly) -> bool {
    let image = |p: &UPoly| -> Option<Vec<u64>> {
        let v: Vec<u64> = p.coeffs.iter().map(to_mod_p).collect::<Option<_>>()?;
        (v.last().is_some_and(|&c| c != 0)).then_some(v)
    };
    let (Some(mut r0), Some(mut r1)) = (image(a), image(b)) else {
        return false;
    };
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        if r1.len() == 1 {
            return true;
        }
        // r0 mod r1
        let inv = powmod(*r1.last().expect("nonempty"), PRIME - 2);
        let d = r1.len() - 1;
        while r0.len() > d {
            let t = mulmod(*r0.last().expect("nonempty"), inv);
            let off = r0.len() - 1 - d;
            for (j, &c) in r1.iter().enumerate() {
                r0[off + j] = (r0[off + j] + PRIME - mulmod(t, c)) % PRIME;
            }
            while r0.last() == Some(&0) {
                r0.pop();
            }
        }
        if r0.is_empty() {
            return false;
        }
        std::mem::swap(&mut r0, &mut r1);
    }
}

fn sturm_count(seq: &[UPoly], lo: &Rat, hi: &Rat) -> usize {
    let changes = |t: &Rat| {
        let signs: Vec<i8> = seq.iter().map(|p| rat::sign(&p.eval(t))).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(lo).saturating_sub(changes(hi))
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

// The operator forms panic on mixed variables; use `upoly_arith` for the
// checked version.
macro_rules! impl_op {
    ($tr:ident, $method:ident, $raw:ident) => {
        impl $tr<&UPoly> for &UPoly {
            type Output = UPoly;
            fn $method(self, rhs: &UPoly) -> UPoly {
                assert_eq!(self.var, rhs.var, "mixed polynomial variables");
                self.$raw(rhs)
            }
        }
        impl $tr<UPoly> for UPoly {
            type Output = UPoly;
            fn $method(self, rhs: UPoly) -> UPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&UPoly> for UPoly {
            type Output = UPoly;
            fn $method(self, rhs: &UPoly) -> UPoly {
                (&self).$method(rhs)
            }
        }
    };
}

impl_op!(Add, add, add_raw);
impl_op!(Sub, sub, sub_raw);
impl_op!(Mul, mul, mul_raw);

impl fmt::Display for UPoly {
    /// Descending powers, e.g. `27*q^2 + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = self.var;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "{var}")?,
                (1, false) => write!(f, "{a}*{var}")?,
                (_, true) => write!(f, "{var}^{k}")?,
                (_, false) => write!(f, "{a}*{var}^{k}")?,
            }
        }
        Ok(())
    }
}
