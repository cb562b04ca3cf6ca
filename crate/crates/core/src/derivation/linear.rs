use std::fmt;

use super::abel::normalize_jointly;
use super::{derivative_tower, DerivationError, DerivativeTower, ProblemSpec};
use crate::algebra::elimination::{poly_determinant, poly_echelon};
use crate::algebra::{UPoly, Var};

/// `sum_k coeffs[k](q) x^(k) + inhomogeneous(q) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOde {
    /// Indexed by derivative order, `0..=order`.
    pub coeffs: Vec<UPoly>,
    pub inhomogeneous: UPoly,
    /// Dimension of the kernel the solution was taken from.
    pub kernel_dim: usize,
}

impl LinearOde {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// True when the kernel had more than one direction and the reported
    /// equation is the one of least total degree.
    pub fn ambiguous(&self) -> bool {
        self.kernel_dim > 1
    }

    /// Removes the polynomial gcd, then scales to integer coefficients with
    /// content 1 and a positive leading coefficient on the highest nonzero
    /// derivative coefficient.
    pub fn normalize(&mut self) {
        let mut all: Vec<UPoly> = self.coeffs.clone();
        all.push(self.inhomogeneous.clone());
        let g = all
            .iter()
            .filter(|p| !p.is_zero())
            .try_fold(UPoly::zero(Var::Q), |acc, p| UPoly::gcd(&acc, p))
            .expect("all polynomials are in q");
        if !g.is_zero() && !g.is_constant() {
            for p in all.iter_mut() {
                *p = p.exact_div(&g).expect("gcd divides");
            }
        }
        let lead = (0..self.coeffs.len()).rev().find(|&k| !all[k].is_zero()).unwrap_or(self.coeffs.len());
        normalize_jointly(&mut all, lead);
        self.inhomogeneous = all.pop().expect("pushed above");
        self.coeffs = all;
    }

    pub fn is_normalized(&self) -> bool {
        let mut c = self.clone();
        c.normalize();
        c == *self
    }

    /// Substitutes the tower rows; true when every power of `x` cancels.
    /// Checked on the numerators, with all rows over the common
    /// denominator `D^(n-1)`.
    pub fn apply_to_tower(&self, tower: &DerivativeTower) -> Result<bool, DerivationError> {
        if self.coeffs.len() != tower.n || tower.numerators.len() < self.order() {
            return Ok(false);
        }
        let m = system_matrix(tower);
        let mut v = self.coeffs.clone();
        v.push(self.inhomogeneous.clone());
        Ok(m.iter().all(|row| row.iter().zip(&v).fold(UPoly::zero(Var::Q), |acc, (a, b)| &acc + &(a * b)).is_zero()))
    }

    fn total_degree(&self) -> usize {
        self.coeffs.iter().chain(std::iter::once(&self.inhomogeneous)).map(|p| p.degree().map_or(0, |d| d + 1)).sum()
    }
}

impl fmt::Display for LinearOde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let d = match k {
                0 => "x".to_string(),
                1..=5 => format!("x{}", "'".repeat(k)),
                _ => format!("x^({k})"),
            };
            write!(f, "({c})*{d}")?;
        }
        if !self.inhomogeneous.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", self.inhomogeneous)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " = 0")
    }
}

/// Coefficient of `x^j` (row) contributed by each unknown (column) after
/// multiplying through by `D^(n-1)`. Column `k < n` is `b_k`; column `n`
/// is the inhomogeneous term.
fn system_matrix(tower: &DerivativeTower) -> Vec<Vec<UPoly>> {
    let n = tower.n;
    let order = n - 1;
    let dpow: Vec<UPoly> = (0..n).map(|e| tower.denominator.pow(e)).collect();
    let zero = UPoly::zero(Var::Q);
    (0..n)
        .map(|j| {
            (0..=n)
                .map(|k| match k {
                    0 if j == 1 => dpow[order].clone(),
                    0 => zero.clone(),
                    k if k == n && j == 0 => dpow[order].clone(),
                    k if k == n => zero.clone(),
                    k => &tower.numerators[k - 1].coeff(j) * &dpow[order - k],
                })
                .collect()
        })
        .collect()
}

/// Kernel of an `n x (n + 1)` matrix of rank `n`: the signed maximal
/// minors.
fn cramer_vector(m: &[Vec<UPoly>]) -> Vec<UPoly> {
    let width = m[0].len();
    (0..width)
        .map(|k| {
            let minor: Vec<Vec<UPoly>> = m
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, p)| p.clone()).collect())
                .collect();
            let det = poly_determinant(&minor, Var::Q);
            if k % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

/// Kernel vector of an echelon form with the free column `free` set to a
/// nonzero value; the other free columns are zero. Stays polynomial by
/// rescaling the partial solution whenever a pivot does not divide.
fn back_substitute(
    rows: &[Vec<UPoly>],
    pivots: &[(usize, usize)],
    free: usize,
    width: usize,
) -> Result<Vec<UPoly>, DerivationError> {
    let mut v = vec![UPoly::zero(Var::Q); width];
    v[free] = UPoly::one(Var::Q);
    for &(r, c) in pivots.iter().rev() {
        if c > free {
            continue;
        }
        let s = (c + 1..width)
            .filter(|&k| !v[k].is_zero())
            .fold(UPoly::zero(Var::Q), |acc, k| &acc + &(&rows[r][k] * &v[k]));
        let piv = &rows[r][c];
        let g = UPoly::gcd(&s, piv)?;
        let scale = piv.exact_div(&g)?;
        for x in v.iter_mut().skip(c + 1) {
            *x = &*x * &scale;
        }
        v[c] = -&s.exact_div(&g)?;
    }
    Ok(v)
}

/// Linear equation of order `n - 1` satisfied by the root branch.
pub fn linear_ode(spec: &ProblemSpec) -> Result<LinearOde, DerivationError> {
    let tower = derivative_tower(spec, spec.degree() - 1)?;
    linear_ode_from_tower(&tower)
}

/// Kernel of the system obtained by matching powers of `x` in
/// `sum_k b_k x^(k) + b_n = 0` with `x^(k)` read off the tower.
pub fn linear_ode_from_tower(tower: &DerivativeTower) -> Result<LinearOde, DerivationError> {
    let n = tower.n;
    let order = n - 1;
    if tower.numerators.len() < order {
        return Err(DerivationError::Certificate("tower is too short"));
    }
    let ech = poly_echelon(&system_matrix(tower), Var::Q);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..=n).filter(|c| !pivot_cols.contains(c)).collect();
    if free.is_empty() {
        return Err(DerivationError::EmptyKernel);
    }
    let kernel_dim = free.len();
    let mut best: Option<LinearOde> = None;
    for &fc in &free {
        let v = if kernel_dim == 1 {
            cramer_vector(&system_matrix(tower))
        } else {
            back_substitute(&ech.rows, &ech.pivots, fc, n + 1)?
        };
        let mut ode = LinearOde { coeffs: v[..n].to_vec(), inhomogeneous: v[n].clone(), kernel_dim };
        ode.normalize();
        if best.as_ref().is_none_or(|b| ode.total_degree() < b.total_degree()) {
            best = Some(ode);
        }
    }
    let ode = best.expect("at least one free column");
    if !ode.apply_to_tower(tower)? {
        return Err(DerivationError::Certificate("kernel vector does not annihilate the tower"));
    }
    Ok(ode)
}
