use super::{abel_ode, DerivationError, ProblemSpec};
use crate::algebra::{rat, BiPoly, RatFunc, UPoly};

/// Rows `x^(k) = B_k(x, q) / D(q)^k`, `k = 1..=k_max`, each reduced modulo
/// `P` to degree at most `n - 1` in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeTower {
    pub n: usize,
    pub denominator: UPoly,
    /// `numerators[k - 1] = B_k`.
    pub numerators: Vec<BiPoly>,
    /// `rows[k - 1][j]` is the coefficient of `x^j` in `x^(k)`.
    pub rows: Vec<Vec<RatFunc>>,
}

/// One differentiation step: for `v = A / D^m` along `x' = c1 / D`,
/// `v' = (A_x c1 + A_q D - m A D') / D^(m+1)`.
pub fn tower_step(a: &BiPoly, m: usize, c1: &BiPoly, d: &UPoly) -> BiPoly {
    let dd = d.derivative().scale(&rat::int(m as i64));
    a.partial_x().mul(c1).add(&a.partial_coeff().scale(d)).sub(&a.scale(&dd))
}

pub fn derivative_tower(spec: &ProblemSpec, k_max: usize) -> Result<DerivativeTower, DerivationError> {
    let n = spec.degree();
    let abel = abel_ode(spec)?;
    let p = spec.p_monic();
    let d = abel.denominator.clone();
    let w = abel.w();
    let mut numerators = Vec::with_capacity(k_max);
    let mut current = w.clone();
    for k in 1..=k_max {
        if k > 1 {
            current = tower_step(&current, k - 1, &w, &d).rem_x(&p)?;
        }
        numerators.push(current.clone());
    }
    let rows = numerators
        .iter()
        .enumerate()
        .map(|(i, b)| (0..n).map(|j| RatFunc::over_power(b.coeff(j), &d, i + 1)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DerivativeTower { n, denominator: d, numerators, rows })
}
