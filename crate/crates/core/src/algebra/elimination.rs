//! Fraction-free (Bareiss) elimination over an exact integral domain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::rat::{self, Rat};
use super::upoly::{UPoly, Var};

/// The operations Bareiss elimination needs: ring arithmetic plus a
/// division that is known to be exact.
pub trait ExactRing: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn mul_elem(&self, o: &Self) -> Self;
    /// Panics if the division leaves a remainder.
    fn div_exact(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self;
}

impl ExactRing for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

impl ExactRing for UPoly {
    fn zero_like(&self) -> Self {
        UPoly::zero(self.var())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Self {
        self.exact_div(o).expect("Bareiss step must divide exactly")
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    /// `(row, column)` of each pivot, in order.
    pub pivots: Vec<(usize, usize)>,
    /// Parity of the row swaps performed.
    pub swaps_odd: bool,
}

/// Bareiss elimination of a rectangular matrix. Columns without a pivot are
/// skipped. Every entry below the staircase becomes zero; entries are
/// minors of the input, so all divisions are exact.
pub fn echelon<T: ExactRing>(mut m: Vec<Vec<T>>) -> Echelon<T> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps_odd = false;
    let mut prev: Option<T> = None;
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero_elem()) else {
            continue;
        };
        if p != row {
            m.swap(p, row);
            swaps_odd = !swaps_odd;
        }
        let piv = m[row][col].clone();
        for i in row + 1..nrows {
            let factor = m[i][col].clone();
            #[allow(clippy::needless_range_loop)]
            for j in col + 1..ncols {
                let mut v = piv.mul_elem(&m[i][j]).sub_elem(&factor.mul_elem(&m[row][j]));
                if let Some(d) = &prev {
                    v = v.div_exact(d);
                }
                m[i][j] = v;
            }
            m[i][col] = piv.zero_like();
        }
        pivots.push((row, col));
        prev = Some(piv);
        row += 1;
    }
    Echelon { rows: m, pivots, swaps_odd }
}

/// Determinant of a square matrix; `zero` is returned for singular input
/// and `one` for the empty matrix.
pub fn determinant<T: ExactRing>(m: Vec<Vec<T>>, one: T) -> T {
    let n = m.len();
    if n == 0 {
        return one;
    }
    let e = echelon(m);
    if e.pivots.len() < n || e.pivots.iter().any(|&(r, c)| r != c) {
        return one.zero_like();
    }
    let d = e.rows[n - 1][n - 1].clone();
    if e.swaps_odd {
        d.neg_elem()
    } else {
        d
    }
}

/// Integer-coefficient polynomial (ascending, no trailing zeros). Bareiss
/// over these avoids the gcd that every rational operation performs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn trimmed(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    /// `None` when a coefficient is not an integer.
    pub fn from_upoly(p: &UPoly) -> Option<Self> {
        p.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect::<Option<Vec<_>>>().map(Self::trimmed)
    }

    pub fn to_upoly(&self, var: Var) -> UPoly {
        UPoly::new(var, self.0.iter().cloned().map(Rat::from_integer).collect())
    }
}

impl ExactRing for IntPoly {
    fn zero_like(&self) -> Self {
        Self(Vec::new())
    }
    fn is_zero_elem(&self) -> bool {
        self.0.is_empty()
    }
    fn add_elem(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        Self::trimmed((0..n).map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z)).collect())
    }
    fn sub_elem(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        Self::trimmed((0..n).map(|k| self.0.get(k).unwrap_or(&z) - o.0.get(k).unwrap_or(&z)).collect())
    }
    fn mul_elem(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Self(Vec::new());
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::trimmed(c)
    }
    fn div_exact(&self, o: &Self) -> Self {
        let db = o.0.len().checked_sub(1).expect("division by zero polynomial");
        if self.0.len() <= db {
            assert!(self.0.is_empty(), "Bareiss step must divide exactly");
            return Self(Vec::new());
        }
        let lc = &o.0[db];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let (t, r) = rem[k + db].div_rem(lc);
            assert!(r.is_zero(), "Bareiss step must divide exactly");
            if t.is_zero() {
                continue;
            }
            for (j, bc) in o.0.iter().enumerate() {
                rem[k + j] -= &t * bc;
            }
            quot[k] = t;
        }
        assert!(rem.iter().all(Zero::is_zero), "Bareiss step must divide exactly");
        Self::trimmed(quot)
    }
    fn neg_elem(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }
}

/// Multiplies each row by the lcm of its coefficient denominators and
/// converts to integer polynomials. Returns the rows and the multipliers.
fn integer_rows(m: &[Vec<UPoly>]) -> (Vec<Vec<IntPoly>>, Vec<Rat>) {
    let mut scales = Vec::with_capacity(m.len());
    let rows = m
        .iter()
        .map(|row| {
            let l = Rat::from_integer(rat::denominator_lcm(row.iter().flat_map(|p| p.coeffs())));
            let out = row.iter().map(|p| IntPoly::from_upoly(&p.scale(&l)).expect("integral after scaling")).collect();
            scales.push(l);
            out
        })
        .collect();
    (rows, scales)
}

/// Echelon form of a polynomial matrix, computed over the integers after
/// scaling each row by a positive rational; the row space is unchanged.
pub fn poly_echelon(m: &[Vec<UPoly>], var: Var) -> Echelon<UPoly> {
    let (rows, _) = integer_rows(m);
    let e = echelon(rows);
    Echelon {
        rows: e.rows.iter().map(|r| r.iter().map(|p| p.to_upoly(var)).collect()).collect(),
        pivots: e.pivots,
        swaps_odd: e.swaps_odd,
    }
}

/// Determinant of a square polynomial matrix, computed over the integers.
pub fn poly_determinant(m: &[Vec<UPoly>], var: Var) -> UPoly {
    let (rows, scales) = integer_rows(m);
    let det = determinant(rows, IntPoly(vec![BigInt::from(1)]));
    let total: Rat = scales.iter().product();
    det.to_upoly(var).scale(&total.recip())
}
