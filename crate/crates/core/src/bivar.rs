//! Polynomials in two variables, stored recursively as polynomials in `y`
//! whose coefficients are [`UniPoly`] values in `x`.
//!
//! The same type houses `h(u, v)` with `u` in the role of `x` and `v` in the
//! role of `y`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{forward_owned_binop, rat, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BivarError {
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("both inputs have degree 0 in the eliminated variable")]
    BothDegreeZero,
    #[error("expected degree exactly 1 in y, found {found:?}")]
    WrongYDegree { found: Option<usize> },
    #[error("the constant c must be nonzero")]
    ZeroC,
    #[error("exponents must be at least 1")]
    InvalidExponent,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    /// Build from coefficients in ascending powers of `y`.
    pub fn new(coeffs: Vec<UniPoly>) -> Self {
        let mut poly = Self { coeffs };
        while poly.coeffs.last().is_some_and(UniPoly::is_zero) {
            poly.coeffs.pop();
        }
        poly
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_x(UniPoly::one())
    }

    /// A polynomial not involving `y`.
    pub fn from_x(a: UniPoly) -> Self {
        Self::new(vec![a])
    }

    pub fn x() -> Self {
        Self::from_x(UniPoly::x())
    }

    pub fn y() -> Self {
        Self::new(vec![UniPoly::zero(), UniPoly::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_x(UniPoly::constant(c))
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: Rational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); j + 1];
        coeffs[j] = UniPoly::monomial(c, i);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `y^j`, a polynomial in `x`.
    pub fn coeff_y(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(j)
            .map_or_else(Rational::zero, |c| c.coeff(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1 && self.coeffs.iter().all(UniPoly::is_constant)
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.degree().map(|i| i + j))
            .max()
    }

    /// Nonzero terms as `(i, j, coefficient of x^i y^j)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coeffs.iter().enumerate().flat_map(|(j, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(move |(i, a)| (i, j, a))
        })
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        let dx = self.degree_x().map_or(0, |d| d + 1);
        let mut rows = vec![vec![Rational::zero(); self.coeffs.len()]; dx];
        for (i, j, c) in self.terms() {
            rows[i][j] = c.clone();
        }
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiply by a polynomial in `x` alone.
    pub fn mul_x(&self, a: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        Self::new(self.coeffs.iter().map(UniPoly::derivative).collect())
    }

    pub fn partial_y(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&rat(j as i64)))
                .collect(),
        )
    }

    /// Specialize `x = t`, leaving a polynomial in `y`.
    pub fn eval_x(&self, t: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_x(x).eval(y)
    }
}

impl std::fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new(
            (0..n)
                .map(|j| &self.coeff_y(j) + &rhs.coeff_y(j))
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::new(coeffs)
    }
}

forward_owned_binop!(BiPoly, Add, add);
forward_owned_binop!(BiPoly, Sub, sub);
forward_owned_binop!(BiPoly, Mul, mul);

/// `g(x, y) = q(x) y - 1`.
pub fn build_g(q: &UniPoly) -> Result<BiPoly, BivarError> {
    if q.is_constant() {
        return Err(BivarError::ConstantInput);
    }
    Ok(BiPoly::new(vec![-UniPoly::one(), q.clone()]))
}

/// `f(x, y) = p(x) (q(x) y - 1) - 1 = p(x) q(x) y - (p(x) + 1)`.
pub fn build_f(p: &UniPoly, q: &UniPoly) -> Result<BiPoly, BivarError> {
    if p.is_constant() || q.is_constant() {
        return Err(BivarError::ConstantInput);
    }
    Ok(BiPoly::new(vec![-(p + &UniPoly::one()), p * q]))
}

/// `h(u, v) = (p(u) v - 1)^m + c v^n`, with `u` stored as `x` and `v` as `y`.
pub fn build_h(p: &UniPoly, m: u32, n: u32, c: &Rational) -> Result<BiPoly, BivarError> {
    if m == 0 || n == 0 {
        return Err(BivarError::InvalidExponent);
    }
    if c.is_zero() {
        return Err(BivarError::ZeroC);
    }
    let inner = BiPoly::new(vec![-UniPoly::one(), p.clone()]);
    Ok(&inner.pow(m) + &BiPoly::monomial(c.clone(), 0, n as usize))
}

/// Determinant of a square matrix over `Q[x]` by fraction-free (Bareiss)
/// elimination. Every division is exact.
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant with respect to `y` without the "not both degree 0" guard;
/// two nonzero polynomials of `y`-degree 0 have resultant 1.
fn resultant_y_unchecked(a: &BiPoly, b: &BiPoly) -> UniPoly {
    let m = a.degree_y().expect("nonzero");
    let n = b.degree_y().expect("nonzero");
    if m == 0 {
        return a.coeffs[0].pow(n as u32);
    }
    if n == 0 {
        return b.coeffs[0].pow(m as u32);
    }
    // Sylvester matrix: n shifted rows of a, then m shifted rows of b, with
    // coefficients in descending powers of y.
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, poly, deg) in (0..n)
        .map(|s| (s, a, m))
        .chain((0..m).map(|s| (s, b, n)))
    {
        let mut row = vec![UniPoly::zero(); size];
        for k in 0..=deg {
            row[shift + k] = poly.coeffs[deg - k].clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// `Res_y(a, b)`, a polynomial in `x`.
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> Result<UniPoly, BivarError> {
    match (a.degree_y(), b.degree_y()) {
        (None, _) | (_, None) => Err(BivarError::ZeroInput),
        (Some(0), Some(0)) => Err(BivarError::BothDegreeZero),
        _ => Ok(resultant_y_unchecked(a, b)),
    }
}

/// `Res_x(a, b)`, a polynomial in `y`.
pub fn resultant_x(a: &BiPoly, b: &BiPoly) -> Result<UniPoly, BivarError> {
    resultant_y(&a.swap_vars(), &b.swap_vars())
}

/// For `a = A(x) y + B(x)`: irreducible over `Q` iff `gcd(A, B)` is constant.
pub fn is_irreducible_y_linear(a: &BiPoly) -> Result<bool, BivarError> {
    if a.degree_y() != Some(1) {
        return Err(BivarError::WrongYDegree {
            found: a.degree_y(),
        });
    }
    let g = a.coeffs[1]
        .gcd(&a.coeffs[0])
        .expect("leading y-coefficient is nonzero");
    Ok(g.is_constant())
}

/// Outcome of the singular-locus finiteness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularLocus {
    /// `true` proves the common zero set of both partials is finite;
    /// `false` only means the check was inconclusive.
    pub finite: bool,
    /// `(Res_y(h_x, h_y), Res_x(h_x, h_y))`: any singular point `(x0, y0)`
    /// has `x0` a root of the first and `y0` a root of the second.
    pub witness: (UniPoly, UniPoly),
}

/// Certify that `{h_x = h_y = 0}` is finite by showing both eliminants of
/// the partial derivatives are nonzero polynomials.
pub fn singular_locus_finite(h: &BiPoly) -> Result<SingularLocus, BivarError> {
    if h.is_constant() {
        return Err(BivarError::ConstantInput);
    }
    let hx = h.partial_x();
    let hy = h.partial_y();
    if hx.is_zero() || hy.is_zero() {
        // h depends on one variable only; its singular set is a union of lines
        return Ok(SingularLocus {
            finite: false,
            witness: (UniPoly::zero(), UniPoly::zero()),
        });
    }
    let in_x = resultant_y_unchecked(&hx, &hy);
    let in_y = resultant_y_unchecked(&hx.swap_vars(), &hy.swap_vars());
    Ok(SingularLocus {
        finite: !in_x.is_zero() && !in_y.is_zero(),
        witness: (in_x, in_y),
    })
}
