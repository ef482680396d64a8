#![allow(dead_code)]

use charvar_core::poly::{frac, rat, Rational, UniPoly};
use charvar_core::BiPoly;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn uni(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(UniPoly::new)
}

pub fn nonconstant_uni(max_len: usize) -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(small_rational(), 1..max_len), 1i64..=3, any::<bool>()).prop_map(
        |(mut c, lc, neg)| {
            c.push(rat(if neg { -lc } else { lc }));
            UniPoly::new(c)
        },
    )
}

pub fn bi(max_x: usize, max_y: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(uni(max_x), 0..=max_y).prop_map(BiPoly::new)
}

/// `prod (x - a_i)^{m_i}` over the given roots.
pub fn from_roots(roots: &[(i64, u32)]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, &(a, m)| {
        &acc * &UniPoly::linear_root(rat(a)).pow(m)
    })
}

/// Determinant over Q by Gaussian elimination with rational pivots.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    use num_traits::{One, Zero};
    let n = m.len();
    let mut acc = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            m.swap(piv, k);
            acc = -acc;
        }
        acc *= m[k][k].clone();
        for i in k + 1..n {
            let factor = &m[i][k] / &m[k][k];
            for j in k..n {
                let sub = &factor * &m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    acc
}

/// Sylvester-matrix resultant: rows of `a` first, descending coefficients.
pub fn sylvester_resultant(a: &UniPoly, b: &UniPoly) -> Rational {
    use num_traits::Zero;
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::new();
    for s in 0..n {
        let mut row = vec![Rational::zero(); size];
        for k in 0..=m {
            row[s + k] = a.coeff(m - k);
        }
        rows.push(row);
    }
    for s in 0..m {
        let mut row = vec![Rational::zero(); size];
        for k in 0..=n {
            row[s + k] = b.coeff(n - k);
        }
        rows.push(row);
    }
    if size == 0 {
        return rat(1);
    }
    det(rows)
}

/// Bivariate polynomial of `y`-degree exactly in `min_y..=max_y`.
pub fn bi_exact(max_x: usize, min_y: usize, max_y: usize) -> impl Strategy<Value = BiPoly> {
    (prop::collection::vec(uni(max_x), min_y..=max_y), nonconstant_uni(max_x)).prop_map(
        |(mut c, lead)| {
            c.push(lead);
            BiPoly::new(c)
        },
    )
}
