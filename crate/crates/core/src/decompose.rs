//! Univariate functional decomposition `P = H(Q)` and the connectivity
//! certificate for `f^m + c g^n`.

use num_traits::Zero;
use thiserror::Error;

use crate::bivar::{build_h, singular_locus_finite, BivarError};
use crate::poly::{rat, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("inner degree {e} is invalid for a polynomial of degree {degree:?}")]
    InvalidInnerDegree { e: usize, degree: Option<usize> },
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("exponents m and n must both be at least 2")]
    InvalidExponent,
    #[error("the constant c must be nonzero")]
    ZeroC,
}

impl From<BivarError> for DecomposeError {
    fn from(e: BivarError) -> Self {
        match e {
            BivarError::ZeroC => DecomposeError::ZeroC,
            BivarError::InvalidExponent => DecomposeError::InvalidExponent,
            _ => DecomposeError::ConstantInput,
        }
    }
}

/// `P = outer(inner)` with `inner` monic and `inner(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub outer: UniPoly,
    pub inner: UniPoly,
}

/// The degree-`e` approximate `r`-th root of `P`: the unique monic `Q` with
/// `Q(0) = 0` such that `deg(P/lc(P) - Q^r) <= deg P - e`.
fn approximate_root(monic_p: &UniPoly, e: usize, r: u32) -> UniPoly {
    let n = e * r as usize;
    let r_inv = rat(r as i64).recip();
    let mut coeffs = vec![Rational::zero(); e + 1];
    coeffs[e] = rat(1);
    // The x^{n-k} coefficient of Q^r is r * q_{e-k} plus terms in q_{e-1}..q_{e-k+1}.
    for k in 1..e {
        let partial = UniPoly::new(coeffs.clone()).pow(r);
        let target = monic_p.coeff(n - k);
        coeffs[e - k] = (target - partial.coeff(n - k)) * &r_inv;
    }
    UniPoly::new(coeffs)
}

/// Try to write `P = H(Q)` with `deg Q = e`, `Q` monic and `Q(0) = 0`.
pub fn uni_decompose_at(p: &UniPoly, e: usize) -> Result<Option<Decomposition>, DecomposeError> {
    let degree = p.degree();
    let n = degree.unwrap_or(0);
    if n < 4 || e < 2 || n % e != 0 || e > n / 2 {
        return Err(DecomposeError::InvalidInnerDegree { e, degree });
    }
    let r = (n / e) as u32;
    let inner = approximate_root(&p.monic(), e, r);

    // Expand P in base Q; every digit must be a constant.
    let mut digits = Vec::with_capacity(r as usize + 1);
    let mut rest = p.clone();
    while !rest.is_zero() {
        let (quot, rem) = rest.divrem(&inner).expect("inner is nonzero");
        if !rem.is_constant() {
            return Ok(None);
        }
        digits.push(rem.coeff(0));
        rest = quot;
    }
    let outer = UniPoly::new(digits);
    if outer.compose(&inner) != *p {
        return Ok(None);
    }
    Ok(Some(Decomposition { outer, inner }))
}

/// Search every admissible inner degree; the first decomposition found wins.
pub fn find_decomposition(p: &UniPoly) -> Option<Decomposition> {
    let n = p.degree()?;
    (2..=n / 2)
        .filter(|e| n % e == 0)
        .find_map(|e| uni_decompose_at(p, e).ok().flatten())
}

/// `true` iff `P = H(Q)` for some `H`, `Q` both of degree at least 2.
pub fn is_decomposable(p: &UniPoly) -> bool {
    find_decomposition(p).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateStatus {
    ConnectedCertified,
    Inconclusive,
}

impl CertificateStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateStatus::ConnectedCertified => "connected-certified",
            CertificateStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityCertificate {
    pub status: CertificateStatus,
    pub singular_finite: bool,
    /// Eliminants of `(h_u, h_v)` in `u` and in `v`.
    pub eliminants: (UniPoly, UniPoly),
    pub notes: Vec<String>,
}

/// Certify that the generic fiber of `f^m + c g^n` is connected.
///
/// Uses `f^m + c g^n = h(x, g(x, y))` with `h(u, v) = (p(u) v - 1)^m + c v^n`.
/// The map `(x, y) -> (x, g)` is a homeomorphism off the vertical lines over
/// the roots of `q`, so it suffices that `h` is not of the form `H(Q)` with
/// `deg H > 1`. Such a composite has a positive-dimensional singular locus,
/// so a finite singular locus for `h` settles it.
pub fn connectivity_certificate(
    p: &UniPoly,
    m: u32,
    n: u32,
    c: &Rational,
) -> Result<ConnectivityCertificate, DecomposeError> {
    if p.is_constant() {
        return Err(DecomposeError::ConstantInput);
    }
    if m < 2 || n < 2 {
        return Err(DecomposeError::InvalidExponent);
    }
    let h = build_h(p, m, n, c)?;
    let locus = singular_locus_finite(&h)?;
    let (status, note) = if locus.finite {
        (
            CertificateStatus::ConnectedCertified,
            "both eliminants of the partial derivatives of h are nonzero, so h has finitely many singular points and admits no decomposition H(Q) with deg H > 1",
        )
    } else {
        (
            CertificateStatus::Inconclusive,
            "an eliminant of the partial derivatives of h vanishes identically; finiteness of the singular locus was not established",
        )
    };
    Ok(ConnectivityCertificate {
        status,
        singular_finite: locus.finite,
        eliminants: locus.witness,
        notes: vec![note.to_string()],
    })
}
