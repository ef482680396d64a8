//! Squarefree decomposition (Yun), radicals and perfect-power indices.

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("input is the zero polynomial")]
    ZeroInput,
    #[error("input is constant")]
    ConstantInput,
}

/// One squarefree layer `factor^multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreePart {
    /// Monic, squarefree and nonconstant.
    pub factor: UniPoly,
    pub multiplicity: u32,
}

/// `unit * prod factor_i^{multiplicity_i}` with pairwise coprime squarefree
/// monic factors and strictly increasing multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub parts: Vec<SquarefreePart>,
}

impl SquarefreeDecomposition {
    /// Multiply the decomposition back out.
    pub fn reconstruct(&self) -> UniPoly {
        self.parts.iter().fold(UniPoly::constant(self.unit.clone()), |acc, part| {
            &acc * &part.factor.pow(part.multiplicity)
        })
    }

    /// gcd of all multiplicities; 0 when there are no parts.
    pub fn multiplicity_gcd(&self) -> u32 {
        self.parts
            .iter()
            .fold(0, |g, part| g.gcd(&part.multiplicity))
    }

    /// Product of the factors, i.e. the radical.
    pub fn radical(&self) -> UniPoly {
        self.parts
            .iter()
            .fold(UniPoly::one(), |acc, part| &acc * &part.factor)
    }
}

/// `input = unit * base^d` with `d` maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIndex {
    pub d: u32,
    /// Monic.
    pub base: UniPoly,
    pub unit: Rational,
}

/// Yun's squarefree decomposition over the rationals.
pub fn squarefree_decompose(a: &UniPoly) -> Result<SquarefreeDecomposition, FactorError> {
    let unit = a.leading_coeff().ok_or(FactorError::ZeroInput)?.clone();
    let mut parts = Vec::new();
    if a.is_constant() {
        return Ok(SquarefreeDecomposition { unit, parts });
    }

    let f = a.monic();
    let df = f.derivative();
    let g = f.gcd(&df).expect("f is nonzero");
    let mut b = f.div_exact(&g);
    let c = df.div_exact(&g);
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1u32;
    while !b.is_constant() {
        let layer = b.gcd(&d).expect("b is nonconstant");
        b = b.div_exact(&layer);
        let c = d.div_exact(&layer);
        d = &c - &b.derivative();
        if !layer.is_constant() {
            parts.push(SquarefreePart {
                factor: layer,
                multiplicity,
            });
        }
        multiplicity += 1;
    }
    Ok(SquarefreeDecomposition { unit, parts })
}

/// Monic squarefree polynomial with the same roots as `a`.
pub fn radical(a: &UniPoly) -> Result<UniPoly, FactorError> {
    if a.is_constant() {
        return Err(if a.is_zero() {
            FactorError::ZeroInput
        } else {
            FactorError::ConstantInput
        });
    }
    Ok(squarefree_decompose(a)?.radical())
}

/// Number of distinct complex roots, counted without multiplicity.
pub fn distinct_root_count(a: &UniPoly) -> Result<usize, FactorError> {
    let sqf = squarefree_decompose(a)?;
    Ok(sqf
        .parts
        .iter()
        .map(|part| part.factor.degree().unwrap_or(0))
        .sum())
}

/// Largest `d` with `a = unit * base^d`.
///
/// In characteristic zero the root multiplicities of `base^d` are `d` times
/// those of `base`, so `d` is the gcd of the squarefree multiplicities. The
/// unit never constrains `d` since every complex constant has a `d`-th root.
pub fn power_index(a: &UniPoly) -> Result<PowerIndex, FactorError> {
    if a.is_constant() {
        return Err(if a.is_zero() {
            FactorError::ZeroInput
        } else {
            FactorError::ConstantInput
        });
    }
    let sqf = squarefree_decompose(a)?;
    let d = sqf.multiplicity_gcd();
    debug_assert!(!d.is_zero());
    let base = sqf.parts.iter().fold(UniPoly::one(), |acc, part| {
        &acc * &part.factor.pow(part.multiplicity / d)
    });
    Ok(PowerIndex {
        d,
        base,
        unit: sqf.unit,
    })
}
