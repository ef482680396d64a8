//! First characteristic variety of `M = C^2 \ {f g = 0}` for the arrangement
//! attached to `F(x, y) = p(x) (y q(x) - 1)`, with `f = F - 1` and
//! `g = y q(x) - 1`.
//!
//! The character torus is identified with pairs `(lambda_0, lambda_1)` of
//! monodromies about `C_0 = {g = 0}` and `C_1 = {f = 0}`, in that order.
//! Torsion characters are stored additively: the residue `a` stands for
//! `exp(2 pi i a)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bivar::{build_f, build_g, is_irreducible_y_linear};
use crate::factor::{distinct_root_count, power_index, squarefree_decompose, SquarefreePart};
use crate::poly::{rat, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("p and q must both be nonconstant")]
    ConstantInput,
    #[error("hypotheses violated: {}", .0.violations().join("; "))]
    HypothesesViolated(Hypotheses),
    #[error("torsion direction must be a nonzero primitive vector, got ({0}, {1})")]
    NonPrimitiveDirection(i64, i64),
}

/// The two standing assumptions on `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    /// `p` and `q` share at least one root.
    pub common_root_pq: bool,
    /// `p + 1` and `q` share no root.
    pub no_common_root_p1_q: bool,
    pub satisfied: bool,
}

impl Hypotheses {
    /// Human-readable list of the failed clauses.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.common_root_pq {
            out.push("p(x) and q(x) have no common root (common-root clause)");
        }
        if !self.no_common_root_p1_q {
            out.push("p(x) + 1 and q(x) have a common root (p+1 coprimality clause)");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiNumbers {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    /// Distinct roots of `q`.
    pub s: usize,
    /// Distinct roots of `p q`.
    pub t: usize,
}

/// The divisor of the fiber `f = -1`, which on `M` is cut out by `p(x) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberDivisor {
    pub value: Rational,
    pub unit: Rational,
    pub components: Vec<SquarefreePart>,
    pub divisor_multiplicity: u32,
}

/// A character of finite order, as residues modulo 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionCharacter {
    a0: Rational,
    a1: Rational,
}

fn reduce_mod_one(a: Rational) -> Rational {
    let r = &a - a.floor();
    debug_assert!(!r.is_negative() && r < Rational::one());
    r
}

impl TorsionCharacter {
    pub fn new(a0: Rational, a1: Rational) -> Self {
        Self {
            a0: reduce_mod_one(a0),
            a1: reduce_mod_one(a1),
        }
    }

    /// Exponent of the monodromy about `C_0 = {g = 0}`.
    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    /// Exponent of the monodromy about `C_1 = {f = 0}`.
    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    /// Order in the character torus: lcm of the residue denominators.
    pub fn order(&self) -> u64 {
        let lcm = self.a0.denom().lcm(self.a1.denom());
        u64::try_from(lcm).expect("order fits in u64")
    }

    pub fn is_trivial(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }
}

/// `torsion * {(t^n0, t^n1) : t in C^*}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedTorus {
    pub torsion: TorsionCharacter,
    direction: (i64, i64),
}

impl TranslatedTorus {
    pub fn new(torsion: TorsionCharacter, direction: (i64, i64)) -> Result<Self, ArrangementError> {
        let (n0, n1) = direction;
        if n0.gcd(&n1) != 1 {
            return Err(ArrangementError::NonPrimitiveDirection(n0, n1));
        }
        Ok(Self { torsion, direction })
    }

    pub fn direction(&self) -> (i64, i64) {
        self.direction
    }
}

/// Image direction of `f^* : T(C^*) -> T(M)`, `lambda -> (1, lambda)`.
pub const PULLBACK_DIRECTION: (i64, i64) = (0, 1);

/// Statements the report carries without verifying them.
pub const CITED_NOTES: [&str; 4] = [
    "cited, not verified: dim H^1(M, L) >= 1 for every local system L on each translated component W_j",
    "cited, not verified: equality dim H^1(M, L) = 1 on W_j holds outside finitely many exceptional local systems; the exceptional set is not computed",
    "cited, not verified: the resonance varieties R_k(M), k > 0, are trivial; the cohomological argument is not reproduced",
    "cited, not verified: the cup product H^1(M) x H^1(M) -> H^2(M) is nontrivial; only b1 = 2 and b2 = s + t are computed",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVarietyReport {
    pub hypotheses: Hypotheses,
    pub betti: BettiNumbers,
    pub divisor: FiberDivisor,
    /// `|T(f)| = d`.
    pub orbifold_order: u32,
    pub components: Vec<TranslatedTorus>,
    pub resonance_trivial: bool,
    /// Irreducibility of `(f, g)`.
    pub irreducibility: (bool, bool),
    pub notes: Vec<String>,
}

fn require_nonconstant(polys: &[&UniPoly]) -> Result<(), ArrangementError> {
    if polys.iter().any(|a| a.is_constant()) {
        Err(ArrangementError::ConstantInput)
    } else {
        Ok(())
    }
}

fn require_hypotheses(p: &UniPoly, q: &UniPoly) -> Result<Hypotheses, ArrangementError> {
    let h = check_hypotheses(p, q)?;
    if h.satisfied {
        Ok(h)
    } else {
        Err(ArrangementError::HypothesesViolated(h))
    }
}

/// Decide both hypotheses through gcd degrees; no roots are extracted.
pub fn check_hypotheses(p: &UniPoly, q: &UniPoly) -> Result<Hypotheses, ArrangementError> {
    require_nonconstant(&[p, q])?;
    let common_root_pq = p.has_common_root(q);
    let no_common_root_p1_q = !(p + &UniPoly::one()).has_common_root(q);
    Ok(Hypotheses {
        common_root_pq,
        no_common_root_p1_q,
        satisfied: common_root_pq && no_common_root_p1_q,
    })
}

/// `b0 = 1`, `b1 = 2`, `b2 = s + t` with distinct-root counts `s` of `q`
/// and `t` of `p q`.
pub fn betti(p: &UniPoly, q: &UniPoly) -> Result<BettiNumbers, ArrangementError> {
    require_hypotheses(p, q)?;
    let s = distinct_root_count(q).expect("q is nonzero");
    let t = distinct_root_count(&(p * q)).expect("pq is nonzero");
    Ok(BettiNumbers {
        b0: 1,
        b1: 2,
        b2: s + t,
        s,
        t,
    })
}

/// The only candidate multiple fiber of `f` is `f = -1`, i.e. `p(x) = 0`
/// on `M`. Its components are the squarefree layers of `p`.
pub fn special_fiber_divisor(p: &UniPoly) -> Result<FiberDivisor, ArrangementError> {
    require_nonconstant(&[p])?;
    let sqf = squarefree_decompose(p).expect("p is nonzero");
    let divisor_multiplicity = sqf.multiplicity_gcd();
    Ok(FiberDivisor {
        value: rat(-1),
        unit: sqf.unit,
        components: sqf.parts,
        divisor_multiplicity,
    })
}

/// Order `d` of the cyclic group `T(f) = Z/dZ`; `1` is the trivial group.
pub fn orbifold_group(p: &UniPoly) -> Result<u32, ArrangementError> {
    require_nonconstant(&[p])?;
    Ok(power_index(p).expect("p is nonconstant").d)
}

/// Always `true` for admissible inputs.
pub fn resonance(p: &UniPoly, q: &UniPoly) -> Result<bool, ArrangementError> {
    require_hypotheses(p, q)?;
    Ok(true)
}

/// The `d - 1` translated tori `W_j = (exp(2 pi i j/d), 1) * f^*(T(C^*))`.
///
/// The base curve is `C^*` with Euler characteristic zero, so only the
/// nontrivial elements of the dual of `T(f)` contribute.
pub fn translated_components(d: u32) -> Vec<TranslatedTorus> {
    (1..d)
        .map(|j| {
            let torsion = TorsionCharacter::new(
                Rational::new(j.into(), d.into()),
                Rational::zero(),
            );
            TranslatedTorus::new(torsion, PULLBACK_DIRECTION).expect("(0, 1) is primitive")
        })
        .collect()
}

/// Positive-dimensional components of the first characteristic variety.
pub fn characteristic_variety(p: &UniPoly, q: &UniPoly) -> Result<CharVarietyReport, ArrangementError> {
    let hypotheses = require_hypotheses(p, q)?;
    let betti = betti(p, q)?;
    let divisor = special_fiber_divisor(p)?;
    let orbifold_order = orbifold_group(p)?;
    debug_assert_eq!(orbifold_order, divisor.divisor_multiplicity);
    let components = translated_components(orbifold_order);

    let f = build_f(p, q).expect("nonconstant inputs");
    let g = build_g(q).expect("nonconstant q");
    let irreducibility = (
        is_irreducible_y_linear(&f).expect("f is linear in y"),
        is_irreducible_y_linear(&g).expect("g is linear in y"),
    );

    let mut notes = vec![
        "candidate maps M -> C^* are restricted to h = f^m g^n; only h = f^(+-1) has connected generic fiber and a multiple fiber, and both give the same components".to_string(),
        "the only possibly multiple fiber of f is f = -1; every other fiber contributes a trivial summand to T(f)".to_string(),
    ];
    if orbifold_order == 1 {
        notes.push(
            "p is not a proper power of a polynomial: T(f) is trivial and there are no positive-dimensional components".to_string(),
        );
    } else {
        notes.push(format!(
            "p is a constant times p1^d with d = {orbifold_order} maximal: T(f) = Z/{orbifold_order}Z and its {} nontrivial characters give the translated components",
            orbifold_order - 1
        ));
    }
    notes.extend(CITED_NOTES.iter().map(|s| s.to_string()));

    Ok(CharVarietyReport {
        hypotheses,
        betti,
        divisor,
        orbifold_order,
        components,
        resonance_trivial: resonance(p, q)?,
        irreducibility,
        notes,
    })
}
