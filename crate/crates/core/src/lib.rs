//! Exact computation of the positive-dimensional components of the first
//! characteristic variety of `C^2 \ {f g = 0}`, where
//! `f = p(x) (y q(x) - 1) - 1` and `g = y q(x) - 1`, together with the
//! polynomial algebra it rests on.
//!
//! Everything is exact over the rationals; common roots over `C` are decided
//! through gcd degrees and never by root extraction.

pub mod arrangement;
pub mod bivar;
pub mod decompose;
pub mod expr;
pub mod factor;
pub mod poly;

pub use arrangement::{
    betti, characteristic_variety, check_hypotheses, orbifold_group, resonance,
    special_fiber_divisor, ArrangementError, BettiNumbers, CharVarietyReport, FiberDivisor,
    Hypotheses, TorsionCharacter, TranslatedTorus,
};
pub use bivar::{BiPoly, BivarError};
pub use decompose::{
    connectivity_certificate, uni_decompose_at, CertificateStatus, ConnectivityCertificate,
    DecomposeError, Decomposition,
};
pub use expr::{parse_bi, parse_uni, ParseError};
pub use factor::{power_index, squarefree_decompose, FactorError, PowerIndex, SquarefreeDecomposition};
pub use poly::{PolyError, Rational, UniPoly};
