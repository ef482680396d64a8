//! Machine-readable report document and its plain-text rendering.

use std::fmt::Write as _;

use charvar_core::arrangement::{BettiNumbers, CharVarietyReport, FiberDivisor, Hypotheses};
use charvar_core::poly::{rat, Rational, UniPoly};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Rationals always travel as `"num/den"` in lowest terms, never as floats.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesDoc {
    pub common_root_pq: bool,
    pub no_common_root_p1_q: bool,
    pub satisfied: bool,
}

impl From<&Hypotheses> for HypothesesDoc {
    fn from(h: &Hypotheses) -> Self {
        Self {
            common_root_pq: h.common_root_pq,
            no_common_root_p1_q: h.no_common_root_p1_q,
            satisfied: h.satisfied,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDoc {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub s: usize,
    pub t: usize,
}

impl From<&BettiNumbers> for BettiDoc {
    fn from(b: &BettiNumbers) -> Self {
        Self {
            b0: b.b0,
            b1: b.b1,
            b2: b.b2,
            s: b.s,
            t: b.t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorComponentDoc {
    pub factor: String,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorDoc {
    pub value: String,
    pub unit: String,
    pub components: Vec<DivisorComponentDoc>,
    pub divisor_multiplicity: u32,
}

impl From<&FiberDivisor> for DivisorDoc {
    fn from(d: &FiberDivisor) -> Self {
        Self {
            value: rational_string(&d.value),
            unit: rational_string(&d.unit),
            components: d
                .components
                .iter()
                .map(|c| DivisorComponentDoc {
                    factor: c.factor.to_string(),
                    multiplicity: c.multiplicity,
                })
                .collect(),
            divisor_multiplicity: d.divisor_multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    /// `[a0, a1]` as `"num/den"` residues modulo 1.
    pub torsion: [String; 2],
    pub direction: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityDoc {
    pub f: bool,
    pub g: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub inputs: Inputs,
    pub hypotheses: HypothesesDoc,
    pub betti: BettiDoc,
    pub divisor: DivisorDoc,
    pub orbifold_order: u32,
    pub components: Vec<ComponentDoc>,
    pub resonance_trivial: bool,
    pub irreducibility: IrreducibilityDoc,
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn new(p: &UniPoly, q: &UniPoly, report: &CharVarietyReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            inputs: Inputs {
                p: p.to_string(),
                q: q.to_string(),
            },
            hypotheses: (&report.hypotheses).into(),
            betti: (&report.betti).into(),
            divisor: (&report.divisor).into(),
            orbifold_order: report.orbifold_order,
            components: report
                .components
                .iter()
                .map(|c| {
                    let (n0, n1) = c.direction();
                    ComponentDoc {
                        torsion: [
                            rational_string(c.torsion.a0()),
                            rational_string(c.torsion.a1()),
                        ],
                        direction: [n0, n1],
                    }
                })
                .collect(),
            resonance_trivial: report.resonance_trivial,
            irreducibility: IrreducibilityDoc {
                f: report.irreducibility.0,
                g: report.irreducibility.1,
            },
            notes: report.notes.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `exp(2πi·a)` for a residue `a`, `1` when `a = 0`.
fn exp_text(a: &str) -> String {
    if a.starts_with("0/") {
        "1".to_string()
    } else {
        format!("exp(2πi·{a})")
    }
}

pub fn hypotheses_text(h: &HypothesesDoc) -> String {
    format!(
        "hypotheses: {} (p, q share a root: {}; p + 1, q coprime: {})\n",
        if h.satisfied { "satisfied" } else { "violated" },
        yes_no(h.common_root_pq),
        yes_no(h.no_common_root_p1_q)
    )
}

pub fn betti_text(b: &BettiDoc) -> String {
    format!(
        "betti: b0 = {}, b1 = {}, b2 = {} (s = {}, t = {})\n",
        b.b0, b.b1, b.b2, b.s, b.t
    )
}

pub fn divisor_text(d: &DivisorDoc) -> String {
    let mut out = String::new();
    let parts: Vec<String> = d
        .components
        .iter()
        .map(|c| format!("({})^{}", c.factor, c.multiplicity))
        .collect();
    let _ = writeln!(
        out,
        "fiber f = {}: unit {} times {}",
        d.value.trim_end_matches("/1"),
        d.unit,
        parts.join(" * ")
    );
    let _ = writeln!(out, "divisor multiplicity: {}", d.divisor_multiplicity);
    out
}

impl ReportDocument {
    /// Plain-text summary in the `W_j = ε_j × C*` notation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p(x) = {}", self.inputs.p);
        let _ = writeln!(out, "q(x) = {}", self.inputs.q);
        out.push_str(&hypotheses_text(&self.hypotheses));
        let _ = writeln!(
            out,
            "irreducible: f {}, g {}",
            yes_no(self.irreducibility.f),
            yes_no(self.irreducibility.g)
        );
        out.push_str(&betti_text(&self.betti));
        out.push_str(&divisor_text(&self.divisor));
        let d = self.orbifold_order;
        if d == 1 {
            out.push_str("T(f) = 0\n");
        } else {
            let _ = writeln!(out, "T(f) = Z/{d}Z");
        }
        let _ = writeln!(out, "translated components: {}", self.components.len());
        for (j, c) in self.components.iter().enumerate() {
            let dir = if c.direction == [0, 1] {
                "C*".to_string()
            } else {
                format!("C* in direction ({}, {})", c.direction[0], c.direction[1])
            };
            let lhs = exp_text(&c.torsion[0]);
            let rhs = if c.torsion[1].starts_with("0/") {
                dir
            } else {
                format!("{} · {dir}", exp_text(&c.torsion[1]))
            };
            let _ = writeln!(out, "  W_{} = {lhs} × {rhs}", j + 1);
        }
        let _ = writeln!(
            out,
            "resonance varieties: {}",
            if self.resonance_trivial { "trivial" } else { "nontrivial" }
        );
        out.push_str("notes:\n");
        for note in &self.notes {
            let _ = writeln!(out, "  - {note}");
        }
        out
    }
}

/// `p(x) = x^p` and `q(x) = x (x + 2) ... (x + q)`, which is just `x` for `q = 1`.
pub fn zahid_family(p: u32, q: u32) -> (UniPoly, UniPoly) {
    let pp = UniPoly::x().pow(p);
    let qq = (2..=q as i64).fold(UniPoly::x(), |acc, k| {
        &acc * &UniPoly::linear_root(rat(-k))
    });
    (pp, qq)
}
