//! Serializable summaries and their plain-text rendering.
//!
//! Polynomials serialize as term lists sorted by exponent, each coefficient
//! written as an exact `"num/den"` string.

use std::fmt::Write as _;

use serde::Serialize;

use crate::basis::{Basis, ReductionOutcome, Setting};
use crate::coeff::Field;
use crate::deform::DeformationSet;
use crate::mpoly::{ExpVec, MPoly};
use crate::numsgp::{NumSgp, Presentation};
use crate::plane::{AtInfinity, CharSequence, CurveAtInfinity, DeltaSeq, LocalPlane};
use crate::poly::Poly;

pub type PolyJson = Vec<(usize, String)>;
pub type MPolyJson = Vec<(ExpVec, String)>;

pub fn poly_json(p: &Poly) -> PolyJson {
    p.terms().map(|(e, c)| (e, c.to_fraction_string())).collect()
}

pub fn mpoly_json(p: &MPoly) -> MPolyJson {
    p.terms()
        .map(|(e, c)| (e.clone(), c.to_fraction_string()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub generators: Vec<usize>,
    pub minimal_generators: Vec<usize>,
    pub gcd: usize,
    pub conductor: Option<usize>,
    pub frobenius: Option<i64>,
    pub genus: Option<usize>,
    pub gaps: Option<Vec<usize>>,
    pub type_set: Option<Vec<i64>>,
    pub symmetric: Option<bool>,
    pub sporadic: Option<usize>,
}

impl SemigroupReport {
    pub fn new(s: &NumSgp) -> SemigroupReport {
        SemigroupReport {
            generators: s.generators().to_vec(),
            minimal_generators: s.minimal_generators(),
            gcd: s.gcd(),
            conductor: s.conductor().ok(),
            frobenius: s.frobenius().ok(),
            genus: s.genus().ok(),
            gaps: s.gaps().ok(),
            type_set: s.type_set().ok(),
            symmetric: s.is_symmetric().ok(),
            sporadic: s.sporadic_count().ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisEntry {
    pub poly: PolyJson,
    pub value: usize,
    pub text: String,
}

pub fn basis_entries(b: &Basis) -> Vec<BasisEntry> {
    b.elements
        .iter()
        .map(|e| BasisEntry {
            poly: poly_json(&e.poly),
            value: e.value,
            text: e.poly.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationReport {
    pub variables: Vec<String>,
    pub values: Vec<usize>,
    pub toric: Vec<MPolyJson>,
    pub exact: Vec<MPolyJson>,
    pub homogenized: Vec<MPolyJson>,
    pub complete: Vec<bool>,
    pub text: DeformationText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationText {
    pub toric: Vec<String>,
    pub exact: Vec<String>,
    pub homogenized: Vec<String>,
}

impl DeformationReport {
    pub fn new(d: &DeformationSet) -> DeformationReport {
        let names = d.variable_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let show = |ps: Vec<&MPoly>| -> Vec<String> {
            ps.into_iter()
                .map(|p| p.display_with(&refs).to_string())
                .collect()
        };
        let js = |ps: Vec<&MPoly>| -> Vec<MPolyJson> { ps.into_iter().map(mpoly_json).collect() };
        DeformationReport {
            values: d.values.clone(),
            toric: js(d.toric()),
            exact: js(d.exact()),
            homogenized: js(d.homogenized()),
            complete: d.complete(),
            text: DeformationText {
                toric: show(d.toric()),
                exact: show(d.exact()),
                homogenized: show(d.homogenized()),
            },
            variables: names,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharSequenceReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
    pub d: Vec<usize>,
    pub e: Vec<usize>,
    pub r: Vec<usize>,
    #[serde(rename = "C")]
    pub conductor: i64,
}

impl CharSequenceReport {
    pub fn from_char_sequence(s: &CharSequence) -> CharSequenceReport {
        CharSequenceReport {
            m: Some(s.m.clone()),
            d: s.d.clone(),
            e: s.e.clone(),
            r: s.r.clone(),
            conductor: s.conductor(),
        }
    }

    pub fn from_delta(s: &DeltaSeq) -> CharSequenceReport {
        CharSequenceReport {
            m: None,
            e: s.e(),
            d: s.d(),
            r: s.r.clone(),
            conductor: s.conductor(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub poly: MPolyJson,
    pub text: String,
    /// The root evaluated along the parametrization, when one is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_poly: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub remainder: PolyJson,
    pub remainder_text: String,
    /// `(coefficient, exponent vector)` for each subtracted product.
    pub expression: Vec<(String, ExpVec)>,
    pub complete: bool,
    pub consumed_conductor_shortcut: bool,
    pub residual: PolyJson,
}

impl ReductionReport {
    pub fn new(r: &ReductionOutcome) -> ReductionReport {
        ReductionReport {
            remainder: poly_json(&r.remainder),
            remainder_text: r.remainder.to_string(),
            expression: r
                .expression
                .iter()
                .map(|(c, t)| (c.to_fraction_string(), t.clone()))
                .collect(),
            complete: r.complete,
            consumed_conductor_shortcut: r.consumed_conductor_shortcut,
            residual: poly_json(&r.residual),
        }
    }
}

/// Everything a command may print; absent sections are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub characteristic: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub setting: Option<Setting>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<BasisEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_basis: Option<Vec<BasisEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Presentation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_sequence: Option<CharSequenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<MPolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(field: Field) -> Report {
        Report {
            characteristic: field.characteristic(),
            ..Report::default()
        }
    }

    pub fn from_semigroup(field: Field, s: &NumSgp) -> Report {
        Report {
            semigroup: Some(SemigroupReport::new(s)),
            ..Report::new(field)
        }
    }

    pub fn from_local_plane(lp: &LocalPlane) -> Report {
        let roots = lp
            .roots
            .iter()
            .zip(&lp.root_values)
            .map(|(g, v)| RootEntry {
                poly: mpoly_json(g),
                text: g.to_string(),
                value_poly: Some(poly_json(v)),
                value_text: Some(v.to_string()),
                value: v.order(),
            })
            .collect();
        Report {
            semigroup: Some(SemigroupReport::new(&lp.semigroup)),
            char_sequence: Some(CharSequenceReport::from_char_sequence(&lp.sequence)),
            curve: lp.curve.as_ref().map(mpoly_json),
            curve_text: lp.curve.as_ref().map(|c| c.to_string()),
            roots: Some(roots),
            setting: Some(Setting::Local),
            ..Report::new(lp.f.field())
        }
    }

    pub fn from_at_infinity(a: &AtInfinity) -> Report {
        let roots = a
            .roots
            .iter()
            .zip(&a.root_values)
            .map(|(g, v)| RootEntry {
                poly: mpoly_json(g),
                text: g.to_string(),
                value_poly: Some(poly_json(v)),
                value_text: Some(v.to_string()),
                value: v.degree(),
            })
            .collect();
        Report {
            semigroup: Some(SemigroupReport::new(&a.semigroup)),
            char_sequence: Some(CharSequenceReport::from_delta(&a.delta)),
            curve: Some(mpoly_json(&a.curve)),
            curve_text: Some(a.curve.to_string()),
            roots: Some(roots),
            setting: Some(Setting::Global),
            ..Report::new(a.f.field())
        }
    }

    pub fn from_curve_infinity(c: &CurveAtInfinity) -> Report {
        let roots = c
            .roots
            .iter()
            .zip(c.delta.r.iter().skip(1))
            .map(|(g, &v)| RootEntry {
                poly: mpoly_json(g),
                text: g.to_string(),
                value_poly: None,
                value_text: None,
                value: Some(v),
            })
            .collect();
        Report {
            semigroup: Some(SemigroupReport::new(&c.semigroup)),
            char_sequence: Some(CharSequenceReport::from_delta(&c.delta)),
            curve: Some(mpoly_json(&c.curve)),
            curve_text: Some(c.curve.to_string()),
            roots: Some(roots),
            ..Report::new(c.curve.field())
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        if let Some(s) = &self.semigroup {
            let _ = writeln!(w, "minimal generators: {:?}", s.minimal_generators);
            if s.gcd > 1 {
                let _ = writeln!(w, "gcd: {} (not numerical)", s.gcd);
            }
            if let (Some(c), Some(f), Some(g)) = (s.conductor, s.frobenius, s.genus) {
                let _ = writeln!(w, "conductor: {}  frobenius: {}  genus: {}", c, f, g);
            }
            if let Some(gaps) = &s.gaps {
                let _ = writeln!(w, "gaps: {:?}", gaps);
            }
            if let (Some(t), Some(sym), Some(sp)) = (&s.type_set, s.symmetric, s.sporadic) {
                let _ = writeln!(w, "type set: {:?}  symmetric: {}  sporadic: {}", t, sym, sp);
            }
        }
        if let Some(cs) = &self.char_sequence {
            if let Some(m) = &cs.m {
                let _ = writeln!(w, "m: {:?}", m);
            }
            let _ = writeln!(w, "d: {:?}  e: {:?}  r: {:?}  C: {}", cs.d, cs.e, cs.r, cs.conductor);
        }
        if let Some(c) = &self.curve_text {
            let _ = writeln!(w, "curve: {}", c);
        }
        if let Some(roots) = self.roots.as_ref().filter(|r| !r.is_empty()) {
            let _ = writeln!(w, "approximate roots:");
            for r in roots {
                match (&r.value_text, r.value) {
                    (Some(t), _) => {
                        let _ = writeln!(w, "  {}  ->  {}", r.text, t);
                    }
                    (None, Some(v)) => {
                        let _ = writeln!(w, "  {}  (value {})", r.text, v);
                    }
                    _ => {
                        let _ = writeln!(w, "  {}", r.text);
                    }
                }
            }
        }
        for (title, entries) in [("basis", &self.basis), ("reduced basis", &self.reduced_basis)] {
            if let Some(es) = entries {
                let _ = writeln!(w, "{}:", title);
                for e in es {
                    let _ = writeln!(w, "  [{}] {}", e.value, e.text);
                }
            }
        }
        if let Some(p) = &self.presentation {
            let _ = writeln!(w, "presentation ({} relations):", p.len());
            for (a, b) in &p.pairs {
                let _ = writeln!(w, "  {:?} ~ {:?}", a, b);
            }
        }
        if let Some(d) = &self.deformation {
            let _ = writeln!(w, "deformation in {}:", d.variables.join(", "));
            for i in 0..d.toric.len() {
                let mark = if d.complete[i] { "" } else { "  (truncated)" };
                let _ = writeln!(w, "  F = {}", d.text.toric[i]);
                let _ = writeln!(w, "  G = {}", d.text.exact[i]);
                let _ = writeln!(w, "  H = {}{}", d.text.homogenized[i], mark);
            }
        }
        if let Some(r) = &self.reduction {
            let _ = writeln!(w, "remainder: {}", r.remainder_text);
            let _ = writeln!(w, "complete: {}", r.complete);
            if r.consumed_conductor_shortcut {
                let _ = writeln!(w, "conductor shortcut used");
            }
            for (c, t) in &r.expression {
                let _ = writeln!(w, "  {} * {:?}", c, t);
            }
        }
        for m in &self.warnings {
            let _ = writeln!(w, "warning: {}", m);
        }
        out
    }
}
