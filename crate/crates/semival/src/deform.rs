//! Flat deformations of a curve algebra onto its monomial curve.
//!
//! Relators live in `K[u, X_0, ..., X_{s-1}]` with `u` as variable 0, so the
//! toric binomial `F`, the exact relator `G` and the homogenized `H` can be
//! compared directly: `H(0, X) = F` and `H(1, X) = G`.

use crate::basis::{fallback_bound, reduce_with, Basis, ReduceMode, Setting, TieBreak};
use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::mpoly::{BiPoly, ExpVec, MPoly};
use crate::numsgp::{ci_relations, value_of, NumSgp, Presentation};
use crate::plane::CharSequence;
use crate::poly::Poly;

/// `H_f(u, x) = sum c_i u^{i-p} x^i` with `p = o(f)`, in `(u, x)`.
pub fn homogenize_local(f: &Poly) -> Result<BiPoly> {
    let p = f.order().ok_or(Error::ZeroPolynomial)?;
    Ok(MPoly::from_terms(
        f.field(),
        2,
        f.terms().map(|(i, c)| (vec![i - p, i], c.clone())),
    ))
}

/// `h_f(u, x) = sum c_i u^{p-i} x^i` with `p = deg f`, in `(u, x)`.
pub fn homogenize_global(f: &Poly) -> Result<BiPoly> {
    let p = f.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(MPoly::from_terms(
        f.field(),
        2,
        f.terms().map(|(i, c)| (vec![p - i, i], c.clone())),
    ))
}

pub fn homogenize(setting: Setting, f: &Poly) -> Result<BiPoly> {
    match setting {
        Setting::Local => homogenize_local(f),
        Setting::Global => homogenize_global(f),
    }
}

/// One relation of the deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub alpha: ExpVec,
    pub beta: ExpVec,
    /// Common value `p` of `f^alpha` and `f^beta`.
    pub value: usize,
    /// `X^alpha - c X^beta`.
    pub toric: MPoly,
    /// `X^alpha - c X^beta - sum c_theta X^theta`.
    pub exact: MPoly,
    pub homogenized: MPoly,
    /// False when the expansion was cut at the order bound.
    pub complete: bool,
}

/// Outcome of checking one relator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelatorCheck {
    pub at_one_is_exact: bool,
    pub at_zero_is_toric: bool,
    pub homogeneous: bool,
    /// `G(f) = 0`; `None` for incomplete relators.
    pub annihilates: Option<bool>,
    /// `H(u, H_f) = 0`; `None` for incomplete relators.
    pub annihilates_homogenized: Option<bool>,
}

impl RelatorCheck {
    pub fn all_hold(&self) -> bool {
        self.at_one_is_exact
            && self.at_zero_is_toric
            && self.homogeneous
            && self.annihilates != Some(false)
            && self.annihilates_homogenized != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationSet {
    pub setting: Setting,
    pub elements: Vec<Poly>,
    pub values: Vec<usize>,
    /// Sorted by `(value, alpha)`.
    pub relators: Vec<Relator>,
}

impl DeformationSet {
    pub fn field(&self) -> Field {
        self.elements[0].field()
    }

    /// `u, X0, X1, ...`
    pub fn variable_names(&self) -> Vec<String> {
        std::iter::once("u".to_string())
            .chain((0..self.elements.len()).map(|i| format!("X{}", i)))
            .collect()
    }

    pub fn toric(&self) -> Vec<&MPoly> {
        self.relators.iter().map(|r| &r.toric).collect()
    }

    pub fn exact(&self) -> Vec<&MPoly> {
        self.relators.iter().map(|r| &r.exact).collect()
    }

    pub fn homogenized(&self) -> Vec<&MPoly> {
        self.relators.iter().map(|r| &r.homogenized).collect()
    }

    pub fn complete(&self) -> Vec<bool> {
        self.relators.iter().map(|r| r.complete).collect()
    }

    /// Weight of `u^a X^theta`: `D_theta - a` locally, `D_theta + a` globally.
    fn weight(&self, e: &[usize]) -> i64 {
        let d = value_of(&self.values, &e[1..]) as i64;
        match self.setting {
            Setting::Local => d - e[0] as i64,
            Setting::Global => d + e[0] as i64,
        }
    }

    pub fn check(&self) -> Result<Vec<RelatorCheck>> {
        let field = self.field();
        let one = field.one();
        let zero = field.zero();
        let mut images = vec![Poly::one(field)];
        images.extend(self.elements.iter().cloned());
        let mut hom_images = vec![MPoly::var(field, 2, 0)];
        for f in &self.elements {
            hom_images.push(homogenize(self.setting, f)?);
        }
        let mut out = Vec::with_capacity(self.relators.len());
        for r in &self.relators {
            let homogeneous = r
                .homogenized
                .terms()
                .all(|(e, _)| self.weight(e) == r.value as i64);
            let (annihilates, annihilates_homogenized) = if r.complete {
                (
                    Some(r.exact.eval_univariate(&images, None)?.is_zero()),
                    Some(r.homogenized.substitute(&hom_images)?.is_zero()),
                )
            } else {
                (None, None)
            };
            out.push(RelatorCheck {
                at_one_is_exact: r.homogenized.specialize(0, &one) == r.exact,
                at_zero_is_toric: r.homogenized.specialize(0, &zero) == r.toric,
                homogeneous,
                annihilates,
                annihilates_homogenized,
            });
        }
        Ok(out)
    }
}

fn monomial_in(c: Coeff, exps: &[usize]) -> MPoly {
    let mut e = Vec::with_capacity(exps.len() + 1);
    e.push(0);
    e.extend_from_slice(exps);
    MPoly::monomial(c, e)
}

/// Deformation data for `elems` and the relations of `pres`, whose
/// generators must be the values of `elems` in the same order.
///
/// `bound` caps the orders explored when expanding a local relation;
/// `None` picks the conductor plus the largest degree.
pub fn deform_with(
    setting: Setting,
    elems: &[Poly],
    pres: &Presentation,
    tiebreak: TieBreak,
    bound: Option<usize>,
) -> Result<DeformationSet> {
    if elems.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let field = elems[0].field();
    let values: Vec<usize> = elems
        .iter()
        .map(|f| setting.value(f).ok_or(Error::ZeroPolynomial))
        .collect::<Result<_>>()?;
    if values != pres.generators {
        return Err(Error::ArrangementMismatch);
    }
    let sg = NumSgp::from_generators(&values)?;
    let bound = bound.unwrap_or_else(|| fallback_bound(elems, &sg));
    let leads: Vec<Coeff> = elems
        .iter()
        .map(|f| setting.lead(f).expect("nonzero").1)
        .collect();
    let lead_of = |theta: &[usize]| {
        leads
            .iter()
            .zip(theta)
            .fold(field.one(), |acc, (l, &k)| &acc * &l.pow(k as u64))
    };

    let mut relators = Vec::with_capacity(pres.len());
    for (k, (alpha, beta)) in pres.pairs.iter().enumerate() {
        let p = value_of(&values, alpha);
        let c = lead_of(alpha).checked_div(&lead_of(beta))?;
        let fa = power_product(elems, alpha);
        let fb = power_product(elems, beta);
        let s = fa.try_sub(&fb.scale(&c))?;
        let out = reduce_with(
            setting,
            &s,
            elems,
            ReduceMode::Expression { bound },
            tiebreak,
            bound,
        )?;
        if !out.remainder.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "relation {} leaves a remainder of value {}; the elements are not a basis",
                k + 1,
                setting.value(&out.remainder).unwrap()
            )));
        }
        let toric = &monomial_in(field.one(), alpha) - &monomial_in(c, beta);
        let mut exact = toric.clone();
        let mut homogenized = toric.clone();
        for (ct, theta) in &out.expression {
            let d = value_of(&values, theta);
            let a = match setting {
                Setting::Local => d - p,
                Setting::Global => p - d,
            };
            exact = &exact - &monomial_in(ct.clone(), theta);
            let mut e = vec![a];
            e.extend_from_slice(theta);
            homogenized = &homogenized - &MPoly::monomial(ct.clone(), e);
        }
        relators.push(Relator {
            alpha: alpha.clone(),
            beta: beta.clone(),
            value: p,
            toric,
            exact,
            homogenized,
            complete: out.complete,
        });
    }
    relators.sort_by(|a, b| (a.value, &a.alpha).cmp(&(b.value, &b.alpha)));
    Ok(DeformationSet {
        setting,
        elements: elems.to_vec(),
        values,
        relators,
    })
}

fn power_product(elems: &[Poly], theta: &[usize]) -> Poly {
    let mut acc = Poly::one(elems[0].field());
    for (f, &k) in elems.iter().zip(theta) {
        if k > 0 {
            acc = acc.mul_truncated(&f.pow(k), None);
        }
    }
    acc
}

/// Deformation of a basis along its minimal presentation.
pub fn deform(basis: &Basis) -> Result<DeformationSet> {
    if basis.traces.is_empty() && !basis.presentation.is_empty() {
        return Err(Error::MissingTraces(
            "basis carries no reduction traces".into(),
        ));
    }
    deform_with(
        basis.setting,
        &basis.polys(),
        &basis.presentation,
        TieBreak::LexSmallest,
        None,
    )
}

/// Deformation along the complete-intersection relations of elements whose
/// values, in the given order, form a free arrangement. Elements are used
/// as given, so they need not be monic.
pub fn deform_free(setting: Setting, elems: &[Poly]) -> Result<DeformationSet> {
    let values: Vec<usize> = elems
        .iter()
        .map(|f| setting.value(f).ok_or(Error::ZeroPolynomial))
        .collect::<Result<_>>()?;
    let pres = ci_relations(&values)?;
    deform_with(setting, elems, &pres, TieBreak::LexLargest, None)
}

/// Complete-intersection binomials of the monomial curve `<r_0, ..., r_h>`.
pub fn free_toric_target(seq: &CharSequence) -> Result<Presentation> {
    ci_relations(&seq.r)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn p(t: &[(usize, i64)]) -> Poly {
        Poly::from_int_terms(Q, t)
    }

    fn names() -> Vec<&'static str> {
        vec!["u", "X0", "X1", "X2"]
    }

    #[test]
    fn homogenizations() {
        let h = homogenize_local(&p(&[(6, 1), (7, 1)])).unwrap();
        assert_eq!(h, MPoly::from_int_terms(Q, 2, &[(&[0, 6], 1), (&[1, 7], 1)]));
        let h = homogenize_global(&p(&[(6, 1), (1, 1)])).unwrap();
        assert_eq!(h, MPoly::from_int_terms(Q, 2, &[(&[0, 6], 1), (&[5, 1], 1)]));
        assert!(homogenize_local(&Poly::zero(Q)).is_err());
    }

    #[test]
    fn local_complete_intersection() {
        let d = deform_free(
            Setting::Local,
            &[p(&[(4, 1)]), p(&[(6, 1), (7, 1)]), p(&[(13, 2), (14, 1)])],
        )
        .unwrap();
        let h: Vec<String> = d
            .homogenized()
            .iter()
            .map(|h| h.display_with(&names()).to_string())
            .collect();
        assert_eq!(h[1], "X2^2-4*X0^5*X1-u^2*X0^7");
        assert!(d.check().unwrap().iter().all(|c| c.all_hold()));
    }

    #[test]
    fn global_complete_intersection() {
        let d = deform_free(
            Setting::Global,
            &[p(&[(6, 1), (1, 1)]), p(&[(4, 1)]), p(&[(7, 2), (2, 1)])],
        )
        .unwrap();
        let h: Vec<String> = d
            .homogenized()
            .iter()
            .map(|h| h.display_with(&names()).to_string())
            .collect();
        assert_eq!(h[1], "X2^2-4*X0*X1^2-u^10*X1");
        assert!(d.check().unwrap().iter().all(|c| c.all_hold()));
    }
}
