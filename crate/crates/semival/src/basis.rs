//! Reduction by value and the adjoin-and-restart basis loop shared by the
//! order-valued (power series) and degree-valued (polynomial) settings.

use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::mpoly::ExpVec;
use crate::numsgp::{
    lex_largest_factorization, lex_smallest_factorization, presentation, value_of, NumSgp,
    Presentation,
};
use crate::poly::Poly;

/// Which valuation drives the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Setting {
    /// Order (least exponent); subalgebras of formal power series.
    Local,
    /// Degree; subalgebras of polynomials.
    Global,
}

impl Setting {
    /// Order or degree; `None` for zero.
    pub fn value(self, f: &Poly) -> Option<usize> {
        match self {
            Setting::Local => f.order(),
            Setting::Global => f.degree(),
        }
    }

    /// Coefficient of the term carrying the value.
    pub fn lead(self, f: &Poly) -> Option<(usize, Coeff)> {
        let t = match self {
            Setting::Local => f.trailing_term(),
            Setting::Global => f.leading_term(),
        };
        t.map(|(e, c)| (e, c.clone()))
    }

    /// Scales `f` so the value-carrying coefficient is 1.
    pub fn normalize(self, f: &Poly) -> Result<Poly> {
        Ok(match self {
            Setting::Local => f.trailing_normalize()?.0,
            Setting::Global => f.leading_normalize()?.0,
        })
    }

    pub fn is_monic(self, f: &Poly) -> bool {
        self.lead(f).is_some_and(|(_, c)| c.is_one())
    }
}

/// How a reduction treats values outside the monoid and the conductor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceMode {
    /// Stop at the first value outside the monoid and return everything left;
    /// with gcd 1, anything of order at least the conductor reduces to 0.
    Algorithmic,
    /// Move terms with values outside the monoid to the remainder and keep
    /// going; the conductor shortcut still applies.
    Division,
    /// Exact cancellation with no conductor shortcut, stopping once the
    /// order passes `bound`.
    Expression { bound: usize },
}

/// Which factorization writes the leading monomial when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LexSmallest,
    LexLargest,
}

/// Result of reducing `f`: `f = sum c_theta f^theta + remainder + residual`.
///
/// `residual` is whatever was left when the reduction stopped early (the
/// conductor shortcut or an order bound); it is zero exactly when
/// `complete` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub remainder: Poly,
    pub expression: Vec<(Coeff, ExpVec)>,
    pub complete: bool,
    pub consumed_conductor_shortcut: bool,
    pub residual: Poly,
}

struct PowerCache<'a> {
    elems: &'a [Poly],
    pows: Vec<Vec<Poly>>,
    prec: Option<usize>,
}

impl<'a> PowerCache<'a> {
    fn new(elems: &'a [Poly], prec: Option<usize>) -> Self {
        let field = elems[0].field();
        PowerCache {
            elems,
            pows: vec![vec![Poly::one(field)]; elems.len()],
            prec,
        }
    }

    fn power(&mut self, i: usize, k: usize) -> &Poly {
        while self.pows[i].len() <= k {
            let next = self.pows[i]
                .last()
                .unwrap()
                .mul_truncated(&self.elems[i], self.prec);
            self.pows[i].push(next);
        }
        &self.pows[i][k]
    }

    fn product(&mut self, theta: &[usize]) -> Poly {
        let field = self.elems[0].field();
        let mut acc = Poly::one(field);
        for (i, &k) in theta.iter().enumerate() {
            if k > 0 {
                let p = self.power(i, k).clone();
                acc = acc.mul_truncated(&p, self.prec);
            }
        }
        acc
    }
}

/// Reduces `f` against `elems` (any nonzero elements; they need not be
/// monic, the cancelling coefficient accounts for that).
///
/// `limit` caps the orders explored when the value monoid has gcd greater
/// than 1 in the local setting and no conductor shortcut is available.
pub fn reduce_with(
    setting: Setting,
    f: &Poly,
    elems: &[Poly],
    mode: ReduceMode,
    tiebreak: TieBreak,
    limit: usize,
) -> Result<ReductionOutcome> {
    if elems.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let field = elems[0].field();
    for e in elems {
        if e.field() != field {
            return Err(Error::MixedFields);
        }
    }
    if f.field() != field {
        return Err(Error::MixedFields);
    }
    let mut values = Vec::with_capacity(elems.len());
    let mut leads = Vec::with_capacity(elems.len());
    for e in elems {
        let (v, c) = setting.lead(e).ok_or(Error::ZeroPolynomial)?;
        if setting == Setting::Local && v == 0 {
            return Err(Error::InvalidArgument("basis element is a unit".into()));
        }
        if setting == Setting::Global && v == 0 {
            return Err(Error::ConstantPolynomial);
        }
        values.push(v);
        leads.push(c);
    }
    let sg = NumSgp::from_generators(&values)?;
    let numerical = sg.is_numerical();
    let c = sg.scaled_conductor();

    let local = setting == Setting::Local;
    // Truncation is only sound where terms past the conductor are discarded.
    let shortcut = local && numerical && !matches!(mode, ReduceMode::Expression { .. });
    let prec = if shortcut { Some(c) } else { None };
    let mut cache = PowerCache::new(elems, prec);

    let mut cur = match prec {
        Some(p) => f.truncate(p),
        None => f.clone(),
    };
    let mut out = ReductionOutcome {
        remainder: Poly::zero(field),
        expression: Vec::new(),
        complete: true,
        consumed_conductor_shortcut: false,
        residual: Poly::zero(field),
    };
    if prec.is_some() {
        // terms of f past the conductor are dropped up front
        let dropped = f.try_sub(&cur)?;
        if !dropped.is_zero() {
            out.residual = dropped;
            out.complete = false;
            out.consumed_conductor_shortcut = true;
        }
    }

    loop {
        let Some((p, lc)) = setting.lead(&cur) else {
            break;
        };
        if shortcut && p >= c {
            out.residual = out.residual.try_add(&cur)?;
            out.complete = false;
            out.consumed_conductor_shortcut = true;
            break;
        }
        let bound = match mode {
            ReduceMode::Expression { bound } => Some(bound),
            _ if local && !numerical => Some(limit),
            _ => None,
        };
        if local && bound.is_some_and(|b| p > b) {
            out.residual = out.residual.try_add(&cur)?;
            out.complete = false;
            break;
        }
        if sg.contains(p) {
            let theta = match tiebreak {
                TieBreak::LexSmallest => lex_smallest_factorization(&values, p),
                TieBreak::LexLargest => lex_largest_factorization(&values, p),
            }
            .expect("member of the monoid has a factorization");
            let mut denom = field.one();
            for (l, &k) in leads.iter().zip(&theta) {
                denom = &denom * &l.pow(k as u64);
            }
            let coef = lc.checked_div(&denom)?;
            let prod = cache.product(&theta);
            cur = cur.try_sub(&prod.scale(&coef))?;
            out.expression.push((coef, theta));
            continue;
        }
        match mode {
            ReduceMode::Algorithmic => {
                out.remainder = cur;
                return Ok(out);
            }
            ReduceMode::Division | ReduceMode::Expression { .. } => {
                let m = Poly::monomial(lc, p);
                out.remainder = out.remainder.try_add(&m)?;
                cur = cur.try_sub(&m)?;
            }
        }
    }
    Ok(out)
}

/// An element of a basis together with its value (order or degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub poly: Poly,
    pub value: usize,
}

/// Guards against runs that never close up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_value: usize,
}

impl Limits {
    /// 64 elements and values up to `4 v^2`, `v` the largest input value.
    pub fn default_for(gens: &[Poly], setting: Setting) -> Limits {
        let v = gens
            .iter()
            .filter_map(|g| setting.value(g))
            .max()
            .unwrap_or(1)
            .max(1);
        Limits {
            max_elements: 64,
            max_value: 4 * v * v,
        }
    }
}

/// A basis of a one-variable subalgebra together with the data that
/// certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub setting: Setting,
    pub elements: Vec<BasisElement>,
    pub semigroup: NumSgp,
    pub presentation: Presentation,
    /// Reduction of each relation of the presentation in the final pass.
    pub traces: Vec<ReductionOutcome>,
    /// Values adjoined by the loop, in the order they appeared.
    pub adjoined: Vec<usize>,
}

impl Basis {
    pub fn polys(&self) -> Vec<Poly> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn values(&self) -> Vec<usize> {
        self.elements.iter().map(|e| e.value).collect()
    }

    pub(crate) fn assemble(setting: Setting, elems: Vec<Poly>) -> Result<Basis> {
        let elements: Vec<BasisElement> = elems
            .into_iter()
            .map(|p| {
                let value = setting.value(&p).ok_or(Error::ZeroPolynomial)?;
                Ok(BasisElement { poly: p, value })
            })
            .collect::<Result<_>>()?;
        if elements.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let values: Vec<usize> = elements.iter().map(|e| e.value).collect();
        Ok(Basis {
            setting,
            semigroup: NumSgp::from_generators(&values)?,
            presentation: presentation(&values)?,
            elements,
            traces: Vec::new(),
            adjoined: Vec::new(),
        })
    }
}

/// Validates and normalizes the input generators.
pub(crate) fn prepare(setting: Setting, gens: &[Poly]) -> Result<Vec<Poly>> {
    if gens.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let field = gens[0].field();
    let mut out = Vec::new();
    for g in gens {
        if g.field() != field {
            return Err(Error::MixedFields);
        }
        let g = match setting {
            // units and constants carry no information about the values
            Setting::Local => g.without_constant(),
            Setting::Global => g.clone(),
        };
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if setting == Setting::Global && g.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        out.push(setting.normalize(&g)?);
    }
    Ok(out)
}

/// Elements sorted by `(value, adjoin time)`.
fn sorted_by_value(setting: Setting, elems: &[Poly]) -> Vec<Poly> {
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by_key(|&i| (setting.value(&elems[i]).unwrap_or(usize::MAX), i));
    idx.into_iter().map(|i| elems[i].clone()).collect()
}

/// The adjoin-and-restart loop.
pub(crate) fn compute_basis(setting: Setting, gens: &[Poly], limits: Limits) -> Result<Basis> {
    let mut elems = prepare(setting, gens)?;
    let mut adjoined = Vec::new();
    'restart: loop {
        let ordered = sorted_by_value(setting, &elems);
        let values: Vec<usize> = ordered.iter().map(|p| setting.value(p).unwrap()).collect();
        let sg = NumSgp::from_generators(&values)?;
        let pres = presentation(&values)?;
        let c = sg.scaled_conductor();
        let local_numerical = setting == Setting::Local && sg.is_numerical();
        let mut cache = PowerCache::new(&ordered, local_numerical.then_some(c));
        let mut traces = Vec::new();
        for (alpha, beta) in &pres.pairs {
            let p = value_of(&values, alpha);
            if local_numerical && p >= c {
                traces.push(ReductionOutcome {
                    remainder: Poly::zero(ordered[0].field()),
                    expression: Vec::new(),
                    complete: false,
                    consumed_conductor_shortcut: true,
                    residual: Poly::zero(ordered[0].field()),
                });
                continue;
            }
            let s = cache.product(alpha).try_sub(&cache.product(beta))?;
            let out = reduce_with(
                setting,
                &s,
                &ordered,
                ReduceMode::Algorithmic,
                TieBreak::LexSmallest,
                limits.max_value,
            )?;
            if setting == Setting::Local && !sg.is_numerical() && !out.residual.is_zero() {
                return Err(Error::LimitExceeded(format!(
                    "reduction passed order {} without leaving the multiples of {}",
                    limits.max_value,
                    sg.gcd()
                )));
            }
            if !out.remainder.is_zero() {
                let r = setting.normalize(&out.remainder)?;
                let v = setting.value(&r).unwrap();
                if v > limits.max_value {
                    return Err(Error::LimitExceeded(format!(
                        "adjoined value {} exceeds {}",
                        v, limits.max_value
                    )));
                }
                if elems.len() + 1 > limits.max_elements {
                    return Err(Error::LimitExceeded(format!(
                        "more than {} basis elements",
                        limits.max_elements
                    )));
                }
                adjoined.push(v);
                elems.push(r);
                continue 'restart;
            }
            traces.push(out);
        }
        let mut basis = Basis::assemble(setting, ordered)?;
        basis.traces = traces;
        basis.adjoined = adjoined;
        return Ok(basis);
    }
}

/// Division bound used when the monoid is not numerical.
pub(crate) fn fallback_bound(elems: &[Poly], sg: &NumSgp) -> usize {
    let deg = elems.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    sg.scaled_conductor() + deg
}

/// Rewrites each tail `f - M(f)` to its remainder against the basis.
pub(crate) fn reduce_tails(basis: &Basis) -> Result<Basis> {
    let setting = basis.setting;
    let elems = basis.polys();
    let limit = fallback_bound(&elems, &basis.semigroup);
    let mut out = Vec::with_capacity(elems.len());
    for f in &elems {
        let (v, c) = setting.lead(f).expect("nonzero basis element");
        let lead = Poly::monomial(c, v);
        let tail = f.try_sub(&lead)?;
        let r = reduce_with(
            setting,
            &tail,
            &elems,
            ReduceMode::Division,
            TieBreak::LexSmallest,
            limit,
        )?;
        out.push(lead.try_add(&r.remainder)?);
    }
    let mut b = Basis::assemble(setting, out)?;
    b.traces = basis.traces.clone();
    b.adjoined = basis.adjoined.clone();
    Ok(b)
}

/// Drops elements whose value lies in the monoid of the earlier ones, then
/// reduces the tails.
pub(crate) fn minimize(basis: &Basis) -> Result<Basis> {
    let mut kept: Vec<Poly> = Vec::new();
    let mut kept_values: Vec<usize> = Vec::new();
    for e in &basis.elements {
        let inside = !kept_values.is_empty()
            && NumSgp::from_generators(&kept_values)?.contains(e.value);
        if !inside {
            kept.push(e.poly.clone());
            kept_values.push(e.value);
        }
    }
    let mut b = Basis::assemble(basis.setting, kept)?;
    b.traces = basis.traces.clone();
    b.adjoined = basis.adjoined.clone();
    reduce_tails(&b)
}

/// Checks that the elements are monic for the setting.
pub(crate) fn check_monic(setting: Setting, elems: &[Poly]) -> Result<()> {
    for (i, e) in elems.iter().enumerate() {
        if e.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !setting.is_monic(e) {
            return Err(Error::NotMonic(i));
        }
    }
    Ok(())
}
