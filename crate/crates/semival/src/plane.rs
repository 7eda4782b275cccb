//! Two-generator algebras: characteristic sequences of plane branches,
//! approximate roots and semigroups of curves with one place at infinity.

use num_integer::Integer;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::mpoly::{BiPoly, MPoly};
use crate::numsgp::NumSgp;
use crate::poly::Poly;
use crate::resultant::{curve_resultant, resultant};
use crate::series::{compose_series, nth_root_series, reverse_series, SeriesApprox};

/// Hard ceiling on the reparametrization precision.
pub const PRECISION_CAP: usize = 1 << 14;

const X: usize = 0;
const Y: usize = 1;

/// Newton–Puiseux data `(m_k, d_k, e_k, r_k)` of a branch.
///
/// `d` has `h + 1` entries ending in 1, `m` and `e` have `h`, `r` has `h + 1`
/// with `r_0 = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSequence {
    pub n: usize,
    pub m: Vec<usize>,
    pub d: Vec<usize>,
    pub e: Vec<usize>,
    pub r: Vec<usize>,
}

impl CharSequence {
    pub fn h(&self) -> usize {
        self.m.len()
    }

    pub fn semigroup(&self) -> Result<NumSgp> {
        NumSgp::from_generators(&self.r)
    }

    pub fn conductor(&self) -> i64 {
        conductor_formula(&self.r)
    }
}

/// Gcd descent along the support: `m_k` is the least exponent not divisible
/// by `d_k`. Fails with the stalled gcd when the descent does not reach 1.
pub fn char_sequence_from_support(n: usize, supp: &[usize]) -> Result<CharSequence> {
    if n == 0 {
        return Err(Error::InvalidArgument("multiplicity must be positive".into()));
    }
    let mut supp = supp.to_vec();
    supp.sort_unstable();
    supp.dedup();
    let mut d = vec![n];
    let mut m: Vec<usize> = Vec::new();
    while *d.last().unwrap() > 1 {
        let dk = *d.last().unwrap();
        let mk = supp
            .iter()
            .copied()
            .find(|&i| i % dk != 0 && m.last().map_or(true, |&prev| i > prev))
            .ok_or(Error::GcdNotOne(dk))?;
        m.push(mk);
        d.push(dk.gcd(&mk));
    }
    let e: Vec<usize> = d.windows(2).map(|w| w[0] / w[1]).collect();
    let mut r = vec![n];
    for k in 0..m.len() {
        let rk = if k == 0 {
            m[0]
        } else {
            r[k] * e[k - 1] + m[k] - m[k - 1]
        };
        r.push(rk);
    }
    Ok(CharSequence { n, m, d, e, r })
}

/// `g~` with `K[[f, g]] = K[[x~^n, g~(x~)]]`, known modulo `x~^prec`.
///
/// `f` must have trailing coefficient 1 and order `n >= 1`.
pub fn reparametrize(f: &Poly, g: &Poly, prec: usize) -> Result<SeriesApprox> {
    let field = f.field();
    if field != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(field.characteristic()));
    }
    let (n, a) = f.trailing_term().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidArgument("first series must have positive order".into()));
    }
    if !a.is_one() {
        return Err(Error::NotMonic(0));
    }
    if f.is_monomial() {
        return Ok(SeriesApprox::new(g, prec));
    }
    let phi = SeriesApprox::new(&f.shift_down(n), prec);
    let psi = nth_root_series(&phi, n)?;
    let xt = SeriesApprox::new(&psi.poly.mul_monomial(&field.one(), 1), prec);
    let t = reverse_series(&xt)?;
    compose_series(&SeriesApprox::new(g, prec), &t)
}

fn strip_local(f: &Poly) -> Result<Poly> {
    let f = f.without_constant();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.trailing_normalize()?.0)
}

fn support_gcd(polys: &[&Poly]) -> usize {
    polys
        .iter()
        .flat_map(|p| p.support())
        .fold(0usize, |g, e| g.gcd(&e))
}

/// Everything computed for a local pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPlane {
    /// Normalized inputs with `o(f) <= o(g)`.
    pub f: Poly,
    pub g: Poly,
    pub semigroup: NumSgp,
    pub sequence: CharSequence,
    /// Precision at which the descent was certified.
    pub precision: usize,
    /// `Res_t(X - f, Y - g)` and its approximate roots; only when `f` is a
    /// monomial, so that the resultant has `Y`-degree `n`.
    pub curve: Option<BiPoly>,
    pub roots: Vec<BiPoly>,
    /// `G_k(f, g)` for each root.
    pub root_values: Vec<Poly>,
}

/// Value semigroup of `K[[f, g]]` from the characteristic sequence.
pub fn gamma_local_pair(f: &Poly, g: &Poly) -> Result<(NumSgp, CharSequence)> {
    let lp = plane_local_core(f, g)?;
    Ok((lp.semigroup, lp.sequence))
}

fn plane_local_core(f: &Poly, g: &Poly) -> Result<LocalPlane> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    if f.field() != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(f.field().characteristic()));
    }
    let (mut f, mut g) = (strip_local(f)?, strip_local(g)?);
    if f.order() > g.order() {
        std::mem::swap(&mut f, &mut g);
    }
    let gd = support_gcd(&[&f, &g]);
    if gd != 1 {
        return Err(Error::GcdNotOne(gd));
    }
    let n = f.order().unwrap();
    let top = g.degree().unwrap();
    // Every characteristic exponent sits below the conductor plus n, and the
    // conductor is at most twice the genus bound of a degree-D curve.
    let deg = f.degree().unwrap().max(top);
    let certify = (deg - 1) * deg.saturating_sub(2) + n + 1;
    let mut prec = 2 * (n + top);
    loop {
        let gt = reparametrize(&f, &g, prec)?;
        match char_sequence_from_support(n, &gt.poly.support()) {
            Ok(sequence) => {
                return Ok(LocalPlane {
                    semigroup: sequence.semigroup()?,
                    sequence,
                    precision: prec,
                    f,
                    g,
                    curve: None,
                    roots: Vec::new(),
                    root_values: Vec::new(),
                })
            }
            Err(Error::GcdNotOne(_)) => {
                if f.is_monomial() || prec > certify || prec >= PRECISION_CAP {
                    return Err(Error::PrecisionCapExceeded(prec.min(PRECISION_CAP)));
                }
                prec = (2 * prec).min(PRECISION_CAP);
            }
            Err(e) => return Err(e),
        }
    }
}

/// Local pair with the curve equation and approximate roots when available.
pub fn plane_local(f: &Poly, g: &Poly) -> Result<LocalPlane> {
    let mut lp = plane_local_core(f, g)?;
    if lp.f.is_monomial() {
        let curve = curve_resultant(&lp.f, &lp.g)?;
        let h = lp.sequence.h();
        for k in 0..h {
            let root = approximate_root(&curve, lp.sequence.d[k])?;
            let val = root.eval_univariate(&[lp.f.clone(), lp.g.clone()], None)?;
            if val.order() != Some(lp.sequence.r[k + 1]) {
                return Err(Error::InvalidArgument(format!(
                    "approximate root {} has value {:?}, expected {}",
                    k + 1,
                    val.order(),
                    lp.sequence.r[k + 1]
                )));
            }
            lp.roots.push(root);
            lp.root_values.push(val);
        }
        lp.curve = Some(curve);
    }
    Ok(lp)
}

fn check_monic_in_y(f: &BiPoly) -> Result<usize> {
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument("expected a polynomial in (x, y)".into()));
    }
    let n = f.degree_in(Y).ok_or(Error::ZeroPolynomial)?;
    let lc = f.leading_coefficient_in(Y);
    if !(lc.is_constant() && lc.coeff(&[0, 0]).is_one()) {
        return Err(Error::InvalidArgument("polynomial is not monic in y".into()));
    }
    Ok(n)
}

/// Coefficients `a_i` (of `Y`-degree below that of `g`) with `f = sum a_i g^i`.
pub fn adic_expansion(f: &BiPoly, g: &BiPoly) -> Result<Vec<BiPoly>> {
    let dg = check_monic_in_y(g)?;
    if dg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    let mut cur = f.clone();
    while !cur.is_zero() {
        let (q, r) = cur.div_rem_monic_in(Y, g)?;
        out.push(r);
        cur = q;
    }
    Ok(out)
}

/// The unique monic `G` of `Y`-degree `n/d` whose `G`-adic expansion of `F`
/// has vanishing subleading coefficient.
pub fn approximate_root(f: &BiPoly, d: usize) -> Result<BiPoly> {
    let field = f.field();
    if field != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(field.characteristic()));
    }
    let n = check_monic_in_y(f)?;
    if d == 0 || n % d != 0 {
        return Err(Error::InvalidArgument(format!("{} does not divide {}", d, n)));
    }
    let d_inv = field.from_i64(d as i64).inv()?;
    let mut g = MPoly::monomial(field.one(), vec![0, n / d]);
    for _ in 0..=n.max(1) {
        let alpha = if n / d == 0 {
            MPoly::zero(field, 2)
        } else {
            subleading(f, &g, d)?
        };
        if alpha.is_zero() {
            return Ok(g);
        }
        g = &g + &alpha.scale(&d_inv);
    }
    Err(Error::ApproximateRootDiverged(n))
}

// alpha_1 of the G-adic expansion: after d - 1 monic divisions the quotient
// is G + alpha_1.
fn subleading(f: &BiPoly, g: &BiPoly, d: usize) -> Result<BiPoly> {
    let mut q = f.clone();
    for _ in 0..d - 1 {
        q = q.div_rem_monic_in(Y, g)?.0;
    }
    Ok(&q - g)
}

/// Arrangement `r_0, ..., r_h` with `d_1 = r_0`, `d_{k+1} = gcd(d_k, r_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeq {
    pub r: Vec<usize>,
}

impl DeltaSeq {
    pub fn d(&self) -> Vec<usize> {
        gcd_chain(&self.r)
    }

    pub fn e(&self) -> Vec<usize> {
        self.d().windows(2).map(|w| w[0] / w[1]).collect()
    }

    pub fn is_valid(&self) -> bool {
        delta_check(&self.r)
    }

    pub fn semigroup(&self) -> Result<NumSgp> {
        NumSgp::from_generators(&self.r)
    }

    pub fn conductor(&self) -> i64 {
        conductor_formula(&self.r)
    }
}

/// `d_1 = r_0, ..., d_{h+1} = gcd(r_0, ..., r_h)`.
pub fn gcd_chain(r: &[usize]) -> Vec<usize> {
    let mut d = Vec::with_capacity(r.len());
    let mut cur = 0usize;
    for &x in r {
        cur = cur.gcd(&x);
        d.push(cur);
    }
    d
}

/// Strictly falling gcds ending at 1, `r_k d_k < r_{k-1} d_{k-1}` for
/// `k >= 2`, and `e_k r_k` in the monoid of the earlier entries.
pub fn delta_check(r: &[usize]) -> bool {
    if r.is_empty() || r.contains(&0) {
        return false;
    }
    let d = gcd_chain(r);
    if *d.last().unwrap() != 1 {
        return false;
    }
    if d.windows(2).any(|w| w[1] >= w[0]) {
        return false;
    }
    // d[k-1] is d_k in 1-based notation
    for k in 2..r.len() {
        if r[k] * d[k - 1] >= r[k - 1] * d[k - 2] {
            return false;
        }
    }
    for k in 1..r.len() {
        let e = d[k - 1] / d[k];
        let prev = match NumSgp::from_generators(&r[..k]) {
            Ok(s) => s,
            Err(_) => return false,
        };
        if !prev.contains(e * r[k]) {
            return false;
        }
    }
    true
}

/// `C = sum_k (e_k - 1) r_k - r_0 + 1`.
pub fn conductor_formula(r: &[usize]) -> i64 {
    if r.is_empty() {
        return 0;
    }
    let d = gcd_chain(r);
    let mut c = 1 - r[0] as i64;
    for k in 1..r.len() {
        let e = d[k - 1] / d[k];
        c += (e as i64 - 1) * r[k] as i64;
    }
    c
}

/// Everything computed for a polynomial pair at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtInfinity {
    /// Normalized inputs with `deg f > deg g`.
    pub f: Poly,
    pub g: Poly,
    pub curve: BiPoly,
    pub semigroup: NumSgp,
    pub delta: DeltaSeq,
    pub roots: Vec<BiPoly>,
    pub root_values: Vec<Poly>,
}

fn strip_global(f: &Poly) -> Result<Poly> {
    let f = f.without_constant();
    if f.is_zero() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(f.leading_normalize()?.0)
}

/// Degree semigroup of `K[f, g]` through approximate roots of the curve
/// `Res_x(X - f, Y - g)`.
pub fn gamma_at_infinity(f: &Poly, g: &Poly) -> Result<AtInfinity> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    if f.field() != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(f.field().characteristic()));
    }
    let (mut f, mut g) = (strip_global(f)?, strip_global(g)?);
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    if f.degree() == g.degree() {
        g = strip_global(&g.try_sub(&f)?)?;
    }
    let gd = support_gcd(&[&f, &g]);
    if gd != 1 {
        return Err(Error::GcdNotOne(gd));
    }
    let curve = curve_resultant(&f, &g)?;
    let n = f.degree().unwrap();
    let mut r = vec![n];
    let mut d = n;
    let mut roots = Vec::new();
    let mut values = Vec::new();
    while d > 1 {
        let root = approximate_root(&curve, d)?;
        let val = root.eval_univariate(&[f.clone(), g.clone()], None)?;
        let rk = val.degree().ok_or_else(|| {
            Error::InvalidArgument("approximate root vanishes on the curve".into())
        })?;
        let next = d.gcd(&rk);
        if next == d {
            return Err(Error::InvalidArgument(format!(
                "parametrization is not birational: degrees stall at gcd {}",
                d
            )));
        }
        r.push(rk);
        roots.push(root);
        values.push(val);
        d = next;
    }
    let delta = DeltaSeq { r };
    if !delta.is_valid() {
        return Err(Error::NotOnePlaceAtInfinity(format!(
            "{:?} is not a delta-sequence",
            delta.r
        )));
    }
    Ok(AtInfinity {
        semigroup: delta.semigroup()?,
        f,
        g,
        curve,
        delta,
        roots,
        root_values: values,
    })
}

/// Result for an implicit curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAtInfinity {
    pub curve: BiPoly,
    pub semigroup: NumSgp,
    pub delta: DeltaSeq,
    pub roots: Vec<BiPoly>,
}

/// `int(F, G) = deg_X Res_Y(F, G)`.
pub fn intersection_at_infinity(f: &BiPoly, g: &BiPoly) -> Result<Option<usize>> {
    let res = resultant(f, g, Y)?;
    Ok(res.degree_in(X))
}

/// Semigroup of a curve `F(x, y)` assumed to have one place at infinity.
pub fn gamma_curve_infinity(f: &BiPoly) -> Result<CurveAtInfinity> {
    if f.field() != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(f.field().characteristic()));
    }
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument("expected a polynomial in (x, y)".into()));
    }
    let n = f.degree_in(Y).ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::NotOnePlaceAtInfinity("no y term".into()));
    }
    let lc = f.leading_coefficient_in(Y);
    if !lc.is_constant() {
        return Err(Error::NotOnePlaceAtInfinity(
            "leading coefficient in y is not constant".into(),
        ));
    }
    let curve = f.scale(&lc.coeff(&[0, 0]).inv()?);
    let mut r = vec![n];
    let mut d = n;
    let mut roots = Vec::new();
    while d > 1 {
        let root = approximate_root(&curve, d)?;
        let rk = intersection_at_infinity(&curve, &root)?.ok_or_else(|| {
            Error::NotOnePlaceAtInfinity("approximate root shares a component".into())
        })?;
        let next = d.gcd(&rk);
        if rk == 0 || next == d {
            return Err(Error::NotOnePlaceAtInfinity(format!(
                "gcd descent stalls at {}",
                d
            )));
        }
        r.push(rk);
        roots.push(root);
        d = next;
    }
    let delta = DeltaSeq { r };
    if !delta.is_valid() {
        return Err(Error::NotOnePlaceAtInfinity(format!(
            "{:?} is not a delta-sequence",
            delta.r
        )));
    }
    Ok(CurveAtInfinity {
        semigroup: delta.semigroup()?,
        curve,
        delta,
        roots,
    })
}
