//! Sparse multivariate polynomials with a fixed number of variables.
//!
//! Used for the bivariate curve equations `F(X, Y)`, the three-variable
//! resultant inputs and the homogenized relators in `(u, X_1, ..., X_g)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::poly::{write_term, Poly};

/// Exponent vector, one entry per variable.
pub type ExpVec = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<ExpVec, Coeff>,
}

/// Two-variable polynomial in `(X, Y)`.
pub type BiPoly = MPoly;

impl MPoly {
    pub fn zero(field: Field, nvars: usize) -> MPoly {
        MPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, nvars: usize) -> MPoly {
        MPoly::constant(field.one(), nvars)
    }

    pub fn constant(c: Coeff, nvars: usize) -> MPoly {
        MPoly::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: Coeff, exps: ExpVec) -> MPoly {
        let mut p = MPoly::zero(c.field(), exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable of index `i`.
    pub fn var(field: Field, nvars: usize, i: usize) -> MPoly {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(field.one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (ExpVec, Coeff)>>(
        field: Field,
        nvars: usize,
        terms: I,
    ) -> MPoly {
        let mut p = MPoly::zero(field, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector of wrong length");
            p.add_term(e, &c);
        }
        p
    }

    pub fn from_int_terms(field: Field, nvars: usize, terms: &[(&[usize], i64)]) -> MPoly {
        MPoly::from_terms(
            field,
            nvars,
            terms.iter().map(|(e, c)| (e.to_vec(), field.from_i64(*c))),
        )
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_poly(p: &Poly, nvars: usize, var: usize) -> MPoly {
        MPoly::from_terms(
            p.field(),
            nvars,
            p.terms().map(|(e, c)| {
                let mut v = vec![0; nvars];
                v[var] = e;
                (v, c.clone())
            }),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[usize]) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Lex-greatest term (variable 0 most significant).
    pub fn lex_leading_term(&self) -> Option<(&ExpVec, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, exp: ExpVec, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    fn check(&self, other: &MPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.nvars != other.nvars {
            return Err(Error::InvalidArgument(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = MPoly::zero(self.field, self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: ExpVec = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.field, self.nvars);
        }
        MPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: usize) -> MPoly {
        let mut acc = MPoly::one(self.field, self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> Option<usize> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let Some(d) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out = vec![MPoly::zero(self.field, self.nvars); d + 1];
        for (e, c) in self.terms() {
            let mut r = e.clone();
            r[var] = 0;
            out[e[var]].add_term(r, c);
        }
        out
    }

    /// Inverse of [`MPoly::coefficients_in`].
    pub fn from_coefficients_in(field: Field, nvars: usize, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(field, nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in c.terms() {
                let mut r = e.clone();
                r[var] += k;
                out.add_term(r, v);
            }
        }
        out
    }

    /// Leading coefficient with respect to `var`.
    pub fn leading_coefficient_in(&self, var: usize) -> MPoly {
        self.coefficients_in(var)
            .pop()
            .unwrap_or_else(|| MPoly::zero(self.field, self.nvars))
    }

    /// Multiplies by the monomial `c * vars^exps`.
    pub fn mul_monomial(&self, c: &Coeff, exps: &[usize]) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.field, self.nvars);
        }
        MPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    /// Replaces variable `i` by `images[i]`; all images share a ring.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let (field, nv) = (first.field, first.nvars);
        for im in images {
            if im.field != field || self.field != field {
                return Err(Error::MixedFields);
            }
            if im.nvars != nv {
                return Err(Error::InvalidArgument("images in different rings".into()));
            }
        }
        let mut cache: Vec<Vec<MPoly>> = vec![vec![MPoly::one(field, nv)]; self.nvars];
        let mut out = MPoly::zero(field, nv);
        for (e, c) in self.terms() {
            let mut term = MPoly::constant(c.clone(), nv);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                term = &term * &cache[i][k];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes univariate polynomials for every variable, truncating
    /// modulo `x^prec` when a precision is given.
    pub fn eval_univariate(&self, images: &[Poly], prec: Option<usize>) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        for im in images {
            if im.field() != self.field {
                return Err(Error::MixedFields);
            }
        }
        let mut cache: Vec<Vec<Poly>> = vec![vec![Poly::one(self.field)]; self.nvars];
        let mut out = Poly::zero(self.field);
        for (e, c) in self.terms() {
            let mut term = Poly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k {
                    let next = cache[i].last().unwrap().mul_truncated(&images[i], prec);
                    cache[i].push(next);
                }
                term = term.mul_truncated(&cache[i][k], prec);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Sets variable `var` to the constant `value` (the variable stays in the ring).
    pub fn specialize(&self, var: usize, value: &Coeff) -> MPoly {
        let mut out = MPoly::zero(self.field, self.nvars);
        for (e, c) in self.terms() {
            let mut r = e.clone();
            let k = r[var];
            r[var] = 0;
            out.add_term(r, &(c * &value.pow(k as u64)));
        }
        out
    }

    /// Moves variable `i` to index `mapping[i]` in a ring of `nvars` variables.
    pub fn remap(&self, nvars: usize, mapping: &[usize]) -> MPoly {
        assert_eq!(mapping.len(), self.nvars);
        let mut out = MPoly::zero(self.field, nvars);
        for (e, c) in self.terms() {
            let mut r = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                r[mapping[i]] += k;
            }
            out.add_term(r, c);
        }
        out
    }

    /// Division with remainder by `g`, which must be monic in `var`.
    pub fn div_rem_monic_in(&self, var: usize, g: &MPoly) -> Result<(MPoly, MPoly)> {
        self.check(g)?;
        let dg = g.degree_in(var).ok_or(Error::ZeroPolynomial)?;
        let lc = g.leading_coefficient_in(var);
        if !(lc.is_constant() && lc.coeff(&vec![0; self.nvars]).is_one()) {
            return Err(Error::InvalidArgument("divisor is not monic".into()));
        }
        let mut q = MPoly::zero(self.field, self.nvars);
        let mut r = self.clone();
        while let Some(dr) = r.degree_in(var) {
            if dr < dg {
                break;
            }
            let mut lead = r.leading_coefficient_in(var);
            let mut shift = vec![0; self.nvars];
            shift[var] = dr - dg;
            lead = lead.mul_monomial(&self.field.one(), &shift);
            r = &r - &(&lead * g);
            q = &q + &lead;
        }
        Ok((q, r))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        if self.check(d).is_err() {
            return None;
        }
        let (de, dc) = d.lex_leading_term()?;
        let (de, dinv) = (de.clone(), dc.inv().ok()?);
        let mut q = MPoly::zero(self.field, self.nvars);
        let mut r = self.clone();
        while let Some((re, rc)) = r.lex_leading_term() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let shift: ExpVec = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc * &dinv;
            r = &r - &d.mul_monomial(&c, &shift);
            q.add_term(shift, &c);
        }
        Some(q)
    }

    /// Converts to a univariate polynomial in `var`; fails if other variables occur.
    pub fn to_poly_in(&self, var: usize) -> Result<Poly> {
        let mut out = Poly::zero(self.field);
        for (e, c) in self.terms() {
            if e.iter().enumerate().any(|(i, &k)| i != var && k != 0) {
                return Err(Error::InvalidArgument(
                    "polynomial involves more than one variable".into(),
                ));
            }
            out.add_term(e[var], c);
        }
        Ok(out)
    }

    /// Terms ordered for printing: compare exponents from the last variable
    /// backwards, larger first.
    pub fn display_terms(&self) -> Vec<(&ExpVec, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_cmp(b.0, a.0));
        v
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> MPolyDisplay<'a> {
        MPolyDisplay { poly: self, names }
    }
}

fn display_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

pub struct MPolyDisplay<'a> {
    poly: &'a MPoly,
    names: &'a [&'a str],
}

impl fmt::Display for MPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.display_terms().into_iter().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    let name = self.names.get(j).copied().unwrap_or("?");
                    if k == 1 {
                        name.to_string()
                    } else {
                        format!("{}^{}", name, k)
                    }
                })
                .collect();
            write_term(f, i == 0, c, &vars.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = match self.nvars {
            2 => vec!["x".into(), "y".into()],
            n => (0..n).map(|i| format!("X{}", i)).collect(),
        };
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.display_with(&refs).fmt(f)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect("incompatible polynomial rings")
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$checked(&rhs).expect("incompatible polynomial rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
