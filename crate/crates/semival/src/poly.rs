//! Sparse univariate polynomials over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};

/// A univariate polynomial stored as exponent -> nonzero coefficient.
///
/// `order` is the least exponent of the support and `degree` the greatest;
/// both are `None` for the zero polynomial (order `+inf`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<usize, Coeff>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Coeff) -> Poly {
        Poly::monomial(c, 0)
    }

    pub fn monomial(c: Coeff, exp: usize) -> Poly {
        let mut p = Poly::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The monic monomial `x^exp`.
    pub fn x_pow(field: Field, exp: usize) -> Poly {
        Poly::monomial(field.one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (usize, Coeff)>>(field: Field, terms: I) -> Poly {
        let mut p = Poly::zero(field);
        for (e, c) in terms {
            assert_eq!(c.field(), field, "coefficient from a different field");
            p.add_term(e, &c);
        }
        p
    }

    /// Integer coefficients, handy in tests and examples.
    pub fn from_int_terms(field: Field, terms: &[(usize, i64)]) -> Poly {
        Poly::from_terms(field, terms.iter().map(|&(e, c)| (e, field.from_i64(c))))
    }

    pub fn field(&self) -> Field {
        self.field
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

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Coeff)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: usize) -> Coeff {
        self.terms.get(&exp).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest-order term.
    pub fn trailing_term(&self) -> Option<(usize, &Coeff)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Highest-degree term.
    pub fn leading_term(&self) -> Option<(usize, &Coeff)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    /// `(f / a, a)` with `a` the trailing coefficient.
    pub fn trailing_normalize(&self) -> Result<(Poly, Coeff)> {
        let (_, a) = self.trailing_term().ok_or(Error::ZeroPolynomial)?;
        let a = a.clone();
        Ok((self.scale(&a.inv()?), a))
    }

    /// `(f / a, a)` with `a` the leading coefficient.
    pub fn leading_normalize(&self) -> Result<(Poly, Coeff)> {
        let (_, a) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        let a = a.clone();
        Ok((self.scale(&a.inv()?), a))
    }

    pub(crate) fn add_term(&mut self, exp: usize, c: &Coeff) {
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

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_truncated(other, None))
    }

    /// Product, dropping every term of exponent `>= prec` when given.
    pub fn mul_truncated(&self, other: &Poly, prec: Option<usize>) -> Poly {
        assert_eq!(self.field, other.field, "polynomials from different fields");
        let mut out = Poly::zero(self.field);
        for (ea, ca) in self.terms() {
            if prec.is_some_and(|p| ea >= p) {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if prec.is_some_and(|p| e >= p) {
                    break;
                }
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `c * x^shift`.
    pub fn mul_monomial(&self, c: &Coeff, shift: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(e, v)| (e + shift, v * c)).collect(),
        }
    }

    /// Divide by `x^shift`; every exponent must be at least `shift`.
    pub fn shift_down(&self, shift: usize) -> Poly {
        assert!(self.order().map_or(true, |o| o >= shift));
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(e, v)| (e - shift, v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Poly {
        self.pow_truncated(k, None)
    }

    pub fn pow_truncated(&self, mut k: usize, prec: Option<usize>) -> Poly {
        let mut acc = Poly::one(self.field).truncate_opt(prec);
        let mut base = self.truncate_opt(prec);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_truncated(&base, prec);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_truncated(&base, prec);
            }
        }
        acc
    }

    /// Keep only the terms of exponent `< prec`.
    pub fn truncate(&self, prec: usize) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.range(..prec).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    fn truncate_opt(&self, prec: Option<usize>) -> Poly {
        match prec {
            Some(p) => self.truncate(p),
            None => self.clone(),
        }
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> Poly {
        let mut p = self.clone();
        p.terms.remove(&0);
        p
    }

    pub fn derivative(&self) -> Poly {
        let mut out = Poly::zero(self.field);
        for (e, c) in self.terms() {
            if e > 0 {
                out.add_term(e - 1, &c.mul_int(e as i64));
            }
        }
        out
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.compose_truncated(inner, None)
    }

    /// `self(inner)` modulo `x^prec` when given (Horner's rule).
    pub fn compose_truncated(&self, inner: &Poly, prec: Option<usize>) -> Poly {
        assert_eq!(self.field, inner.field, "polynomials from different fields");
        let mut acc = Poly::zero(self.field);
        let Some(deg) = self.degree() else {
            return acc;
        };
        for e in (0..=deg).rev() {
            acc = acc.mul_truncated(inner, prec);
            acc.add_term(0, &self.coeff(e));
        }
        acc.truncate_opt(prec)
    }

    pub fn eval(&self, at: &Coeff) -> Coeff {
        let mut acc = self.field.zero();
        let Some(deg) = self.degree() else {
            return acc;
        };
        for e in (0..=deg).rev() {
            acc = &(&acc * at) + &self.coeff(e);
        }
        acc
    }

    /// Renders with the given variable name.
    pub fn display_var<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

/// Display adapter with a custom variable name.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let vars = if e == 0 {
                String::new()
            } else if e == 1 {
                self.var.to_string()
            } else {
                format!("{}^{}", self.var, e)
            };
            write_term(f, i == 0, c, &vars)?;
        }
        Ok(())
    }
}

/// Shared term printer: `c*vars` with `+`/`-` joins and unit coefficients elided.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Coeff,
    vars: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = if neg { -c } else { c.clone() };
    if neg {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    if vars.is_empty() {
        write!(f, "{}", abs)
    } else if abs.is_one() {
        write!(f, "{}", vars)
    } else {
        write!(f, "{}*{}", abs, vars)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("x").fmt(f)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// Operators panic on mixed fields; the `try_*` methods report it instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials from different fields")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$checked(&rhs).expect("polynomials from different fields")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
