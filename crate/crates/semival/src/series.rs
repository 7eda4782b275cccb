//! Truncated power series: n-th roots, inverses, reversion and composition.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A power series known modulo `x^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesApprox {
    pub poly: Poly,
    pub prec: usize,
}

impl SeriesApprox {
    /// Truncates `poly` below `prec`.
    pub fn new(poly: &Poly, prec: usize) -> SeriesApprox {
        SeriesApprox {
            poly: poly.truncate(prec),
            prec,
        }
    }

    pub fn field(&self) -> Field {
        self.poly.field()
    }

    /// Congruence modulo `x^min(prec)`.
    pub fn agrees_with(&self, other: &SeriesApprox) -> bool {
        let p = self.prec.min(other.prec);
        self.poly.truncate(p) == other.poly.truncate(p)
    }
}

/// `g` with `g^n = f` and `g(0) = 1`.
pub fn nth_root_series(f: &SeriesApprox, n: usize) -> Result<SeriesApprox> {
    let field = f.field();
    if n == 0 {
        return Err(Error::SeriesPrecondition("root index must be positive".into()));
    }
    if field.char_divides(n as u64) {
        return Err(Error::SeriesPrecondition(format!(
            "characteristic {} divides {}",
            field.characteristic(),
            n
        )));
    }
    if f.prec == 0 {
        return Ok(SeriesApprox::new(&Poly::zero(field), 0));
    }
    if !f.poly.coeff(0).is_one() {
        return Err(Error::SeriesPrecondition("constant term must be 1".into()));
    }
    let poly = match field {
        Field::Rational => root_by_recurrence(&f.poly, n, f.prec),
        Field::Prime(_) => root_by_newton(&f.poly, n, f.prec)?,
    };
    Ok(SeriesApprox { poly, prec: f.prec })
}

// From n f y' = f' y:  n k y_k = sum_{j>=1} (j - n (k - j)) f_j y_{k-j}.
fn root_by_recurrence(f: &Poly, n: usize, prec: usize) -> Poly {
    let field = f.field();
    let fs: Vec<_> = f.terms().filter(|(e, _)| *e > 0).collect();
    let mut y = vec![field.zero(); prec];
    y[0] = field.one();
    let n_i = n as i64;
    for k in 1..prec {
        let mut acc = field.zero();
        for (j, fj) in &fs {
            let j = *j;
            if j > k {
                break;
            }
            let yk = &y[k - j];
            if yk.is_zero() {
                continue;
            }
            let w = j as i64 - n_i * (k - j) as i64;
            acc = &acc + &(*fj * yk).mul_int(w);
        }
        let denom = field.from_i64(n_i * k as i64);
        y[k] = acc.checked_div(&denom).expect("nonzero in characteristic 0");
    }
    Poly::from_terms(field, y.into_iter().enumerate())
}

// y <- y + (f - y^n) / (n y^(n-1)), doubling the precision each round.
fn root_by_newton(f: &Poly, n: usize, prec: usize) -> Result<Poly> {
    let field = f.field();
    let n_inv = field.from_i64(n as i64).inv()?;
    let mut y = Poly::one(field);
    let mut cur = 1;
    while cur < prec {
        cur = (2 * cur).min(prec);
        let p = Some(cur);
        let yn1 = y.pow_truncated(n - 1, p);
        let yn = yn1.mul_truncated(&y, p);
        let resid = f.truncate(cur).try_sub(&yn)?;
        let inv = inverse_series(&SeriesApprox::new(&yn1, cur))?;
        let step = resid.mul_truncated(&inv.poly, p).scale(&n_inv);
        y = y.try_add(&step)?;
    }
    Ok(y.truncate(prec))
}

/// Multiplicative inverse of a series with nonzero constant term.
pub fn inverse_series(f: &SeriesApprox) -> Result<SeriesApprox> {
    let field = f.field();
    let c0 = f.poly.coeff(0);
    if c0.is_zero() {
        return Err(Error::SeriesPrecondition("constant term must be nonzero".into()));
    }
    let c0_inv = c0.inv()?;
    let fs: Vec<_> = f.poly.terms().filter(|(e, _)| *e > 0).collect();
    let mut y = vec![field.zero(); f.prec];
    if f.prec > 0 {
        y[0] = c0_inv.clone();
    }
    for k in 1..f.prec {
        let mut acc = field.zero();
        for (j, fj) in &fs {
            if *j > k {
                break;
            }
            acc = &acc + &(*fj * &y[k - j]);
        }
        y[k] = -&(&acc * &c0_inv);
    }
    Ok(SeriesApprox {
        poly: Poly::from_terms(field, y.into_iter().enumerate()),
        prec: f.prec,
    })
}

/// `g(t(x))` modulo `x^min(g.prec, t.prec)`.
pub fn compose_series(g: &SeriesApprox, t: &SeriesApprox) -> Result<SeriesApprox> {
    if g.field() != t.field() {
        return Err(Error::MixedFields);
    }
    let prec = g.prec.min(t.prec);
    if prec > 0 && t.poly.order().map_or(false, |o| o == 0) {
        return Err(Error::SeriesPrecondition("inner series has a constant term".into()));
    }
    Ok(SeriesApprox {
        poly: compose_truncated(&g.poly, &t.poly, prec),
        prec,
    })
}

// Baby-step giant-step Horner: powers t^0..t^b are cached and the outer
// Horner loop runs in t^b.
fn compose_truncated(g: &Poly, t: &Poly, prec: usize) -> Poly {
    let field = g.field();
    let g = g.truncate(prec);
    let Some(deg) = g.degree() else {
        return Poly::zero(field);
    };
    let b = ((deg + 1) as f64).sqrt().ceil().max(1.0) as usize;
    let p = Some(prec);
    let mut pows = vec![Poly::one(field).truncate(prec)];
    for i in 1..=b {
        let next = pows[i - 1].mul_truncated(t, p);
        pows.push(next);
    }
    let giant = pows[b].clone();
    let blocks = deg / b + 1;
    let mut acc = Poly::zero(field);
    for blk in (0..blocks).rev() {
        acc = acc.mul_truncated(&giant, p);
        for i in 0..b {
            let c = g.coeff(blk * b + i);
            if !c.is_zero() {
                acc = &acc + &pows[i].scale(&c);
            }
        }
    }
    acc
}

/// Compositional inverse: `t` with `u(t(x)) = x` modulo `x^prec`.
pub fn reverse_series(u: &SeriesApprox) -> Result<SeriesApprox> {
    let field = u.field();
    if u.prec < 2 {
        return Err(Error::SeriesPrecondition("precision too small to reverse".into()));
    }
    if u.poly.order() != Some(1) {
        return Err(Error::SeriesPrecondition("series must have order 1".into()));
    }
    let a1_inv = u.poly.coeff(1).inv()?;
    let du = u.poly.derivative();
    let x = Poly::x_pow(field, 1);
    let mut t = x.scale(&a1_inv);
    let mut cur = 2;
    while cur < u.prec {
        cur = (2 * cur).min(u.prec);
        let ut = compose_truncated(&u.poly, &t, cur);
        let dut = compose_truncated(&du, &t, cur);
        let inv = inverse_series(&SeriesApprox::new(&dut, cur))?;
        let resid = ut.try_sub(&x)?;
        t = t.try_sub(&resid.mul_truncated(&inv.poly, Some(cur)))?;
    }
    Ok(SeriesApprox {
        poly: t.truncate(u.prec),
        prec: u.prec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    const Q: Field = Field::Rational;

    fn q(terms: &[(usize, i64)]) -> Poly {
        Poly::from_int_terms(Q, terms)
    }

    fn frac(n: i64, d: i64) -> crate::coeff::Coeff {
        Q.from_fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn square_root_of_one_plus_x() {
        let r = nth_root_series(&SeriesApprox::new(&q(&[(0, 1), (1, 1)]), 4), 2).unwrap();
        let want = Poly::from_terms(
            Q,
            [(0, frac(1, 1)), (1, frac(1, 2)), (2, frac(-1, 8)), (3, frac(1, 16))],
        );
        assert_eq!(r.poly, want);
    }

    #[test]
    fn newton_root_in_prime_field() {
        let f = Field::Prime(7);
        let p = Poly::from_int_terms(f, &[(0, 1), (1, 3), (4, 2)]);
        let r = nth_root_series(&SeriesApprox::new(&p, 12), 3).unwrap();
        assert_eq!(r.poly.pow_truncated(3, Some(12)), p);
        assert!(nth_root_series(&SeriesApprox::new(&p, 12), 7).is_err());
    }

    #[test]
    fn reversion_of_x_plus_x2() {
        let t = reverse_series(&SeriesApprox::new(&q(&[(1, 1), (2, 1)]), 5)).unwrap();
        assert_eq!(t.poly, q(&[(1, 1), (2, -1), (3, 2), (4, -5)]));
    }

    #[test]
    fn composition() {
        let g = SeriesApprox::new(&q(&[(2, 1)]), 5);
        let t = SeriesApprox::new(&q(&[(1, 1), (2, 1)]), 5);
        assert_eq!(compose_series(&g, &t).unwrap().poly, q(&[(2, 1), (3, 2), (4, 1)]));
        let bad = SeriesApprox::new(&q(&[(0, 1), (1, 1)]), 5);
        assert!(compose_series(&g, &bad).is_err());
    }
}
