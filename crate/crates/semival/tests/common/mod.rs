#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use semival::{Coeff, Field, MPoly, Poly};

pub const Q: Field = Field::Rational;

pub fn p(terms: &[(usize, i64)]) -> Poly {
    Poly::from_int_terms(Q, terms)
}

pub fn pf(field: Field, terms: &[(usize, i64)]) -> Poly {
    Poly::from_int_terms(field, terms)
}

pub fn q(n: i64, d: i64) -> Coeff {
    Q.from_fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse(s: &str) -> Poly {
    semival::parse::parse_univariate(s, Q).unwrap()
}

pub fn parse_xy(s: &str) -> MPoly {
    semival::parse::parse_bipoly(s, Q).unwrap()
}

/// Members of the monoid generated by `gens` up to `bound`, by sieving.
pub fn sieve(gens: &[usize], bound: usize) -> Vec<bool> {
    let mut inside = vec![false; bound + 1];
    inside[0] = true;
    for n in 1..=bound {
        inside[n] = gens.iter().any(|&a| a <= n && inside[n - a]);
    }
    inside
}

/// Conductor by scanning for the last gap; `None` when gcd > 1.
pub fn brute_conductor(gens: &[usize]) -> Option<usize> {
    let g = gens.iter().fold(0usize, |a, &b| num_integer::gcd(a, b));
    if g != 1 {
        return None;
    }
    let bound = gens.iter().max().unwrap().pow(2) + 1;
    let s = sieve(gens, bound);
    let last_gap = (0..=bound).rev().find(|&n| !s[n]);
    Some(last_gap.map_or(0, |g| g + 1))
}
