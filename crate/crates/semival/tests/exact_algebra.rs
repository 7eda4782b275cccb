mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use semival::error::Error;
use semival::mpoly::MPoly;
use semival::resultant::{curve_resultant, resultant};
use semival::series::{compose_series, inverse_series, nth_root_series, reverse_series, SeriesApprox};
use semival::{Coeff, Field, Poly};

#[test]
fn order_and_degree() {
    assert_eq!(Poly::zero(Q).order(), None);
    assert_eq!(p(&[(4, 1), (5, 1)]).order(), Some(4));
    assert_eq!(p(&[(15, 1), (16, 1)]).order(), Some(15));
    assert_eq!(p(&[(15, 1), (16, 1)]).degree(), Some(16));
}

#[test]
fn products() {
    let f = p(&[(4, 1), (5, 1)]);
    assert!(f.try_mul(&Poly::zero(Q)).unwrap().is_zero());
    assert_eq!(f.pow(3), p(&[(12, 1), (13, 3), (14, 3), (15, 1)]));
    assert_eq!(
        p(&[(13, 2), (14, 1)]).pow(2),
        p(&[(26, 4), (27, 4), (28, 1)])
    );
}

#[test]
fn normalizations() {
    let (n, c) = p(&[(13, 3), (14, 3), (15, 1)]).trailing_normalize().unwrap();
    assert_eq!(n.to_string(), "x^13+x^14+1/3*x^15");
    assert_eq!(c, Q.from_i64(3));
    let (n, c) = p(&[(6, 1)]).trailing_normalize().unwrap();
    assert_eq!((n, c), (p(&[(6, 1)]), Q.one()));
    let (n, c) = p(&[(7, -2), (2, -1)]).trailing_normalize().unwrap();
    assert_eq!((n, c), (p(&[(2, 1), (7, 2)]), Q.from_i64(-1)));
}

#[test]
fn prime_field_arithmetic() {
    let f = Field::from_characteristic(7).unwrap();
    let a = f.from_i64(3);
    assert_eq!((&a * &a.inv().unwrap()), f.one());
    assert_eq!(Field::from_characteristic(4), Err(Error::NonPrimeCharacteristic(4)));
    assert_eq!(
        Q.zero().inv(),
        Err(Error::DivisionByZero)
    );
    assert_eq!(
        p(&[(1, 1)]).try_add(&pf(f, &[(1, 1)])),
        Err(Error::MixedFields)
    );
}

// C(1/2, k) computed from the falling factorial.
fn binom_half(k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (rat(1, 2) - BigRational::from_integer(BigInt::from(i))) / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

#[test]
fn square_root_matches_binomial_series() {
    let prec = 12;
    let r = nth_root_series(&SeriesApprox::new(&p(&[(0, 1), (1, 1)]), prec), 2).unwrap();
    for k in 0..prec {
        assert_eq!(r.poly.coeff(k), Coeff::Rational(binom_half(k)), "coefficient {}", k);
    }
    let exact = nth_root_series(&SeriesApprox::new(&p(&[(0, 1), (1, 2), (2, 1)]), 6), 2).unwrap();
    assert_eq!(exact.poly, p(&[(0, 1), (1, 1)]));
    assert_eq!(
        nth_root_series(&SeriesApprox::new(&Poly::one(Q), 5), 3).unwrap().poly,
        Poly::one(Q)
    );
}

fn catalan(n: usize) -> i64 {
    let mut c = 1i64;
    for i in 0..n {
        c = c * 2 * (2 * i as i64 + 1) / (i as i64 + 2);
    }
    c
}

#[test]
fn reversion_matches_catalan_oracle() {
    // x = t + t^2 inverts to t = sum (-1)^k C_k x^{k+1}
    let prec = 10;
    let t = reverse_series(&SeriesApprox::new(&p(&[(1, 1), (2, 1)]), prec)).unwrap();
    for k in 0..prec - 1 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(t.poly.coeff(k + 1), Q.from_i64(sign * catalan(k)));
    }
    assert_eq!(
        reverse_series(&SeriesApprox::new(&p(&[(1, 1), (2, 1)]), 5)).unwrap().poly,
        p(&[(1, 1), (2, -1), (3, 2), (4, -5)])
    );
    let x = SeriesApprox::new(&p(&[(1, 1)]), 8);
    assert_eq!(reverse_series(&x).unwrap().poly, p(&[(1, 1)]));
}

#[test]
fn composition_examples() {
    let g = SeriesApprox::new(&p(&[(2, 1)]), 5);
    let t = SeriesApprox::new(&p(&[(1, 1), (2, 1)]), 5);
    assert_eq!(compose_series(&g, &t).unwrap().poly, p(&[(2, 1), (3, 2), (4, 1)]));
    let x = SeriesApprox::new(&p(&[(1, 1)]), 5);
    let g = SeriesApprox::new(&p(&[(1, 3), (3, -2)]), 5);
    assert_eq!(compose_series(&g, &x).unwrap().poly, g.poly);
    assert_eq!(compose_series(&x, &t).unwrap().poly, t.poly);
}

#[test]
fn inverse_series_times_original_is_one() {
    let f = SeriesApprox::new(&p(&[(0, 2), (1, 3), (4, -1)]), 9);
    let inv = inverse_series(&f).unwrap();
    assert_eq!(f.poly.mul_truncated(&inv.poly, Some(9)), Poly::one(Q));
}

#[test]
fn resultant_of_the_two_generator_example() {
    let f = p(&[(7, 1)]);
    let g = p(&[(4, 1), (2, 1)]);
    let r = curve_resultant(&f, &g).unwrap();
    assert_eq!(r, parse_xy("y^7-7*x^2*y^3-x^4-14*x^2*y^2-7*x^2*y-x^2"));
    assert!(r.eval_univariate(&[f, g], None).unwrap().is_zero());
}

#[test]
fn resultant_of_the_cusp_with_tail() {
    let r = curve_resultant(&p(&[(4, 1)]), &p(&[(6, 1), (7, 1)])).unwrap();
    assert_eq!(r, parse_xy("y^4-2*x^3*y^2+x^6-4*x^5*y-x^7"));
    let r = curve_resultant(&p(&[(1, 1)]), &p(&[(1, 1)])).unwrap();
    assert_eq!(r, parse_xy("y-x"));
}

#[test]
fn resultant_of_coprime_univariates_is_nonzero() {
    // Res_x(x^2 - 1, x - 2) = 3 up to sign
    let a = MPoly::from_int_terms(Q, 1, &[(&[2], 1), (&[0], -1)]);
    let b = MPoly::from_int_terms(Q, 1, &[(&[1], 1), (&[0], -2)]);
    let r = resultant(&a, &b, 0).unwrap();
    assert!(r.is_constant());
    let v = r.coeff(&[0]);
    assert!(v == Q.from_i64(3) || v == Q.from_i64(-3));
    let c = MPoly::constant(Q.from_i64(5), 1);
    assert_eq!(resultant(&c, &c, 0), Err(Error::ConstantResultantInputs));
}

#[test]
fn evaluation_along_parametrizations() {
    let g2 = parse_xy("y^2-x^3");
    let v = g2.eval_univariate(&[p(&[(4, 1)]), p(&[(6, 1), (7, 1)])], None).unwrap();
    assert_eq!(v, p(&[(13, 2), (14, 1)]));
    let g2 = parse_xy("y^3-x^2");
    let v = g2.eval_univariate(&[p(&[(6, 1), (1, 1)]), p(&[(4, 1)])], None).unwrap();
    assert_eq!(v, p(&[(7, -2), (2, -1)]));
    let x = parse_xy("x");
    let f = p(&[(3, 1), (5, 2)]);
    assert_eq!(x.eval_univariate(&[f.clone(), p(&[(2, 1)])], None).unwrap(), f);
}

#[test]
fn fraction_strings_are_exact() {
    assert_eq!(q(-135, 32).to_fraction_string(), "-135/32");
    assert_eq!(Q.from_i64(4).to_fraction_string(), "4/1");
}
