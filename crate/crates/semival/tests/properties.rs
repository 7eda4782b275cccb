mod common;

use common::*;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use semival::basis::{reduce_with, Basis, Limits, ReduceMode, Setting, TieBreak};
use semival::deform::deform;
use semival::error::Error;
use semival::global_basis::{global_basis_with_limits, minimal_global_basis};
use semival::local_basis::{local_basis_with_limits, minimal_basis};
use semival::numsgp::{factorizations, presentation, value_of};
use semival::plane::{conductor_formula, delta_check};
use semival::series::{nth_root_series, reverse_series, SeriesApprox};
use semival::{Field, NumSgp, Poly};

fn config() -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(0x5e41_6a10),
        failure_persistence: None,
        ..Config::default()
    }
}

fn poly_from(field: Field, terms: &[(usize, i64)]) -> Poly {
    Poly::from_int_terms(field, terms)
}

fn any_poly(max_exp: usize, max_terms: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..=max_exp, -5i64..=5), 1..=max_terms)
}

fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        3 => Just(Field::Rational),
        1 => prop::sample::select(vec![2u64, 3, 5, 7, 101]).prop_map(Field::Prime),
    ]
}

/// `x^a + tail` with the tail strictly above `a`.
fn local_generator(min: usize, max: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    (min..=max, prop::collection::vec((1usize..=6, -3i64..=3), 0..=2)).prop_map(|(a, tail)| {
        let mut t = vec![(a, 1)];
        t.extend(tail.into_iter().map(|(d, c)| (a + d, c)));
        t
    })
}

/// `x^a + tail` with the tail strictly below `a`.
fn global_generator(min: usize, max: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    (min..=max, prop::collection::vec((1usize..=6, -3i64..=3), 0..=2)).prop_map(|(a, tail)| {
        let mut t = vec![(a, 1)];
        t.extend(tail.into_iter().filter(|(d, _)| *d < a).map(|(d, c)| (a - d, c)));
        t
    })
}

// Small enough to keep each case fast; larger runs are skipped.
const LIMITS: Limits = Limits { max_elements: 7, max_value: 80 };

/// A basis, or `None` when the run hits its limits.
fn try_basis(setting: Setting, gens: &[Poly]) -> Option<Basis> {
    let b = match setting {
        Setting::Local => local_basis_with_limits(gens, LIMITS),
        Setting::Global => global_basis_with_limits(gens, LIMITS),
    };
    match b {
        Ok(b) => Some(b),
        Err(Error::LimitExceeded(_)) => None,
        Err(e) => panic!("unexpected error {:?}", e),
    }
}

fn basis_inputs() -> impl Strategy<Value = (Setting, Vec<Vec<(usize, i64)>>)> {
    prop_oneof![
        prop::collection::vec(local_generator(2, 9), 2..=3).prop_map(|g| (Setting::Local, g)),
        prop::collection::vec(global_generator(2, 9), 2..=3).prop_map(|g| (Setting::Global, g)),
    ]
}

fn build(raw: &[Vec<(usize, i64)>]) -> Vec<Poly> {
    raw.iter().map(|t| poly_from(Q, t)).filter(|p| !p.is_zero()).collect()
}

// numerical value monoid and a computed minimal basis, or None
fn numerical_basis(setting: Setting, raw: &[Vec<(usize, i64)>]) -> Option<(Vec<Poly>, Basis)> {
    let gens = build(raw);
    if gens.len() < 2 || gens.iter().any(|g| setting.value(g) == Some(0)) {
        return None;
    }
    let b = try_basis(setting, &gens)?;
    if !b.semigroup.is_numerical() {
        return None;
    }
    let m = match setting {
        Setting::Local => minimal_basis(&b).ok()?,
        Setting::Global => minimal_global_basis(&b).ok()?,
    };
    Some((gens, m))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn values_are_additive(field in any_field(), a in any_poly(12, 4), b in any_poly(12, 4)) {
        let f = poly_from(field, &a);
        let g = poly_from(field, &b);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = f.try_mul(&g).unwrap();
        prop_assert_eq!(fg.order(), Some(f.order().unwrap() + g.order().unwrap()));
        prop_assert_eq!(fg.degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn remainders_live_in_gaps((setting, raw) in basis_inputs(), f in any_poly(30, 6)) {
        let Some((_, basis)) = numerical_basis(setting, &raw) else { return Ok(()); };
        let f = poly_from(Q, &f);
        let f = if setting == Setting::Local { f.without_constant() } else { f };
        let elems = basis.polys();
        let out = reduce_with(setting, &f, &elems, ReduceMode::Division, TieBreak::LexSmallest, 0).unwrap();
        for e in out.remainder.support() {
            prop_assert!(!basis.semigroup.contains(e) || (setting == Setting::Global && e == 0),
                "remainder exponent {} lies in the semigroup", e);
        }
        // f - remainder - residual is rebuilt from the expression
        let mut rebuilt = out.remainder.try_add(&out.residual).unwrap();
        for (c, theta) in &out.expression {
            let mut prod = Poly::one(Q);
            for (g, &k) in elems.iter().zip(theta) {
                prod = prod.try_mul(&g.pow(k)).unwrap();
            }
            rebuilt = rebuilt.try_add(&prod.scale(c)).unwrap();
        }
        if setting == Setting::Global {
            prop_assert_eq!(rebuilt, f);
        } else {
            let c = basis.semigroup.conductor().unwrap();
            prop_assert_eq!(rebuilt.truncate(c), f.truncate(c));
        }
    }

    #[test]
    fn remainders_ignore_basis_order(
        (setting, raw) in basis_inputs(),
        f in any_poly(30, 6),
        seed in any::<u64>(),
    ) {
        let Some((_, basis)) = numerical_basis(setting, &raw) else { return Ok(()); };
        let f = poly_from(Q, &f);
        let f = if setting == Setting::Local { f.without_constant() } else { f };
        let elems = basis.polys();
        let mut shuffled = elems.clone();
        let n = shuffled.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = reduce_with(setting, &f, &elems, ReduceMode::Division, TieBreak::LexSmallest, 0).unwrap();
        let b = reduce_with(setting, &f, &shuffled, ReduceMode::Division, TieBreak::LexLargest, 0).unwrap();
        prop_assert_eq!(a.remainder, b.remainder);
    }

    #[test]
    fn semigroup_matches_orders_of_algebra_elements(
        (setting, raw) in basis_inputs(),
        coeffs in prop::collection::vec(-3i64..=3, 8),
    ) {
        let Some((gens, basis)) = numerical_basis(setting, &raw) else { return Ok(()); };
        let s = &basis.semigroup;
        // soundness: leading-term cancellations among the original
        // generators never produce a value outside the computed monoid
        let values: Vec<usize> = gens.iter().map(|g| setting.value(g).unwrap()).collect();
        let pres = presentation(&values).unwrap();
        let mut k = 0;
        for (alpha, beta) in &pres.pairs {
            let pa = product(&gens, alpha);
            let pb = product(&gens, beta);
            let la = setting.lead(&pa).unwrap().1;
            let lb = setting.lead(&pb).unwrap().1;
            let mut elem = pa.try_sub(&pb.scale(&la.checked_div(&lb).unwrap())).unwrap();
            let extra = (coeffs[k % coeffs.len()], &gens[k % gens.len()]);
            k += 1;
            elem = elem.try_add(&extra.1.pow(2).mul_int_scale(extra.0)).unwrap();
            if let Some(v) = setting.value(&elem) {
                prop_assert!(s.contains(v), "value {} of an algebra element is not in {:?}", v, s.minimal_generators());
            }
        }
        for (i, g) in gens.iter().enumerate() {
            let combo = g.try_add(&gens[(i + 1) % gens.len()].pow(2).mul_int_scale(coeffs[i])).unwrap();
            if let Some(v) = setting.value(&combo) {
                prop_assert!(s.contains(v));
            }
        }
        // completeness: restarting from the basis adjoins nothing
        let again = try_basis(setting, &basis.polys()).unwrap();
        prop_assert!(again.adjoined.is_empty());
        prop_assert_eq!(again.semigroup.minimal_generators(), s.minimal_generators());
    }

    #[test]
    fn presentations_connect_all_factorizations(
        gens in prop::collection::vec(2usize..=13, 2..=4),
    ) {
        prop_assume!(gens.iter().fold(0, |a: usize, &b| a.gcd(&b)) == 1);
        let mins = NumSgp::from_generators(&gens).unwrap().minimal_generators();
        let pres = presentation(&mins).unwrap();
        for i in 0..pres.len() {
            let (a, b) = &pres.pairs[i];
            prop_assert_eq!(value_of(&mins, a), value_of(&mins, b));
            prop_assert!(factorizations(&mins, pres.value(i)).len() >= 2);
        }
        prop_assert!(pres.len() + 1 >= mins.len());
        let bound = 2 * (0..pres.len()).map(|i| pres.value(i)).max().unwrap_or(0) + 2 * mins[0];
        prop_assert!(pres.is_complete_up_to(bound));
    }

    #[test]
    fn conductor_formula_matches_enumeration(r in prop::sample::select(delta_sequences())) {
        prop_assert!(delta_check(&r));
        let c = brute_conductor(&r).expect("delta-sequences generate numerical semigroups");
        prop_assert_eq!(conductor_formula(&r), c as i64);
        prop_assert_eq!(NumSgp::from_generators(&r).unwrap().conductor().unwrap(), c);
    }

    #[test]
    fn coprime_values_give_two_element_bases(
        (a, b) in (2usize..=9, 2usize..=9).prop_filter("coprime", |(a, b)| a.gcd(b) == 1 && a != b),
        global in any::<bool>(),
        tails in prop::collection::vec((1usize..=5, -3i64..=3), 0..=3),
    ) {
        let (setting, f, g) = if global {
            let mk = |n: usize| {
                let mut t = vec![(n, 1)];
                t.extend(tails.iter().filter(|(d, _)| *d < n).map(|&(d, c)| (n - d, c)));
                poly_from(Q, &t)
            };
            (Setting::Global, mk(a), mk(b))
        } else {
            let mk = |n: usize| {
                let mut t = vec![(n, 1)];
                t.extend(tails.iter().map(|&(d, c)| (n + d, c)));
                poly_from(Q, &t)
            };
            (Setting::Local, mk(a), mk(b))
        };
        let basis = try_basis(setting, &[f, g]).expect("coprime pairs close immediately");
        prop_assert_eq!(basis.elements.len(), 2);
        prop_assert!(basis.adjoined.is_empty());
        let mut want = vec![a, b];
        want.sort();
        prop_assert_eq!(basis.semigroup.minimal_generators(), want);
    }

    #[test]
    fn reversion_is_an_involution(a in prop::collection::vec(-4i64..=4, 1..=6), lead in 1i64..=3) {
        let prec = 9;
        let mut terms = vec![(1usize, lead)];
        terms.extend(a.iter().enumerate().map(|(i, &c)| (i + 2, c)));
        let u = SeriesApprox::new(&poly_from(Q, &terms), prec);
        let t = reverse_series(&u).unwrap();
        let back = reverse_series(&t).unwrap();
        prop_assert!(back.agrees_with(&u));
    }

    #[test]
    fn roots_raise_back(field in any_field(), a in prop::collection::vec(-4i64..=4, 1..=6), n in 1usize..=5) {
        prop_assume!(!field.char_divides(n as u64));
        let prec = 10;
        let mut terms = vec![(0usize, 1i64)];
        terms.extend(a.iter().enumerate().map(|(i, &c)| (i + 1, c)));
        let f = poly_from(field, &terms);
        let r = nth_root_series(&SeriesApprox::new(&f, prec), n).unwrap();
        prop_assert_eq!(r.poly.pow_truncated(n, Some(prec)), f.truncate(prec));
    }

    #[test]
    fn printing_then_parsing_is_identity(field in any_field(), a in any_poly(40, 6), d in 1i64..=9) {
        let f = poly_from(field, &a);
        let f = match field {
            Field::Rational => f.scale(&q(1, d)),
            _ => f,
        };
        let text = f.to_string();
        prop_assert_eq!(semival::parse::parse_univariate(&text, field).unwrap(), f);
        let xy = semival::mpoly::MPoly::from_terms(
            field,
            2,
            a.iter().map(|&(e, c)| (vec![e % 7, e / 7], field.from_i64(c))),
        );
        prop_assert_eq!(semival::parse::parse_bipoly(&xy.to_string(), field).unwrap(), xy);
    }

    #[test]
    fn parsers_never_panic(text in "[-+*/^() xyt0-9,.]{0,40}", field in any_field()) {
        if let Ok(f) = semival::parse::parse_univariate(&text, field) {
            prop_assert_eq!(semival::parse::parse_univariate(&f.to_string(), field).unwrap(), f);
        }
        if let Ok(f) = semival::parse::parse_bipoly(&text, field) {
            prop_assert_eq!(semival::parse::parse_bipoly(&f.to_string(), field).unwrap(), f);
        }
        if let Err(e) = semival::parse::parse_poly_list(&text, field) {
            prop_assert!(e.pos <= text.len());
        }
        if let Ok(g) = semival::parse::parse_generators(&text) {
            prop_assert!(g.iter().all(|&a| a > 0));
        }
    }

    #[test]
    fn deformations_specialize_correctly(raw in prop::collection::vec(global_generator(2, 7), 2..=2)) {
        let gens = build(&raw);
        let Some(b) = try_basis(Setting::Global, &gens) else { return Ok(()); };
        let b = minimal_global_basis(&b).unwrap();
        let d = deform(&b).unwrap();
        prop_assert_eq!(d.relators.len(), b.presentation.len());
        for c in d.check().unwrap() {
            prop_assert!(c.all_hold());
            prop_assert_eq!(c.annihilates, Some(true));
        }
    }
}

fn product(gens: &[Poly], theta: &[usize]) -> Poly {
    let mut acc = Poly::one(gens[0].field());
    for (g, &k) in gens.iter().zip(theta) {
        acc = acc.try_mul(&g.pow(k)).unwrap();
    }
    acc
}

trait ScaleInt {
    fn mul_int_scale(&self, k: i64) -> Poly;
}

impl ScaleInt for Poly {
    fn mul_int_scale(&self, k: i64) -> Poly {
        self.scale(&self.field().from_i64(k))
    }
}

/// All delta-sequences with `r_0 <= 24`, at most four entries and entries
/// up to 40.
fn delta_sequences() -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 && delta_check(cur) {
            out.push(cur.clone());
        }
        if cur.len() == 4 {
            return;
        }
        let d = cur.iter().fold(0usize, |a, &b| a.gcd(&b));
        if d == 1 {
            return;
        }
        for next in 1..=40 {
            if d.gcd(&next) < d {
                cur.push(next);
                extend(cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for r0 in 2..=24 {
        extend(&mut vec![r0], &mut out);
    }
    assert!(out.len() > 100);
    out
}
