mod common;

use common::*;
use semival::error::Error;
use semival::numsgp::{ci_relations, factorizations, minimal_generators, presentation};
use semival::NumSgp;

fn sg(g: &[usize]) -> NumSgp {
    NumSgp::from_generators(g).unwrap()
}

// Every exponent vector with value n, by nested enumeration.
fn brute_factorizations(gens: &[usize], n: usize) -> Vec<Vec<usize>> {
    fn go(gens: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == gens.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left / gens[i] {
            cur.push(k);
            go(gens, i + 1, left - k * gens[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[test]
fn invariants_of_the_four_generator_example() {
    let s = sg(&[4, 6, 13, 15]);
    assert_eq!(s.conductor().unwrap(), 12);
    assert_eq!(s.genus().unwrap(), 7);
    assert_eq!(s.sporadic_count().unwrap(), 5);
    assert_eq!(s.type_set().unwrap(), vec![2, 9, 11]);
    assert!(!s.is_symmetric().unwrap());
    assert!(!s.contains(11));
    assert_eq!(s.apery_set(4).unwrap(), vec![0, 6, 13, 15]);
}

#[test]
fn apery_set_matches_residue_scan() {
    let gens = [4, 6, 13, 15];
    let member = sieve(&gens, 200);
    let mut want: Vec<usize> = (0..4)
        .map(|r| (0..200).find(|&n| n % 4 == r && member[n]).unwrap())
        .collect();
    want.sort();
    assert_eq!(sg(&gens).apery_set(4).unwrap(), want);
    assert_eq!(sg(&[2, 7]).apery_set(2).unwrap(), vec![0, 7]);
    assert_eq!(sg(&[1]).apery_set(1).unwrap(), vec![0]);
}

#[test]
fn conductors() {
    assert_eq!(sg(&[4, 6, 15]).conductor().unwrap(), 18);
    assert_eq!(sg(&[1]).conductor().unwrap(), 0);
    assert_eq!(sg(&[2, 3]).conductor().unwrap(), brute_conductor(&[2, 3]).unwrap());
    assert_eq!(sg(&[4, 6]).conductor(), Err(Error::NotNumerical(2)));
    assert_eq!(sg(&[4, 6]).gcd(), 2);
    assert!(!sg(&[4, 6, 15]).contains(13));
    assert!(sg(&[7, 9]).contains(0));
}

#[test]
fn genus_and_gaps() {
    assert_eq!(sg(&[8, 12, 26, 53]).genus().unwrap(), 42);
    assert_eq!(sg(&[1]).gaps().unwrap(), Vec::<usize>::new());
    let s = sg(&[4, 6, 13]);
    assert!(s.is_symmetric().unwrap());
    assert_eq!(s.genus().unwrap(), 8);
    assert_eq!(sg(&[2, 3]).type_set().unwrap(), vec![1]);
    assert_eq!(sg(&[1]).type_set().unwrap(), vec![-1]);
    assert!(sg(&[1]).is_symmetric().unwrap());
    assert_eq!(sg(&[1]).sporadic_count().unwrap(), 0);
    assert_eq!(sg(&[2, 3]).sporadic_count().unwrap(), 1);
}

#[test]
fn minimal_generating_systems() {
    assert_eq!(minimal_generators(&[4, 6, 13, 15, 18, 19]), vec![4, 6, 13, 15]);
    assert_eq!(minimal_generators(&[2, 7]), vec![2, 7]);
    assert_eq!(minimal_generators(&[1, 5]), vec![1]);
    assert_eq!(minimal_generators(&[4, 6, 13, 15, 18]), vec![4, 6, 13, 15]);
    assert_eq!(minimal_generators(&[2, 7, 9]), vec![2, 7]);
}

#[test]
fn factorizations_match_enumeration() {
    assert_eq!(factorizations(&[4, 6], 12), vec![vec![0, 2], vec![3, 0]]);
    assert_eq!(factorizations(&[4, 6, 15], 0), vec![vec![0, 0, 0]]);
    let f = factorizations(&[4, 6, 15], 30);
    assert_eq!(f, brute_factorizations(&[4, 6, 15], 30));
    for want in [[6, 1, 0], [3, 3, 0], [0, 5, 0], [0, 0, 2]] {
        assert!(f.contains(&want.to_vec()));
    }
    for n in 0..60 {
        assert_eq!(factorizations(&[4, 6, 13, 15], n), brute_factorizations(&[4, 6, 13, 15], n));
    }
}

// A binomial X^a - X^b matches {A, B} in either orientation.
fn same_binomials(got: &[(Vec<usize>, Vec<usize>)], want: &[(Vec<usize>, Vec<usize>)]) -> bool {
    got.len() == want.len()
        && want.iter().all(|(a, b)| {
            got.iter()
                .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
        })
}

#[test]
fn minimal_presentations() {
    let pres = presentation(&[4, 6, 15]).unwrap();
    let want = vec![
        (vec![3, 0, 0], vec![0, 2, 0]),
        (vec![0, 5, 0], vec![0, 0, 2]),
    ];
    assert!(same_binomials(&pres.pairs, &want), "{:?}", pres.pairs);
    let pres = presentation(&[2, 3]).unwrap();
    assert!(same_binomials(&pres.pairs, &[(vec![3, 0], vec![0, 2])]));
    assert!(presentation(&[1]).unwrap().is_empty());
    let pres = sg(&[4, 6, 13, 15]).minimal_presentation().unwrap();
    assert!(pres.is_complete_up_to(2 * 60));
}

#[test]
fn free_arrangements() {
    assert!(sg(&[2, 7]).is_free(&[2, 7]).unwrap());
    assert!(sg(&[4, 6, 13]).is_free(&[4, 6, 13]).unwrap());
    assert!(!sg(&[4, 6, 13, 15]).is_free(&[4, 6, 13, 15]).unwrap());
    assert_eq!(sg(&[4, 6, 13]).is_free(&[4, 6]), Err(Error::ArrangementMismatch));
    let ci = ci_relations(&[4, 6, 13]).unwrap();
    assert_eq!(
        ci.pairs,
        vec![
            (vec![0, 2, 0], vec![3, 0, 0]),
            (vec![0, 0, 2], vec![5, 1, 0]),
        ]
    );
    let ci = ci_relations(&[6, 4, 7]).unwrap();
    assert_eq!(
        ci.pairs,
        vec![
            (vec![0, 3, 0], vec![2, 0, 0]),
            (vec![0, 0, 2], vec![1, 2, 0]),
        ]
    );
    assert!(ci_relations(&[1]).unwrap().is_empty());
    assert!(matches!(ci_relations(&[4, 6, 13, 15]), Err(Error::NotFree(_))));
}

#[test]
fn oversized_generators_are_refused() {
    assert!(matches!(
        NumSgp::from_generators(&[3, 1 << 24]),
        Err(Error::LimitExceeded(_))
    ));
}
