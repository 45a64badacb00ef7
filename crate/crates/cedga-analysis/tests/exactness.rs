mod common;

use cedga_algebra::{apply_differential, Coeff, CoeffRing, Element, GenId, Presentation};
use cedga_analysis::{exactness_search, is_trivial, search_space, Bounds, Exactness, Parity, Triviality};
use common::{long, parse_word, points, unknot};
use proptest::prelude::*;

fn bounds(len: usize) -> Bounds {
    Bounds { max_word_length: len, ..Bounds::default() }
}

fn contractible() -> Presentation {
    let mut p = Presentation::new("contractible", CoeffRing::Rationals);
    let e = p.add_idempotent("e1").unwrap();
    let a = long(&mut p, "a", -1, e, e);
    p.set_differential(a, p.one()).unwrap();
    p
}

#[test]
fn unit_boundary_is_found() {
    let p = contractible();
    let a = p.gen(p.generator_id("a").unwrap());
    assert_eq!(exactness_search(&p, &p.one(), &bounds(3), None).unwrap(), Exactness::Witness(a.clone()));
    assert_eq!(is_trivial(&p, &bounds(3)).unwrap(), Triviality::CertifiedTrivial(a));
}

#[test]
fn first_idempotent_of_three_points_is_not_a_boundary() {
    let p = points(CoeffRing::Gf2, &[0, 0, 0], 2);
    let e1 = p.idem(p.idempotent_id("e1").unwrap());
    match exactness_search(&p, &e1, &bounds(5), None).unwrap() {
        Exactness::NoneWithinBounds(cert) => {
            assert_eq!(cert.candidates, 81);
            assert_eq!(cert.bounds.max_word_length, 5);
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(is_trivial(&p, &bounds(5)).unwrap(), Triviality::NotWithinBounds(_)));
}

#[test]
fn unknot_relation_has_the_level_one_witness() {
    for ring in [CoeffRing::Rationals, CoeffRing::Gf2] {
        let p = unknot(ring, 2);
        let target = &p.one() - &parse_word(&p, "t1_21*t0_12");
        let w = exactness_search(&p, &target, &bounds(4), None).unwrap();
        let w = w.witness().expect("witness");
        assert_eq!(&apply_differential(&p, w).unwrap(), &target);
        assert!(w.terms().any(|(v, _)| p.render_word(v) == "t1_11"));
        assert!(matches!(is_trivial(&p, &bounds(5)).unwrap(), Triviality::NotWithinBounds(_)));
    }
}

#[test]
fn inhomogeneous_target_is_rejected() {
    let p = unknot(CoeffRing::Rationals, 1);
    let x = &p.one() + &parse_word(&p, "a");
    assert!(exactness_search(&p, &x, &bounds(3), None).is_err());
}

#[test]
fn parity_filter_restricts_the_search_space() {
    let p = points(CoeffRing::Gf2, &[0, 0, 0], 2);
    let e = p.idempotent_id("e1").unwrap();
    let all = search_space(&p, e, e, -1, &bounds(6), None);
    let odd = search_space(&p, e, e, -1, &bounds(6), Some(Parity::Odd));
    let even = search_space(&p, e, e, -1, &bounds(6), Some(Parity::Even));
    assert!(odd.iter().all(|w| w.len() % 2 == 1));
    assert!(even.iter().all(|w| w.len() % 2 == 0));
    assert_eq!(odd.len() + even.len(), all.len());
}

/// Brute-force enumeration without pruning, for comparison.
fn naive_space(p: &Presentation, degree: i64, len: usize) -> usize {
    let gens: Vec<GenId> = p.generators().filter(|(_, g)| g.level.is_none_or(|l| l <= 2)).map(|(i, _)| i).collect();
    let e = p.idempotent_id("e1").unwrap();
    let mut count = 0;
    let mut layer: Vec<Vec<GenId>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                let mut v = w.clone();
                v.push(*g);
                if p.word(&v).is_some() {
                    next.push(v);
                }
            }
        }
        for v in &next {
            let w = p.word(v).unwrap();
            if w.source() == e && w.target() == e && p.word_degree(&w) == degree {
                count += 1;
            }
        }
        layer = next;
    }
    count
}

#[test]
fn pruned_enumeration_matches_brute_force() {
    let p = points(CoeffRing::Gf2, &[0, 0, 0], 2);
    let e = p.idempotent_id("e1").unwrap();
    for len in 1..=4 {
        assert_eq!(search_space(&p, e, e, -1, &bounds(len), None).len(), naive_space(&p, -1, len));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Every boundary of a short word is found, and the witness re-checks.
    #[test]
    fn boundaries_are_found(picks in prop::collection::vec((0usize..40, 0usize..40, -2i64..3), 1..3)) {
        let p = points(CoeffRing::Rationals, &[0, 0, 0], 1);
        let n = p.num_generators();
        let mut x = Element::zero(p.ring());
        let mut deg = None;
        for (a, b, c) in picks {
            let ids = [GenId((a % n) as u32), GenId((b % n) as u32)];
            if let Some(w) = p.word(&ids) {
                let d = p.word_degree(&w);
                if deg.is_none_or(|e| e == d) {
                    deg = Some(d);
                    x.add_term(w, Coeff::from_i64(p.ring(), c));
                }
            }
        }
        let target = apply_differential(&p, &x).unwrap();
        if !target.is_zero() {
            let found = exactness_search(&p, &target, &bounds(2), None).unwrap();
            let w = found.witness().expect("boundary must be found");
            prop_assert_eq!(apply_differential(&p, w).unwrap(), target);
        }
    }
}
