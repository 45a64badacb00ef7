mod common;

use cedga_algebra::{Coeff, CoeffRing, Presentation};
use cedga_analysis::{check_d_squared, Bounds};
use cedga_morphisms::{
    compose, extend_map, identity, obstruct_y_filling, partial_linearize, verify_augmentation, verify_chain_map,
    AugVerdict, Augmentation, DgMap, MorphismError, Obstruction,
};
use common::{edge, long, merged_points, parse_word, points, unknot};

fn unknot_aug(p: &Presentation, values: &[(&str, i64)]) -> Augmentation {
    let mut eps = Augmentation::new("eps", p, vec!["t".into()]);
    for (g, v) in values {
        eps.values[p.generator_id(g).unwrap().index()] = Some(Coeff::from_i64(p.ring(), *v));
    }
    eps
}

#[test]
fn identity_is_a_chain_map() {
    for p in [points(CoeffRing::Gf2, &[0, 0, 0], 2), unknot(CoeffRing::Rationals, 2)] {
        let id = identity(&p);
        assert!(verify_chain_map(&id, &p, &p).unwrap().passed());
        let x = parse_word(&p, &p.generators().next().unwrap().1.name.clone());
        assert_eq!(extend_map(&id, &p, &p, &x).unwrap(), x);
        assert_eq!(extend_map(&id, &p, &p, &p.one()).unwrap(), p.one());
    }
}

#[test]
fn composition_of_chain_maps() {
    let p = points(CoeffRing::Rationals, &[0, 0, 0], 2);
    let id = identity(&p);
    let twice = compose(&id, &id, &p, &p, &p).unwrap();
    assert!(verify_chain_map(&twice, &p, &p).unwrap().passed());
}

#[test]
fn zero_differentials_make_any_map_a_chain_map() {
    let mut p = Presentation::new("z", CoeffRing::Rationals);
    let e = p.add_idempotent("e1").unwrap();
    let x = long(&mut p, "x", 0, e, e);
    let y = long(&mut p, "y", 0, e, e);
    p.set_differential(x, p.zero()).unwrap();
    p.set_differential(y, p.zero()).unwrap();
    let mut phi = DgMap::new("phi", &p, &p);
    phi.idempotents[0] = Some(e);
    phi.generators[x.index()] = Some(&parse_word(&p, "y*x") + &p.one());
    phi.generators[y.index()] = Some(p.zero());
    assert!(verify_chain_map(&phi, &p, &p).unwrap().passed());
}

#[test]
fn mutated_map_fails() {
    let p = unknot(CoeffRing::Rationals, 1);
    let mut phi = identity(&p);
    let a = p.generator_id("a").unwrap();
    let t = p.generator_id("t0_12").unwrap();
    let mut wrong_degree = phi.clone();
    wrong_degree.generators[a.index()] = Some(p.one());
    assert!(matches!(verify_chain_map(&wrong_degree, &p, &p), Err(MorphismError::InvalidMap { .. })));
    for image in [p.one(), -&p.gen(t)] {
        phi.generators[t.index()] = Some(image);
        let report = verify_chain_map(&phi, &p, &p).unwrap();
        assert_eq!(report.first_failure().unwrap().generator, a);
    }
}

#[test]
fn unknot_augmentation() {
    let p = unknot(CoeffRing::Rationals, 2);
    let eps = unknot_aug(&p, &[("t0_12", 1), ("t1_21", 1)]);
    assert_eq!(verify_augmentation(&eps, &p).unwrap(), AugVerdict::Pass);
    let zero = unknot_aug(&p, &[]);
    match verify_augmentation(&zero, &p).unwrap() {
        AugVerdict::Failure { generator, residual } => {
            assert_eq!(p.generator(generator).name, "t1_11");
            assert!(residual.is_one());
        }
        AugVerdict::Pass => panic!("zero augmentation must fail"),
    }
    assert!(partial_linearize(&p, &zero).is_err());
    let lin = partial_linearize(&p, &eps).unwrap();
    assert_eq!(lin.num_generators(), 1);
    let a = lin.generator_id("a").unwrap();
    assert!(lin.differential(a).unwrap().is_zero());
    assert!(check_d_squared(&lin).unwrap().passed());
}

#[test]
fn augmentations_need_degree_zero_support() {
    let p = unknot(CoeffRing::Rationals, 1);
    let bad = unknot_aug(&p, &[("t0_12", 1), ("t1_21", 1), ("t1_11", 1)]);
    assert!(matches!(verify_augmentation(&bad, &p), Err(MorphismError::InvalidAugmentation { .. })));
}

#[test]
fn linearizing_without_short_generators_is_the_identity() {
    let mut p = Presentation::new("long", CoeffRing::Rationals);
    let e = p.add_idempotent("e1").unwrap();
    let a = long(&mut p, "a", -1, e, e);
    p.set_differential(a, p.one()).unwrap();
    let eps = Augmentation::new("eps", &p, vec![]);
    assert_eq!(partial_linearize(&p, &eps).unwrap(), p);
}

fn edge_map(dom: &Presentation, cod: &Presentation) -> DgMap {
    let mut phi = DgMap::new("phi", dom, cod);
    let big = [("e1", "E1"), ("e2", "E1"), ("e3", "E2"), ("e4", "E2")];
    for (d, c) in big {
        phi.idempotents[dom.idempotent_id(d).unwrap().index()] = Some(cod.idempotent_id(c).unwrap());
    }
    for (g, gen) in dom.generators() {
        if gen.role.is_short() {
            let target = format!("xc{}", &gen.name[1..]);
            phi.generators[g.index()] = Some(cod.gen(cod.generator_id(&target).unwrap()));
        }
    }
    phi
}

#[test]
fn edge_filling_is_obstructed() {
    let bounds = Bounds::default();
    for ring in [CoeffRing::Gf2, CoeffRing::Rationals] {
        let dom = edge(ring.clone(), 2);
        let cod = merged_points(ring, 2);
        let phi = edge_map(&dom, &cod);
        match obstruct_y_filling(&dom, &cod, &phi, &bounds).unwrap() {
            Obstruction::Obstructed(o) => {
                assert_eq!(dom.generator(o.decisive.generator).name, "a1");
                assert_eq!(cod.render(&o.target), "E1");
                assert_eq!(o.certificate.bounds.max_word_length, 6);
            }
            Obstruction::Inconclusive(i) => panic!("{:?}", i.reasons),
        }
    }
}

#[test]
fn a_contracting_codomain_defeats_the_obstruction() {
    let dom = edge(CoeffRing::Gf2, 1);
    let mut cod = merged_points(CoeffRing::Gf2, 1);
    let e1 = cod.idempotent_id("E1").unwrap();
    let u = long(&mut cod, "u", -1, e1, e1);
    cod.set_differential(u, cod.idem(e1)).unwrap();
    let phi = edge_map(&dom, &cod);
    match obstruct_y_filling(&dom, &cod, &phi, &Bounds::default()).unwrap() {
        Obstruction::Inconclusive(i) => assert!(i.reasons.iter().any(|r| r.contains("solvable"))),
        Obstruction::Obstructed(_) => panic!("u bounds E1"),
    }
}

#[test]
fn codomain_must_flip_parity() {
    let dom = edge(CoeffRing::Gf2, 1);
    let mut cod = merged_points(CoeffRing::Gf2, 1);
    let e1 = cod.idempotent_id("E1").unwrap();
    let u = long(&mut cod, "u", 0, e1, e1);
    let x = cod.generator_id("xc0_12").unwrap();
    cod.set_differential(u, cod.gen(x)).unwrap();
    let phi = edge_map(&dom, &cod);
    assert!(matches!(
        obstruct_y_filling(&dom, &cod, &phi, &Bounds::default()),
        Err(MorphismError::UnsupportedCodomain(_))
    ));
}
