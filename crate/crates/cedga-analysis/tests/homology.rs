mod common;

use cedga_algebra::{CoeffRing, Presentation};
use cedga_analysis::{h0, AnalysisError};
use common::{long, parse_word, two_handles, unknot};

#[test]
fn one_handle_unknot_is_the_ground_ring() {
    let p = unknot(CoeffRing::Rationals, 2);
    let r = h0(&p, 8).unwrap();
    assert!(r.is_ground_ring);
    assert_eq!(r.dimension(), 1);
    assert_eq!(r.relations.len(), 3);
    // t0_12 and t1_21 both reduce to the unit.
    for w in ["t0_12", "t1_21", "t1_21*t0_12"] {
        assert_eq!(r.system.normal_form(&parse_word(&p, w)), p.one(), "{w}");
    }
}

#[test]
fn two_handles_give_a_matrix_algebra() {
    let p = two_handles(CoeffRing::Rationals, 2);
    let r = h0(&p, 8).unwrap();
    assert!(!r.is_ground_ring);
    let basis: Vec<String> = r.basis.iter().map(|w| p.render_word(w)).collect();
    assert_eq!(basis, ["e1", "e2", "ta0_12", "ta1_21"]);
    let nf = |w: &str| p.render(&r.system.normal_form(&parse_word(&p, w)));
    assert_eq!(nf("ta1_21*ta0_12"), "e1");
    assert_eq!(nf("ta0_12*ta1_21"), "e2");
    assert_eq!(nf("tb0_12"), "ta0_12");
}

#[test]
fn rewriting_properties() {
    for p in [unknot(CoeffRing::Gf2, 2), two_handles(CoeffRing::Gf2, 2)] {
        let low = h0(&p, 6).unwrap();
        let high = h0(&p, 8).unwrap();
        assert_eq!(low.is_ground_ring, high.is_ground_ring);
        for (_, rel) in &high.relations {
            assert!(high.system.normal_form(rel).is_zero());
        }
        for rule in &high.system.rules {
            let once = high.system.normal_form(&rule.rhs);
            assert_eq!(high.system.normal_form(&once), once);
        }
    }
}

#[test]
fn free_degree_zero_algebra_is_counted() {
    let mut p = Presentation::new("free", CoeffRing::Rationals);
    let e = p.add_idempotent("e1").unwrap();
    let x = long(&mut p, "x", 0, e, e);
    p.set_differential(x, p.zero()).unwrap();
    let r = h0(&p, 4).unwrap();
    assert_eq!(r.dimension(), 5);
    assert!(!r.is_ground_ring);
}

#[test]
fn killed_idempotent_collapses_its_corner() {
    let mut p = Presentation::new("kill", CoeffRing::Rationals);
    let e1 = p.add_idempotent("e1").unwrap();
    let e2 = p.add_idempotent("e2").unwrap();
    let a = long(&mut p, "a", -1, e1, e1);
    let x = long(&mut p, "x", 0, e1, e2);
    p.set_differential(a, p.idem(e1)).unwrap();
    p.set_differential(x, p.zero()).unwrap();
    let r = h0(&p, 4).unwrap();
    let basis: Vec<String> = r.basis.iter().map(|w| p.render_word(w)).collect();
    assert_eq!(basis, ["e2"]);
    assert!(!r.is_ground_ring);
}

#[test]
fn mixed_degree_relations_are_unsupported() {
    let mut p = Presentation::new("mixed", CoeffRing::Rationals);
    let e = p.add_idempotent("e1").unwrap();
    let a = long(&mut p, "a", -1, e, e);
    let u = long(&mut p, "u", 1, e, e);
    let v = long(&mut p, "v", -1, e, e);
    p.set_differential(a, parse_word(&p, "u*v")).unwrap();
    p.set_differential(u, p.zero()).unwrap();
    p.set_differential(v, p.zero()).unwrap();
    assert!(matches!(h0(&p, 4), Err(AnalysisError::Unsupported(_))));
}
