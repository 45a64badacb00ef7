use cedga_algebra::{CoeffRing, Convention, Presentation};
use cedga_analysis::{check_d_squared, check_degree, check_parity_flip};
use cedga_catalog::{
    free_product, make_hat_point_algebra, make_hat_point_algebra_with, make_point_algebra, make_point_algebra_with,
    CatalogError, HatSign, SignReading,
};
use cedga_morphisms::verify_chain_map;

const PLUS: Convention = Convention::PotentialPlus;

fn d_squared_ok(p: &Presentation) -> bool {
    check_d_squared(p).unwrap().passed()
}

fn d_of(p: &Presentation, name: &str) -> String {
    p.render(p.differential(p.generator_id(name).unwrap()).unwrap())
}

#[test]
fn three_points_at_level_one() {
    let p = make_point_algebra(&[0, 0, 0], 1, PLUS, CoeffRing::Gf2).unwrap();
    assert_eq!(p.num_generators(), 12);
    assert_eq!(p.num_idempotents(), 3);
    assert_eq!(d_of(&p, "c0_12"), "0");
    assert_eq!(p.generator(p.generator_id("c1_11").unwrap()).degree, -1);
    assert_eq!(d_of(&p, "c0_13"), "c0_23*c0_12");
}

#[test]
fn conventions_mirror_degrees() {
    let plus = make_point_algebra(&[1, 0], 1, PLUS, CoeffRing::Rationals).unwrap();
    let minus = make_point_algebra(&[1, 0], 1, Convention::PotentialMinus, CoeffRing::Rationals).unwrap();
    let deg = |p: &Presentation| p.generator(p.generator_id("c0_12").unwrap()).degree;
    assert_eq!((deg(&plus), deg(&minus)), (0, 2));
}

#[test]
fn too_few_points() {
    assert!(matches!(make_point_algebra(&[0], 1, PLUS, CoeffRing::Gf2), Err(CatalogError::InvalidFamily(_))));
}

#[test]
fn d_squared_over_gf2_up_to_level_three() {
    for n in 2..=4 {
        for p_max in 0..=3 {
            let p = make_point_algebra(&vec![0; n], p_max, PLUS, CoeffRing::Gf2).unwrap();
            assert!(d_squared_ok(&p), "n = {n}, p_max = {p_max}");
            assert!(check_degree(&p).is_empty());
            assert!(check_parity_flip(&p).holds);
        }
    }
}

#[test]
fn only_the_target_potential_reading_squares_to_zero_over_q() {
    for m in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 0], [0, 0, -1]] {
        for s in SignReading::ALL {
            let p = make_point_algebra_with(&m, 2, PLUS, CoeffRing::Rationals, s).unwrap();
            assert_eq!(d_squared_ok(&p), s == SignReading::TargetPotential, "{m:?} {s}");
        }
    }
    // with zero potentials every reading except the uniform sign agrees, and that one works too
    for s in SignReading::ALL {
        assert!(d_squared_ok(&make_point_algebra_with(&[0, 0, 0], 2, PLUS, CoeffRing::Rationals, s).unwrap()));
    }
}

#[test]
fn hat_algebra_differentials() {
    let p = make_hat_point_algebra(&[0, 0, 0], 0, false, PLUS, CoeffRing::Rationals).unwrap();
    assert_eq!(d_of(&p, "xh0_12"), "x0_12 - y0_12");
    let closed = make_hat_point_algebra(&[0, 0, 0], 0, true, PLUS, CoeffRing::Rationals).unwrap();
    assert_eq!(d_of(&closed, "xh0_12"), "0");
    assert!(closed.generator_id("y0_12").is_none());

    let p = make_hat_point_algebra(&[1, 0, 0], 1, false, PLUS, CoeffRing::Rationals).unwrap();
    let xh = p.generator(p.generator_id("xh1_11").unwrap()).degree;
    let x = p.generator(p.generator_id("x1_11").unwrap()).degree;
    assert_eq!(xh, x - 1);
}

#[test]
fn hat_algebras_square_to_zero() {
    for p_max in 0..=3 {
        for closed in [false, true] {
            let p = make_hat_point_algebra(&[0, 0, 0], p_max, closed, PLUS, CoeffRing::Gf2).unwrap();
            assert!(d_squared_ok(&p));
            assert!(check_degree(&p).is_empty());
            // the x - y term keeps word length, so only the closed algebra flips parity
            let parity = check_parity_flip(&p);
            assert_eq!(parity.holds, closed);
            if let Some((g, w)) = parity.counterexample {
                assert!(p.generator(g).name.starts_with("xh"));
                assert_eq!(w.len(), 1);
            }
        }
    }
    for m in [[0, 0, 0], [1, 0, 0], [0, 0, -1]] {
        for closed in [false, true] {
            let plus = make_hat_point_algebra_with(&m, 2, closed, PLUS, CoeffRing::Rationals, HatSign::Plus).unwrap();
            let minus = make_hat_point_algebra_with(&m, 2, closed, PLUS, CoeffRing::Rationals, HatSign::Minus).unwrap();
            assert!(!d_squared_ok(&plus));
            assert!(d_squared_ok(&minus));
        }
    }
}

#[test]
fn free_product_of_two_point_algebras() {
    let a = make_point_algebra(&[0, 0, 0], 2, PLUS, CoeffRing::Gf2).unwrap();
    // a second copy with chord prefix d, so the generator sets are disjoint
    let b = {
        let mut out = Presentation::new("J3", CoeffRing::Gf2);
        out.set_convention(Some(PLUS));
        let idem: Vec<_> = (1..=3).map(|i| out.add_idempotent(format!("e{i}")).unwrap()).collect();
        cedga_catalog::add_points(&mut out, &cedga_catalog::PointSpec::new("d", &[0, 0, 0], 2), &idem).unwrap();
        out
    };
    let shared: Vec<_> = a.idempotents().map(|(e, _)| e).zip(b.idempotents().map(|(e, _)| e)).collect();
    let fp = free_product(&a, &b, &shared).unwrap();
    let p = &fp.presentation;
    assert_eq!(p.num_generators(), 2 * a.num_generators());
    assert_eq!(p.num_idempotents(), 3);
    assert!(d_squared_ok(p));
    assert!(check_parity_flip(p).holds);
    assert!(verify_chain_map(&fp.left, &a, p).unwrap().passed());
    assert!(verify_chain_map(&fp.right, &b, p).unwrap().passed());

    let empty = Presentation::new("empty", CoeffRing::Gf2);
    let unit = free_product(&a, &empty, &[]).unwrap();
    assert_eq!(unit.presentation.num_generators(), a.num_generators());
    assert_eq!(unit.presentation.num_idempotents(), a.num_idempotents());

    let dup = [shared[0], (shared[1].0, shared[0].1)];
    assert!(matches!(free_product(&a, &b, &dup), Err(CatalogError::BadMatching(_))));
    let q = make_point_algebra(&[0, 0, 0], 1, PLUS, CoeffRing::Rationals).unwrap();
    assert!(matches!(free_product(&a, &q, &[]), Err(CatalogError::RingMismatch(..))));
    assert!(free_product(&a, &a, &[]).is_err(), "clashing generator names");
}
