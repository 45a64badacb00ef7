use cedga_coeff::{BigRational, Coeff, CoeffRing};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Coeff> {
    (-20i64..20, 1i64..8).prop_map(|(n, d)| Coeff::Rational(BigRational::new(n.into(), d.into())))
}

fn gf2() -> impl Strategy<Value = Coeff> {
    any::<bool>().prop_map(Coeff::Gf2)
}

fn laurent_ring() -> CoeffRing {
    CoeffRing::laurent(&["lam", "mu"]).unwrap()
}

fn laurent() -> impl Strategy<Value = Coeff> {
    let term = (-3i64..4, -2i64..3, -2i64..3);
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        let ring = laurent_ring();
        let mut acc = Coeff::zero(&ring);
        for (c, a, b) in terms {
            let m = &Coeff::param_power(&ring, "lam", a).unwrap() * &Coeff::param_power(&ring, "mu", b).unwrap();
            acc = &acc + &(&Coeff::from_i64(&ring, c) * &m);
        }
        acc
    })
}

#[allow(clippy::eq_op)]
fn check_laws(a: &Coeff, b: &Coeff, c: &Coeff) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert!((a - a).is_zero());
}

proptest! {
    #[test]
    fn rational_ring_laws(a in rational(), b in rational(), c in rational()) {
        check_laws(&a, &b, &c);
    }

    #[test]
    fn gf2_ring_laws(a in gf2(), b in gf2(), c in gf2()) {
        check_laws(&a, &b, &c);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        check_laws(&a, &b, &c);
    }

    #[test]
    fn inverse_is_two_sided(a in prop_oneof![rational(), gf2(), laurent()]) {
        if let Ok(inv) = a.inverse() {
            let one = Coeff::one(&a.ring());
            prop_assert_eq!(&a * &inv, one.clone());
            prop_assert_eq!(&inv * &a, one);
        }
    }

    #[test]
    fn laurent_print_parse_round_trip(a in laurent()) {
        let ring = laurent_ring();
        let printed = a.to_string();
        let back = Coeff::parse(&ring, &printed).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn rational_print_parse_round_trip(a in rational()) {
        let back = Coeff::parse(&CoeffRing::Rationals, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn parses_the_documented_literal_forms() {
    let ring = laurent_ring();
    let lam_inv = Coeff::parse(&ring, "lam^-1").unwrap();
    assert_eq!(lam_inv, Coeff::param_power(&ring, "lam", -1).unwrap());
    let e = Coeff::parse(&ring, "(mu - mu*lam)").unwrap();
    assert_eq!(e.to_string(), "mu - lam*mu");
    let m = Coeff::parse(&ring, "lam^-1*mu^2").unwrap();
    assert_eq!(m.to_string(), "lam^-1*mu^2");
    assert_eq!(Coeff::parse(&CoeffRing::Rationals, "-3").unwrap().to_string(), "-3");
    assert_eq!(Coeff::parse(&CoeffRing::Rationals, "2/3").unwrap().to_string(), "2/3");
    assert_eq!(Coeff::parse(&CoeffRing::Gf2, "1 + 1").unwrap(), Coeff::Gf2(false));
    assert!(Coeff::parse(&CoeffRing::Rationals, "lam").is_err());
    assert!(Coeff::parse(&ring, "(lam").is_err());
}

#[test]
fn ring_syntax_round_trips() {
    for text in ["Q", "GF2", "laurent(lam,mu)"] {
        let r: CoeffRing = text.parse().unwrap();
        assert_eq!(r.to_string(), text);
    }
    assert!("laurent(a,a)".parse::<CoeffRing>().is_err());
    assert!("laurent(1x)".parse::<CoeffRing>().is_err());
    assert!("Z".parse::<CoeffRing>().is_err());
}
