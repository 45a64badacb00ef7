//! Independent construction of the point algebras used as test oracles,
//! written directly from the defining formulas.
#![allow(dead_code)]

use cedga_algebra::{Coeff, CoeffRing, Element, GenId, Generator, IdemId, Presentation, Role};

fn name(prefix: &str, p: u32, i: usize, j: usize) -> String {
    format!("{prefix}{p}_{i}{j}")
}

fn exists(p: u32, i: usize, j: usize) -> bool {
    p > 0 || i < j
}

/// Adds the chords `prefix{p}_{ij}` on points `1..=n` mapped to `idem[i-1]`.
/// Grading `1 - 2p + m(j) - m(i)`, sign `(-1)^(m(k)+m(j))` on
/// `c^{p-l}_kj c^l_ik`, plus `e_i` in `∂c^1_ii`.
pub fn add_points(pres: &mut Presentation, prefix: &str, m: &[i64], pmax: u32, idem: &[IdemId]) {
    let n = m.len();
    for p in 0..=pmax {
        for i in 1..=n {
            for j in 1..=n {
                if exists(p, i, j) {
                    let degree = 1 - 2 * p as i64 + m[j - 1] - m[i - 1];
                    pres.add_generator(Generator {
                        name: name(prefix, p, i, j),
                        degree,
                        source: idem[i - 1],
                        target: idem[j - 1],
                        role: Role::Short(prefix.to_string()),
                        level: Some(p),
                    })
                    .unwrap();
                }
            }
        }
    }
    let ring = pres.ring().clone();
    for p in 0..=pmax {
        for i in 1..=n {
            for j in 1..=n {
                if !exists(p, i, j) {
                    continue;
                }
                let mut d = pres.zero();
                if p == 1 && i == j {
                    d = &d + &pres.idem(idem[i - 1]);
                }
                for l in 0..=p {
                    for k in 1..=n {
                        if !exists(p - l, k, j) || !exists(l, i, k) {
                            continue;
                        }
                        let sign = if (m[k - 1] + m[j - 1]).rem_euclid(2) == 0 { 1 } else { -1 };
                        let a = pres.generator_id(&name(prefix, p - l, k, j)).unwrap();
                        let b = pres.generator_id(&name(prefix, l, i, k)).unwrap();
                        let w = pres.word(&[a, b]).unwrap();
                        d.add_term(w, Coeff::from_i64(&ring, sign));
                    }
                }
                let g = pres.generator_id(&name(prefix, p, i, j)).unwrap();
                pres.set_differential(g, d).unwrap();
            }
        }
    }
}

/// The algebra of `m.len()` points, each on its own idempotent.
pub fn points(ring: CoeffRing, m: &[i64], pmax: u32) -> Presentation {
    let mut pres = Presentation::new("points", ring);
    let idem: Vec<IdemId> = (1..=m.len()).map(|i| pres.add_idempotent(format!("e{i}")).unwrap()).collect();
    add_points(&mut pres, "c", m, pmax, &idem);
    pres
}

pub fn long(pres: &mut Presentation, name: &str, degree: i64, source: IdemId, target: IdemId) -> GenId {
    pres.add_generator(Generator { name: name.into(), degree, source, target, role: Role::Long, level: None })
        .unwrap()
}

pub fn parse_word(pres: &Presentation, text: &str) -> Element {
    let names: Vec<&str> = text.split('*').collect();
    Element::monomial(pres.ring(), pres.word_by_names(&names).unwrap(), Coeff::one(pres.ring()))
}

/// Two points on one idempotent with `m = (1, 0)` and a long chord `a`
/// with `∂a = 1 - t0_12`.
pub fn unknot(ring: CoeffRing, pmax: u32) -> Presentation {
    let mut pres = Presentation::new("unknot", ring);
    let e = pres.add_idempotent("e1").unwrap();
    let a = long(&mut pres, "a", -1, e, e);
    add_points(&mut pres, "t", &[1, 0], pmax, &[e, e]);
    let da = &pres.one() - &parse_word(&pres, "t0_12");
    pres.set_differential(a, da).unwrap();
    pres
}

/// Two copies of the two-point algebra sharing idempotents, joined by a
/// long chord `a : e1 → e2` with `∂a = ta0_12 - tb0_12`.
pub fn two_handles(ring: CoeffRing, pmax: u32) -> Presentation {
    let mut pres = Presentation::new("two_handles", ring);
    let e1 = pres.add_idempotent("e1").unwrap();
    let e2 = pres.add_idempotent("e2").unwrap();
    let a = long(&mut pres, "a", -1, e1, e2);
    add_points(&mut pres, "ta", &[1, 0], pmax, &[e1, e2]);
    add_points(&mut pres, "tb", &[1, 0], pmax, &[e1, e2]);
    let da = &parse_word(&pres, "ta0_12") - &parse_word(&pres, "tb0_12");
    pres.set_differential(a, da).unwrap();
    pres
}

/// Two three-point links `x`, `y` whose first two points sit on `e1`, `e2`
/// respectively, with `∂a1 = e1 - x0_12`, `∂a2 = e2 - y0_12`.
pub fn edge(ring: CoeffRing, pmax: u32) -> Presentation {
    let mut pres = Presentation::new("edge", ring);
    let e: Vec<IdemId> = (1..=4).map(|i| pres.add_idempotent(format!("e{i}")).unwrap()).collect();
    let a1 = long(&mut pres, "a1", -1, e[0], e[0]);
    let a2 = long(&mut pres, "a2", -1, e[1], e[1]);
    add_points(&mut pres, "x", &[1, 0, 0], pmax, &[e[0], e[0], e[2]]);
    add_points(&mut pres, "y", &[1, 0, 0], pmax, &[e[1], e[1], e[3]]);
    let d1 = &pres.idem(e[0]) - &parse_word(&pres, "x0_12");
    let d2 = &pres.idem(e[1]) - &parse_word(&pres, "y0_12");
    pres.set_differential(a1, d1).unwrap();
    pres.set_differential(a2, d2).unwrap();
    pres
}

/// Three points, the first two on one idempotent.
pub fn merged_points(ring: CoeffRing, pmax: u32) -> Presentation {
    let mut pres = Presentation::new("merged", ring);
    let e1 = pres.add_idempotent("E1").unwrap();
    let e2 = pres.add_idempotent("E2").unwrap();
    add_points(&mut pres, "xc", &[1, 0, 0], pmax, &[e1, e1, e2]);
    pres
}
