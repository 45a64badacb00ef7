use std::collections::BTreeMap;

use cedga_algebra::{Convention, Generator, IdemId, Presentation, Role};
use cedga_coeff::{Coeff, CoeffRing};
use cedga_dsl::{parse_element, Bundle};
use cedga_morphisms::{Augmentation, DgMap};

use crate::{add_hat_points, add_points, CatalogError, HatSpec, PointSpec};

/// Level bound used when none is requested.
pub const DEFAULT_P_MAX: u32 = 2;

const NAMES: [&str; 8] = [
    "unknot_one_handle",
    "unknot_two_handles",
    "saddle_cobordism",
    "unknot_edge",
    "theta",
    "a3_link",
    "a3_arboreal",
    "singular_torus",
];

pub fn list() -> &'static [&'static str] {
    &NAMES
}

pub fn example(name: &str) -> Result<Bundle, CatalogError> {
    example_with_level(name, DEFAULT_P_MAX)
}

/// The named bundle with link chords up to level `p_max`. Every long
/// differential uses levels 0 and 1 only, so `p_max` must be at least 1.
pub fn example_with_level(name: &str, p_max: u32) -> Result<Bundle, CatalogError> {
    if p_max < 1 {
        return Err(CatalogError::InvalidFamily("catalog examples need p_max >= 1".into()));
    }
    match name {
        "unknot_one_handle" => unknot_one_handle(p_max),
        "unknot_two_handles" => unknot_two_handles(p_max),
        "saddle_cobordism" => saddle_cobordism(p_max),
        "unknot_edge" => unknot_edge(p_max),
        "theta" => theta(p_max),
        "a3_link" => a3_link(p_max),
        "a3_arboreal" => a3_arboreal(p_max),
        "singular_torus" => singular_torus(p_max),
        other => Err(CatalogError::UnknownExample(other.to_string())),
    }
}

fn presentation(name: &str, ring: &CoeffRing, idempotents: &[&str]) -> Result<(Presentation, Vec<IdemId>), CatalogError> {
    let mut p = Presentation::new(name, ring.clone());
    p.set_convention(Some(Convention::PotentialPlus));
    let ids = idempotents.iter().map(|l| p.add_idempotent(*l)).collect::<Result<Vec<_>, _>>()?;
    Ok((p, ids))
}

fn gen(p: &mut Presentation, name: &str, degree: i64, src: &str, tgt: &str, role: Role) -> Result<(), CatalogError> {
    let source = p.idempotent_id(src).expect("catalog idempotent");
    let target = p.idempotent_id(tgt).expect("catalog idempotent");
    p.add_generator(Generator { name: name.into(), degree, source, target, role, level: None })?;
    Ok(())
}

fn long(p: &mut Presentation, name: &str, degree: i64, src: &str, tgt: &str) -> Result<(), CatalogError> {
    gen(p, name, degree, src, tgt, Role::Long)
}

fn diff(p: &mut Presentation, name: &str, text: &str) -> Result<(), CatalogError> {
    let g = p.generator_id(name).expect("catalog generator");
    let d = parse_element(p, text)?;
    p.set_differential(g, d)?;
    Ok(())
}

fn points(p: &mut Presentation, prefix: &str, m: &[i64], p_max: u32, on: &[&str]) -> Result<(), CatalogError> {
    let idem: Vec<IdemId> = on.iter().map(|l| p.idempotent_id(l).expect("catalog idempotent")).collect();
    add_points(p, &PointSpec::new(prefix, m, p_max), &idem)
}

fn assign(phi: &mut DgMap, src: &Presentation, tgt: &Presentation, name: &str, text: &str) -> Result<(), CatalogError> {
    let g = src.generator_id(name).expect("catalog generator");
    phi.generators[g.index()] = Some(parse_element(tgt, text)?);
    Ok(())
}

fn send(phi: &mut DgMap, src: &Presentation, tgt: &Presentation, from: &str, to: &str) {
    let e = src.idempotent_id(from).expect("catalog idempotent");
    phi.idempotents[e.index()] = Some(tgt.idempotent_id(to).expect("catalog idempotent"));
}

fn bundle(ring: CoeffRing, notes: &[&str], presentations: Vec<Presentation>) -> Bundle {
    let mut b = Bundle::new(ring);
    b.notes = notes.iter().map(|s| s.to_string()).collect();
    for p in presentations {
        b.insert(p);
    }
    b
}

fn unknot_one_handle(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Rationals;
    let (mut p, _) = presentation("main", &ring, &["e1"])?;
    long(&mut p, "a", -1, "e1", "e1")?;
    points(&mut p, "t", &[1, 0], p_max, &["e1", "e1"])?;
    diff(&mut p, "a", "1 - t0_12")?;
    let mut eps = Augmentation::new("eps", &p, vec!["t".into()]);
    for g in ["t0_12", "t1_21"] {
        eps.values[p.generator_id(g).expect("chord").index()] = Some(Coeff::one(&ring));
    }
    let mut b = bundle(
        ring,
        &[
            "Standard unknot with one handle: a single long chord a over a two-point link t with potentials (1, 0).",
            "eps sends t0_12 and t1_21 to 1 and every other link chord to 0.",
        ],
        vec![p],
    );
    b.augmentations.insert("eps".into(), eps);
    Ok(b)
}

fn unknot_two_handles(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Rationals;
    let (mut p, _) = presentation("main", &ring, &["e1", "e2"])?;
    long(&mut p, "a", -1, "e1", "e2")?;
    points(&mut p, "ta", &[1, 0], p_max, &["e1", "e2"])?;
    points(&mut p, "tb", &[1, 0], p_max, &["e1", "e2"])?;
    diff(&mut p, "a", "ta0_12 - tb0_12")?;
    Ok(bundle(
        ring,
        &["Unknot with two handles: two copies ta, tb of the two-point link sharing e1, e2, joined by a."],
        vec![p],
    ))
}

fn saddle_cobordism(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Gf2;
    let (mut dom, _) = presentation("main", &ring, &["e"])?;
    long(&mut dom, "a1p", -1, "e", "e")?;
    long(&mut dom, "a2p", -1, "e", "e")?;
    long(&mut dom, "b", 0, "e", "e")?;
    diff(&mut dom, "a1p", "1 + b")?;
    diff(&mut dom, "a2p", "1 + b")?;
    diff(&mut dom, "b", "0")?;

    let (mut cod, ids) = presentation("codomain", &ring, &["E", "F"])?;
    long(&mut cod, "a1m", -1, "E", "E")?;
    long(&mut cod, "a2m", -1, "E", "E")?;
    add_hat_points(&mut cod, &HatSpec::new(PointSpec::new("x", &[1, 0, 0], p_max), false), &[ids[0], ids[0], ids[1]])?;
    diff(&mut cod, "a1m", "E + x0_12")?;
    diff(&mut cod, "a2m", "E + y0_12")?;

    let mut phi = DgMap::new("phi", &dom, &cod);
    send(&mut phi, &dom, &cod, "e", "E");
    assign(&mut phi, &dom, &cod, "a1p", "a1m + xh0_12")?;
    assign(&mut phi, &dom, &cod, "a2p", "a2m")?;
    assign(&mut phi, &dom, &cod, "b", "y0_12")?;

    let mut b = bundle(
        ring,
        &[
            "Saddle cobordism over GF2. The domain differential of b is zero.",
            "Domain: d(a1p) = d(a2p) = 1 + b, the second forced by (d o phi)(a2p) = d(a2m) = 1 + y0_12.",
            "Inferred, not displayed: codomain d(a1m) = 1 + x0_12 and d(a2m) = 1 + y0_12, forced by the same chain-map identities.",
            "Codomain link part: hat algebra on three points (x, y, xh), points 1 and 2 on E, point 3 on F.",
        ],
        vec![dom, cod],
    );
    b.maps.insert("phi".into(), phi);
    Ok(b)
}

/// A link of a domain: chord prefix and the domain idempotent of each point.
struct Link<'a> {
    prefix: &'a str,
    on: [&'a str; 3],
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Sends each domain link to a codomain copy of the three-point algebra
/// (`pairing[link] = copy`) and builds the coarsest codomain idempotent ring
/// on which that assignment is well defined.
#[allow(clippy::too_many_arguments)]
fn pairing_codomain(
    dom: &Presentation,
    links: &[Link],
    copies: &[&str],
    pairing: &BTreeMap<&str, &str>,
    m: &[i64],
    p_max: u32,
    name: &str,
    map_name: &str,
) -> Result<(Presentation, DgMap), CatalogError> {
    let slot = |copy: &str, i: usize| copies.iter().position(|c| *c == copy).expect("copy") * 3 + i;
    let mut parent: Vec<usize> = (0..copies.len() * 3).collect();
    let mut first: BTreeMap<&str, usize> = BTreeMap::new();
    for l in links {
        for (i, e) in l.on.iter().enumerate() {
            let s = slot(pairing[l.prefix], i);
            match first.get(e) {
                Some(&t) => {
                    let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    first.insert(e, s);
                }
            }
        }
    }
    let mut label: BTreeMap<usize, String> = BTreeMap::new();
    for s in 0..parent.len() {
        let r = find(&mut parent, s);
        let next = label.len() + 1;
        label.entry(r).or_insert_with(|| format!("E{next}"));
    }
    let labels: Vec<&str> = label.values().map(String::as_str).collect();
    let (mut cod, _) = presentation(name, dom.ring(), &labels)?;
    for c in copies {
        let on: Vec<String> = (0..3).map(|i| label[&find(&mut parent, slot(c, i))].clone()).collect();
        let on: Vec<&str> = on.iter().map(String::as_str).collect();
        points(&mut cod, c, m, p_max, &on)?;
    }
    let mut phi = DgMap::new(map_name, dom, &cod);
    for (e, s) in &first {
        let r = find(&mut parent, *s);
        send(&mut phi, dom, &cod, e, &label[&r]);
    }
    for (g, gen) in dom.generators() {
        let Some(link) = gen.role.link() else { continue };
        let copy = pairing[link];
        let target = format!("{copy}{}", &gen.name[link.len()..]);
        phi.generators[g.index()] = Some(cod.gen(cod.generator_id(&target).expect("paired chord")));
    }
    Ok((cod, phi))
}

fn unknot_edge(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Gf2;
    let m = [1, 0, 0];
    let (mut dom, _) = presentation("main", &ring, &["e1", "e2", "e3", "e4"])?;
    long(&mut dom, "a1", -1, "e1", "e1")?;
    long(&mut dom, "a2", -1, "e2", "e2")?;
    let links = [Link { prefix: "x", on: ["e1", "e1", "e3"] }, Link { prefix: "y", on: ["e2", "e2", "e4"] }];
    for l in &links {
        points(&mut dom, l.prefix, &m, p_max, &l.on)?;
    }
    diff(&mut dom, "a1", "e1 - x0_12")?;
    diff(&mut dom, "a2", "e2 - y0_12")?;
    let pairing = BTreeMap::from([("x", "xc"), ("y", "xc")]);
    let (cod, phi) = pairing_codomain(&dom, &links, &["xc"], &pairing, &m, p_max, "i3", "pairing")?;
    let mut b = bundle(
        ring,
        &[
            "Unknot edge: two three-point links x, y with potentials (1, 0, 0), each with its first two points on one idempotent.",
            "Codomain i3: a single three-point algebra xc; the map pairing sends both links to it.",
        ],
        vec![dom, cod],
    );
    b.maps.insert("pairing".into(), phi);
    Ok(b)
}

fn theta(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Gf2;
    let m = [0, 0, 0];
    let (mut dom, _) = presentation("main", &ring, &["e1", "e2", "e3"])?;
    long(&mut dom, "a", -1, "e1", "e1")?;
    long(&mut dom, "b", 0, "e2", "e3")?;
    points(&mut dom, "x", &m, p_max, &["e1", "e2", "e3"])?;
    points(&mut dom, "y", &m, p_max, &["e1", "e2", "e3"])?;
    diff(&mut dom, "a", "e1 + y1_31*b*x0_12 + y1_31*x0_13 - y1_21*x0_12")?;
    diff(&mut dom, "b", "x0_23 - y0_23")?;

    let (mut cod, _) = presentation("xc", &ring, &["E1", "E2", "E3"])?;
    points(&mut cod, "xc", &m, p_max, &["E1", "E2", "E3"])?;
    let mut eps = DgMap::new("eps", &dom, &cod);
    for (d, c) in [("e1", "E1"), ("e2", "E2"), ("e3", "E3")] {
        send(&mut eps, &dom, &cod, d, c);
    }
    for (g, gen) in dom.generators() {
        if let Some(link) = gen.role.link() {
            let target = format!("xc{}", &gen.name[link.len()..]);
            eps.generators[g.index()] = Some(cod.gen(cod.generator_id(&target).expect("chord")));
        }
    }
    assign(&mut eps, &dom, &cod, "a", "xc1_11")?;
    assign(&mut eps, &dom, &cod, "b", "0")?;
    let mut b = bundle(
        ring,
        &[
            "Theta graph leg: two three-point links x, y with zero potentials over shared idempotents e1, e2, e3.",
            "eps identifies both links with xc and sends a to xc1_11 and b to 0.",
        ],
        vec![dom, cod],
    );
    b.maps.insert("eps".into(), eps);
    Ok(b)
}

const A3_M: [i64; 3] = [0, 0, -1];

fn a3_bundle(
    ring: CoeffRing,
    dom: Presentation,
    links: &[Link],
    pairings: &[[(&str, &str); 4]],
    notes: &[&str],
    p_max: u32,
) -> Result<Bundle, CatalogError> {
    let mut b = bundle(ring, notes, vec![]);
    for pairing in pairings {
        let map: BTreeMap<&str, &str> = pairing.iter().copied().collect();
        let tag = |copy: &str| {
            let ls: Vec<&str> = pairing.iter().filter(|(_, c)| *c == copy).map(|(l, _)| *l).collect();
            ls.concat()
        };
        let name = format!("{}_{}", tag("xc"), tag("yc"));
        let (cod, phi) =
            pairing_codomain(&dom, links, &["xc", "yc"], &map, &A3_M, p_max, &name, &format!("pair_{name}"))?;
        b.maps.insert(phi.name.clone(), phi);
        b.insert(cod);
    }
    b.insert(dom);
    Ok(b)
}

fn a3_link(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Gf2;
    let (mut dom, _) = presentation("main", &ring, &["e1", "e2", "e3", "e4", "e5", "e6"])?;
    long(&mut dom, "a1", -1, "e1", "e1")?;
    long(&mut dom, "a2", -1, "e2", "e2")?;
    long(&mut dom, "b", -1, "e3", "e6")?;
    let links = [
        Link { prefix: "x", on: ["e1", "e3", "e4"] },
        Link { prefix: "y", on: ["e2", "e4", "e6"] },
        Link { prefix: "v", on: ["e1", "e5", "e6"] },
        Link { prefix: "w", on: ["e2", "e3", "e5"] },
    ];
    for l in &links {
        points(&mut dom, l.prefix, &A3_M, p_max, &l.on)?;
    }
    diff(&mut dom, "a1", "e1 + v1_31*b*x0_12 - v1_21*w0_23*x0_12 + v1_31*y0_23*x0_13")?;
    diff(&mut dom, "a2", "e2 - y1_31*b*w0_12 - y1_21*x0_23*w0_12 + y1_31*v0_23*w0_13")?;
    diff(&mut dom, "b", "y0_23*x0_23 - v0_23*w0_23")?;
    a3_bundle(
        ring,
        dom,
        &links,
        &[
            [("x", "xc"), ("w", "xc"), ("y", "yc"), ("v", "yc")],
            [("x", "xc"), ("y", "xc"), ("v", "yc"), ("w", "yc")],
            [("x", "xc"), ("v", "xc"), ("y", "yc"), ("w", "yc")],
        ],
        &[
            "A3 link: four three-point links x, y, v, w with potentials (0, 0, -1) and long chords a1, a2, b.",
            "Each map pair_* sends two links to xc and two to yc; its codomain is the free product of the two \
             copies over the idempotents forced by the pairing.",
        ],
        p_max,
    )
}

fn a3_arboreal(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::Gf2;
    let (mut dom, _) = presentation("main", &ring, &["e1", "e2", "e3", "e4", "e5", "e6"])?;
    long(&mut dom, "a1", -1, "e1", "e6")?;
    long(&mut dom, "a2", -1, "e3", "e3")?;
    long(&mut dom, "b", -1, "e2", "e5")?;
    let links = [
        Link { prefix: "x", on: ["e1", "e2", "e4"] },
        Link { prefix: "y", on: ["e6", "e2", "e5"] },
        Link { prefix: "v", on: ["e3", "e4", "e5"] },
        Link { prefix: "w", on: ["e3", "e1", "e6"] },
    ];
    for l in &links {
        points(&mut dom, l.prefix, &A3_M, p_max, &l.on)?;
    }
    diff(&mut dom, "a1", "w0_23 + y1_31*b*x0_12 - y1_21*x0_12 + y1_31*v0_23*x0_13")?;
    diff(
        &mut dom,
        "a2",
        "e3 - w1_21*x1_31*v0_12 - w1_31*(y1_31*v0_13 \
         + (a1*x1_31 - y1_21*x1_32 + y1_31*b*x1_32 + y1_31*v0_23*x1_33)*v0_12)",
    )?;
    diff(&mut dom, "b", "v0_23*x0_23 - y0_23")?;
    a3_bundle(
        ring,
        dom,
        &links,
        &[[("x", "xc"), ("y", "xc"), ("v", "yc"), ("w", "yc")]],
        &[
            "Arboreal A3 Lagrangian: four three-point links x, y, v, w with potentials (0, 0, -1).",
            "The map pair_xy_vw sends x, y to xc and v, w to yc.",
        ],
        p_max,
    )
}

fn singular_torus(p_max: u32) -> Result<Bundle, CatalogError> {
    let ring = CoeffRing::laurent(&["lam", "mu"]).expect("parameter names");
    let (mut p, _) = presentation("main", &ring, &["e"])?;
    long(&mut p, "a", -1, "e", "e")?;
    long(&mut p, "ah", -2, "e", "e")?;
    points(&mut p, "c", &[1, 0], p_max, &["e", "e"])?;
    let hopf = || Role::Short("hopf".into());
    gen(&mut p, "p", 0, "e", "e", hopf())?;
    gen(&mut p, "q", 0, "e", "e", hopf())?;
    gen(&mut p, "ph", -1, "e", "e", hopf())?;
    gen(&mut p, "qh", -1, "e", "e", hopf())?;
    diff(&mut p, "a", "e - p")?;
    diff(&mut p, "ah", "a - c1_21*a*c0_12 + ph - c1_11")?;
    diff(&mut p, "p", "0")?;
    diff(&mut p, "q", "0")?;
    diff(&mut p, "ph", "p - c1_21*p*c0_12")?;
    diff(&mut p, "qh", "q - c0_12*q*c1_21")?;

    let scope = vec!["c".to_string(), "hopf".to_string()];
    let mut augs = Vec::new();
    for (name, pv) in [("eps", "mu"), ("eps_prime", "mu - lam*mu")] {
        let mut eps = Augmentation::new(name, &p, scope.clone());
        for (g, v) in [("c0_12", "lam"), ("c1_21", "lam^-1"), ("p", pv)] {
            let c = Coeff::parse(&ring, v).expect("catalog coefficient");
            eps.values[p.generator_id(g).expect("generator").index()] = Some(c);
        }
        augs.push(eps);
    }
    let mut b = bundle(
        ring,
        &[
            "Singular torus over Laurent polynomials in lam, mu: a two-point link c, chords p, q, ph, qh and long chords a, ah.",
            "eps and eps_prime are defined on the link subalgebra (scope c and hopf) only; a and ah are left unassigned.",
        ],
        vec![p],
    );
    for eps in augs {
        b.augmentations.insert(eps.name.clone(), eps);
    }
    Ok(b)
}
