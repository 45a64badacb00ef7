use std::fmt;

use cedga_algebra::{Coeff, Convention, Element, GenId, Generator, IdemId, Presentation, Role, Word};
use cedga_coeff::CoeffRing;
use cedga_morphisms::DgMap;

use crate::CatalogError;

/// Sign attached to the quadratic term `c^{p-l}_kj c^l_ik` of `∂c^p_ij`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignReading {
    /// `(-1)^(m(i)+m(k))`.
    Printed,
    /// `-1` throughout.
    UniformMinus,
    /// `(-1)^(m(k)+m(j))`; the reading for which `∂² = 0` over ℚ for every
    /// potential vector.
    #[default]
    TargetPotential,
}

impl SignReading {
    pub const ALL: [SignReading; 3] = [SignReading::Printed, SignReading::UniformMinus, SignReading::TargetPotential];

    fn sign(self, m: &[i64], i: usize, k: usize, j: usize) -> i64 {
        let odd = |s: i64| if s.rem_euclid(2) == 0 { 1 } else { -1 };
        match self {
            SignReading::Printed => odd(m[i] + m[k]),
            SignReading::UniformMinus => -1,
            SignReading::TargetPotential => odd(m[k] + m[j]),
        }
    }
}

impl fmt::Display for SignReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignReading::Printed => "printed",
            SignReading::UniformMinus => "uniform_minus",
            SignReading::TargetPotential => "target_potential",
        })
    }
}

/// Sign in front of the `G` term of the hat differential.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HatSign {
    /// `d x̂ = x - y + G(∂x̂)`.
    Plus,
    /// `d x̂ = x - y - G(∂x̂)`; the homotopy sign, needed for `d² = 0` over ℚ.
    #[default]
    Minus,
}

/// `(p, i, j)` for the chord `c^p_ij`.
type Chord = (u32, usize, usize);

/// One family of chords `c^p_ij` between `potentials.len()` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSpec {
    pub prefix: String,
    pub potentials: Vec<i64>,
    pub p_max: u32,
    pub sign: SignReading,
}

impl PointSpec {
    pub fn new(prefix: impl Into<String>, potentials: &[i64], p_max: u32) -> PointSpec {
        PointSpec { prefix: prefix.into(), potentials: potentials.to_vec(), p_max, sign: SignReading::default() }
    }

    fn n(&self) -> usize {
        self.potentials.len()
    }

    /// `c0_12`, or `c0_12_3` style once indices can exceed 9.
    pub fn name(&self, prefix: &str, p: u32, i: usize, j: usize) -> String {
        if self.n() <= 9 {
            format!("{prefix}{p}_{i}{j}")
        } else {
            format!("{prefix}{p}_{i}_{j}")
        }
    }

    fn degree(&self, convention: Convention, p: u32, i: usize, j: usize) -> i64 {
        let m = &self.potentials;
        let shift = m[j - 1] - m[i - 1];
        let shift = match convention {
            Convention::PotentialPlus => shift,
            Convention::PotentialMinus => -shift,
        };
        1 - 2 * i64::from(p) + shift
    }

    fn check(&self, idem: &[IdemId]) -> Result<(), CatalogError> {
        if self.n() < 2 {
            return Err(CatalogError::InvalidFamily(format!("`{}` needs at least two points", self.prefix)));
        }
        if idem.len() != self.n() {
            return Err(CatalogError::InvalidFamily(format!(
                "`{}` has {} points but {} idempotents were given",
                self.prefix,
                self.n(),
                idem.len()
            )));
        }
        Ok(())
    }

    /// `(p, i, j)` of every chord, in declaration order.
    fn chords(&self) -> Vec<(u32, usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for p in 0..=self.p_max {
            for i in 1..=n {
                for j in 1..=n {
                    if exists(p, i, j) {
                        out.push((p, i, j));
                    }
                }
            }
        }
        out
    }

    /// Terms `(sign, left, right)` of `∂c^p_ij` other than the idempotent,
    /// with `left = (p-l, k, j)` and `right = (l, i, k)`.
    fn quadratic(&self, p: u32, i: usize, j: usize) -> Vec<(i64, Chord, Chord)> {
        let mut out = Vec::new();
        for l in 0..=p {
            for k in 1..=self.n() {
                if exists(p - l, k, j) && exists(l, i, k) {
                    let s = self.sign.sign(&self.potentials, i - 1, k - 1, j - 1);
                    out.push((s, (p - l, k, j), (l, i, k)));
                }
            }
        }
        out
    }
}

fn exists(p: u32, i: usize, j: usize) -> bool {
    p > 0 || i < j
}

fn convention_of(pres: &Presentation) -> Convention {
    pres.convention().unwrap_or(Convention::PotentialPlus)
}

fn declare(
    pres: &mut Presentation,
    spec: &PointSpec,
    prefix: &str,
    link: &str,
    shift: i64,
    idem: &[IdemId],
) -> Result<(), CatalogError> {
    let convention = convention_of(pres);
    for (p, i, j) in spec.chords() {
        pres.add_generator(Generator {
            name: spec.name(prefix, p, i, j),
            degree: spec.degree(convention, p, i, j) + shift,
            source: idem[i - 1],
            target: idem[j - 1],
            role: Role::Short(link.to_string()),
            level: Some(p),
        })?;
    }
    Ok(())
}

fn lookup(pres: &Presentation, spec: &PointSpec, prefix: &str, (p, i, j): (u32, usize, usize)) -> GenId {
    pres.generator_id(&spec.name(prefix, p, i, j)).expect("declared chord")
}

/// Adds the chords of `spec` to `pres`, point `i` sitting on `idem[i-1]`.
pub fn add_points(pres: &mut Presentation, spec: &PointSpec, idem: &[IdemId]) -> Result<(), CatalogError> {
    spec.check(idem)?;
    declare(pres, spec, &spec.prefix, &spec.prefix, 0, idem)?;
    let ring = pres.ring().clone();
    for (p, i, j) in spec.chords() {
        let mut d = pres.zero();
        if p == 1 && i == j {
            d.add_term(Word::idempotent(idem[i - 1]), Coeff::one(&ring));
        }
        for (s, left, right) in spec.quadratic(p, i, j) {
            let (a, b) = (lookup(pres, spec, &spec.prefix, left), lookup(pres, spec, &spec.prefix, right));
            d.add_term(pres.word(&[a, b]).expect("chords compose"), Coeff::from_i64(&ring, s));
        }
        let g = lookup(pres, spec, &spec.prefix, (p, i, j));
        pres.set_differential(g, d)?;
    }
    Ok(())
}

/// Hat algebra over an interval of point configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatSpec {
    /// The `x` family; `y` and `x̂` reuse its potentials and levels.
    pub points: PointSpec,
    pub y_prefix: String,
    pub hat_prefix: String,
    /// Identify `x` with `y`.
    pub closed: bool,
    pub hat_sign: HatSign,
}

impl HatSpec {
    pub fn new(points: PointSpec, closed: bool) -> HatSpec {
        let hat_prefix = format!("{}h", points.prefix);
        HatSpec { points, y_prefix: "y".into(), hat_prefix, closed, hat_sign: HatSign::default() }
    }
}

/// Adds `x`, `y` (unless closed) and `x̂` with `|x̂| = |x| - 1` and
/// `d x̂ = x - y ∓ G(∂x̂)`. `G` hats one letter of each monomial at a time,
/// turning letters to its left into `y`'s and to its right into `x`'s, with
/// the Koszul sign of the letters passed over.
pub fn add_hat_points(pres: &mut Presentation, spec: &HatSpec, idem: &[IdemId]) -> Result<(), CatalogError> {
    let x = &spec.points;
    add_points(pres, x, idem)?;
    let y_prefix = if spec.closed { x.prefix.as_str() } else { spec.y_prefix.as_str() };
    if !spec.closed {
        let y = PointSpec { prefix: spec.y_prefix.clone(), ..x.clone() };
        add_points(pres, &y, idem)?;
    }
    declare(pres, x, &spec.hat_prefix, &spec.hat_prefix, -1, idem)?;
    let ring = pres.ring().clone();
    let g_sign = match spec.hat_sign {
        HatSign::Plus => 1,
        HatSign::Minus => -1,
    };
    for (p, i, j) in x.chords() {
        let mut d = pres.zero();
        if !spec.closed {
            d = &pres.gen(lookup(pres, x, &x.prefix, (p, i, j))) - &pres.gen(lookup(pres, x, y_prefix, (p, i, j)));
        }
        for (s, left, right) in x.quadratic(p, i, j) {
            let left_degree = pres.generator(lookup(pres, x, &x.prefix, left)).degree;
            // hat on the right letter: nothing to its right, the left letter becomes y
            let ya = lookup(pres, x, y_prefix, left);
            let hb = lookup(pres, x, &spec.hat_prefix, right);
            let koszul = if left_degree.rem_euclid(2) == 0 { 1 } else { -1 };
            d.add_term(pres.word(&[ya, hb]).expect("compose"), Coeff::from_i64(&ring, g_sign * s * koszul));
            // hat on the left letter: the right letter becomes x
            let ha = lookup(pres, x, &spec.hat_prefix, left);
            let xb = lookup(pres, x, &x.prefix, right);
            d.add_term(pres.word(&[ha, xb]).expect("compose"), Coeff::from_i64(&ring, g_sign * s));
        }
        let g = lookup(pres, x, &spec.hat_prefix, (p, i, j));
        pres.set_differential(g, d)?;
    }
    Ok(())
}

fn numbered(name: &str, ring: CoeffRing, n: usize, convention: Convention) -> Result<(Presentation, Vec<IdemId>), CatalogError> {
    let mut pres = Presentation::new(name, ring);
    pres.set_convention(Some(convention));
    let idem = (1..=n).map(|i| pres.add_idempotent(format!("e{i}"))).collect::<Result<Vec<_>, _>>()?;
    Ok((pres, idem))
}

/// The algebra of `m.len()` points, each on its own idempotent `e1, e2, …`,
/// with chords `c^p_ij`.
pub fn make_point_algebra(
    m: &[i64],
    p_max: u32,
    convention: Convention,
    ring: CoeffRing,
) -> Result<Presentation, CatalogError> {
    make_point_algebra_with(m, p_max, convention, ring, SignReading::default())
}

pub fn make_point_algebra_with(
    m: &[i64],
    p_max: u32,
    convention: Convention,
    ring: CoeffRing,
    sign: SignReading,
) -> Result<Presentation, CatalogError> {
    let (mut pres, idem) = numbered(&format!("I{}", m.len()), ring, m.len(), convention)?;
    add_points(&mut pres, &PointSpec { sign, ..PointSpec::new("c", m, p_max) }, &idem)?;
    Ok(pres)
}

/// The hat algebra with families `x`, `y`, `xh`; closed identifies `x`
/// with `y`.
pub fn make_hat_point_algebra(
    m: &[i64],
    p_max: u32,
    closed: bool,
    convention: Convention,
    ring: CoeffRing,
) -> Result<Presentation, CatalogError> {
    make_hat_point_algebra_with(m, p_max, closed, convention, ring, HatSign::default())
}

pub fn make_hat_point_algebra_with(
    m: &[i64],
    p_max: u32,
    closed: bool,
    convention: Convention,
    ring: CoeffRing,
    hat_sign: HatSign,
) -> Result<Presentation, CatalogError> {
    let name = if closed { format!("I{}_hat_closed", m.len()) } else { format!("I{}_hat", m.len()) };
    let (mut pres, idem) = numbered(&name, ring, m.len(), convention)?;
    let spec = HatSpec { hat_sign, ..HatSpec::new(PointSpec::new("x", m, p_max), closed) };
    add_hat_points(&mut pres, &spec, &idem)?;
    Ok(pres)
}

/// A free product together with its two inclusions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeProduct {
    pub presentation: Presentation,
    pub left: DgMap,
    pub right: DgMap,
}

/// Glues `p2` onto `p1` along `shared`, pairs `(idempotent of p1,
/// idempotent of p2)` forming a partial bijection. Generator names must be
/// disjoint; unshared idempotents of `p2` keep their labels.
pub fn free_product(p1: &Presentation, p2: &Presentation, shared: &[(IdemId, IdemId)]) -> Result<FreeProduct, CatalogError> {
    if p1.ring() != p2.ring() {
        return Err(CatalogError::RingMismatch(p1.ring().to_string(), p2.ring().to_string()));
    }
    let mut seen1 = vec![false; p1.num_idempotents()];
    let mut right_idem: Vec<Option<IdemId>> = vec![None; p2.num_idempotents()];
    for &(a, b) in shared {
        if a.index() >= seen1.len() || b.index() >= right_idem.len() {
            return Err(CatalogError::BadMatching("index out of range".into()));
        }
        if std::mem::replace(&mut seen1[a.index()], true) || right_idem[b.index()].replace(a).is_some() {
            return Err(CatalogError::BadMatching(format!(
                "`{}` or `{}` matched twice",
                p1.idempotent_label(a),
                p2.idempotent_label(b)
            )));
        }
    }
    let mut out = p1.clone();
    out.set_name(format!("{}_{}", p1.name(), p2.name()));
    for (e, label) in p2.idempotents() {
        if right_idem[e.index()].is_none() {
            right_idem[e.index()] = Some(out.add_idempotent(label)?);
        }
    }
    let mut right_gen = Vec::new();
    for (_, g) in p2.generators() {
        let source = right_idem[g.source.index()].expect("assigned");
        let target = right_idem[g.target.index()].expect("assigned");
        right_gen.push(out.add_generator(Generator { source, target, ..g.clone() })?);
    }
    let carry = |x: &Element, out: &Presentation| {
        x.map_words(|w| {
            Some(if w.is_idempotent() {
                Word::idempotent(right_idem[w.source().index()].expect("assigned"))
            } else {
                let letters: Vec<GenId> = w.letters().iter().map(|l| right_gen[l.index()]).collect();
                out.word(&letters).expect("images compose")
            })
        })
    };
    for (g, _) in p2.generators() {
        if let Some(d) = p2.differential(g) {
            let d = carry(d, &out);
            out.set_differential(right_gen[g.index()], d)?;
        }
    }

    let mut left = DgMap::new(format!("{}_in", p1.name()), p1, &out);
    for (e, _) in p1.idempotents() {
        left.idempotents[e.index()] = Some(e);
    }
    for (g, _) in p1.generators() {
        left.generators[g.index()] = Some(out.gen(g));
    }
    let mut right = DgMap::new(format!("{}_in", p2.name()), p2, &out);
    right.idempotents = right_idem.clone();
    for (g, _) in p2.generators() {
        right.generators[g.index()] = Some(out.gen(right_gen[g.index()]));
    }
    Ok(FreeProduct { presentation: out, left, right })
}
