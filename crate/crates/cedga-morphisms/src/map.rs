use cedga_algebra::{apply_differential, Element, GenId, IdemId, Presentation, Word};

use crate::MorphismError;

/// A multiplicative map given on idempotents and generators. Indices refer
/// to the source presentation; images live in the target presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgMap {
    pub name: String,
    pub source: String,
    pub target: String,
    pub idempotents: Vec<Option<IdemId>>,
    pub generators: Vec<Option<Element>>,
}

impl DgMap {
    /// A map with nothing assigned yet.
    pub fn new(name: impl Into<String>, source: &Presentation, target: &Presentation) -> DgMap {
        DgMap {
            name: name.into(),
            source: source.name().to_string(),
            target: target.name().to_string(),
            idempotents: vec![None; source.num_idempotents()],
            generators: vec![None; source.num_generators()],
        }
    }

    pub fn idempotent_image(&self, e: IdemId) -> Option<IdemId> {
        self.idempotents[e.index()]
    }

    pub fn image(&self, g: GenId) -> Option<&Element> {
        self.generators[g.index()].as_ref()
    }
}

fn unassigned(phi: &DgMap, name: &str) -> MorphismError {
    MorphismError::Unassigned { map: phi.name.clone(), name: name.to_string() }
}

fn word_image(phi: &DgMap, src: &Presentation, tgt: &Presentation, w: &Word) -> Result<Element, MorphismError> {
    if w.is_idempotent() {
        let e = phi.idempotent_image(w.source()).ok_or_else(|| unassigned(phi, src.idempotent_label(w.source())))?;
        return Ok(tgt.idem(e));
    }
    let mut acc: Option<Element> = None;
    for g in w.letters() {
        let img = phi.image(*g).ok_or_else(|| unassigned(phi, &src.generator(*g).name))?;
        acc = Some(match acc {
            None => img.clone(),
            Some(a) => &a * img,
        });
        if acc.as_ref().is_some_and(Element::is_zero) {
            return Ok(tgt.zero());
        }
    }
    Ok(acc.expect("nonempty word"))
}

/// `φ(x)`, extended linearly and multiplicatively.
pub fn extend_map(phi: &DgMap, src: &Presentation, tgt: &Presentation, x: &Element) -> Result<Element, MorphismError> {
    let mut out = tgt.zero();
    for (w, c) in x.terms() {
        out.add_scaled(&word_image(phi, src, tgt, w)?, c);
    }
    Ok(out)
}

/// Ends and degrees of the assigned images; empty when well formed.
pub fn validate_map(phi: &DgMap, src: &Presentation, tgt: &Presentation) -> Vec<String> {
    let mut problems = Vec::new();
    if src.ring() != tgt.ring() {
        problems.push(format!("rings differ: {} and {}", src.ring(), tgt.ring()));
    }
    for (g, gen) in src.generators() {
        let Some(img) = phi.image(g) else { continue };
        let (s, t) = (phi.idempotent_image(gen.source), phi.idempotent_image(gen.target));
        for (w, _) in img.terms() {
            if Some(w.source()) != s || Some(w.target()) != t {
                problems.push(format!("image of `{}` contains `{}` with wrong ends", gen.name, tgt.render_word(w)));
            }
            if tgt.word_degree(w) != gen.degree {
                problems.push(format!(
                    "image of `{}` contains `{}` of degree {}, expected {}",
                    gen.name,
                    tgt.render_word(w),
                    tgt.word_degree(w),
                    gen.degree
                ));
            }
        }
    }
    problems
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub generator: GenId,
    /// `φ(∂g)`
    pub image_of_boundary: Element,
    /// `∂(φ(g))`
    pub boundary_of_image: Element,
}

impl GeneratorCheck {
    pub fn holds(&self) -> bool {
        self.image_of_boundary == self.boundary_of_image
    }

    pub fn residual(&self) -> Element {
        &self.image_of_boundary - &self.boundary_of_image
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapReport {
    pub checks: Vec<GeneratorCheck>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(GeneratorCheck::holds)
    }

    pub fn first_failure(&self) -> Option<&GeneratorCheck> {
        self.checks.iter().find(|c| !c.holds())
    }
}

/// Checks `φ∘∂ = ∂∘φ` on every source generator.
pub fn verify_chain_map(phi: &DgMap, src: &Presentation, tgt: &Presentation) -> Result<ChainMapReport, MorphismError> {
    let problems = validate_map(phi, src, tgt);
    if let Some(reason) = problems.into_iter().next() {
        return Err(MorphismError::InvalidMap { map: phi.name.clone(), reason });
    }
    let mut checks = Vec::new();
    for (g, gen) in src.generators() {
        let dg = src
            .differential(g)
            .ok_or_else(|| cedga_algebra::AlgebraError::IncompletePresentation(gen.name.clone()))?;
        let image_of_boundary = extend_map(phi, src, tgt, dg)?;
        let img = phi.image(g).ok_or_else(|| unassigned(phi, &gen.name))?;
        let boundary_of_image = apply_differential(tgt, img)?;
        checks.push(GeneratorCheck { generator: g, image_of_boundary, boundary_of_image });
    }
    Ok(ChainMapReport { checks })
}

pub fn identity(p: &Presentation) -> DgMap {
    let mut phi = DgMap::new("id", p, p);
    for (e, _) in p.idempotents() {
        phi.idempotents[e.index()] = Some(e);
    }
    for (g, _) in p.generators() {
        phi.generators[g.index()] = Some(p.gen(g));
    }
    phi
}

/// `ψ∘φ` for `φ: A → B` and `ψ: B → C`.
pub fn compose(
    phi: &DgMap,
    psi: &DgMap,
    a: &Presentation,
    b: &Presentation,
    c: &Presentation,
) -> Result<DgMap, MorphismError> {
    let mut out = DgMap::new(format!("{}_{}", psi.name, phi.name), a, c);
    for (e, _) in a.idempotents() {
        out.idempotents[e.index()] = match phi.idempotent_image(e) {
            Some(f) => Some(psi.idempotent_image(f).ok_or_else(|| unassigned(psi, b.idempotent_label(f)))?),
            None => None,
        };
    }
    for (g, _) in a.generators() {
        if let Some(img) = phi.image(g) {
            out.generators[g.index()] = Some(extend_map(psi, b, c, img)?);
        }
    }
    Ok(out)
}
