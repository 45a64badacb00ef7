//! The word-length parity obstruction.
//!
//! A filling would extend the link map to a chain map `φ` defined on the
//! long generators too. Write each unknown image as `φ(a) = h_a,even +
//! h_a,odd` by word-length parity. When the codomain differential flips
//! parity, the equation `∂φ(a) = φ(∂a)` splits into two components; the
//! component of parity `σ` reads `∂h_a,(1−σ) = [φ(∂a)]_σ`. A component whose
//! known part `K` (the terms free of unknowns) is nonzero is a candidate. If
//! every unknown part occurring in it is forced to be a cycle by its own
//! equation, the candidate asks for `t` of parity `1−σ` and cycles `z` with
//! `∂t − Σ u·z·v = K`. When that finite system has no solution within the
//! bounds, no such `φ` exists within those bounds.

use std::collections::BTreeMap;

use cedga_algebra::{differential_of_word, Element, GenId, Generator, IdemId, Presentation, Role, Word};
use cedga_analysis::{
    check_parity_flip, exactness_search, search_space, Bounds, Exactness, Parity, SearchCertificate, SparseEliminator,
};
use cedga_coeff::Coeff;

use crate::{extend_map, validate_map, DgMap, MorphismError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// Long generator of the domain.
    pub generator: GenId,
    /// Parity of the component of `φ(∂a)` examined.
    pub component: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstructed {
    pub decisive: Candidate,
    /// Rendered equation that has no solution.
    pub equation: String,
    /// Known part `K` of the component, an element of the codomain.
    pub target: Element,
    /// Unknown parts forced to be cycles and allowed in the solution.
    pub tolerated: Vec<String>,
    /// Plain search for `∂t = K` with `t` of the opposite parity.
    pub certificate: SearchCertificate,
    /// Size of the joint system that was found unsolvable.
    pub joint_candidates: usize,
    pub transcript: Vec<String>,
    pub bounds: Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconclusive {
    pub reasons: Vec<String>,
    pub transcript: Vec<String>,
    pub bounds: Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    Obstructed(Box<Obstructed>),
    Inconclusive(Inconclusive),
}

impl Obstruction {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Obstruction::Obstructed(_))
    }
}

/// One term `c · u h_b v` with a single unknown letter.
struct Occurrence {
    coeff: Coeff,
    word: Word,
    slot: usize,
    unknown: GenId,
}

struct Image {
    known: [Element; 2],
    linear: Vec<Occurrence>,
    nonlinear: bool,
}

fn pi(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

fn splice(prefix: &[GenId], mid: &Word, suffix: &[GenId], src: IdemId, tgt: IdemId) -> Word {
    let mut letters = prefix.to_vec();
    letters.extend_from_slice(mid.letters());
    letters.extend_from_slice(suffix);
    if letters.is_empty() {
        Word::idempotent(src)
    } else {
        Word::from_raw(&letters, src, tgt)
    }
}

fn cycle_space(c: &Presentation, src: IdemId, tgt: IdemId, degree: i64, bounds: &Bounds, parity: Parity) -> Vec<Word> {
    let mut words = Vec::new();
    if src == tgt && degree == 0 && parity == Parity::Even {
        words.push(Word::idempotent(src));
    }
    words.extend(search_space(c, src, tgt, degree, bounds, Some(parity)));
    words
}

pub fn obstruct_y_filling(
    domain: &Presentation,
    codomain: &Presentation,
    link_map: &DgMap,
    bounds: &Bounds,
) -> Result<Obstruction, MorphismError> {
    let parity = check_parity_flip(codomain);
    if !parity.holds {
        let (g, w) = parity.counterexample.expect("failing parity check has a witness");
        return Err(MorphismError::UnsupportedCodomain(format!(
            "∂{} contains `{}`, so the differential does not flip word-length parity",
            codomain.generator(g).name,
            codomain.render_word(&w)
        )));
    }
    let invalid = |reason: String| MorphismError::InvalidMap { map: link_map.name.clone(), reason };
    if let Some(reason) = validate_map(link_map, domain, codomain).into_iter().next() {
        return Err(invalid(reason));
    }
    for (e, label) in domain.idempotents() {
        if link_map.idempotent_image(e).is_none() {
            return Err(invalid(format!("idempotent `{label}` is not assigned")));
        }
    }
    for (g, gen) in domain.generators() {
        if gen.role.is_short() && link_map.image(g).is_none() {
            return Err(invalid(format!("short generator `{}` is not assigned", gen.name)));
        }
    }

    // Codomain extended by one unknown per unassigned long generator.
    let mut ext = codomain.clone();
    let mut phi = link_map.clone();
    let mut unknown_of: BTreeMap<GenId, GenId> = BTreeMap::new();
    let mut domain_of: BTreeMap<GenId, GenId> = BTreeMap::new();
    for (a, gen) in domain.generators() {
        if gen.role != Role::Long || link_map.image(a).is_some() {
            continue;
        }
        let mut name = format!("img_{}", gen.name);
        while ext.generator_id(&name).is_some() || ext.idempotent_id(&name).is_some() {
            name.push('_');
        }
        let h = ext.add_generator(Generator {
            name,
            degree: gen.degree,
            source: phi.idempotent_image(gen.source).expect("checked"),
            target: phi.idempotent_image(gen.target).expect("checked"),
            role: Role::Long,
            level: None,
        })?;
        phi.generators[a.index()] = Some(ext.gen(h));
        unknown_of.insert(a, h);
        domain_of.insert(h, a);
    }
    phi.target = ext.name().to_string();

    let mut transcript = Vec::new();
    let mut images: BTreeMap<GenId, Image> = BTreeMap::new();
    for &a in unknown_of.keys() {
        let da = domain
            .differential(a)
            .ok_or_else(|| cedga_algebra::AlgebraError::IncompletePresentation(domain.generator(a).name.clone()))?;
        let img = extend_map(&phi, domain, &ext, da)?;
        transcript.push(format!("φ(∂{}) = {}", domain.generator(a).name, ext.render(&img)));
        let mut image =
            Image { known: [codomain.zero(), codomain.zero()], linear: Vec::new(), nonlinear: false };
        for (w, c) in img.terms() {
            let slots: Vec<usize> =
                (0..w.len()).filter(|k| domain_of.contains_key(&w.letters()[*k])).collect();
            match slots.as_slice() {
                [] => image.known[w.len() % 2].add_term(w.clone(), c.clone()),
                [k] => image.linear.push(Occurrence {
                    coeff: c.clone(),
                    word: w.clone(),
                    slot: *k,
                    unknown: domain_of[&w.letters()[*k]],
                }),
                _ => image.nonlinear = true,
            }
        }
        images.insert(a, image);
    }

    let mut candidates: Vec<Candidate> = Vec::new();
    for (&a, image) in &images {
        for component in [Parity::Even, Parity::Odd] {
            if !image.known[pi(component)].is_zero() {
                candidates.push(Candidate { generator: a, component });
            }
        }
    }
    let has_idem = |c: &Candidate| images[&c.generator].known[pi(c.component)].terms().any(|(w, _)| w.is_idempotent());
    candidates.sort_by_key(|c| (!has_idem(c), c.generator, c.component));

    let name = |a: GenId| domain.generator(a).name.clone();
    let mut reasons = Vec::new();
    for cand in candidates {
        let a = cand.generator;
        let sigma = cand.component;
        let sol_parity = sigma.flip();
        let image = &images[&a];
        let k = image.known[pi(sigma)].clone();
        let label = format!("[φ({})]_{} ", name(a), sol_parity);
        let eq_head = format!("∂{label}= {} + (terms in unknowns)", codomain.render(&k));
        if image.nonlinear {
            reasons.push(format!("{}: φ(∂{}) is not linear in the unknown images", eq_head, name(a)));
            continue;
        }
        // Unknown parts entering this component, with their occurrences.
        let mut parts: BTreeMap<(GenId, Parity), Vec<&Occurrence>> = BTreeMap::new();
        for occ in &image.linear {
            let outer = occ.word.len() - 1;
            let part = if Parity::of_len(outer) == sigma { Parity::Even } else { Parity::Odd };
            parts.entry((occ.unknown, part)).or_default().push(occ);
        }
        let mut ambiguous = None;
        let mut tolerated = Vec::new();
        for &(b, part) in parts.keys() {
            let ib = &images[&b];
            let opposite = part.flip();
            if !ib.linear.is_empty() || ib.nonlinear || !ib.known[pi(opposite)].is_zero() {
                ambiguous = Some(format!(
                    "{eq_head}: the {part} part of φ({}) is not forced to be a cycle",
                    name(b)
                ));
                break;
            }
            tolerated.push(format!(
                "[φ({})]_{part} is a cycle: the {opposite} component of φ(∂{}) vanishes",
                name(b),
                name(b)
            ));
        }
        if let Some(r) = ambiguous {
            reasons.push(r);
            continue;
        }

        let gen_a = domain.generator(a);
        let (src, tgt) = (phi.idempotent_image(gen_a.source).unwrap(), phi.idempotent_image(gen_a.target).unwrap());
        let degree = gen_a.degree;
        let t_words = search_space(codomain, src, tgt, degree, bounds, Some(sol_parity));
        let mut elim = SparseEliminator::new(codomain.ring())?;
        let mut columns: Vec<(Option<(GenId, Parity)>, Word)> = Vec::new();
        for w in &t_words {
            let dw = differential_of_word(codomain, w)?;
            elim.add_column_parts(columns.len(), &[(0, &dw)]);
            columns.push((None, w.clone()));
        }
        for (tag, (&(b, part), occs)) in parts.iter().enumerate() {
            let gb = domain.generator(b);
            let (bs, bt) = (phi.idempotent_image(gb.source).unwrap(), phi.idempotent_image(gb.target).unwrap());
            for z in cycle_space(codomain, bs, bt, gb.degree, bounds, part) {
                let mut lhs = codomain.zero();
                for occ in occs {
                    let l = occ.word.letters();
                    let w = splice(&l[..occ.slot], &z, &l[occ.slot + 1..], occ.word.source(), occ.word.target());
                    lhs.add_term(w, -&occ.coeff);
                }
                let dz = differential_of_word(codomain, &z)?;
                elim.add_column_parts(columns.len(), &[(0, &lhs), (tag as u32 + 1, &dz)]);
                columns.push((Some((b, part)), z));
            }
        }
        let equation = if parts.is_empty() {
            format!("∂{label}= {}", codomain.render(&k))
        } else {
            let terms: Vec<String> = image
                .linear
                .iter()
                .map(|o| {
                    let mut e = Element::zero(ext.ring());
                    e.add_term(o.word.clone(), o.coeff.clone());
                    ext.render(&e)
                })
                .collect();
            format!("∂{label}= {} + [{}]", codomain.render(&k), terms.join(" + "))
        };
        if let Some(sol) = elim.solve_parts(&[(0, &k)]) {
            let mut t = codomain.zero();
            for (i, c) in sol {
                if columns[i].0.is_none() {
                    t.add_term(columns[i].1.clone(), c);
                }
            }
            reasons.push(format!("{equation}: solvable within bounds, e.g. t = {}", codomain.render(&t)));
            continue;
        }
        let certificate = match exactness_search(codomain, &k, bounds, Some(sol_parity))? {
            Exactness::NoneWithinBounds(c) => c,
            Exactness::Witness(_) => unreachable!("the plain system is part of the joint one"),
        };
        transcript.push(format!(
            "the {sigma} component of ∂φ({}) = φ(∂{}) reads {equation}",
            name(a),
            name(a)
        ));
        transcript.extend(tolerated.iter().cloned());
        transcript.push(format!(
            "no {sol_parity} t (with cycles as above) solves it among {} candidate words; {}",
            columns.len(),
            bounds
        ));
        return Ok(Obstruction::Obstructed(Box::new(Obstructed {
            decisive: cand,
            equation,
            target: k,
            tolerated,
            certificate,
            joint_candidates: columns.len(),
            transcript,
            bounds: *bounds,
        })));
    }
    if reasons.is_empty() {
        reasons.push("no component of any φ(∂a) has a nonzero part free of unknowns".to_string());
    }
    Ok(Obstruction::Inconclusive(Inconclusive { reasons, transcript, bounds: *bounds }))
}
