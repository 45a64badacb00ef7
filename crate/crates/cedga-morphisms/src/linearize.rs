use std::collections::BTreeMap;

use cedga_algebra::{Element, GenId, Generator, IdemId, Presentation, Role, Word};

use crate::{verify_augmentation, AugVerdict, Augmentation, MorphismError};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Evaluates short generators by `ε` and keeps long generators. Idempotents
/// joined by a short generator with nonzero value are identified, since the
/// long letters on either side of it become adjacent.
pub fn partial_linearize(p: &Presentation, eps: &Augmentation) -> Result<Presentation, MorphismError> {
    match verify_augmentation(eps, p)? {
        AugVerdict::Pass => {}
        AugVerdict::Failure { generator, .. } => {
            return Err(MorphismError::UnverifiedAugmentation {
                aug: eps.name.clone(),
                generator: p.generator(generator).name.clone(),
            })
        }
    }
    for (g, gen) in p.generators() {
        if gen.role.is_short() && !eps.in_scope(p, g) {
            return Err(MorphismError::InvalidAugmentation {
                aug: eps.name.clone(),
                reason: format!("short generator `{}` has no value", gen.name),
            });
        }
    }

    let n = p.num_idempotents();
    let mut parent: Vec<usize> = (0..n).collect();
    for (g, gen) in p.generators() {
        if gen.role.is_short() && !eps.value(p, g).is_zero() {
            let (a, b) = (find(&mut parent, gen.source.index()), find(&mut parent, gen.target.index()));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut out = Presentation::new(p.name(), p.ring().clone());
    out.set_convention(p.convention());
    let mut class: BTreeMap<usize, IdemId> = BTreeMap::new();
    let mut idem = vec![IdemId(0); n];
    for (i, slot) in idem.iter_mut().enumerate() {
        let r = find(&mut parent, i);
        let id = match class.get(&r) {
            Some(id) => *id,
            None => {
                let id = out.add_idempotent(p.idempotent_label(IdemId(r as u32)))?;
                class.insert(r, id);
                id
            }
        };
        *slot = id;
    }
    let mut new_id: BTreeMap<GenId, GenId> = BTreeMap::new();
    for (g, gen) in p.generators() {
        if gen.role == Role::Long {
            let id = out.add_generator(Generator {
                source: idem[gen.source.index()],
                target: idem[gen.target.index()],
                ..gen.clone()
            })?;
            new_id.insert(g, id);
        }
    }
    for (g, id) in &new_id {
        let dg = p
            .differential(*g)
            .ok_or_else(|| cedga_algebra::AlgebraError::IncompletePresentation(p.generator(*g).name.clone()))?;
        let mut lin = Element::zero(p.ring());
        for (w, c) in dg.terms() {
            let mut coeff = c.clone();
            let mut letters = Vec::new();
            for l in w.letters() {
                match new_id.get(l) {
                    Some(nl) => letters.push(*nl),
                    None => coeff = &coeff * &eps.value(p, *l),
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let word = if letters.is_empty() {
                Word::idempotent(idem[w.source().index()])
            } else {
                out.word(&letters).expect("long letters compose after identification")
            };
            lin.add_term(word, coeff);
        }
        out.set_differential(*id, lin)?;
    }
    Ok(out)
}
