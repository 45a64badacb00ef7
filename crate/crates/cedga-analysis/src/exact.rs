use std::collections::BTreeMap;

use cedga_algebra::{apply_differential, differential_of_word, Element, IdemId, Presentation};

use crate::{search_space, AnalysisError, Bounds, Parity, SparseEliminator};

/// A bounded negative answer: no combination of the enumerated words has
/// the target as boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    pub target: Element,
    pub degree: i64,
    pub bounds: Bounds,
    pub parity: Option<Parity>,
    /// Ends of the first block of the target that has no preimage.
    pub block: (IdemId, IdemId),
    /// Candidate words in that block and the rank of their boundaries.
    pub candidates: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// `∂(witness) = target`, checked exactly before returning.
    Witness(Element),
    NoneWithinBounds(SearchCertificate),
}

impl Exactness {
    pub fn witness(&self) -> Option<&Element> {
        match self {
            Exactness::Witness(w) => Some(w),
            Exactness::NoneWithinBounds(_) => None,
        }
    }
}

/// Splits `x` by (source, target).
fn blocks(x: &Element) -> BTreeMap<(IdemId, IdemId), Element> {
    let mut out: BTreeMap<(IdemId, IdemId), Element> = BTreeMap::new();
    for (w, c) in x.terms() {
        out.entry((w.source(), w.target()))
            .or_insert_with(|| Element::zero(x.ring()))
            .add_term(w.clone(), c.clone());
    }
    out
}

/// Looks for `x` with `∂x = target` among words of degree `|target| − 1`
/// within `bounds` and, optionally, of one length parity.
pub fn exactness_search(
    p: &Presentation,
    target: &Element,
    bounds: &Bounds,
    parity: Option<Parity>,
) -> Result<Exactness, AnalysisError> {
    if !p.ring().is_field() {
        return Err(AnalysisError::NotAField(p.ring().to_string()));
    }
    if target.is_zero() {
        return Ok(Exactness::Witness(p.zero()));
    }
    let degree = p.degree_of(target).ok_or(AnalysisError::NonHomogeneous)?;
    let mut witness = p.zero();
    for ((src, tgt), part) in blocks(target) {
        let words = search_space(p, src, tgt, degree - 1, bounds, parity);
        let mut elim = SparseEliminator::new(p.ring())?;
        for (i, w) in words.iter().enumerate() {
            elim.add_column(i, &differential_of_word(p, w)?);
        }
        match elim.solve(&part) {
            Some(sol) => {
                for (i, c) in sol {
                    witness.add_term(words[i].clone(), c);
                }
            }
            None => {
                return Ok(Exactness::NoneWithinBounds(SearchCertificate {
                    target: target.clone(),
                    degree,
                    bounds: *bounds,
                    parity,
                    block: (src, tgt),
                    candidates: words.len(),
                    rank: elim.rank(),
                }))
            }
        }
    }
    assert_eq!(&apply_differential(p, &witness)?, target, "exactness witness failed to re-check");
    Ok(Exactness::Witness(witness))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triviality {
    CertifiedTrivial(Element),
    NotWithinBounds(SearchCertificate),
}

/// The algebra is trivial iff the unit is a boundary.
pub fn is_trivial(p: &Presentation, bounds: &Bounds) -> Result<Triviality, AnalysisError> {
    if p.num_idempotents() == 0 {
        return Ok(Triviality::CertifiedTrivial(p.zero()));
    }
    Ok(match exactness_search(p, &p.one(), bounds, None)? {
        Exactness::Witness(w) => Triviality::CertifiedTrivial(w),
        Exactness::NoneWithinBounds(c) => Triviality::NotWithinBounds(c),
    })
}
