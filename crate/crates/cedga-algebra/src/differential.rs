use cedga_coeff::Coeff;

use crate::{AlgebraError, Element, Presentation, Word};

/// `∂w` by the graded Leibniz rule
/// `∂(g1…gm) = Σ_k (−1)^{|g1|+…+|g_{k−1}|} g1…(∂g_k)…gm`.
pub fn differential_of_word(p: &Presentation, w: &Word) -> Result<Element, AlgebraError> {
    let mut out = p.zero();
    let mut sign_odd = false;
    for (k, g) in w.letters().iter().enumerate() {
        let dg = p
            .differential(*g)
            .ok_or_else(|| AlgebraError::IncompletePresentation(p.generator(*g).name.clone()))?;
        let sign = if sign_odd { -Coeff::one(p.ring()) } else { Coeff::one(p.ring()) };
        for (v, c) in dg.terms() {
            out.add_term(w.splice(k, v), &sign * c);
        }
        if p.generator(*g).degree.rem_euclid(2) == 1 {
            sign_odd = !sign_odd;
        }
    }
    Ok(out)
}

pub fn apply_differential(p: &Presentation, x: &Element) -> Result<Element, AlgebraError> {
    let mut out = p.zero();
    for (w, c) in x.terms() {
        let dw = differential_of_word(p, w)?;
        out.add_scaled(&dw, c);
    }
    Ok(out)
}
