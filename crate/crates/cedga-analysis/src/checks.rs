use cedga_algebra::{apply_differential, AlgebraError, validate_presentation, Element, GenId, Presentation, Violation, Word};

use crate::AnalysisError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DSquared {
    Pass,
    /// First generator in declaration order with `∂∂g ≠ 0`.
    Counterexample { generator: GenId, residual: Element },
}

impl DSquared {
    pub fn passed(&self) -> bool {
        matches!(self, DSquared::Pass)
    }
}

pub fn check_d_squared(p: &Presentation) -> Result<DSquared, AnalysisError> {
    for (id, _) in p.generators() {
        let dg = p
            .differential(id)
            .ok_or_else(|| AlgebraError::IncompletePresentation(p.generator(id).name.clone()))?;
        let ddg = apply_differential(p, dg)?;
        if !ddg.is_zero() {
            return Ok(DSquared::Counterexample { generator: id, residual: ddg });
        }
    }
    Ok(DSquared::Pass)
}

/// Degree violations: words of `∂g` whose degree is not `|g| + 1`.
pub fn check_degree(p: &Presentation) -> Vec<Violation> {
    validate_presentation(p)
        .violations
        .into_iter()
        .filter(|v| matches!(v, Violation::DegreeMismatch { .. }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub holds: bool,
    /// A generator and a word of odd length in its differential.
    pub counterexample: Option<(GenId, Word)>,
}

/// Whether every word of every `∂g` has even length, i.e. the differential
/// flips word-length parity.
pub fn check_parity_flip(p: &Presentation) -> ParityReport {
    for (id, _) in p.generators() {
        if let Some(dg) = p.differential(id) {
            if let Some((w, _)) = dg.terms().find(|(w, _)| w.len() % 2 == 1) {
                return ParityReport { holds: false, counterexample: Some((id, w.clone())) };
            }
        }
    }
    ParityReport { holds: true, counterexample: None }
}
