use cedga_algebra::{Element, GenId, Presentation, Word};
use cedga_coeff::Coeff;

use crate::MorphismError;

/// A map to the ground ring, defined on the short generators of the links
/// listed in `scope`. Unlisted values in scope are zero; idempotents go to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    pub name: String,
    pub source: String,
    pub scope: Vec<String>,
    pub values: Vec<Option<Coeff>>,
}

impl Augmentation {
    pub fn new(name: impl Into<String>, source: &Presentation, scope: Vec<String>) -> Augmentation {
        Augmentation {
            name: name.into(),
            source: source.name().to_string(),
            scope,
            values: vec![None; source.num_generators()],
        }
    }

    pub fn in_scope(&self, p: &Presentation, g: GenId) -> bool {
        p.generator(g).role.link().is_some_and(|l| self.scope.iter().any(|s| s == l))
    }

    pub fn value(&self, p: &Presentation, g: GenId) -> Coeff {
        self.values[g.index()].clone().unwrap_or_else(|| Coeff::zero(p.ring()))
    }

    fn error(&self, reason: String) -> MorphismError {
        MorphismError::InvalidAugmentation { aug: self.name.clone(), reason }
    }

    /// `ε(w)`; fails on letters outside the scope.
    pub fn eval_word(&self, p: &Presentation, w: &Word) -> Result<Coeff, MorphismError> {
        let mut acc = Coeff::one(p.ring());
        for g in w.letters() {
            if !self.in_scope(p, *g) {
                return Err(self.error(format!("`{}` is outside the scope", p.generator(*g).name)));
            }
            acc = &acc * &self.value(p, *g);
        }
        Ok(acc)
    }

    pub fn eval(&self, p: &Presentation, x: &Element) -> Result<Coeff, MorphismError> {
        let mut acc = Coeff::zero(p.ring());
        for (w, c) in x.terms() {
            acc = &acc + &(c * &self.eval_word(p, w)?);
        }
        Ok(acc)
    }

    /// Scope closure, degree-zero support and ring membership.
    pub fn check_well_formed(&self, p: &Presentation) -> Result<(), MorphismError> {
        for (g, gen) in p.generators() {
            if let Some(v) = &self.values[g.index()] {
                if !v.belongs_to(p.ring()) {
                    return Err(self.error(format!("value of `{}` is not in {}", gen.name, p.ring())));
                }
                if !self.in_scope(p, g) {
                    return Err(self.error(format!("`{}` has a value but is outside the scope", gen.name)));
                }
                if gen.degree != 0 && !v.is_zero() {
                    return Err(self.error(format!("`{}` has degree {} but a nonzero value", gen.name, gen.degree)));
                }
            }
            if !self.in_scope(p, g) {
                continue;
            }
            let dg = p
                .differential(g)
                .ok_or_else(|| cedga_algebra::AlgebraError::IncompletePresentation(gen.name.clone()))?;
            for (w, _) in dg.terms() {
                if let Some(out) = w.letters().iter().find(|l| !self.in_scope(p, **l)) {
                    return Err(self.error(format!(
                        "scope is not closed under the differential: ∂{} involves `{}`",
                        gen.name,
                        p.generator(*out).name
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AugVerdict {
    Pass,
    /// First scoped generator with `ε(∂g) ≠ 0`.
    Failure { generator: GenId, residual: Coeff },
}

impl AugVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, AugVerdict::Pass)
    }
}

/// Checks `ε(∂g) = 0` for every generator in scope.
pub fn verify_augmentation(eps: &Augmentation, p: &Presentation) -> Result<AugVerdict, MorphismError> {
    eps.check_well_formed(p)?;
    for (g, _) in p.generators() {
        if !eps.in_scope(p, g) {
            continue;
        }
        let dg = p.differential(g).expect("checked above");
        let residual = eps.eval(p, dg)?;
        if !residual.is_zero() {
            return Ok(AugVerdict::Failure { generator: g, residual });
        }
    }
    Ok(AugVerdict::Pass)
}
