use std::collections::HashSet;
use std::fmt;

use crate::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateName(String),
    MissingDifferential { generator: String },
    NotComposable { generator: String, word: String },
    EndMismatch { generator: String, word: String },
    DegreeMismatch { generator: String, word: String, expected: i64, found: i64 },
    ForeignCoefficient { generator: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateName(n) => write!(f, "name `{n}` declared twice"),
            Violation::MissingDifferential { generator } => write!(f, "`{generator}` has no differential"),
            Violation::NotComposable { generator, word } => {
                write!(f, "∂{generator} contains non-composable word `{word}`")
            }
            Violation::EndMismatch { generator, word } => {
                write!(f, "∂{generator} contains `{word}` whose ends differ from those of `{generator}`")
            }
            Violation::DegreeMismatch { generator, word, expected, found } => write!(
                f,
                "∂{generator} contains `{word}` of degree {found}, expected {expected}"
            ),
            Violation::ForeignCoefficient { generator } => {
                write!(f, "∂{generator} has coefficients outside the presentation ring")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn composable(p: &Presentation, w: &Word) -> bool {
    match p.word(w.letters()) {
        None => w.is_idempotent(),
        Some(checked) => checked.source() == w.source() && checked.target() == w.target(),
    }
}

/// Name uniqueness, composability, end matching and degree homogeneity.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    let all_names = p.idempotents().map(|(_, l)| l).chain(p.generators().map(|(_, g)| g.name.as_str()));
    for n in all_names {
        if !seen.insert(n) {
            violations.push(Violation::DuplicateName(n.to_string()));
        }
    }
    for (id, g) in p.generators() {
        let Some(dg) = p.differential(id) else {
            violations.push(Violation::MissingDifferential { generator: g.name.clone() });
            continue;
        };
        if dg.ring() != p.ring() || dg.terms().any(|(_, c)| !c.belongs_to(p.ring())) {
            violations.push(Violation::ForeignCoefficient { generator: g.name.clone() });
        }
        for (w, _) in dg.terms() {
            let word = p.render_word(w);
            if !composable(p, w) {
                violations.push(Violation::NotComposable { generator: g.name.clone(), word });
                continue;
            }
            if w.source() != g.source || w.target() != g.target {
                violations.push(Violation::EndMismatch { generator: g.name.clone(), word: word.clone() });
            }
            let found = p.word_degree(w);
            if found != g.degree + 1 {
                violations.push(Violation::DegreeMismatch {
                    generator: g.name.clone(),
                    word,
                    expected: g.degree + 1,
                    found,
                });
            }
        }
    }
    ValidationReport { violations }
}
