use std::collections::HashMap;
use std::fmt;

use cedga_coeff::{is_identifier, Coeff, CoeffRing};

use crate::{AlgebraError, Element, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdemId(pub u32);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl IdemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Long chords carry the geometry; short chords belong to a named link.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Long,
    Short(String),
}

impl Role {
    pub fn is_short(&self) -> bool {
        matches!(self, Role::Short(_))
    }

    pub fn link(&self) -> Option<&str> {
        match self {
            Role::Short(l) => Some(l),
            Role::Long => None,
        }
    }
}

/// Sign of the Maslov potential difference in the point-algebra grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `|c^p_ij| = 1 - 2p + m(j) - m(i)`
    PotentialPlus,
    /// `|c^p_ij| = 1 - 2p - m(j) + m(i)`
    PotentialMinus,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::PotentialPlus => "potential_plus",
            Convention::PotentialMinus => "potential_minus",
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "potential_plus" => Ok(Convention::PotentialPlus),
            "potential_minus" => Ok(Convention::PotentialMinus),
            other => Err(format!("unknown convention `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    pub source: IdemId,
    pub target: IdemId,
    pub role: Role,
    pub level: Option<u32>,
}

/// A free graded algebra over idempotents together with a differential
/// given on generators.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    ring: CoeffRing,
    convention: Option<Convention>,
    idempotents: Vec<String>,
    generators: Vec<Generator>,
    differential: Vec<Option<Element>>,
    names: HashMap<String, Symbol>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Symbol {
    Idem(IdemId),
    Gen(GenId),
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.ring == other.ring
            && self.convention == other.convention
            && self.idempotents == other.idempotents
            && self.generators == other.generators
            && self.differential == other.differential
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn new(name: impl Into<String>, ring: CoeffRing) -> Presentation {
        Presentation {
            name: name.into(),
            ring,
            convention: None,
            idempotents: Vec::new(),
            generators: Vec::new(),
            differential: Vec::new(),
            names: HashMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn convention(&self) -> Option<Convention> {
        self.convention
    }

    pub fn set_convention(&mut self, c: Option<Convention>) {
        self.convention = c;
    }

    fn claim(&mut self, name: &str, sym: Symbol) -> Result<(), AlgebraError> {
        if !is_identifier(name) {
            return Err(AlgebraError::BadName(name.to_string()));
        }
        if self.names.contains_key(name) {
            return Err(AlgebraError::DuplicateName(name.to_string()));
        }
        self.names.insert(name.to_string(), sym);
        Ok(())
    }

    pub fn add_idempotent(&mut self, label: impl Into<String>) -> Result<IdemId, AlgebraError> {
        let label = label.into();
        let id = IdemId(self.idempotents.len() as u32);
        self.claim(&label, Symbol::Idem(id))?;
        self.idempotents.push(label);
        Ok(id)
    }

    pub fn add_generator(&mut self, g: Generator) -> Result<GenId, AlgebraError> {
        for e in [g.source, g.target] {
            if e.index() >= self.idempotents.len() {
                return Err(AlgebraError::UnknownIdempotent(format!("#{}", e.0)));
            }
        }
        let id = GenId(self.generators.len() as u32);
        self.claim(&g.name, Symbol::Gen(id))?;
        self.generators.push(g);
        self.differential.push(None);
        Ok(id)
    }

    /// Assigns `∂g`; fails if it was already assigned.
    pub fn set_differential(&mut self, g: GenId, value: Element) -> Result<(), AlgebraError> {
        let slot = &mut self.differential[g.index()];
        if slot.is_some() {
            return Err(AlgebraError::DuplicateDifferential(self.generators[g.index()].name.clone()));
        }
        *slot = Some(value);
        Ok(())
    }

    pub fn replace_differential(&mut self, g: GenId, value: Option<Element>) {
        self.differential[g.index()] = value;
    }

    pub fn differential(&self, g: GenId) -> Option<&Element> {
        self.differential[g.index()].as_ref()
    }

    pub fn idempotents(&self) -> impl ExactSizeIterator<Item = (IdemId, &str)> + '_ {
        self.idempotents.iter().enumerate().map(|(i, l)| (IdemId(i as u32), l.as_str()))
    }

    pub fn num_idempotents(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotent_label(&self, e: IdemId) -> &str {
        &self.idempotents[e.index()]
    }

    pub fn idempotent_id(&self, label: &str) -> Option<IdemId> {
        match self.names.get(label) {
            Some(Symbol::Idem(e)) => Some(*e),
            _ => None,
        }
    }

    pub fn generators(&self) -> impl ExactSizeIterator<Item = (GenId, &Generator)> + '_ {
        self.generators.iter().enumerate().map(|(i, g)| (GenId(i as u32), g))
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, g: GenId) -> &Generator {
        &self.generators[g.index()]
    }

    pub fn generator_id(&self, name: &str) -> Option<GenId> {
        match self.names.get(name) {
            Some(Symbol::Gen(g)) => Some(*g),
            _ => None,
        }
    }

    /// Single-letter word of `g`.
    pub fn letter(&self, g: GenId) -> Word {
        let gen = self.generator(g);
        Word::letter(g, gen.source, gen.target)
    }

    /// Composable word from letters in printed order; `None` if some adjacent
    /// pair does not compose or the slice is empty.
    pub fn word(&self, letters: &[GenId]) -> Option<Word> {
        let (last, first) = (letters.last()?, letters.first()?);
        for pair in letters.windows(2) {
            if self.generator(pair[0]).source != self.generator(pair[1]).target {
                return None;
            }
        }
        Some(Word::from_raw(letters, self.generator(*last).source, self.generator(*first).target))
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        w.letters().iter().map(|g| self.generator(*g).degree).sum()
    }

    /// Degree of a homogeneous nonzero element; `None` for zero or mixed.
    pub fn degree_of(&self, x: &Element) -> Option<i64> {
        let mut it = x.terms().map(|(w, _)| self.word_degree(w));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn idem(&self, e: IdemId) -> Element {
        Element::monomial(&self.ring, Word::idempotent(e), Coeff::one(&self.ring))
    }

    pub fn gen(&self, g: GenId) -> Element {
        Element::monomial(&self.ring, self.letter(g), Coeff::one(&self.ring))
    }

    /// The unit, i.e. the sum of all idempotents.
    pub fn one(&self) -> Element {
        let mut x = Element::zero(&self.ring);
        for i in 0..self.idempotents.len() {
            x.add_term(Word::idempotent(IdemId(i as u32)), Coeff::one(&self.ring));
        }
        x
    }

    pub fn zero(&self) -> Element {
        Element::zero(&self.ring)
    }

    /// Element spelled by generator names and idempotent labels, e.g.
    /// `["c0_23", "c0_12"]`. Panics on unknown names; meant for tests and
    /// programmatic construction.
    pub fn word_by_names(&self, names: &[&str]) -> Option<Word> {
        if let [single] = names {
            if let Some(e) = self.idempotent_id(single) {
                return Some(Word::idempotent(e));
            }
        }
        let ids: Vec<GenId> = names
            .iter()
            .map(|n| self.generator_id(n).unwrap_or_else(|| panic!("unknown generator {n}")))
            .collect();
        self.word(&ids)
    }

    pub fn is_complete(&self) -> bool {
        self.differential.iter().all(Option::is_some)
    }
}
