use std::collections::BTreeMap;

use cedga_algebra::Presentation;
use cedga_coeff::CoeffRing;
use cedga_morphisms::{Augmentation, DgMap};

/// Named presentations, maps and augmentations over one coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub ring: CoeffRing,
    pub notes: Vec<String>,
    pub presentations: BTreeMap<String, Presentation>,
    pub maps: BTreeMap<String, DgMap>,
    pub augmentations: BTreeMap<String, Augmentation>,
}

impl Bundle {
    pub fn new(ring: CoeffRing) -> Bundle {
        Bundle {
            ring,
            notes: Vec::new(),
            presentations: BTreeMap::new(),
            maps: BTreeMap::new(),
            augmentations: BTreeMap::new(),
        }
    }

    pub fn presentation(&self, name: &str) -> Option<&Presentation> {
        self.presentations.get(name)
    }

    pub fn insert(&mut self, p: Presentation) {
        self.presentations.insert(p.name().to_string(), p);
    }

    /// The only presentation, or the one called `main`.
    pub fn main(&self) -> Option<&Presentation> {
        if self.presentations.len() == 1 {
            return self.presentations.values().next();
        }
        self.presentations.get("main")
    }
}
