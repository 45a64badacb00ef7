use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use cedga_coeff::{Coeff, CoeffRing};

use crate::Word;

/// A finite sum of composable words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: CoeffRing,
    terms: BTreeMap<Word, Coeff>,
}

impl Element {
    pub fn zero(ring: &CoeffRing) -> Element {
        Element { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &CoeffRing, w: Word, c: Coeff) -> Element {
        let mut x = Element::zero(ring);
        x.add_term(w, c);
        x
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Coeff)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Coeff> {
        self.terms.get(w)
    }

    /// Greatest word in the term order.
    pub fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Adds `c·w` in place. Panics if `c` lives in another ring.
    pub fn add_term(&mut self, w: Word, c: Coeff) {
        assert!(c.belongs_to(&self.ring), "coefficient ring mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Coeff) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Element {
        let mut out = Element::zero(&self.ring);
        if c.is_zero() {
            return out;
        }
        for (w, d) in &self.terms {
            out.add_term(w.clone(), c * d);
        }
        out
    }

    /// Applies `f` to every word; terms mapping to `None` are dropped.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Option<Word>) -> Element {
        let mut out = Element::zero(&self.ring);
        for (w, c) in &self.terms {
            if let Some(v) = f(w) {
                out.add_term(v, c.clone());
            }
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Word) -> bool) -> Element {
        let mut out = Element::zero(&self.ring);
        for (w, c) in &self.terms {
            if keep(w) {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    fn check_ring(&self, other: &Element) {
        assert!(self.ring == other.ring, "coefficient ring mismatch");
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.check_ring(rhs);
        let mut out = Element::zero(&self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                if let Some(w) = u.concat(v) {
                    out.add_term(w, a * b);
                }
            }
        }
        out
    }
}
