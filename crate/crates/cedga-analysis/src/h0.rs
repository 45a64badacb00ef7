use std::collections::{BTreeSet, HashSet};

use cedga_algebra::{Element, GenId, IdemId, Presentation, Word};
use cedga_coeff::Coeff;

use crate::AnalysisError;

/// `lhs → rhs` with `rhs` strictly smaller than `lhs` in the word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

/// Rules over the path algebra of the degree-zero generators, with
/// length-first order. Killed idempotents are zero in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    pub rules: Vec<RewriteRule>,
    pub killed: BTreeSet<IdemId>,
    pub degree_bound: usize,
    /// Whether some overlap was skipped for exceeding the degree bound.
    pub truncated: bool,
}

impl RewriteSystem {
    fn reducer(&self, w: &Word) -> Option<(usize, &RewriteRule)> {
        self.rules.iter().find_map(|r| w.find(&r.lhs).map(|i| (i, r)))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        if w.is_idempotent() {
            return !self.killed.contains(&w.source());
        }
        self.reducer(w).is_none()
    }

    pub fn normal_form(&self, x: &Element) -> Element {
        let mut work = x.clone();
        let mut out = Element::zero(x.ring());
        while let Some((w, c)) = work.leading().map(|(w, c)| (w.clone(), c.clone())) {
            work.add_term(w.clone(), -&c);
            if w.is_idempotent() {
                if !self.killed.contains(&w.source()) {
                    out.add_term(w, c);
                }
                continue;
            }
            match self.reducer(&w) {
                Some((i, rule)) => {
                    let j = i + rule.lhs.len();
                    for (v, d) in rule.rhs.terms() {
                        work.add_term(replace(&w, i, j, v), &c * d);
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }
}

/// `w` with letters `i..j` replaced by `v` (whose ends match them).
fn replace(w: &Word, i: usize, j: usize, v: &Word) -> Word {
    let mut letters: Vec<GenId> = w.letters()[..i].to_vec();
    letters.extend_from_slice(v.letters());
    letters.extend_from_slice(&w.letters()[j..]);
    if letters.is_empty() {
        Word::idempotent(w.source())
    } else {
        Word::from_raw(&letters, w.source(), w.target())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Report {
    /// `∂g` for the generators of degree −1, in declaration order.
    pub relations: Vec<(GenId, Element)>,
    pub system: RewriteSystem,
    pub is_ground_ring: bool,
    /// Normal words of length at most the degree bound.
    pub basis: Vec<Word>,
}

impl H0Report {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

struct Completion<'a> {
    p: &'a Presentation,
    sys: RewriteSystem,
    ids: Vec<u64>,
    next_id: u64,
    done: HashSet<(u64, u64)>,
}

impl Completion<'_> {
    /// Adds the relation `x = 0`; returns whether the system changed.
    fn insert(&mut self, x: &Element) -> Result<bool, AnalysisError> {
        let x = self.sys.normal_form(x);
        let Some((lead, lc)) = x.leading().map(|(w, c)| (w.clone(), c.clone())) else { return Ok(false) };
        let inv = lc.inverse().map_err(|_| AnalysisError::NotAField(self.p.ring().to_string()))?;
        let mut pending = Vec::new();
        if lead.is_idempotent() {
            let e = lead.source();
            self.sys.killed.insert(e);
            for (g, gen) in self.p.generators() {
                if gen.degree == 0 && (gen.source == e || gen.target == e) {
                    pending.push(self.p.gen(g));
                }
            }
        } else {
            let mut rhs = x.scale(&-&inv);
            rhs.add_term(lead.clone(), Coeff::one(self.p.ring()));
            // Rules whose left side contains the new one go back in the queue.
            let mut k = 0;
            while k < self.sys.rules.len() {
                if self.sys.rules[k].lhs.find(&lead).is_some() {
                    let r = self.sys.rules.remove(k);
                    self.ids.remove(k);
                    pending.push(rule_poly(&r));
                } else {
                    k += 1;
                }
            }
            self.sys.rules.push(RewriteRule { lhs: lead, rhs });
            self.ids.push(self.next_id);
            self.next_id += 1;
        }
        for y in pending {
            self.insert(&y)?;
        }
        // Keep right sides reduced.
        for k in 0..self.sys.rules.len() {
            let rhs = self.sys.normal_form(&self.sys.rules[k].rhs);
            self.sys.rules[k].rhs = rhs;
        }
        Ok(true)
    }

    /// Overlap S-polynomials of the first unprocessed pair; `None` when all
    /// pairs are done.
    fn next_pair(&mut self) -> Option<Vec<Element>> {
        let n = self.sys.rules.len();
        for a in 0..n {
            for b in 0..n {
                let key = (self.ids[a], self.ids[b]);
                if !self.done.insert(key) {
                    continue;
                }
                let (r1, r2) = (&self.sys.rules[a], &self.sys.rules[b]);
                let (l1, l2) = (r1.lhs.letters(), r2.lhs.letters());
                let mut out = Vec::new();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    if l1.len() + l2.len() - k > self.sys.degree_bound {
                        self.sys.truncated = true;
                        continue;
                    }
                    // W = A·M·C with l1 = A·M, l2 = M·C: S = f1·C − A·f2.
                    let c = &r2.lhs.letters()[k..];
                    let a_ = &r1.lhs.letters()[..l1.len() - k];
                    let f1 = rule_poly(r1);
                    let f2 = rule_poly(r2);
                    let mut s = Element::zero(self.p.ring());
                    for (v, d) in f1.terms() {
                        s.add_term(extend(v, &[], c, r2.lhs.source(), v.target()), d.clone());
                    }
                    for (v, d) in f2.terms() {
                        s.add_term(extend(v, a_, &[], v.source(), r1.lhs.target()), -d);
                    }
                    out.push(s);
                }
                return Some(out);
            }
        }
        None
    }
}

fn rule_poly(r: &RewriteRule) -> Element {
    let mut f = -&r.rhs;
    f.add_term(r.lhs.clone(), Coeff::one(r.rhs.ring()));
    f
}

fn extend(v: &Word, left: &[GenId], right: &[GenId], src: IdemId, tgt: IdemId) -> Word {
    let mut letters = left.to_vec();
    letters.extend_from_slice(v.letters());
    letters.extend_from_slice(right);
    if letters.is_empty() {
        Word::idempotent(src)
    } else {
        Word::from_raw(&letters, src, tgt)
    }
}

/// Degree-zero homology: the path algebra of the degree-zero generators
/// modulo the ideal generated by the boundaries of degree −1 generators,
/// completed up to words of length `degree_bound`.
pub fn h0(p: &Presentation, degree_bound: usize) -> Result<H0Report, AnalysisError> {
    if !p.ring().is_field() {
        return Err(AnalysisError::NotAField(p.ring().to_string()));
    }
    let mut relations = Vec::new();
    for (g, gen) in p.generators().filter(|(_, gen)| gen.degree == -1) {
        let dg = p
            .differential(g)
            .ok_or_else(|| cedga_algebra::AlgebraError::IncompletePresentation(gen.name.clone()))?;
        for (w, _) in dg.terms() {
            if let Some(bad) = w.letters().iter().find(|l| p.generator(**l).degree != 0) {
                return Err(AnalysisError::Unsupported(format!(
                    "∂{} contains `{}` of nonzero degree",
                    gen.name,
                    p.generator(*bad).name
                )));
            }
        }
        relations.push((g, dg.clone()));
    }

    let sys = RewriteSystem { rules: Vec::new(), killed: BTreeSet::new(), degree_bound, truncated: false };
    let mut comp = Completion { p, sys, ids: Vec::new(), next_id: 0, done: HashSet::new() };
    for (_, r) in &relations {
        comp.insert(r)?;
    }
    while let Some(polys) = comp.next_pair() {
        for s in polys {
            comp.insert(&s)?;
        }
    }
    let sys = comp.sys;
    let basis = normal_words(p, &sys, degree_bound);
    let is_ground_ring = sys.killed.is_empty() && basis.iter().all(Word::is_idempotent);
    Ok(H0Report { relations, system: sys, is_ground_ring, basis })
}

fn normal_words(p: &Presentation, sys: &RewriteSystem, bound: usize) -> Vec<Word> {
    let zero_gens: Vec<GenId> = p
        .generators()
        .filter(|(_, g)| g.degree == 0 && !sys.killed.contains(&g.source) && !sys.killed.contains(&g.target))
        .map(|(id, _)| id)
        .collect();
    let mut out: Vec<Word> = p
        .idempotents()
        .map(|(e, _)| Word::idempotent(e))
        .filter(|w| sys.is_normal(w))
        .collect();
    let mut frontier: Vec<Word> =
        zero_gens.iter().map(|g| p.letter(*g)).filter(|w| sys.is_normal(w)).collect();
    let mut len = 1;
    while !frontier.is_empty() && len <= bound {
        out.extend(frontier.iter().cloned());
        if len == bound {
            break;
        }
        let mut next = Vec::new();
        for w in &frontier {
            for g in &zero_gens {
                if let Some(v) = w.concat(&p.letter(*g)) {
                    // Only suffixes can newly match a rule.
                    let ok = sys.rules.iter().all(|r| {
                        let l = r.lhs.letters();
                        l.len() > v.len() || v.letters()[v.len() - l.len()..] != *l
                    });
                    if ok {
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
        len += 1;
    }
    out.sort();
    out
}
