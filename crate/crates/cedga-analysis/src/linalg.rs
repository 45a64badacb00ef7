use std::collections::{BTreeMap, HashMap};

use cedga_algebra::{Element, Word};
use cedga_coeff::{Coeff, CoeffRing};

use crate::AnalysisError;

struct Row {
    /// Leading coefficient is one; the leading key is the pivot.
    vec: BTreeMap<u32, Coeff>,
    column: usize,
    /// Multiplier of the original column in this row.
    scale: Coeff,
    /// Earlier rows subtracted while reducing, already multiplied by `scale`.
    steps: Vec<(usize, Coeff)>,
}

/// Incremental sparse Gaussian elimination over a field. Columns are added
/// one at a time; independent ones are kept in echelon form with the
/// largest word index as pivot, and every kept row remembers how it was
/// produced so that solutions can be expressed in the original columns.
///
/// Rows are keyed by a word together with a tag, so that several equations
/// can be solved jointly by giving each its own tag.
pub struct SparseEliminator {
    ring: CoeffRing,
    index: HashMap<(u32, Word), u32>,
    rows: Vec<Row>,
    pivots: HashMap<u32, usize>,
}

impl SparseEliminator {
    pub fn new(ring: &CoeffRing) -> Result<Self, AnalysisError> {
        if !ring.is_field() {
            return Err(AnalysisError::NotAField(ring.to_string()));
        }
        Ok(SparseEliminator { ring: ring.clone(), index: HashMap::new(), rows: Vec::new(), pivots: HashMap::new() })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn intern(&mut self, parts: &[(u32, &Element)]) -> BTreeMap<u32, Coeff> {
        let mut v = BTreeMap::new();
        for (tag, x) in parts {
            for (w, c) in x.terms() {
                let next = self.index.len() as u32;
                let k = *self.index.entry((*tag, w.clone())).or_insert(next);
                v.insert(k, c.clone());
            }
        }
        v
    }

    /// `None` when some word is reached by no column.
    fn lookup(&self, parts: &[(u32, &Element)]) -> Option<BTreeMap<u32, Coeff>> {
        let mut v = BTreeMap::new();
        for (tag, x) in parts {
            for (w, c) in x.terms() {
                v.insert(*self.index.get(&(*tag, w.clone()))?, c.clone());
            }
        }
        Some(v)
    }

    fn reduce(&self, v: &mut BTreeMap<u32, Coeff>) -> Vec<(usize, Coeff)> {
        let mut steps = Vec::new();
        while let Some((&lead, c)) = v.last_key_value() {
            let Some(&r) = self.pivots.get(&lead) else { break };
            let f = c.clone();
            for (k, d) in &self.rows[r].vec {
                let nv = match v.get(k) {
                    Some(old) => old - &(&f * d),
                    None => -&(&f * d),
                };
                if nv.is_zero() {
                    v.remove(k);
                } else {
                    v.insert(*k, nv);
                }
            }
            steps.push((r, f));
        }
        steps
    }

    /// Adds `value` as the image of column `column`; returns whether it was
    /// independent of the columns added so far.
    pub fn add_column(&mut self, column: usize, value: &Element) -> bool {
        self.add_column_parts(column, &[(0, value)])
    }

    /// Like `add_column`, with one element per tagged equation.
    pub fn add_column_parts(&mut self, column: usize, parts: &[(u32, &Element)]) -> bool {
        let mut v = self.intern(parts);
        let steps = self.reduce(&mut v);
        let Some((&lead, c)) = v.last_key_value() else { return false };
        let inv = c.inverse().expect("nonzero in a field");
        for d in v.values_mut() {
            *d = &*d * &inv;
        }
        let steps = steps.into_iter().map(|(r, f)| (r, &f * &inv)).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(Row { vec: v, column, scale: inv, steps });
        true
    }

    /// Coefficients `x_col` with `Σ x_col · value_col = target`, if any.
    pub fn solve(&self, target: &Element) -> Option<BTreeMap<usize, Coeff>> {
        self.solve_parts(&[(0, target)])
    }

    pub fn solve_parts(&self, parts: &[(u32, &Element)]) -> Option<BTreeMap<usize, Coeff>> {
        let mut v = self.lookup(parts)?;
        let steps = self.reduce(&mut v);
        if !v.is_empty() {
            return None;
        }
        // target = Σ f_r row_r; unwind rows into original columns.
        let zero = Coeff::zero(&self.ring);
        let mut coef: Vec<Coeff> = vec![zero.clone(); self.rows.len()];
        for (r, f) in steps {
            coef[r] = &coef[r] + &f;
        }
        let mut out: BTreeMap<usize, Coeff> = BTreeMap::new();
        for r in (0..self.rows.len()).rev() {
            if coef[r].is_zero() {
                continue;
            }
            let k = coef[r].clone();
            let row = &self.rows[r];
            let e = out.entry(row.column).or_insert_with(|| zero.clone());
            *e = &*e + &(&k * &row.scale);
            for (j, g) in &row.steps {
                coef[*j] = &coef[*j] - &(&k * g);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Some(out)
    }
}
