use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse Laurent polynomial with rational coefficients. Exponent vectors
/// have one slot per parameter; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent {
    params: Arc<[String]>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl Laurent {
    pub fn zero(params: Arc<[String]>) -> Self {
        Laurent { params, terms: BTreeMap::new() }
    }

    pub fn constant(params: Arc<[String]>, c: BigRational) -> Self {
        let n = params.len();
        Self::monomial(params, vec![0; n], c)
    }

    pub fn monomial(params: Arc<[String]>, exps: Vec<i64>, c: BigRational) -> Self {
        assert_eq!(exps.len(), params.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Laurent { params, terms }
    }

    pub fn params(&self) -> &Arc<[String]> {
        &self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(terms: &mut BTreeMap<Vec<i64>, BigRational>, e: Vec<i64>, c: BigRational) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add(&self, other: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::accumulate(&mut terms, e.clone(), c.clone());
        }
        Laurent { params: self.params.clone(), terms }
    }

    pub(crate) fn neg(&self) -> Laurent {
        Laurent {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Laurent) -> Laurent {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::accumulate(&mut terms, e, c1 * c2);
            }
        }
        Laurent { params: self.params.clone(), terms }
    }

    /// Inverse of a single-term element; `None` for anything else.
    pub(crate) fn monomial_inverse(&self) -> Option<Laurent> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let inv_e = e.iter().map(|x| -x).collect();
        Some(Self::monomial(self.params.clone(), inv_e, c.recip()))
    }

    fn fmt_monomial(&self, exps: &[i64]) -> Option<String> {
        let parts: Vec<String> = self
            .params
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e != 0)
            .map(|(p, &e)| if e == 1 { p.clone() } else { format!("{p}^{e}") })
            .collect();
        if parts.is_empty() {
            None
        } else {
            Some(parts.join("*"))
        }
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match self.fmt_monomial(e) {
                None => f.write_str(&fmt_rational(&abs))?,
                Some(m) if abs.is_one() => f.write_str(&m)?,
                Some(m) => write!(f, "{}*{}", fmt_rational(&abs), m)?,
            }
        }
        Ok(())
    }
}
