use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::CoeffError;

/// A coefficient ring. Laurent rings are identified by their ordered
/// parameter list, so `laurent(lam,mu)` and `laurent(mu,lam)` differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Rationals,
    Gf2,
    Laurent(Arc<[String]>),
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl CoeffRing {
    pub fn laurent<S: AsRef<str>>(params: &[S]) -> Result<Self, CoeffError> {
        if params.is_empty() {
            return Err(CoeffError::InvalidParameters("no parameters".into()));
        }
        let mut seen = BTreeSet::new();
        for p in params {
            let p = p.as_ref();
            if !is_identifier(p) {
                return Err(CoeffError::InvalidParameters(format!("`{p}` is not an identifier")));
            }
            if !seen.insert(p) {
                return Err(CoeffError::InvalidParameters(format!("`{p}` repeated")));
            }
        }
        Ok(CoeffRing::Laurent(params.iter().map(|p| p.as_ref().to_string()).collect()))
    }

    pub fn params(&self) -> &[String] {
        match self {
            CoeffRing::Laurent(p) => p,
            _ => &[],
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRing::Laurent(_))
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params().iter().position(|p| p == name)
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Rationals => f.write_str("Q"),
            CoeffRing::Gf2 => f.write_str("GF2"),
            CoeffRing::Laurent(p) => write!(f, "laurent({})", p.join(",")),
        }
    }
}

impl std::str::FromStr for CoeffRing {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "Q" => return Ok(CoeffRing::Rationals),
            "GF2" => return Ok(CoeffRing::Gf2),
            _ => {}
        }
        let inner = s
            .strip_prefix("laurent(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| CoeffError::InvalidParameters(format!("unknown ring `{s}`")))?;
        let params: Vec<&str> = inner.split(',').map(str::trim).collect();
        CoeffRing::laurent(&params)
    }
}
