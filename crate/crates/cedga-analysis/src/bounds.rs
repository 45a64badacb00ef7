use std::fmt;

/// Search limits. Every bounded negative answer is reported together with
/// the bounds it was obtained under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub max_word_length: usize,
    pub max_level: u32,
    pub degree_bound: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_word_length: 6, max_level: 2, degree_bound: 8 }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "length <= {}, level <= {}, degree bound {}",
            self.max_word_length, self.max_level, self.degree_bound
        )
    }
}

/// Word-length parity; idempotents have length 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("expected `even` or `odd`, got `{other}`")),
        }
    }
}
