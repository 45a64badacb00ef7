use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Coeff, CoeffError, CoeffRing};

struct Parser<'a> {
    ring: &'a CoeffRing,
    src: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_coeff(ring: &CoeffRing, text: &str) -> Result<Coeff, CoeffError> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let c = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(c)
}

impl Parser<'_> {
    fn err(&self, message: &str) -> CoeffError {
        CoeffError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Coeff, CoeffError> {
        let mut acc = Coeff::zero(self.ring);
        let mut first = true;
        loop {
            let negate = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
    }

    fn term(&mut self) -> Result<Coeff, CoeffError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn factor(&mut self) -> Result<Coeff, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let c = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(c)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                let q = if self.eat(b'/') {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(CoeffError::ZeroDivision);
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(n)
                };
                Coeff::from_rational(self.ring, q)
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                let exp = if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let e: i64 = self
                        .integer()?
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                };
                Coeff::param_power(self.ring, name, exp).ok_or_else(|| CoeffError::Syntax {
                    offset: start,
                    message: format!("`{name}` is not a parameter of {}", self.ring),
                })
            }
            _ => Err(self.err("expected a coefficient")),
        }
    }
}
