use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::{fmt_rational, Laurent};
use crate::{CoeffError, CoeffRing};

/// A coefficient tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Gf2(bool),
    Laurent(Laurent),
}

impl Coeff {
    pub fn zero(ring: &CoeffRing) -> Coeff {
        match ring {
            CoeffRing::Rationals => Coeff::Rational(BigRational::zero()),
            CoeffRing::Gf2 => Coeff::Gf2(false),
            CoeffRing::Laurent(p) => Coeff::Laurent(Laurent::zero(p.clone())),
        }
    }

    pub fn one(ring: &CoeffRing) -> Coeff {
        Coeff::from_i64(ring, 1)
    }

    pub fn from_i64(ring: &CoeffRing, n: i64) -> Coeff {
        Coeff::from_rational(ring, BigRational::from_integer(n.into()))
            .expect("integers embed in every ring")
    }

    pub fn from_bigint(ring: &CoeffRing, n: BigInt) -> Coeff {
        Coeff::from_rational(ring, BigRational::from_integer(n)).expect("integers embed in every ring")
    }

    /// Image of a rational number. In GF2 this fails for even denominators.
    pub fn from_rational(ring: &CoeffRing, q: BigRational) -> Result<Coeff, CoeffError> {
        Ok(match ring {
            CoeffRing::Rationals => Coeff::Rational(q),
            CoeffRing::Gf2 => {
                if q.denom().is_even() {
                    return Err(CoeffError::NotRepresentable {
                        value: fmt_rational(&q),
                        ring: ring.to_string(),
                    });
                }
                Coeff::Gf2(q.numer().is_odd())
            }
            CoeffRing::Laurent(p) => Coeff::Laurent(Laurent::constant(p.clone(), q)),
        })
    }

    /// `name^exp` in a Laurent ring.
    pub fn param_power(ring: &CoeffRing, name: &str, exp: i64) -> Option<Coeff> {
        let idx = ring.param_index(name)?;
        let params = match ring {
            CoeffRing::Laurent(p) => p.clone(),
            _ => return None,
        };
        let mut exps = vec![0; params.len()];
        exps[idx] = exp;
        Some(Coeff::Laurent(Laurent::monomial(params, exps, BigRational::one())))
    }

    pub fn ring(&self) -> CoeffRing {
        match self {
            Coeff::Rational(_) => CoeffRing::Rationals,
            Coeff::Gf2(_) => CoeffRing::Gf2,
            Coeff::Laurent(l) => CoeffRing::Laurent(l.params().clone()),
        }
    }

    pub fn belongs_to(&self, ring: &CoeffRing) -> bool {
        match (self, ring) {
            (Coeff::Rational(_), CoeffRing::Rationals) | (Coeff::Gf2(_), CoeffRing::Gf2) => true,
            (Coeff::Laurent(l), CoeffRing::Laurent(p)) => l.params() == p,
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Gf2(b) => !b,
            Coeff::Laurent(l) => l.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Gf2(b) => *b,
            Coeff::Laurent(l) => l.is_one(),
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Gf2(_) => false,
            Coeff::Laurent(l) => l.len() == 1 && l.terms().all(|(_, c)| c.is_negative()),
        }
    }

    fn mismatch(&self, other: &Coeff) -> CoeffError {
        CoeffError::RingMismatch { left: self.ring().to_string(), right: other.ring().to_string() }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        Ok(match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Gf2(a), Coeff::Gf2(b)) => Coeff::Gf2(a ^ b),
            (Coeff::Laurent(a), Coeff::Laurent(b)) if a.params() == b.params() => Coeff::Laurent(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        Ok(match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Gf2(a), Coeff::Gf2(b)) => Coeff::Gf2(a & b),
            (Coeff::Laurent(a), Coeff::Laurent(b)) if a.params() == b.params() => Coeff::Laurent(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_sub(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Gf2(a) => Coeff::Gf2(*a),
            Coeff::Laurent(a) => Coeff::Laurent(a.neg()),
        }
    }

    /// Multiplicative inverse: any nonzero rational, GF2's 1, or a
    /// single-term Laurent element.
    pub fn inverse(&self) -> Result<Coeff, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::ZeroDivision);
        }
        match self {
            Coeff::Rational(q) => Ok(Coeff::Rational(q.recip())),
            Coeff::Gf2(_) => Ok(Coeff::Gf2(true)),
            Coeff::Laurent(l) => l
                .monomial_inverse()
                .map(Coeff::Laurent)
                .ok_or_else(|| CoeffError::NotAUnit(self.to_string())),
        }
    }

    /// Rational value, if the coefficient is a constant of ℚ or GF2.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Coeff::Rational(q) => Some(q.clone()),
            Coeff::Gf2(b) => Some(BigRational::from_integer(i32::from(*b).into())),
            Coeff::Laurent(l) => {
                if l.is_zero() {
                    return Some(BigRational::zero());
                }
                let mut it = l.terms();
                let (e, c) = it.next()?;
                (it.next().is_none() && e.iter().all(|&x| x == 0)).then(|| c.clone())
            }
        }
    }

    /// Parse a coefficient literal such as `-3`, `2/3`, `lam^-1*mu^2` or
    /// `(mu - mu*lam)`.
    pub fn parse(ring: &CoeffRing, text: &str) -> Result<Coeff, CoeffError> {
        crate::parse::parse_coeff(ring, text)
    }

    /// Whether the printed form needs parentheses when used as a factor.
    pub fn needs_parens(&self) -> bool {
        match self {
            Coeff::Laurent(l) => l.len() > 1,
            _ => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => f.write_str(&fmt_rational(q)),
            Coeff::Gf2(b) => f.write_str(if *b { "1" } else { "0" }),
            Coeff::Laurent(l) => l.fmt(f),
        }
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods where
// operands are not known to share a ring.

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.checked_add(rhs).expect("coefficient ring mismatch")
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.checked_sub(rhs).expect("coefficient ring mismatch")
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.checked_mul(rhs).expect("coefficient ring mismatch")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}
