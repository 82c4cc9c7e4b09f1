//! Exact rational scalars: the ground field all towers are built over.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An arbitrary-precision rational, always kept in canonical form:
/// positive denominator, numerator and denominator coprime.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    /// Builds `numer/denom` in canonical form; the denominator must be nonzero.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Rational, Error> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Rational {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }

    /// Multiplicative inverse; fails on zero.
    pub fn invert(&self) -> Result<Rational, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact division; fails when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Parses `["-"] digits ["/" digits]`; the whole string must match and the
    /// denominator must be nonzero. No whitespace, no signs on the denominator.
    pub fn parse(text: &str) -> Result<Rational, Error> {
        let (value, end) = scan_rational(text, 0)?;
        if end != text.len() {
            return Err(Error::ParseError {
                position: end,
                message: "trailing input after rational".into(),
            });
        }
        Ok(value)
    }
}

/// Scans a rational starting at byte `pos` of `text`, returning the value and
/// the position one past its last byte. Used by the tower and element parsers.
pub(crate) fn scan_rational(text: &str, pos: usize) -> Result<(Rational, usize), Error> {
    let bytes = text.as_bytes();
    let mut cur = pos;
    if bytes.get(cur) == Some(&b'-') {
        cur += 1;
    }
    let digits_start = cur;
    while cur < bytes.len() && bytes[cur].is_ascii_digit() {
        cur += 1;
    }
    if cur == digits_start {
        return Err(Error::ParseError {
            position: cur,
            message: "expected digit".into(),
        });
    }
    let numer = BigInt::from_str(&text[pos..cur]).expect("scanned digits");
    if bytes.get(cur) != Some(&b'/') {
        return Ok((Rational::from_bigint(numer), cur));
    }
    cur += 1;
    let denom_start = cur;
    while cur < bytes.len() && bytes[cur].is_ascii_digit() {
        cur += 1;
    }
    if cur == denom_start {
        return Err(Error::ParseError {
            position: cur,
            message: "expected digit in denominator".into(),
        });
    }
    let denom = BigInt::from_str(&text[denom_start..cur]).expect("scanned digits");
    if denom.is_zero() {
        return Err(Error::ParseError {
            position: denom_start,
            message: "zero denominator".into(),
        });
    }
    Ok((Rational(BigRational::new(numer, denom)), cur))
}

impl fmt::Display for Rational {
    /// Canonical form: `p` when the denominator is 1, otherwise `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rational::parse(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Rational {
        Rational::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
