//! Exact rational scalars.
//!
//! [`Rational`] wraps an arbitrary-precision fraction that is kept in lowest
//! terms with a positive denominator after every operation, so equality is
//! structural and "difference is zero" checks are exact.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{literal}`: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// If `self == -p` for a natural `p`, returns `p`.
    ///
    /// A top parameter with this property terminates a hypergeometric series
    /// after the term of index `p`; a bottom parameter with it makes the
    /// Pochhammer denominator vanish from index `p + 1` on.
    pub fn nonpositive_integer(&self) -> Option<usize> {
        if self.is_integer() && !self.0.is_positive() {
            (-self.0.numer()).to_usize()
        } else {
            None
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Lossy conversion, used only for display and plotting.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n.into())
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_bigint(BigInt::from(n))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
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
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` with an optional leading minus; `q` must be positive.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            literal: s.to_string(),
            reason,
        };
        let literal = s.trim();
        let (neg, body) = match literal.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, literal),
        };
        let digits = |part: &str| -> Result<BigInt, ParseRationalError> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected decimal digits"));
            }
            part.parse::<BigInt>().map_err(|_| err("expected decimal digits"))
        };
        let (num, den) = match body.split_once('/') {
            Some((p, q)) => (digits(p)?, digits(q)?),
            None => (digits(body)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        let num = if neg { -num } else { num };
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of rational literals. The empty string is
/// the empty list.
pub fn parse_list(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $assign:ident, $assign_method:ident) => {
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($imp::$method(&self.0, &rhs.0))
            }
        }
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($imp::$method(self.0, rhs.0))
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($imp::$method(self.0, &rhs.0))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($imp::$method(&self.0, rhs.0))
            }
        }
        impl $assign<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                $assign::$assign_method(&mut self.0, &rhs.0);
            }
        }
        impl $assign<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                $assign::$assign_method(&mut self.0, rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(q("6/4"), Rational::new(3, 2));
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("8/4").to_string(), "2");
        assert_eq!(q("0/7").to_string(), "0");
        assert_eq!(q(" 5 ").to_string(), "5");
        assert_eq!(q("-0").to_string(), "0");
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "/", "1/", "/2", "1/0", "a", "1.5", "--1", "1/-2", "+3", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(q("0").nonpositive_integer(), Some(0));
        assert_eq!(q("-3").nonpositive_integer(), Some(3));
        assert_eq!(q("3").nonpositive_integer(), None);
        assert_eq!(q("-1/2").nonpositive_integer(), None);
    }

    #[test]
    fn serde_uses_string_literals() {
        let v = vec![q("1"), q("-7/8")];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1","-7/8"]"#);
        let back: Vec<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1,1/2,-3").unwrap(), vec![q("1"), q("1/2"), q("-3")]);
        assert!(parse_list("").unwrap().is_empty());
        assert!(parse_list("1,,2").is_err());
    }
}
