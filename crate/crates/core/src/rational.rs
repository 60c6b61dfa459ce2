//! Exact reduced fractions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// A reduced fraction with positive denominator.
///
/// Every slope, threshold and slope invariant in the engine is one of these;
/// nothing is ever rounded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "RationalRepr", try_from = "RationalRepr")]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `num/den` in lowest terms.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Ratio::new(num, den))
    }

    pub const fn integer(n: i64) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn floor(&self) -> i64 {
        self.numer().div_euclid(self.denom())
    }

    /// Compares with `threshold` using `>` when `strict`, `>=` otherwise.
    pub fn exceeds(&self, threshold: Rational, strict: bool) -> bool {
        match self.cmp(&threshold) {
            Ordering::Greater => true,
            Ordering::Equal => !strict,
            Ordering::Less => false,
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0.$method(Ratio::from_integer(rhs)))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Wire form: `{"num": p, "den": q}`.
#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i64,
    den: i64,
}

impl From<Rational> for RationalRepr {
    fn from(q: Rational) -> Self {
        RationalRepr {
            num: q.numer(),
            den: q.denom(),
        }
    }
}

impl TryFrom<RationalRepr> for Rational {
    type Error = String;

    fn try_from(r: RationalRepr) -> Result<Self, Self::Error> {
        if r.den <= 0 {
            return Err(format!("denominator must be positive, got {}", r.den));
        }
        let q = Rational::new(r.num, r.den);
        if q.numer() != r.num || q.denom() != r.den {
            return Err(format!("{}/{} is not in lowest terms", r.num, r.den));
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let q = Rational::new(6, -4);
        assert_eq!((q.numer(), q.denom()), (-3, 2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Rational::new(8, 4).to_string(), "2");
    }

    #[test]
    fn exceeds_respects_strictness() {
        let three = Rational::integer(3);
        assert!(three.exceeds(three, false));
        assert!(!three.exceeds(three, true));
        assert!(Rational::new(4, 3).exceeds(Rational::ONE, true));
    }

    #[test]
    fn floor_rounds_toward_negative_infinity() {
        assert_eq!(Rational::new(-1, 2).floor(), -1);
        assert_eq!(Rational::new(7, 3).floor(), 2);
    }

    #[test]
    fn json_rejects_unreduced() {
        let bad: Result<Rational, _> = serde_json::from_str(r#"{"num":2,"den":4}"#);
        assert!(bad.is_err());
        let ok: Rational = serde_json::from_str(r#"{"num":-5,"den":3}"#).unwrap();
        assert_eq!(ok, Rational::new(-5, 3));
        assert_eq!(serde_json::to_string(&ok).unwrap(), r#"{"num":-5,"den":3}"#);
    }
}
