//! Arbitrary-precision rationals in canonical reduced form.
//!
//! [`Rational`] is the universal scalar of this crate. It wraps
//! [`rug::Rational`] (GMP), which keeps every value canonical: positive
//! denominator, `gcd(|numerator|, denominator) = 1`, zero stored as `0/1`.
//! GMP matters here because the k = 4 iteration quadruples coordinate sizes
//! per step; its subquadratic multiplication and gcd keep ten iterates
//! (numbers with millions of digits) tractable.
//!
//! There is no floating point anywhere: comparisons, powers and the
//! window test are decided by integer arithmetic alone.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use rug::ops::Pow;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use rug::Integer;

use crate::error::{Error, Result};

/// An exact rational number, immutable and always in canonical form.
///
/// Equality is structural equality of reduced forms, so every identity in
/// this crate is a plain `==`. The arithmetic operators are implemented for
/// all owned/borrowed combinations; division by zero panics (check with
/// [`Rational::is_zero`] first when the divisor is not known to be nonzero).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(rug::Rational);

impl Rational {
    /// The canonical reduced form of `num/den`, sign carried by the
    /// numerator.
    ///
    /// ```
    /// # use equidiff::Rational;
    /// assert_eq!(Rational::normalize(4, 6)?.to_string(), "2/3");
    /// assert_eq!(Rational::normalize(3, -9)?.to_string(), "-1/3");
    /// assert_eq!(Rational::normalize(10994, 34540)?.to_string(), "5497/17270");
    /// # Ok::<(), equidiff::Error>(())
    /// ```
    pub fn normalize<N, D>(num: N, den: D) -> Result<Rational>
    where
        N: Into<Integer>,
        D: Into<Integer>,
    {
        let num = num.into();
        let den = den.into();
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(rug::Rational::from((num, den))))
    }

    /// The exact k-th power, canonical. `pow(x, 0)` is 1 for every x,
    /// including 0.
    pub fn pow(&self, k: u32) -> Rational {
        Rational(rug::Rational::from((&self.0).pow(k)))
    }

    /// Whether 2^(2/3) < x < 2, decided exactly as p³ > 4q³ and p < 2q by
    /// integer cross-multiplication (x = p/q in lowest terms).
    ///
    /// This open interval is the abscissa window in which curve points
    /// correspond to positive solutions of the quartic equation.
    pub fn in_window(&self) -> bool {
        let p = self.0.numer();
        let q = self.0.denom();
        if *p >= Integer::from(q << 1u32) {
            return false; // x ≥ 2
        }
        Integer::from(p.pow(3u32)) > Integer::from(q.pow(3u32)) << 2u32
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Less
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Numerator of the reduced form (carries the sign).
    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    /// Denominator of the reduced form (always positive).
    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    /// The reciprocal. Panics on zero.
    pub fn recip(&self) -> Rational {
        Rational(self.0.clone().recip())
    }

    /// LaTeX source: integers as plain digits, fractions as `\frac{..}{..}`
    /// with the sign pulled out front.
    pub fn to_latex(&self) -> String {
        if self.is_integer() {
            return self.numer().to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let abs_num = Integer::from(self.numer().abs_ref());
        format!("{sign}\\frac{{{abs_num}}}{{{}}}", self.denom())
    }
}

/// Number of decimal digits of `n`, ignoring any sign (0 has one digit).
pub fn decimal_digits(n: &Integer) -> usize {
    n.to_string().trim_start_matches('-').len()
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational(rug::Rational::from(n))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Rational {
        Rational(rug::Rational::from(n))
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Rational {
        Rational(rug::Rational::from(n))
    }
}

/// Canonical text form: `num/den`, integers without the `/1`.
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

/// Accepts the same grammar [`Display`](fmt::Display) emits, with an
/// optional sign on either part; the result is normalized. `1/0` is
/// [`Error::ZeroDenominator`], anything non-numeric is
/// [`Error::InvalidRational`].
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        fn parse_int(t: &str) -> Option<Integer> {
            let body = t.strip_prefix(['-', '+']).unwrap_or(t);
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            Integer::from_str(t).ok()
        }

        let t = s.trim();
        let (ns, ds) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let num = parse_int(ns).ok_or_else(|| Error::InvalidRational(s.to_owned()))?;
        let den = parse_int(ds).ok_or_else(|| Error::InvalidRational(s.to_owned()))?;
        Rational::normalize(num, den)
    }
}

/// Serialized as the canonical text form (decimal strings, never machine
/// integers — coordinates outgrow every native width within a few
/// iterations).
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! arith {
    ($imp:ident, $method:ident) => {
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from((&self.0).$method(&rhs.0)))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

arith!(Add, add);
arith!(Sub, sub);
arith!(Mul, mul);
arith!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(rug::Rational::from((&self.0).neg()))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}
