//! Chord–tangent arithmetic on short Weierstrass curves y² = x³ + A·x + B.
//!
//! Everything is affine and exact: with rationals, divisions are cheap and
//! the projective machinery would buy nothing. Points are plain data and do
//! not remember their curve; the curve is an explicit parameter to every
//! operation, with an on-curve check guarding the public entry points.
//!
//! The curve of interest is [`Curve::k4`], y² = x³ − 4, whose rational
//! points form a rank-1 group generated by P = (2, 2) (an external fact the
//! crate consumes, not verifies).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{Integer, Rational};

/// A nonsingular curve y² = x³ + A·x + B over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    a: Rational,
    b: Rational,
}

/// A rational point: the distinguished point at infinity (the group
/// identity) or an affine coordinate pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl Curve {
    /// Requires 4A³ + 27B² ≠ 0.
    pub fn new(a: Rational, b: Rational) -> Result<Curve> {
        let disc = Rational::from(4) * a.pow(3) + Rational::from(27) * b.pow(2);
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(Curve { a, b })
    }

    /// The curve y² = x³ − 4 on which the quartic solutions live.
    pub fn k4() -> Curve {
        Curve {
            a: Rational::from(0),
            b: Rational::from(-4),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Exact membership test; infinity is on every curve.
    ///
    /// Decided by integer cross-multiplication rather than rational
    /// arithmetic: for iteration-sized points (millions of digits) this
    /// avoids gcd reductions and costs only a few multiplications.
    pub fn contains(&self, pt: &CurvePoint) -> bool {
        let (x, y) = match pt {
            CurvePoint::Infinity => return true,
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (nx, dx) = (x.numer(), x.denom());
        let (ny, dy) = (y.numer(), y.denom());
        let (na, da) = (self.a.numer(), self.a.denom());
        let (nb, db) = (self.b.numer(), self.b.denom());
        // y²·dx³·da·db = dy²·(nx³·da·db + na·nx·dx²·db + nb·dx³·da)
        let dx2 = Integer::from(dx * dx);
        let dx3 = Integer::from(&dx2 * dx);
        let lhs = Integer::from(ny * ny) * &dx3 * da * db;
        let cubic = Integer::from(nx * nx) * nx * da * db
            + Integer::from(na * nx) * &dx2 * db
            + Integer::from(nb * &dx3) * da;
        let rhs = Integer::from(dy * dy) * cubic;
        lhs == rhs
    }

    /// The full chord–tangent law. Errors if either input is off the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointOffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    /// n·p by double-and-add; negative n multiplies the negation, 0·p is
    /// infinity. Errors if p is off the curve.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
        if !self.contains(p) {
            return Err(Error::PointOffCurve);
        }
        let base = if n < 0 { p.negate() } else { p.clone() };
        let mag = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        for i in (0..u64::BITS - mag.leading_zeros()).rev() {
            acc = self.add_unchecked(&acc, &acc);
            if mag >> i & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
        }
        Ok(acc)
    }

    /// Group law without the membership guard; inputs must be on the curve.
    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        if x1 == x2 && (y1 + y2).is_zero() {
            // p + (−p), which also covers doubling a point with y = 0
            return CurvePoint::Infinity;
        }
        let lambda = if x1 == x2 {
            // equal x and y₁ ≠ −y₂ forces y₁ = y₂ ≠ 0 on a curve
            debug_assert!(!y1.is_zero(), "tangent at a point with y = 0");
            (Rational::from(3) * x1.pow(2) + &self.a) / (Rational::from(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = lambda.pow(2) - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { y, .. } => Some(y),
        }
    }

    /// The group inverse: (x, y) ↦ (x, −y), infinity ↦ infinity.
    pub fn negate(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }
}

/// The generator P = (2, 2) of the rational points on y² = x³ − 4.
pub fn k4_base_point() -> CurvePoint {
    CurvePoint::affine(Rational::from(2), Rational::from(2))
}

/// Text form: `inf` or `(<rational>, <rational>)`.
impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("inf"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl FromStr for CurvePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<CurvePoint> {
        let t = s.trim();
        if t == "inf" {
            return Ok(CurvePoint::Infinity);
        }
        let err = || Error::InvalidPoint(s.to_owned());
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (xs, ys) = inner.split_once(',').ok_or_else(err)?;
        if ys.contains(',') {
            return Err(err());
        }
        let x = xs.trim().parse().map_err(|_| err())?;
        let y = ys.trim().parse().map_err(|_| err())?;
        Ok(CurvePoint::Affine { x, y })
    }
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
