//! The exact one-one correspondence between the cubic
//! a³ + a²b + ab² + b³ = 1 and the Weierstrass curve y² = x³ − 4.
//!
//! Forward map: (x, y) ↦ (a, b) = ((y + 2)/(2x), −(y − 2)/(2x)).
//! Inverse map: (a, b) ↦ (x, y) = (2/(a + b), 2(a − b)/(a + b)).
//!
//! The maps are undefined at finitely many exceptional points — infinity
//! and x = 0 on one side, a + b = 0 on the other. The iteration never
//! visits them, so they are hard errors rather than extended values.
//!
//! Under this correspondence, points with both cubic coordinates positive
//! are exactly the curve points with 2^(2/3) < x < 2
//! ([`positivity_matches_window`] restates that as a decidable predicate).

use serde::Serialize;

use crate::curve::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A rational point on a³ + a²b + ab² + b³ = 1, i.e. (a + b)(a² + b²) = 1.
///
/// The coordinates of any such point are a k = 4 solution pair: multiplying
/// the cubic by a − b gives a⁴ − b⁴ = a − b.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicPoint {
    pub a: Rational,
    pub b: Rational,
}

impl CubicPoint {
    /// Validates the cubic equation exactly.
    pub fn new(a: Rational, b: Rational) -> Result<CubicPoint> {
        let pt = CubicPoint { a, b };
        if pt.is_on_cubic() {
            Ok(pt)
        } else {
            Err(Error::PointOffCurve)
        }
    }

    pub fn is_on_cubic(&self) -> bool {
        (&self.a + &self.b) * (self.a.pow(2) + self.b.pow(2)) == Rational::from(1)
    }
}

/// (x, y) ↦ ((y + 2)/(2x), −(y − 2)/(2x)).
///
/// The input must lie on y² = x³ − 4; infinity and x = 0 are
/// [`Error::ExceptionalPoint`].
pub fn to_cubic(pt: &CurvePoint) -> Result<CubicPoint> {
    let (x, y) = match pt {
        CurvePoint::Affine { x, y } if !x.is_zero() => (x, y),
        _ => return Err(Error::ExceptionalPoint),
    };
    debug_assert!(Curve::k4().contains(pt), "input must lie on y² = x³ − 4");
    let two = Rational::from(2);
    let two_x = &two * x;
    let a = (y + &two) / &two_x;
    let b = -((y - &two) / &two_x);
    Ok(CubicPoint { a, b })
}

/// (a, b) ↦ (2/(a + b), 2(a − b)/(a + b)).
///
/// The input must lie on the cubic; a + b = 0 is
/// [`Error::ExceptionalPoint`] (no point of the cubic has a + b = 0, but
/// the raw map would be undefined there).
pub fn to_curve(pt: &CubicPoint) -> Result<CurvePoint> {
    let s = &pt.a + &pt.b;
    if s.is_zero() {
        return Err(Error::ExceptionalPoint);
    }
    let two = Rational::from(2);
    let x = &two / &s;
    let y = two * (&pt.a - &pt.b) / s;
    Ok(CurvePoint::affine(x, y))
}

/// True iff [both coordinates of `to_cubic(pt)` are positive] ⇔
/// [`pt.x` is in the window 2^(2/3) < x < 2].
///
/// This is the correspondence claim as a testable predicate; it is expected
/// to hold identically on the curve.
pub fn positivity_matches_window(pt: &CurvePoint) -> Result<bool> {
    let cubic = to_cubic(pt)?;
    let x = pt.x().expect("to_cubic only accepts affine points");
    Ok((cubic.a.is_positive() && cubic.b.is_positive()) == x.in_window())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::k4_base_point;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> CurvePoint {
        s.parse().unwrap()
    }

    fn cp(a: &str, b: &str) -> CubicPoint {
        CubicPoint::new(r(a), r(b)).unwrap()
    }

    #[test]
    fn base_points_map_to_unit_solutions() {
        assert_eq!(to_cubic(&pt("(2, 2)")).unwrap(), cp("1", "0"));
        assert_eq!(to_cubic(&pt("(2, -2)")).unwrap(), cp("0", "1"));
        assert_eq!(to_curve(&cp("1", "0")).unwrap(), pt("(2, 2)"));
        assert_eq!(to_curve(&cp("0", "1")).unwrap(), pt("(2, -2)"));
    }

    #[test]
    fn point_a_corresponds_to_the_quartic_solution() {
        let a = pt("(785/484, 5497/10648)");
        let sol = to_cubic(&a).unwrap();
        assert_eq!(sol, cp("26793/34540", "15799/34540"));
        assert_eq!(to_curve(&sol).unwrap(), a);
    }

    #[test]
    fn exceptional_points_error() {
        assert_eq!(
            to_cubic(&CurvePoint::Infinity),
            Err(Error::ExceptionalPoint)
        );
        assert_eq!(
            to_cubic(&CurvePoint::affine(r("0"), r("1"))),
            Err(Error::ExceptionalPoint)
        );
        assert_eq!(
            to_curve(&CubicPoint {
                a: r("1/2"),
                b: r("-1/2")
            }),
            Err(Error::ExceptionalPoint)
        );
        assert_eq!(CubicPoint::new(r("1"), r("1")), Err(Error::PointOffCurve));
    }

    #[test]
    fn window_predicate_on_known_points() {
        // both sides hold
        assert!(positivity_matches_window(&pt("(785/484, 5497/10648)")).unwrap());
        // both sides fail: x = 5 > 2 and the image has a negative coordinate
        assert!(positivity_matches_window(&pt("(5, -11)")).unwrap());
        // boundary: x = 2 is outside the open window and b = 0 is not positive
        assert!(positivity_matches_window(&pt("(2, 2)")).unwrap());
    }

    proptest! {
        #[test]
        fn round_trip_and_image_on_multiples(n in (-15i64..=15).prop_filter("nonzero", |n| *n != 0)) {
            let c = Curve::k4();
            let q = c.scalar_mul(n, &k4_base_point()).unwrap();
            // no affine point of y² = x³ − 4 has x = 0 (that would need y² = −4)
            let image = to_cubic(&q).unwrap();
            prop_assert!(image.is_on_cubic());
            prop_assert_eq!(to_curve(&image).unwrap(), q.clone());
            prop_assert!(positivity_matches_window(&q).unwrap());
            // and the other direction of the round trip
            prop_assert_eq!(to_cubic(&to_curve(&image).unwrap()).unwrap(), image);
        }
    }
}
