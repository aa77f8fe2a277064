//! Solution generators for a^k − b^k = a − b.
//!
//! * k = 2 collapses to a + b = 1: [`solve_k2`].
//! * k = 3 has a complete two-parameter family: [`solve_k3`].
//! * k = 4 reduces (after dividing by a − b) to the cubic
//!   a³ + a²b + ab² + b³ = 1, birationally a rank-1 elliptic curve; new
//!   solutions are produced by iterating Q = 2Pᵢ − P on y² = x³ − 4 and
//!   keeping whichever of ±Q has positive ordinate: [`generate_k4`].
//!
//! The iteration preserves the window 2^(2/3) < x < 2, so every iterate
//! maps to a solution with both coordinates positive, and the multipliers
//! nᵢ (with Pᵢ = nᵢ·P) satisfy |nᵢ₊₁| = |2nᵢ − 1|, which grows strictly —
//! the solutions are pairwise distinct. Coordinate sizes roughly quadruple
//! per step: expect multi-kilobyte integers past ten iterations and budget
//! accordingly; there is deliberately no artificial cap.

use serde::Serialize;

use crate::birational::to_cubic;
use crate::curve::{k4_base_point, Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::rational::{Integer, Rational};

/// How a solution pair relates to the always-present trivial ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    /// a = b.
    TrivialFixed,
    /// (1, 0) or (0, 1).
    TrivialUnit,
    /// Anything else.
    Nontrivial,
}

impl std::fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolutionKind::TrivialFixed => "trivial-fixed",
            SolutionKind::TrivialUnit => "trivial-unit",
            SolutionKind::Nontrivial => "nontrivial",
        })
    }
}

/// A verified solution of a^k − b^k = a − b.
///
/// Instances only come out of [`verify_solution`] and the solvers, so the
/// equation is guaranteed to hold exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub a: Rational,
    pub b: Rational,
    pub k: u32,
    pub kind: SolutionKind,
}

/// Outcome of an exact check of a^k − b^k = a − b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Verified(Solution),
    /// The equation fails; carries the nonzero residual
    /// a^k − b^k − (a − b).
    Rejected {
        residual: Rational,
    },
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified(_))
    }

    pub fn solution(self) -> Option<Solution> {
        match self {
            Verification::Verified(s) => Some(s),
            Verification::Rejected { .. } => None,
        }
    }
}

fn classify(a: &Rational, b: &Rational) -> SolutionKind {
    let zero = Rational::from(0);
    let one = Rational::from(1);
    if a == b {
        SolutionKind::TrivialFixed
    } else if (*a == one && *b == zero) || (*a == zero && *b == one) {
        SolutionKind::TrivialUnit
    } else {
        SolutionKind::Nontrivial
    }
}

/// Exact check of a^k − b^k = a − b; k < 2 is out of range.
pub fn verify_solution(a: &Rational, b: &Rational, k: u32) -> Result<Verification> {
    if k < 2 {
        return Err(Error::ExponentOutOfRange);
    }
    let residual = a.pow(k) - b.pow(k) - (a - b);
    if residual.is_zero() {
        Ok(Verification::Verified(Solution {
            a: a.clone(),
            b: b.clone(),
            k,
            kind: classify(a, b),
        }))
    } else {
        Ok(Verification::Rejected { residual })
    }
}

fn checked(a: Rational, b: Rational, k: u32) -> Solution {
    match verify_solution(&a, &b, k) {
        Ok(Verification::Verified(s)) => s,
        other => unreachable!("solver produced a non-solution ({a}, {b}, {k}): {other:?}"),
    }
}

/// The k = 2 family (m, 1 − m): the equation collapses to a + b = 1.
pub fn solve_k2(m: Rational) -> Solution {
    let b = Rational::from(1) - &m;
    checked(m, b, 2)
}

/// The complete k = 3 family
/// a = (m² − n²)/(m² + mn + n²), b = (2mn + n²)/(m² + mn + n²).
///
/// The denominator is positive definite, so (0, 0) is the only degenerate
/// integer pair.
pub fn solve_k3(m: i64, n: i64) -> Result<Solution> {
    if m == 0 && n == 0 {
        return Err(Error::DegenerateParameters);
    }
    let (m, n) = (Integer::from(m), Integer::from(n));
    let m2 = Integer::from(&m * &m);
    let n2 = Integer::from(&n * &n);
    let mn = Integer::from(&m * &n);
    let den = Integer::from(&m2 + &mn) + &n2;
    let a = Rational::normalize(m2 - &n2, den.clone())?;
    let b = Rational::normalize((mn << 1u32) + n2, den)?;
    Ok(checked(a, b, 3))
}

/// The closed-form abscissa of Q = 2P₁ − P for P₁ = (x₁, y₁) on
/// y² = x³ − 4:
///
/// x₂ = 2·{x₁⁸ + 8x₁⁷ − 64x₁⁶ + 64x₁⁵ + 224x₁⁴ + 512x₁³ + 1024x₁²
/// − 1024x₁ − 1024 + (4x₁⁶ − 320x₁³ − 512)·y₁} / (x₁⁴ − 8x₁³ + 32x₁ + 32)².
///
/// Equivalent to the group-law composition but a single rational
/// expression. The denominator x₁⁴ − 8x₁³ + 32x₁ + 32 has no rational
/// roots, so [`Error::SingularInput`] is unreachable for rational points;
/// the guard stays because the formula does not know that.
pub fn abscissa_of_q(x1: &Rational, y1: &Rational) -> Result<Rational> {
    fn poly(x: &Rational, coeffs: &[i64]) -> Rational {
        let mut acc = Rational::from(0);
        for &c in coeffs {
            acc = acc * x + Rational::from(c);
        }
        acc
    }

    let den = poly(x1, &[1, -8, 0, 32, 32]);
    if den.is_zero() {
        return Err(Error::SingularInput);
    }
    let even = poly(x1, &[1, 8, -64, 64, 224, 512, 1024, -1024, -1024]);
    let odd = poly(x1, &[4, 0, 0, -320, 0, 0, -512]);
    Ok(Rational::from(2) * (even + odd * y1) / den.pow(2))
}

/// One step of the point iteration on y² = x³ − 4.
///
/// Invariants (checked in debug builds, relied on everywhere):
/// `point` = `multiplier`·P with |multiplier| > 2, `point.x` in the window
/// 2^(2/3) < x < 2, and `point.y` > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationState {
    pub point: CurvePoint,
    pub multiplier: i64,
    pub index: u32,
}

/// The default start A = −4P = (785/484, 5497/10648).
pub fn start_point_a() -> CurvePoint {
    CurvePoint::affine(
        Rational::normalize(785, 484).expect("static"),
        Rational::normalize(5497, 10648).expect("static"),
    )
}

/// The state (A, −4, 1) that seeds [`generate_k4`].
pub fn initial_state() -> IterationState {
    IterationState {
        point: start_point_a(),
        multiplier: -4,
        index: 1,
    }
}

impl IterationState {
    /// Builds the state for an arbitrary window start point, recovering its
    /// multiplier by a bounded scan of ±3..=±64 (a start produced by this
    /// crate is always in that range; anything it cannot identify is
    /// [`Error::UnknownMultiplier`]).
    pub fn for_start(start: &CurvePoint) -> Result<IterationState> {
        let curve = Curve::k4();
        if !curve.contains(start) {
            return Err(Error::PointOffCurve);
        }
        let (x, y) = match start {
            CurvePoint::Affine { x, y } => (x, y),
            CurvePoint::Infinity => return Err(Error::StartOutOfWindow),
        };
        if !x.in_window() || !y.is_positive() {
            return Err(Error::StartOutOfWindow);
        }
        let p = k4_base_point();
        for mag in 3..=64 {
            for multiplier in [mag, -mag] {
                if curve.scalar_mul(multiplier, &p).expect("P is on the curve") == *start {
                    return Ok(IterationState {
                        point: start.clone(),
                        multiplier,
                        index: 1,
                    });
                }
            }
        }
        Err(Error::UnknownMultiplier)
    }

    fn assert_invariants(&self) {
        debug_assert!(Curve::k4().contains(&self.point));
        debug_assert!(self.point.x().is_some_and(Rational::in_window));
        debug_assert!(self.point.y().is_some_and(Rational::is_positive));
        debug_assert!(self.multiplier.abs() > 2);
    }
}

/// Advances the iteration: Q = 2Pᵢ − P, then Pᵢ₊₁ is whichever of Q, −Q
/// has positive ordinate, with the signed multiplier updated to ±(2nᵢ − 1)
/// accordingly.
///
/// The window is preserved (the step's defining property), and y = 0 cannot
/// occur on this curve, so no error is reachable from a valid state.
/// Panics if the state violates its invariants.
pub fn next_state(s: &IterationState) -> IterationState {
    s.assert_invariants();
    let curve = Curve::k4();
    let doubled = curve
        .scalar_mul(2, &s.point)
        .expect("state point is on the curve");
    let q = curve
        .add(&doubled, &k4_base_point().negate())
        .expect("both summands are on the curve");
    let n = 2 * s.multiplier - 1;
    let (point, multiplier) = if q.y().is_some_and(Rational::is_positive) {
        (q, n)
    } else {
        (q.negate(), -n)
    };
    let next = IterationState {
        point,
        multiplier,
        index: s.index + 1,
    };
    next.assert_invariants();
    next
}

/// The first `count` quartic solutions from the default start A = −4P.
///
/// The i-th entry is the image of Pᵢ under the birational map; Fermat's
/// (26793/34540, 15799/34540) comes first.
pub fn generate_k4(count: u32) -> Vec<Solution> {
    generate_from_state(count, initial_state())
}

/// Like [`generate_k4`] but seeded from any valid window point.
pub fn generate_k4_from(count: u32, start: &CurvePoint) -> Result<Vec<Solution>> {
    Ok(generate_from_state(
        count,
        IterationState::for_start(start)?,
    ))
}

fn generate_from_state(count: u32, mut state: IterationState) -> Vec<Solution> {
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..count {
        let cubic = to_cubic(&state.point).expect("window points are never exceptional");
        out.push(checked(cubic.a, cubic.b, 4));
        if i + 1 < count {
            state = next_state(&state);
        }
    }
    out
}
