//! Exact rational solutions of **a^k − b^k = a − b**.
//!
//! For every k there are the trivial solutions a = b and {a, b} = {1, 0};
//! this crate is about the nontrivial ones, in exact arithmetic throughout:
//!
//! * **k = 2** — a + b = 1, one rational parameter ([`solve_k2`]).
//! * **k = 3** — a complete two-integer-parameter family ([`solve_k3`]);
//!   Diophantus' (8/13, 7/13) is the m = 3, n = 1 member.
//! * **k = 4** — no closed form. Dividing by a − b leaves the cubic
//!   a³ + a²b + ab² + b³ = 1, which is birationally the elliptic curve
//!   y² = x³ − 4; iterating Q = 2Pᵢ − P from a seed in the window
//!   2^(2/3) < x < 2 yields infinitely many solutions with positive
//!   coordinates ([`generate_k4`]), starting from Fermat's
//!   (26793/34540, 15799/34540).
//! * **k ≥ 5** — none known; [`search_k`] rules them out exhaustively for
//!   bounded denominators.
//!
//! Each solution certifies a radical identity like
//! ⁴√(62304353849776801/1423276677734560000) + 5497/17270 =
//! ⁴√(62304353849776801/1423276677734560000 + 5497/17270) ([`curio`]) and,
//! when 0 < b < a, a pair of geometric series with the same sum
//! ([`geometric_series`]).
//!
//! Everything is built on arbitrary-precision rationals — iterate
//! coordinates roughly quadruple in digits per step and reach a million
//! digits by the tenth point, and all of it is exact. No floats, no
//! rounding, anywhere.
//!
//! The `equidiff` binary exposes the same operations; see [`cli`]. For a
//! guided tour with worked examples, the book under `book/` renders with
//! mdbook and every snippet in it compiles and runs as a doc-test via the
//! [`guide`] module.

pub mod applications;
pub mod birational;
pub mod cli;
pub mod curve;
pub mod error;
pub mod guide;
pub mod rational;
pub mod search;
pub mod solvers;

pub use applications::{
    curio, geometric_series, nth_term, CurioIdentity, GeometricSeriesPair, OutputFormat, Render,
};
pub use birational::{positivity_matches_window, to_cubic, to_curve, CubicPoint};
pub use curve::{k4_base_point, Curve, CurvePoint};
pub use error::{Error, Result};
pub use rational::{decimal_digits, Integer, Rational};
pub use search::{search_k, search_k_opts, search_range, SearchOptions, SearchReport};
pub use solvers::{
    abscissa_of_q, generate_k4, generate_k4_from, initial_state, next_state, solve_k2, solve_k3,
    start_point_a, verify_solution, IterationState, Solution, SolutionKind, Verification,
};

#[doc = include_str!("../../../README.md")]
#[cfg(doctest)]
pub struct ReadmeDoctests;
