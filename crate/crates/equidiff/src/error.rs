use thiserror::Error;

/// Errors shared across the crate.
///
/// Messages are stable; the CLI prints them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,
    /// A string did not match the `num/den` grammar.
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    /// A string did not match the `inf` / `(x, y)` grammar.
    #[error("invalid point `{0}`")]
    InvalidPoint(String),
    /// Curve parameters with vanishing discriminant (4A³ + 27B² = 0).
    #[error("singular curve (4A^3 + 27B^2 = 0)")]
    SingularCurve,
    /// An input point does not satisfy its curve equation.
    #[error("point off curve")]
    PointOffCurve,
    /// Infinity, x = 0 or a + b = 0: where the birational maps are undefined.
    #[error("exceptional point")]
    ExceptionalPoint,
    /// (m, n) = (0, 0), the only integer pair where the k = 3 parametrization
    /// has a vanishing denominator.
    #[error("degenerate parameters")]
    DegenerateParameters,
    /// The abscissa formula's denominator x⁴ − 8x³ + 32x + 32 vanishes.
    #[error("singular input")]
    SingularInput,
    /// A solution check was requested with k < 2.
    #[error("exponent out of range")]
    ExponentOutOfRange,
    /// An iteration start point that is not in the window 2^(2/3) < x < 2
    /// with positive ordinate.
    #[error("start point out of window")]
    StartOutOfWindow,
    /// A window start point that is not a small multiple of the base point,
    /// so its multiplier cannot be tracked.
    #[error("start point is not a recognizable multiple of the base point")]
    UnknownMultiplier,
    /// A curio was requested for a trivial solution.
    #[error("degenerate identity (d = 0 or bases 0/1)")]
    DegenerateIdentity,
    /// A series pair was requested with b ≥ a or b ≤ 0.
    #[error("non-convergent or degenerate series")]
    DegenerateSeries,
    /// An output format name other than plain, latex or json.
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
