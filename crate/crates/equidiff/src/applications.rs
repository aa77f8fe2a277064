//! Two things a nontrivial solution is good for.
//!
//! With d = a − b = a^k − b^k:
//!
//! * a **curio**: ᵏ√(b^k) + d = ᵏ√(b^k + d) and ᵏ√(a^k) − d = ᵏ√(a^k − d) —
//!   the radicand absorbs the addend. Certified by powering; no roots are
//!   ever extracted.
//! * an **equal-sum pair of geometric series**: when 0 < b < a, the series
//!   with first term 1/a and ratio b/a has the same sum as the series of
//!   its k-th powers, namely 1/(a − b).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solvers::{Solution, SolutionKind};

/// The pair of radical identities attached to a nontrivial solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurioIdentity {
    pub k: u32,
    /// b^k, the radicand that grows: ᵏ√(base_plus) + d = ᵏ√(base_plus + d).
    pub base_plus: Rational,
    /// a^k, the radicand that shrinks: ᵏ√(base_minus) − d = ᵏ√(base_minus − d).
    pub base_minus: Rational,
    /// a − b = a^k − b^k.
    pub d: Rational,
    /// ᵏ√(base_plus + d), which is just a.
    pub root_plus: Rational,
    /// ᵏ√(base_minus − d), which is just b.
    pub root_minus: Rational,
}

/// Builds the curio for a nontrivial solution.
///
/// Trivial solutions give d = 0 or bases 0 and 1 — true but empty — and are
/// rejected as [`Error::DegenerateIdentity`].
pub fn curio(sol: &Solution) -> Result<CurioIdentity> {
    if sol.kind != SolutionKind::Nontrivial {
        return Err(Error::DegenerateIdentity);
    }
    let d = &sol.a - &sol.b;
    let identity = CurioIdentity {
        k: sol.k,
        base_plus: sol.b.pow(sol.k),
        base_minus: sol.a.pow(sol.k),
        d,
        root_plus: sol.a.clone(),
        root_minus: sol.b.clone(),
    };
    // the whole point: both equalities hold exactly in the k-th power
    assert_eq!(
        identity.root_plus.pow(identity.k),
        &identity.base_plus + &identity.d
    );
    assert_eq!(
        identity.root_minus.pow(identity.k),
        &identity.base_minus - &identity.d
    );
    Ok(identity)
}

/// Two geometric series with the same sum: Σ a₁rⁿ⁻¹ and Σ (a₁rⁿ⁻¹)^k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricSeriesPair {
    pub k: u32,
    /// a₁ = 1/a.
    pub first_term: Rational,
    /// r = b/a.
    pub ratio: Rational,
    /// 1/(a − b), the sum both series converge to.
    #[serde(rename = "sum")]
    pub common_sum: Rational,
}

/// Builds the equal-sum pair for a solution with 0 < b < a.
///
/// That ordering makes 0 < r < 1, so both series converge; anything else is
/// [`Error::DegenerateSeries`].
pub fn geometric_series(sol: &Solution) -> Result<GeometricSeriesPair> {
    if !sol.b.is_positive() || sol.b >= sol.a {
        return Err(Error::DegenerateSeries);
    }
    let pair = GeometricSeriesPair {
        k: sol.k,
        first_term: sol.a.recip(),
        ratio: &sol.b / &sol.a,
        common_sum: (&sol.a - &sol.b).recip(),
    };
    // a₁^k / (1 − r^k) must equal a₁ / (1 − r): that is the original equation
    let direct = &pair.first_term / (Rational::from(1) - &pair.ratio);
    let powered = pair.first_term.pow(pair.k) / (Rational::from(1) - pair.ratio.pow(pair.k));
    assert_eq!(direct, pair.common_sum);
    assert_eq!(powered, pair.common_sum);
    Ok(pair)
}

/// The n-th term a₁·rⁿ⁻¹ of the base series (n counts from 1).
pub fn nth_term(series: &GeometricSeriesPair, n: u32) -> Rational {
    assert!(n >= 1, "terms are numbered from 1");
    &series.first_term * series.ratio.pow(n - 1)
}

/// Output encodings shared by the CLI and the renderers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Latex,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Values that know how to print themselves in every [`OutputFormat`].
pub trait Render {
    fn plain(&self) -> String;
    fn latex(&self) -> String;
    fn json(&self) -> String;

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.plain(),
            OutputFormat::Latex => self.latex(),
            OutputFormat::Json => self.json(),
        }
    }
}

fn root_plain(k: u32, radicand: &str) -> String {
    format!("root{k}({radicand})")
}

fn root_latex(k: u32, radicand: &str) -> String {
    if k == 2 {
        format!("\\sqrt{{{radicand}}}")
    } else {
        format!("\\sqrt[{k}]{{{radicand}}}")
    }
}

impl Render for CurioIdentity {
    fn plain(&self) -> String {
        let plus = format!(
            "{} + {} = {}",
            root_plain(self.k, &self.base_plus.to_string()),
            self.d,
            root_plain(self.k, &format!("{} + {}", self.base_plus, self.d)),
        );
        let minus = format!(
            "{} - {} = {}",
            root_plain(self.k, &self.base_minus.to_string()),
            self.d,
            root_plain(self.k, &format!("{} - {}", self.base_minus, self.d)),
        );
        format!("{plus}\n{minus}")
    }

    fn latex(&self) -> String {
        let plus = format!(
            "{} + {} = {}",
            root_latex(self.k, &self.base_plus.to_latex()),
            self.d.to_latex(),
            root_latex(
                self.k,
                &format!("{} + {}", self.base_plus.to_latex(), self.d.to_latex())
            ),
        );
        let minus = format!(
            "{} - {} = {}",
            root_latex(self.k, &self.base_minus.to_latex()),
            self.d.to_latex(),
            root_latex(
                self.k,
                &format!("{} - {}", self.base_minus.to_latex(), self.d.to_latex())
            ),
        );
        format!("{plus}\n{minus}")
    }

    fn json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl Render for GeometricSeriesPair {
    fn plain(&self) -> String {
        format!(
            "sum ({})*({})^(n-1) = sum [({})*({})^(n-1)]^{} = {}",
            self.first_term, self.ratio, self.first_term, self.ratio, self.k, self.common_sum
        )
    }

    fn latex(&self) -> String {
        format!(
            "\\sum_{{n=1}}^{{\\infty}} {}\\left({}\\right)^{{n-1}} = \\sum_{{n=1}}^{{\\infty}} \\left[{}\\left({}\\right)^{{n-1}}\\right]^{{{}}} = {}",
            self.first_term.to_latex(),
            self.ratio.to_latex(),
            self.first_term.to_latex(),
            self.ratio.to_latex(),
            self.k,
            self.common_sum.to_latex()
        )
    }

    fn json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl Render for Solution {
    fn plain(&self) -> String {
        format!(
            "a = {}, b = {}, k = {}, {}",
            self.a, self.b, self.k, self.kind
        )
    }

    fn latex(&self) -> String {
        format!(
            "a = {}, \\quad b = {}, \\quad k = {} \\quad (\\text{{{}}})",
            self.a.to_latex(),
            self.b.to_latex(),
            self.k,
            self.kind
        )
    }

    fn json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
