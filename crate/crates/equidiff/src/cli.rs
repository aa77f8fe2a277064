//! The `equidiff` command-line interface.
//!
//! [`run`] is the whole program: it parses an argv, writes to the given
//! streams, and returns the exit code — 0 for success, 1 when a check
//! comes back negative (`verify` on a non-solution, `search
//! --expect-found` finding nothing), 2 for usage and input errors. The
//! binary in `main.rs` is a thin wrapper, so every behavior is testable
//! in-process against byte buffers.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::applications::{curio, geometric_series, nth_term, OutputFormat, Render};
use crate::curve::{Curve, CurvePoint};
use crate::rational::Rational;
use crate::search::{search_k_opts, SearchOptions};
use crate::solvers::{
    generate_k4, generate_k4_from, solve_k2, solve_k3, verify_solution, Solution, Verification,
};

#[derive(Parser)]
#[command(
    name = "equidiff",
    version,
    about = "Exact rational solutions of a^k - b^k = a - b"
)]
struct Cli {
    /// Output encoding for results
    #[arg(long, global = true, default_value = "plain")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Plain => OutputFormat::Plain,
            Format::Latex => OutputFormat::Latex,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve by closed form: k = 2 takes rational --m, k = 3 takes integers --m and --n
    Solve {
        #[arg(long)]
        k: u32,
        /// For k = 2 the value of a; for k = 3 the first integer parameter
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Second integer parameter (k = 3 only)
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
    },
    /// Generate k = 4 solutions by iterating on the curve y^2 = x^3 - 4
    Generate {
        #[arg(long)]
        k: u32,
        /// How many solutions to produce (sizes roughly quadruple per step)
        #[arg(long)]
        count: u32,
        /// Start point "(x, y)" instead of the default (785/484, 5497/10648)
        #[arg(long, allow_hyphen_values = true)]
        start: Option<CurvePoint>,
    },
    /// Check a^k - b^k = a - b exactly; exit 1 with the residual if it fails
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        k: u32,
    },
    /// The radical identities certified by a nontrivial solution
    Curio {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        k: u32,
    },
    /// The equal-sum pair of geometric series attached to a solution
    Series {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        k: u32,
        /// Also list the first N terms of the base series
        #[arg(long)]
        terms: Option<u32>,
    },
    /// Exhaustive scan of every denominator up to a bound
    Search {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_den: u64,
        /// Worker threads (default 1)
        #[arg(long)]
        jobs: Option<usize>,
        /// Exit 1 if the scan comes back empty
        #[arg(long)]
        expect_found: bool,
        /// Scan negative numerators too (completeness then depends on --height)
        #[arg(long)]
        include_negative: bool,
        /// Bound |a|, |b| <= height in the negative scan (default 1)
        #[arg(long)]
        height: Option<u64>,
    },
    /// Group operations on y^2 = x^3 - 4
    Point {
        #[arg(long)]
        op: PointOp,
        /// First operand "(x, y)" or "inf"
        #[arg(long, allow_hyphen_values = true)]
        p: CurvePoint,
        /// Second operand (add only)
        #[arg(long, allow_hyphen_values = true)]
        q: Option<CurvePoint>,
        /// Scalar (mul only)
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PointOp {
    Add,
    Neg,
    Mul,
}

/// Runs the CLI against explicit streams and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land on stdout with status 0; real usage
            // errors go to stderr with status 2, like clap's own exit()
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    let format = cli.format.into();
    match dispatch(cli.command, format) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, format: OutputFormat) -> Result<(String, i32), String> {
    match cmd {
        Command::Solve { k, m, n } => solve_cmd(k, m, n, format).map(|s| (s, 0)),
        Command::Generate { k, count, start } => {
            generate_cmd(k, count, start, format).map(|s| (s, 0))
        }
        Command::Verify { a, b, k } => verify_cmd(&a, &b, k, format),
        Command::Curio { a, b, k } => {
            let sol = solution_of(&a, &b, k)?;
            let identity = curio(&sol).map_err(|e| e.to_string())?;
            Ok((identity.render(format), 0))
        }
        Command::Series { a, b, k, terms } => series_cmd(&a, &b, k, terms, format).map(|s| (s, 0)),
        Command::Search {
            k,
            max_den,
            jobs,
            expect_found,
            include_negative,
            height,
        } => search_cmd(
            k,
            max_den,
            jobs,
            expect_found,
            include_negative,
            height,
            format,
        ),
        Command::Point { op, p, q, n } => point_cmd(op, p, q, n, format).map(|s| (s, 0)),
    }
}

fn parse_i64(s: &str) -> Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| format!("invalid integer `{s}`"))
}

fn solve_cmd(
    k: u32,
    m: Option<String>,
    n: Option<String>,
    format: OutputFormat,
) -> Result<String, String> {
    match k {
        2 => {
            if n.is_some() {
                return Err("--n applies only to k = 3".into());
            }
            let m = m.ok_or("k = 2 needs --m, the value of a")?;
            let m: Rational = m.trim().parse().map_err(|e: crate::Error| e.to_string())?;
            Ok(solve_k2(m).render(format))
        }
        3 => {
            let m = parse_i64(&m.ok_or("k = 3 needs integer --m")?)?;
            let n = parse_i64(&n.ok_or("k = 3 needs integer --n")?)?;
            let sol = solve_k3(m, n).map_err(|e| e.to_string())?;
            Ok(sol.render(format))
        }
        4 => Err("k = 4 has no closed form; use `generate --k 4`".into()),
        other => Err(format!("no closed-form solver for k = {other}")),
    }
}

fn generate_cmd(
    k: u32,
    count: u32,
    start: Option<CurvePoint>,
    format: OutputFormat,
) -> Result<String, String> {
    if k != 4 {
        return Err("generation is implemented for k = 4 only".into());
    }
    let solutions = match &start {
        Some(point) => generate_k4_from(count, point).map_err(|e| e.to_string())?,
        None => generate_k4(count),
    };
    Ok(match format {
        OutputFormat::Json => serde_json::to_string(&solutions).expect("serializable"),
        _ => solutions
            .iter()
            .map(|s| s.render(format))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn verify_cmd(
    a: &Rational,
    b: &Rational,
    k: u32,
    format: OutputFormat,
) -> Result<(String, i32), String> {
    match verify_solution(a, b, k).map_err(|e| e.to_string())? {
        Verification::Verified(sol) => {
            let text = match format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        verified: bool,
                        solution: &'a Solution,
                    }
                    serde_json::to_string(&Out {
                        verified: true,
                        solution: &sol,
                    })
                    .expect("serializable")
                }
                _ => sol.render(format),
            };
            Ok((text, 0))
        }
        Verification::Rejected { residual } => {
            let text = match format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        verified: bool,
                        residual: &'a Rational,
                    }
                    serde_json::to_string(&Out {
                        verified: false,
                        residual: &residual,
                    })
                    .expect("serializable")
                }
                OutputFormat::Latex => {
                    format!(
                        "\\text{{not a solution: residual}} = {}",
                        residual.to_latex()
                    )
                }
                OutputFormat::Plain => format!("not a solution: residual = {residual}"),
            };
            Ok((text, 1))
        }
    }
}

/// Verifies the pair and hands back the solution, or a message naming the
/// residual.
fn solution_of(a: &Rational, b: &Rational, k: u32) -> Result<Solution, String> {
    match verify_solution(a, b, k).map_err(|e| e.to_string())? {
        Verification::Verified(sol) => Ok(sol),
        Verification::Rejected { residual } => Err(format!(
            "({a}, {b}) does not satisfy a^{k} - b^{k} = a - b (residual {residual})"
        )),
    }
}

fn series_cmd(
    a: &Rational,
    b: &Rational,
    k: u32,
    terms: Option<u32>,
    format: OutputFormat,
) -> Result<String, String> {
    let sol = solution_of(a, b, k)?;
    let series = geometric_series(&sol).map_err(|e| e.to_string())?;
    let Some(n) = terms else {
        return Ok(series.render(format));
    };
    let listed: Vec<Rational> = (1..=n).map(|i| nth_term(&series, i)).collect();
    Ok(match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                k: u32,
                first_term: &'a Rational,
                ratio: &'a Rational,
                sum: &'a Rational,
                terms: &'a [Rational],
            }
            serde_json::to_string(&Out {
                k: series.k,
                first_term: &series.first_term,
                ratio: &series.ratio,
                sum: &series.common_sum,
                terms: &listed,
            })
            .expect("serializable")
        }
        OutputFormat::Plain => {
            let mut out = series.plain();
            for (i, t) in listed.iter().enumerate() {
                out.push_str(&format!("\nterm {} = {}", i + 1, t));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = series.latex();
            for (i, t) in listed.iter().enumerate() {
                out.push_str(&format!("\nt_{{{}}} = {}", i + 1, t.to_latex()));
            }
            out
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn search_cmd(
    k: u32,
    max_den: u64,
    jobs: Option<usize>,
    expect_found: bool,
    include_negative: bool,
    height: Option<u64>,
    format: OutputFormat,
) -> Result<(String, i32), String> {
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    if max_den < 1 {
        return Err("--max-den must be at least 1".into());
    }
    if jobs == Some(0) {
        return Err("--jobs must be at least 1".into());
    }
    if height.is_some() && !include_negative {
        return Err("--height applies only with --include-negative".into());
    }
    if height == Some(0) {
        return Err("--height must be at least 1".into());
    }
    let opts = SearchOptions {
        jobs: jobs.unwrap_or(1),
        include_negative,
        height: height.unwrap_or(1),
    };
    let report = search_k_opts(k, max_den, &opts);
    let code = i32::from(expect_found && report.solutions.is_empty());
    Ok((report.render(format), code))
}

fn point_cmd(
    op: PointOp,
    p: CurvePoint,
    q: Option<CurvePoint>,
    n: Option<i64>,
    format: OutputFormat,
) -> Result<String, String> {
    let curve = Curve::k4();
    let result = match op {
        PointOp::Add => {
            if n.is_some() {
                return Err("--n applies only to mul".into());
            }
            let q = q.ok_or("add needs --q")?;
            curve.add(&p, &q).map_err(|e| e.to_string())?
        }
        PointOp::Neg => {
            if q.is_some() || n.is_some() {
                return Err("neg takes only --p".into());
            }
            if !curve.contains(&p) {
                return Err(crate::Error::PointOffCurve.to_string());
            }
            p.negate()
        }
        PointOp::Mul => {
            if q.is_some() {
                return Err("--q applies only to add".into());
            }
            let n = n.ok_or("mul needs --n")?;
            curve.scalar_mul(n, &p).map_err(|e| e.to_string())?
        }
    };
    Ok(match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                point: &'a CurvePoint,
            }
            serde_json::to_string(&Out { point: &result }).expect("serializable")
        }
        OutputFormat::Latex => match (result.x(), result.y()) {
            (Some(x), Some(y)) => {
                format!("\\left({}, {}\\right)", x.to_latex(), y.to_latex())
            }
            _ => "\\infty".to_string(),
        },
        OutputFormat::Plain => result.to_string(),
    })
}
