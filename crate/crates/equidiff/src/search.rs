//! Exhaustive search for nontrivial solutions with bounded denominator.
//!
//! Writing a = p/q and b = r/q over a common denominator and dividing the
//! equation by a − b (exact, since p ≠ r) gives the homogeneous form
//!
//! ```text
//! S(p, r) = p^(k−1) + p^(k−2)·r + … + r^(k−1) = q^(k−1).
//! ```
//!
//! Every positive nontrivial solution satisfies 0 < b < a < 1 (the mirror
//! image with a < b is not reported), so scanning 0 ≤ r < p < q for each
//! q ≤ max_den is complete, and the gcd(p, r, q) = 1 filter keeps exactly
//! one representative per solution: non-canonical hits are rediscovered at
//! the reduced denominator. For fixed p > 0 the form S is strictly
//! increasing in r, so each (q, p) costs one binary search. Everything runs
//! in `u128` while k·q^(k−1) fits and falls back to arbitrary precision
//! beyond that, so `search_k(131, 4)` is as legal as `search_k(3, 200)`.
//!
//! Negative coordinates are opt-in via [`SearchOptions::include_negative`]:
//! there is no analogue of the 0 < b < a < 1 confinement, so that mode
//! scans |p|, |r| ≤ height·q linearly and completeness is relative to the
//! chosen height.
//!
//! Reports are deterministic — solutions arrive ordered by (q, p, r) and
//! the examined-pair count is a function of the parameters alone — whether
//! or not the scan runs on multiple threads.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rug::ops::Pow;
use serde::Serialize;

use crate::applications::Render;
use crate::rational::{Integer, Rational};
use crate::solvers::{verify_solution, Solution, SolutionKind};

/// Tuning knobs for [`search_k_opts`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; 1 means run on the calling thread.
    pub jobs: usize,
    /// Also scan negative numerators (see the module docs).
    pub include_negative: bool,
    /// Bound |a|, |b| ≤ height when `include_negative` is set; ignored
    /// otherwise.
    pub height: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            include_negative: false,
            height: 1,
        }
    }
}

/// Outcome of a search: what was scanned and what was found.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub k: u32,
    pub max_den: u64,
    /// Size of the scanned (p, r) domain. A function of the search
    /// parameters only, and additive across denominator ranges —
    /// serialized as a decimal string since it can exceed every JSON
    /// number type.
    #[serde(serialize_with = "u128_as_decimal_string")]
    pub pairs_examined: u128,
    pub solutions: Vec<Solution>,
    #[serde(rename = "elapsed_ms", serialize_with = "duration_as_millis")]
    pub elapsed: Duration,
}

fn u128_as_decimal_string<S: serde::Serializer>(n: &u128, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn duration_as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(u64::try_from(d.as_millis()).unwrap_or(u64::MAX))
}

impl SearchReport {
    /// JSON with the wall-clock field omitted: equal runs compare equal.
    pub fn deterministic_json(&self) -> String {
        #[derive(Serialize)]
        struct Det<'a> {
            k: u32,
            max_den: u64,
            #[serde(serialize_with = "u128_as_decimal_string")]
            pairs_examined: u128,
            solutions: &'a [Solution],
        }
        serde_json::to_string(&Det {
            k: self.k,
            max_den: self.max_den,
            pairs_examined: self.pairs_examined,
            solutions: &self.solutions,
        })
        .expect("serializable")
    }

    /// Combines reports from complementary denominator ranges of the same
    /// search (see [`search_range`]).
    pub fn merge(mut self, other: SearchReport) -> SearchReport {
        assert_eq!(self.k, other.k, "cannot merge searches for different k");
        self.max_den = self.max_den.max(other.max_den);
        self.pairs_examined += other.pairs_examined;
        self.solutions.extend(other.solutions);
        self.elapsed += other.elapsed;
        self
    }
}

impl Render for SearchReport {
    fn plain(&self) -> String {
        let mut out = format!(
            "k = {}, max_den = {}, pairs examined = {}, elapsed = {} ms",
            self.k,
            self.max_den,
            self.pairs_examined,
            self.elapsed.as_millis()
        );
        if self.solutions.is_empty() {
            out.push_str("\nno nontrivial solutions");
        } else {
            for s in &self.solutions {
                out.push('\n');
                out.push_str(&s.plain());
            }
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = format!(
            "\\text{{k = {}, max den = {}, pairs examined = {}}}",
            self.k, self.max_den, self.pairs_examined
        );
        if self.solutions.is_empty() {
            out.push_str("\n\\text{no nontrivial solutions}");
        } else {
            for s in &self.solutions {
                out.push('\n');
                out.push_str(&s.latex());
            }
        }
        out
    }

    fn json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Finds every positive nontrivial solution of a^k − b^k = a − b whose
/// reduced denominators divide some q ≤ max_den, in (denominator,
/// numerator) order. Panics if k < 2 or max_den < 1.
pub fn search_k(k: u32, max_den: u64) -> SearchReport {
    search_k_opts(k, max_den, &SearchOptions::default())
}

/// [`search_k`] with explicit [`SearchOptions`].
pub fn search_k_opts(k: u32, max_den: u64, opts: &SearchOptions) -> SearchReport {
    run_search(k, 1, max_den, opts)
}

/// One slice q ∈ [q_lo, q_hi] of a positive search, for partitioning work:
/// merging the slices of a partition of [1, max_den] reproduces
/// [`search_k`] exactly (wall-clock aside).
pub fn search_range(k: u32, q_lo: u64, q_hi: u64) -> SearchReport {
    run_search(k, q_lo, q_hi, &SearchOptions::default())
}

fn run_search(k: u32, q_lo: u64, q_hi: u64, opts: &SearchOptions) -> SearchReport {
    assert!(k >= 2, "exponent k must be at least 2");
    assert!(
        1 <= q_lo && q_lo <= q_hi,
        "denominator range [{q_lo}, {q_hi}] must be nonempty and positive"
    );
    if opts.include_negative {
        assert!(opts.height >= 1, "height must be at least 1");
    }
    let start = Instant::now();
    let scan = |q: u64| scan_q(k, q, opts);
    let per_q: Vec<(u128, Vec<Solution>)> = if opts.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("worker pool")
            .install(|| (q_lo..=q_hi).into_par_iter().map(scan).collect())
    } else {
        (q_lo..=q_hi).map(scan).collect()
    };
    let mut pairs_examined = 0u128;
    let mut solutions = Vec::new();
    for (count, hits) in per_q {
        pairs_examined += count;
        solutions.extend(hits);
    }
    SearchReport {
        k,
        max_den: q_hi,
        pairs_examined,
        solutions,
        elapsed: start.elapsed(),
    }
}

/// Scans one denominator; returns the examined-pair count and the
/// canonical nontrivial hits, ordered by (p, r).
fn scan_q(k: u32, q: u64, opts: &SearchOptions) -> (u128, Vec<Solution>) {
    let (count, raw) = if opts.include_negative {
        let bound = opts
            .height
            .checked_mul(q)
            .and_then(|b| i64::try_from(b).ok())
            .expect("height·q must fit in i64");
        let b = bound as u128;
        (b * (2 * b + 1), signed_hits(k, bound, q))
    } else {
        let q128 = q as u128;
        (q128 * (q128 - 1) / 2, positive_hits(k, q))
    };
    let solutions = raw
        .into_iter()
        .filter(|&(p, r)| {
            Integer::from(p)
                .gcd(&Integer::from(r))
                .gcd(&Integer::from(q))
                == 1
        })
        .map(|(p, r)| {
            let a = Rational::normalize(p, q).expect("q ≥ 1");
            let b = Rational::normalize(r, q).expect("q ≥ 1");
            verify_solution(&a, &b, k)
                .expect("k ≥ 2 was asserted")
                .solution()
                .expect("S(p, r) = q^(k-1) implies the equation holds")
        })
        .filter(|s| s.kind == SolutionKind::Nontrivial)
        .collect();
    (count, solutions)
}

/// Raw hits S(p, r) = q^(k−1) with 0 ≤ r < p < q, gcd not yet filtered.
fn positive_hits(k: u32, q: u64) -> Vec<(i64, i64)> {
    // k·q^(k−1) bounds every Horner intermediate, so this guard makes the
    // u128 path overflow-free
    let fast_target = (q as u128)
        .checked_pow(k - 1)
        .filter(|t| t.checked_mul(k as u128).is_some());
    match fast_target {
        Some(target) => positive_hits_fast(k, q, target),
        None => positive_hits_big(k, q),
    }
}

fn horner_u128(p: u128, r: u128, k: u32) -> u128 {
    let mut s = 1u128;
    let mut pw = 1u128;
    for _ in 1..k {
        pw *= p;
        s = s * r + pw;
    }
    s
}

fn positive_hits_fast(k: u32, q: u64, target: u128) -> Vec<(i64, i64)> {
    let mut hits = Vec::new();
    for p in 1..q {
        // S(p, ·) is strictly increasing on 0 ≤ r < p
        let (mut lo, mut hi) = (0u64, p - 1);
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            match horner_u128(p as u128, mid as u128, k).cmp(&target) {
                Ordering::Equal => {
                    hits.push((p as i64, mid as i64));
                    break;
                }
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => {
                    if mid == 0 {
                        break;
                    }
                    hi = mid - 1;
                }
            }
        }
    }
    hits
}

fn horner_big(p: &Integer, r: &Integer, k: u32) -> Integer {
    let mut s = Integer::from(1);
    let mut pw = Integer::from(1);
    for _ in 1..k {
        pw *= p;
        s *= r;
        s += &pw;
    }
    s
}

fn positive_hits_big(k: u32, q: u64) -> Vec<(i64, i64)> {
    let target = Integer::from(q).pow(k - 1);
    let mut hits = Vec::new();
    for p in 1..q {
        let pi = Integer::from(p);
        let (mut lo, mut hi) = (0u64, p - 1);
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            match horner_big(&pi, &Integer::from(mid), k).cmp(&target) {
                Ordering::Equal => {
                    hits.push((p as i64, mid as i64));
                    break;
                }
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => {
                    if mid == 0 {
                        break;
                    }
                    hi = mid - 1;
                }
            }
        }
    }
    hits
}

/// Raw hits over −bound ≤ r < p ≤ bound (p ≥ 1 − bound keeps r < p
/// satisfiable). S is not monotone once signs mix, so this is a plain
/// linear scan.
fn signed_hits(k: u32, bound: i64, q: u64) -> Vec<(i64, i64)> {
    // same overflow bound as the positive path, with |p|, |r| ≤ bound
    let fast = (bound as i128)
        .checked_pow(k - 1)
        .and_then(|m| m.checked_mul(k as i128))
        .is_some();
    let mut hits = Vec::new();
    if fast {
        let target = (q as i128).pow(k - 1);
        for p in (1 - bound)..=bound {
            for r in -bound..p {
                if horner_i128(p as i128, r as i128, k) == target {
                    hits.push((p, r));
                }
            }
        }
    } else {
        let target = Integer::from(q).pow(k - 1);
        for p in (1 - bound)..=bound {
            let pi = Integer::from(p);
            for r in -bound..p {
                if horner_big(&pi, &Integer::from(r), k) == target {
                    hits.push((p, r));
                }
            }
        }
    }
    hits
}

fn horner_i128(p: i128, r: i128, k: u32) -> i128 {
    let mut s = 1i128;
    let mut pw = 1i128;
    for _ in 1..k {
        pw *= p;
        s = s * r + pw;
    }
    s
}
