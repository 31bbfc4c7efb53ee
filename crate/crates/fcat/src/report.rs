//! Report types with a stable, versioned JSON schema. Field order is fixed
//! by declaration, histograms carry every outcome in a fixed order, and big
//! integers are decimal strings, so equal-parameter reruns serialize to
//! byte-identical JSON apart from `elapsed_ms`.

use fcat_core::equation::Outcome;
use serde::Serialize;
use std::fmt::Write as _;

pub const SCHEMA_VERSION: u32 = 1;

/// Fixed histogram order; also the precedence order of the pipeline gates.
pub const ALL_OUTCOMES: [Outcome; 6] = [
    Outcome::NotIntegral,
    Outcome::NotAQthPower,
    Outcome::BarlowAbelFail,
    Outcome::SplittingFail,
    Outcome::ParityReject,
    Outcome::SolutionFound,
];

pub fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::NotIntegral => "not-integral",
        Outcome::NotAQthPower => "not-a-qth-power",
        Outcome::BarlowAbelFail => "barlow-abel-fail",
        Outcome::SplittingFail => "splitting-fail",
        Outcome::ParityReject => "parity-reject",
        Outcome::SolutionFound => "solution-found",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HistogramEntry {
    pub outcome: &'static str,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionRecord {
    pub x: i64,
    pub y: i64,
    pub z: String,
    pub e: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub q: u64,
    pub bound: u64,
    pub control: bool,
    pub pairs: u64,
    pub histogram: Vec<HistogramEntry>,
    pub solutions: Vec<SolutionRecord>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BarlowReport {
    pub p_divides_sum: bool,
    pub u: Option<String>,
    pub v: Option<String>,
    pub passes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub k_prime: String,
    /// (prime, prime mod q) over the distinct primes of K', ascending.
    pub factors: Vec<(u64, u64)>,
    pub offending: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub q: u64,
    /// Orbit-normalized representative actually evaluated.
    pub x: i64,
    pub y: i64,
    pub outcome: &'static str,
    pub n: Option<String>,
    pub e: u32,
    pub z: Option<String>,
    pub barlow: Option<BarlowReport>,
    pub splitting: Option<SplittingReport>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FueterEntry {
    pub n: u64,
    /// Coefficients on the sigma_c basis, c = 1..p-1.
    pub coeffs: Vec<i64>,
    pub phi: u64,
    pub relative_weight: Option<i64>,
    pub norm_pair: bool,
    pub in_stickelberger: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FueterReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub elements: Vec<FueterEntry>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct JkReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub k: u64,
    pub coeffs: Vec<i64>,
    pub phi: u64,
    pub relative_weight: Option<i64>,
    /// theta as a sum of sigma_c * psi_n translates.
    pub terms: Vec<(u64, u64)>,
    pub lambda_sign: i8,
    pub lambda_exponent: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiSumReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub r: u64,
    pub a: u64,
    pub b: u64,
    pub coeffs: Vec<String>,
    /// J * conj(J), a rational integer equal to r.
    pub conj_product: String,
    pub iwasawa: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiBetaReport {
    pub schema: u32,
    pub kind: &'static str,
    pub p: u64,
    pub r: u64,
    pub theta: String,
    pub theta_coeffs: Vec<i64>,
    pub varsigma: u64,
    pub value_coeffs: Vec<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TupleRecord {
    pub seed_a: i64,
    pub seed_b: i64,
    pub x: String,
    pub y: String,
    pub z: String,
    pub coprime: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub schema: u32,
    pub kind: &'static str,
    pub q: u64,
    pub height: u64,
    pub count: u64,
    pub tuples: Vec<TupleRecord>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub cases: u64,
    /// Counterexample payload; present only on failure.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub kind: &'static str,
    pub suite: String,
    pub checks: Vec<CheckLine>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl SearchReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "search p={} q={} bound={}{}: {} pairs",
            self.p,
            self.q,
            self.bound,
            if self.control { " (positive control)" } else { "" },
            self.pairs
        );
        for h in &self.histogram {
            if h.count > 0 {
                let _ = writeln!(s, "  {:>16}  {}", h.outcome, h.count);
            }
        }
        if self.solutions.is_empty() {
            let _ = writeln!(s, "no exact solutions");
        }
        for sol in &self.solutions {
            let _ = writeln!(
                s,
                "solution x={} y={} z={} e={}",
                sol.x, sol.y, sol.z, sol.e
            );
        }
        let _ = write!(s, "elapsed {} ms", self.elapsed_ms);
        s
    }
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "check p={} q={} x={} y={}: {}",
            self.p, self.q, self.x, self.y, self.outcome
        );
        if let Some(n) = &self.n {
            let _ = write!(s, "\n  N = {n}, e = {}", self.e);
        }
        if let Some(z) = &self.z {
            let _ = write!(s, ", z = {z}");
        }
        s
    }
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {} ({} cases){}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.cases,
                c.detail.as_deref().map(|d| format!(" — {d}")).unwrap_or_default()
            );
        }
        let _ = write!(
            s,
            "suite {}: {} in {} ms",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed_ms
        );
        s
    }
}

impl FamilyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for t in &self.tuples {
            let _ = writeln!(
                s,
                "seed ({}, {}) -> x={} y={} z={}{}",
                t.seed_a,
                t.seed_b,
                t.x,
                t.y,
                t.z,
                if t.coprime { "" } else { " (not coprime)" }
            );
        }
        let _ = write!(s, "{} tuples at q={} height={}", self.count, self.q, self.height);
        s
    }
}
