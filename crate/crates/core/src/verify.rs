//! Exhaustive sweeps over `S_n` that tie the models together.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::multiplus::MultiPlus;
use crate::perm::Permutation;
use crate::pipedream::min_plus;
use crate::prism::PrismModel;
use crate::srcomplex::{check_conjecture, interior_disagreements, InteriorReport};
use crate::{schubert, stanley_truncation, IntPolynomial};

/// Every `w` in `S_4` with its expected polynomial and number of stable
/// minimal prism tableaux.
pub const S4_TABLE: [(&str, &str, usize); 24] = [
    ("1234", "1", 1),
    ("1243", "x1 + x2 + x3", 3),
    ("1324", "x1 + x2", 2),
    ("1342", "x2*x3 + x1*x2 + x1*x3", 3),
    ("1423", "x2^2 + x1^2 + x1*x2", 3),
    (
        "1432",
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3",
        5,
    ),
    ("2134", "x1", 1),
    ("2143", "x1^2 + x1*x2 + x1*x3", 3),
    ("2314", "x1*x2", 1),
    ("2341", "x1*x2*x3", 1),
    ("2413", "x1*x2^2 + x1^2*x2", 2),
    ("2431", "x1*x2^2*x3 + x1^2*x2*x3", 2),
    ("3124", "x1^2", 1),
    ("3142", "x1^2*x2 + x1^2*x3", 2),
    ("3214", "x1^2*x2", 1),
    ("3241", "x1^2*x2*x3", 1),
    ("3412", "x1^2*x2^2", 1),
    ("3421", "x1^2*x2^2*x3", 1),
    ("4123", "x1^3", 1),
    ("4132", "x1^3*x2 + x1^3*x3", 2),
    ("4213", "x1^3*x2", 1),
    ("4231", "x1^3*x2*x3", 1),
    ("4312", "x1^3*x2^2", 1),
    ("4321", "x1^3*x2^2*x3", 1),
];

/// Largest label bound used by the stable-limit sweep.
pub const STABLE_MAX_M: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem,
    Table1,
    Lattice,
    Conjecture,
    Stable,
    ChuteOverlay,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Theorem,
        Suite::Table1,
        Suite::Lattice,
        Suite::Conjecture,
        Suite::Stable,
        Suite::ChuteOverlay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Table1 => "table1",
            Suite::Lattice => "lattice",
            Suite::Conjecture => "conjecture",
            Suite::Stable => "stable",
            Suite::ChuteOverlay => "chute-overlay",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// One failed check, with the case it concerns and a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub w: String,
    pub check: String,
    pub witness: String,
}

impl Failure {
    fn new(w: impl fmt::Display, check: &str, witness: impl Into<String>) -> Self {
        Failure {
            w: w.to_string(),
            check: check.to_string(),
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: Suite,
    pub n: usize,
    /// Number of cases examined.
    pub checked: usize,
    /// Number of cases with at least one failure.
    pub failed_cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} n={}: {}/{} cases pass{}",
            self.suite,
            self.n,
            self.checked - self.failed_cases,
            self.checked,
            if self.passed() { "" } else { " (FAILED)" }
        )
    }

    /// Report as JSON. The elapsed time is left out so that the output only
    /// depends on the inputs.
    pub fn to_json(&self) -> String {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|f| serde_json::json!({"w": f.w, "check": f.check, "witness": f.witness}))
            .collect();
        serde_json::json!({
            "suite": self.suite.name(),
            "n": self.n,
            "checked": self.checked,
            "failed_cases": self.failed_cases,
            "passed": self.passed(),
            "failures": failures,
        })
        .to_string()
    }
}

/// Runs `check` on every case in parallel and folds the outcome into a report.
fn sweep<T, F>(suite: Suite, n: usize, cases: Vec<T>, check: F) -> VerificationReport
where
    T: Send + Sync,
    F: Fn(&T) -> Vec<Failure> + Send + Sync,
{
    let start = Instant::now();
    let per_case: Vec<Vec<Failure>> = cases.par_iter().map(&check).collect();
    VerificationReport {
        suite,
        n,
        checked: cases.len(),
        failed_cases: per_case.iter().filter(|f| !f.is_empty()).count(),
        failures: per_case.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    }
}

fn all_of(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

/// Runs one suite over `S_n`. The table suite always covers `S_4`.
pub fn run_suite(suite: Suite, n: usize) -> VerificationReport {
    match suite {
        Suite::Theorem => sweep(suite, n, all_of(n), check_theorem),
        Suite::Table1 => sweep(suite, 4, S4_TABLE.to_vec(), check_table_row),
        Suite::Lattice => sweep(suite, n, all_of(n), |w| {
            let report = match MultiPlus::new(w) {
                Ok(mp) => mp.verify_structure(),
                Err(e) => return vec![Failure::new(w, "structure", e.to_string())],
            };
            report
                .failures
                .into_iter()
                .map(|f| Failure::new(w, "structure", f))
                .collect()
        }),
        Suite::Conjecture => {
            let start = Instant::now();
            let records = conjecture_records(n);
            let mut report = sweep(suite, n, records, conjecture_failures);
            report.elapsed = start.elapsed();
            report
        }
        Suite::Stable => {
            let cases: Vec<(Permutation, usize)> = all_of(n)
                .into_iter()
                .flat_map(|w| (1..=STABLE_MAX_M).map(move |m| (w.clone(), m)))
                .collect();
            sweep(suite, n, cases, |(w, m)| check_stable(w, *m))
        }
        Suite::ChuteOverlay => sweep(suite, n, all_of(n), |w| {
            let mp = match MultiPlus::new(w) {
                Ok(mp) => mp,
                Err(e) => return vec![Failure::new(w, "chute-overlay", e.to_string())],
            };
            let mut failures = Vec::new();
            mp.check_chute_overlays(&mut failures);
            failures
                .into_iter()
                .map(|f| Failure::new(w, "chute-overlay", f))
                .collect()
        }),
    }
}

fn check_theorem(w: &Permutation) -> Vec<Failure> {
    let expected = schubert(w);
    let mut failures = Vec::new();
    let prism = PrismModel::new(w).prism_polynomial();
    if prism != expected {
        failures.push(Failure::new(w, "prism", format!("{prism} != {expected}")));
    }
    let mut pipes = IntPolynomial::zero();
    for p in min_plus(w) {
        pipes.add_term(p.weight(), 1);
    }
    if pipes != expected {
        failures.push(Failure::new(
            w,
            "pipe-dreams",
            format!("{pipes} != {expected}"),
        ));
    }
    failures
}

fn check_table_row(row: &(&str, &str, usize)) -> Vec<Failure> {
    let (w, poly, count) = *row;
    let perm: Permutation = w.parse().expect("table permutations parse");
    let want: IntPolynomial = poly.parse().expect("table polynomials parse");
    let model = PrismModel::new(&perm);
    let got = model.prism_polynomial();
    let got_count = model.prism().len();
    let mut failures = Vec::new();
    if got != want {
        failures.push(Failure::new(w, "polynomial", format!("{got} != {want}")));
    }
    if got_count != count {
        failures.push(Failure::new(w, "count", format!("{got_count} != {count}")));
    }
    failures
}

/// Weight sum over unflagged tableaux with labels at most `m` that are
/// minimal and free of unstable triples.
pub fn unflagged_prism_sum(w: &Permutation, m: usize) -> IntPolynomial {
    let model = PrismModel::unflagged(w, m);
    let mut total = IntPolynomial::zero();
    for t in model.prism() {
        total.add_term(t.weight(), 1);
    }
    total.with_nvars(m)
}

/// Weight sum over all minimal unflagged tableaux with labels at most `m`.
pub fn unflagged_min_prism_sum(w: &Permutation, m: usize) -> IntPolynomial {
    let model = PrismModel::unflagged(w, m);
    let mut total = IntPolynomial::zero();
    for t in model.min_prism() {
        total.add_term(t.weight(), 1);
    }
    total.with_nvars(m)
}

fn check_stable(w: &Permutation, m: usize) -> Vec<Failure> {
    let want = stanley_truncation(w, m);
    let got = unflagged_prism_sum(w, m);
    if got == want {
        Vec::new()
    } else {
        vec![Failure::new(
            w,
            &format!("stable m={m}"),
            format!("{got} != {want}"),
        )]
    }
}

/// Conjecture records for every `w` in `S_n`, in lexicographic order.
pub fn conjecture_records(n: usize) -> Vec<InteriorReport> {
    all_of(n).par_iter().map(check_conjecture).collect()
}

fn conjecture_failures(r: &InteriorReport) -> Vec<Failure> {
    let mut failures: Vec<Failure> = r
        .witnesses
        .iter()
        .map(|p| Failure::new(&r.w, "overlay", format!("{p:?}")))
        .collect();
    if !r.kmove_connected {
        failures.push(Failure::new(&r.w, "k-move-connectivity", "disconnected"));
    }
    if r.w.n() <= 4 {
        for p in interior_disagreements(&r.w) {
            failures.push(Failure::new(&r.w, "interior-oracle", format!("{p:?}")));
        }
    }
    failures
}
