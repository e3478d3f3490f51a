use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prism_core::pipedream::min_plus;
use prism_core::srcomplex::int_plus;
use prism_core::verify::{conjecture_records, run_suite, Suite, VerificationReport};
use prism_core::{schubert, IntPolynomial, MultiPlus, MultiPlusDiagram, Permutation, PrismModel};

/// Largest `n` accepted by `verify` without `--long`.
const DEFAULT_CEILING: usize = 5;
/// Largest `n` accepted by `verify` with `--long`.
const LONG_CEILING: usize = 6;

#[derive(Parser)]
#[command(
    name = "prism",
    version,
    about = "Schubert polynomials via prism tableaux and pipe dreams"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow long-running sweeps.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Divided,
    Prism,
    Pipedreams,
}

impl Model {
    fn name(self) -> &'static str {
        match self {
            Model::Divided => "divided",
            Model::Prism => "prism",
            Model::Pipedreams => "pipedreams",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Prism,
    Pipedreams,
    Multiplus,
    Intplus,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Prism => "prism",
            Kind::Pipedreams => "pipedreams",
            Kind::Multiplus => "multiplus",
            Kind::Intplus => "intplus",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation.
    Schubert {
        w: String,
        /// How to compute the polynomial.
        #[arg(long, value_enum, default_value_t = Model::Divided)]
        model: Model,
        /// Also compute by divided differences and report whether they agree.
        #[arg(long)]
        check: bool,
    },
    /// List the objects of one model for a permutation.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        w: String,
    },
    /// Run a verification suite over all permutations of size n.
    Verify {
        /// theorem, table1, lattice, conjecture, stable or chute-overlay.
        suite: String,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        n: usize,
        /// Write a JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Pass,
    Fail,
}

struct UsageError(String);

fn parse_perm(s: &str) -> Result<Permutation, UsageError> {
    s.parse()
        .map_err(|e| UsageError(format!("invalid permutation `{s}`: {e}")))
}

fn model_polynomial(w: &Permutation, model: Model) -> IntPolynomial {
    match model {
        Model::Divided => schubert(w),
        Model::Prism => PrismModel::new(w).prism_polynomial(),
        Model::Pipedreams => {
            let mut total = IntPolynomial::zero();
            for p in min_plus(w) {
                total.add_term(p.weight(), 1);
            }
            total
        }
    }
}

fn parse_json(s: &str) -> Value {
    serde_json::from_str(s).expect("library JSON is well formed")
}

fn cmd_schubert(
    out: &mut String,
    format: Format,
    w: &str,
    model: Model,
    check: bool,
) -> Result<Status, UsageError> {
    let w = parse_perm(w)?;
    let poly = model_polynomial(&w, model);
    let verdict = check.then(|| poly == schubert(&w));
    match format {
        Format::Text => {
            out.push_str(&format!("{poly}\n"));
            if let Some(ok) = verdict {
                let word = if ok { "OK" } else { "MISMATCH" };
                out.push_str(&format!(
                    "check: {word} ({} vs divided differences)\n",
                    model.name()
                ));
            }
        }
        Format::Json => {
            let mut v = json!({
                "w": w.to_string(),
                "model": model.name(),
                "polynomial": poly.to_string(),
                "terms": parse_json(&poly.to_json()),
            });
            if let Some(ok) = verdict {
                v["check"] = json!(ok);
            }
            out.push_str(&format!("{v}\n"));
        }
    }
    Ok(if verdict == Some(false) {
        Status::Fail
    } else {
        Status::Pass
    })
}

fn multi_plus_all(w: &Permutation) -> Vec<MultiPlusDiagram> {
    let mp = MultiPlus::new(w).expect("factors of a permutation always have families");
    let mut all = vec![Vec::new()];
    for fam in &mp.families {
        let mut next = Vec::with_capacity(all.len() * fam.len());
        for prefix in &all {
            for m in &fam.members {
                let mut comps: Vec<_> = prefix.clone();
                comps.push(m.base);
                next.push(comps);
            }
        }
        all = next;
    }
    let mut out: Vec<MultiPlusDiagram> = all
        .into_iter()
        .map(|c| MultiPlusDiagram::new(w.n(), c))
        .collect();
    out.sort();
    out
}

fn cmd_enumerate(
    out: &mut String,
    format: Format,
    kind: Kind,
    w: &str,
) -> Result<Status, UsageError> {
    let w = parse_perm(w)?;
    let items: Vec<(String, String)> = match kind {
        Kind::Prism => PrismModel::new(&w)
            .prism()
            .iter()
            .map(|t| (t.render(), t.to_json()))
            .collect(),
        Kind::Pipedreams => min_plus(&w)
            .iter()
            .map(|p| (p.render(), p.to_json()))
            .collect(),
        Kind::Multiplus => multi_plus_all(&w)
            .iter()
            .map(|q| (q.render(), q.to_json()))
            .collect(),
        Kind::Intplus => int_plus(&w)
            .iter()
            .map(|p| (p.render(), p.to_json()))
            .collect(),
    };
    match format {
        Format::Text => {
            out.push_str(&format!("# {} {w}: {}\n", kind.name(), items.len()));
            for (text, _) in &items {
                out.push('\n');
                out.push_str(text);
            }
        }
        Format::Json => {
            let list: Vec<Value> = items.iter().map(|(_, j)| parse_json(j)).collect();
            let v = json!({
                "kind": kind.name(),
                "w": w.to_string(),
                "count": items.len(),
                "items": list,
            });
            out.push_str(&format!("{v}\n"));
        }
    }
    Ok(Status::Pass)
}

fn render_report(out: &mut String, format: Format, report: &VerificationReport) {
    match format {
        Format::Text => {
            out.push_str(&report.summary());
            out.push('\n');
            for f in &report.failures {
                out.push_str(&format!("  {} [{}]: {}\n", f.w, f.check, f.witness));
            }
        }
        Format::Json => {
            out.push_str(&report.to_json());
            out.push('\n');
        }
    }
}

fn cmd_verify(
    out: &mut String,
    format: Format,
    long: bool,
    suite: &str,
    n: usize,
    report_path: Option<&PathBuf>,
) -> Result<Status, UsageError> {
    let suite: Suite = suite.parse().map_err(|e| UsageError(format!("{e}")))?;
    let ceiling = if long { LONG_CEILING } else { DEFAULT_CEILING };
    if n == 0 {
        return Err(UsageError("n must be at least 1".to_string()));
    }
    if n > ceiling {
        let hint = if long {
            ""
        } else {
            " (pass --long to raise it)"
        };
        return Err(UsageError(format!(
            "n = {n} exceeds the ceiling of {ceiling}{hint}"
        )));
    }
    let report = run_suite(suite, n);
    render_report(out, format, &report);
    eprintln!("{suite}: elapsed {:.3?}", report.elapsed);
    if let Some(path) = report_path {
        let body = if suite == Suite::Conjecture {
            conjecture_records(n)
                .iter()
                .map(|r| r.to_json() + "\n")
                .collect::<String>()
        } else {
            report.to_json() + "\n"
        };
        fs::write(path, body)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if report.passed() {
        Status::Pass
    } else {
        Status::Fail
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("the global pool is configured once");
    }
    let mut out = String::new();
    let result = match &cli.command {
        Command::Schubert { w, model, check } => {
            cmd_schubert(&mut out, cli.format, w, *model, *check)
        }
        Command::Enumerate { kind, w } => cmd_enumerate(&mut out, cli.format, *kind, w),
        Command::Verify { suite, n, report } => {
            cmd_verify(&mut out, cli.format, cli.long, suite, *n, report.as_ref())
        }
    };
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
