//! `galois`: verify published pairs, check and search for new ones, and emit
//! explicit plane curves.
//!
//! Exit codes: 0 pass/found, 1 checked and failed, 2 invalid input,
//! 3 search exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use galois_core::criterion::check_pair;
use galois_core::curve::{emit_parametrization, implicit_degree};
use galois_core::paper::{self, PRIMES};
use galois_core::search::{search, SearchConfig, Strategy};
use galois_core::{
    CertificateJson, GroupKind, Jobs, MatrixLiteral, PairCertificate, PrimeModulus, ProjectiveMatrix,
    ProjectivePoint, Subgroup, DEFAULT_CLOSURE_CAP,
};

const FAILED: u8 = 1;
const INVALID: u8 = 2;
const EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "galois", version, about = "Outer Galois point pairs in PGL(2, F_p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-check every printed claim for p = 11, 23 or 59.
    VerifyPaper {
        #[arg(long)]
        p: u64,
        /// Restrict to one pair: a, b or c.
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check a pair document and print its certificate.
    CheckPair { input: PathBuf },
    /// Search for a pair of the given kinds.
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        kind1: String,
        #[arg(long)]
        kind2: String,
        #[arg(long, default_value = "random")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Worker threads; 0 uses all cores, 1 runs sequentially.
        #[arg(long, env = "GALOIS_JOBS", default_value_t = 0)]
        jobs: usize,
    },
    /// Build the plane curve of a passing pair and write it as JSON.
    EmitCurve {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure with its exit code.
struct Exit(u8, String);

impl Exit {
    fn invalid(msg: impl Into<String>) -> Self {
        Exit(INVALID, msg.into())
    }
}

impl From<galois_core::Error> for Exit {
    fn from(e: galois_core::Error) -> Self {
        Exit::invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::VerifyPaper { p, case, json } => verify_paper(p, case.as_deref(), json),
        Command::CheckPair { input } => check_pair_file(&input),
        Command::Search {
            p,
            kind1,
            kind2,
            strategy,
            seed,
            limit,
            jobs,
        } => run_search(p, &kind1, &kind2, &strategy, seed, limit, Jobs(jobs)),
        Command::EmitCurve { input, out } => emit_curve(&input, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn verify_paper(p: u64, case: Option<&str>, json: bool) -> Result<u8, Exit> {
    if !PRIMES.contains(&p) {
        return Err(Exit::invalid(format!("no published data for p = {p} (expected 11, 23 or 59)")));
    }
    let mut report = paper::verify_section(p)?;
    if let Some(label) = case {
        report = report.for_case(paper::parse_case(p, label)?);
    }
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(if report.pass { 0 } else { FAILED })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDocument {
    generators: Vec<MatrixLiteral>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDocument {
    p: u64,
    g1: GroupDocument,
    g2: GroupDocument,
    base_point: Option<[i64; 2]>,
}

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| Exit::invalid(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, Exit> {
    serde_json::from_str(text).map_err(|e| Exit::invalid(format!("{}: {e}", path.display())))
}

fn group(p: PrimeModulus, label: &str, gens: &[MatrixLiteral]) -> Result<Subgroup, Exit> {
    let mats = gens
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            ProjectiveMatrix::new(p, m).map_err(|e| Exit::invalid(format!("{label}.generators[{i}]: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Subgroup::generate(p, &mats, DEFAULT_CLOSURE_CAP).map_err(|e| Exit::invalid(format!("{label}: {e}")))
}

impl PairDocument {
    fn certificate(&self) -> Result<PairCertificate, Exit> {
        let p = PrimeModulus::new(self.p).map_err(|e| Exit::invalid(format!("p: {e}")))?;
        let g1 = group(p, "g1", &self.g1.generators)?;
        let g2 = group(p, "g2", &self.g2.generators)?;
        let [s, t] = self.base_point.unwrap_or([0, 1]);
        let q = ProjectivePoint::new(p, s, t).map_err(|e| Exit::invalid(format!("base_point: {e}")))?;
        Ok(check_pair(&g1, &g2, q)?)
    }
}

fn check_pair_file(path: &Path) -> Result<u8, Exit> {
    let doc: PairDocument = parse(path, &read(path)?)?;
    let cert = doc.certificate()?;
    println!("{}", cert.to_json().to_string_sorted());
    Ok(if cert.passed() { 0 } else { FAILED })
}

fn run_search(
    p: u64,
    kind1: &str,
    kind2: &str,
    strategy: &str,
    seed: u64,
    limit: usize,
    jobs: Jobs,
) -> Result<u8, Exit> {
    let p = PrimeModulus::new(p)?;
    let kind1: GroupKind = kind1.parse()?;
    let kind2: GroupKind = kind2.parse()?;
    let strategy: Strategy = strategy.parse()?;
    let cfg = SearchConfig::new(p, kind1, kind2, strategy, seed, limit, jobs)?;
    match search(&cfg)? {
        Some(cert) => {
            println!("{}", cert.to_json().to_string_sorted());
            Ok(0)
        }
        None => {
            println!("none");
            Ok(EXHAUSTED)
        }
    }
}

fn emit_curve(input: &Path, out: &Path) -> Result<u8, Exit> {
    let text = read(input)?;
    let value: serde_json::Value = parse(input, &text)?;
    let cert = if value.get("g1").is_some_and(|g| g.is_array()) {
        parse::<CertificateJson>(input, &text)?.reverify()?
    } else {
        parse::<PairDocument>(input, &text)?.certificate()?
    };
    if !cert.passed() {
        return Err(Exit::invalid(format!("pair fails: {}", cert.failures.join("; "))));
    }
    let curve = emit_parametrization(&cert, Jobs::DEFAULT)?;
    let rendered = serde_json::to_string_pretty(&serde_json::to_value(curve.to_json()).expect("curve serializes"))
        .expect("value renders");
    fs::write(out, rendered + "\n").map_err(|e| Exit::invalid(format!("{}: {e}", out.display())))?;
    let implicit = implicit_degree(&curve)?;
    let summary = serde_json::json!({ "degree": curve.degree, "implicit_degree": implicit });
    println!("{}", serde_json::to_string_pretty(&summary).expect("summary renders"));
    if implicit == curve.degree {
        Ok(0)
    } else {
        eprintln!("error: implicit degree {implicit} differs from the certificate degree {}", curve.degree);
        Ok(FAILED)
    }
}
