//! Command-line front end.
//!
//! ```text
//! orthomeans partitions check --parts 2,1,1
//! orthomeans partitions list --s 6
//! orthomeans means eval --mean hm --method lagrange --s 2 --inputs fs.json
//! orthomeans poly eval --poly p.json --inputs fs.json
//! orthomeans poly polarize --poly p.json --inputs fs.json
//! orthomeans poly check-oa --poly p.json --trials 1000 --seed 1
//! orthomeans verify hm --s 3 --n 4 --trials 1000 --seed 7
//! orthomeans verify falsify --target wgm --partition 1,1 --poly p.json
//! orthomeans verify all --s 3 --n 4 --trials 1000 --seed 7 --format csv
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 inconclusive falsification. Output depends only on the arguments and
//! the input files.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::Ratio;
use num::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, PositiveVector};
use crate::means::{self, InfimumSpec, Means, Method};
use crate::partitions::{enumerate_complete, is_complete, CompletePartition, WeightVector};
use crate::polynomial::{
    exhaustive_positive_oa, is_orthogonally_additive, is_positively_orthogonally_additive, polarize_blackbox,
    random_polynomial, HomogeneousPolynomial, RandomPolynomialSpec, MAX_EXHAUSTIVE_DIM,
};
use crate::report::{residual, ClaimId, Mode, Tolerances, Verdict, VerificationReport};
use crate::sampling;
use crate::theorems::{self, Claim, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "orthomeans", version, about = "Means on vector lattices and orthogonally additive polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Complete partitions of an integer
    #[command(subcommand)]
    Partitions(PartitionsCommand),
    /// Means of positive vectors
    #[command(subcommand)]
    Means(MeansCommand),
    /// Homogeneous polynomials
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Randomized verification of the characterization identities
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum PartitionsCommand {
    /// Whether the parts form a complete partition (exit 1 if not)
    Check {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u64>,
        /// integer being partitioned; defaults to the sum of the parts
        #[arg(long)]
        s: Option<u64>,
    },
    /// Every complete partition of s, parts nonincreasing
    List {
        #[arg(long)]
        s: u64,
    },
}

#[derive(Debug, Subcommand)]
enum MeansCommand {
    /// Evaluate one mean coordinatewise
    Eval(MeansEvalArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeanArg {
    Rmp,
    Gm,
    Hm,
    Wgm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Lagrange,
    Grid,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Lagrange => Method::Lagrange,
            MethodArg::Grid => Method::Grid,
        }
    }
}

#[derive(Debug, Args)]
struct MeansEvalArgs {
    #[arg(long, value_enum)]
    mean: MeanArg,
    #[arg(long, value_enum, default_value = "closed")]
    method: MethodArg,
    /// power for rmp, arity for gm and hm, partitioned integer for wgm
    #[arg(long)]
    s: Option<u32>,
    /// wgm weights: integer parts r_k (weights r_k/s) or fractions p/q
    #[arg(long)]
    weights: Option<String>,
    /// JSON array of vectors, or {"inputs": [...]}
    #[arg(long)]
    inputs: PathBuf,
    /// grid resolution m
    #[arg(long, default_value_t = 128)]
    resolution: u32,
    /// exact rational arithmetic; entries may be "p/q" strings
    #[arg(long)]
    exact: bool,
}

#[derive(Debug, Subcommand)]
enum PolyCommand {
    /// P(f) for each input vector
    Eval(PolyIoArgs),
    /// Recover the symmetric multilinear value from evaluations of P
    Polarize(PolyIoArgs),
    /// Structural, positive and sign-mixed orthogonal additivity
    CheckOa {
        #[arg(long)]
        poly: PathBuf,
        /// degree for diagonal files that omit "s"
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct PolyIoArgs {
    #[arg(long)]
    poly: PathBuf,
    #[arg(long)]
    inputs: PathBuf,
    /// degree for diagonal files that omit "s"
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyClaim {
    Rmp,
    Gm,
    Schur,
    Ortho,
    Hm,
    Geos,
    Wgm,
    Cross,
    Falsify,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FalsifyTarget {
    Rmp,
    Gm,
    Hm,
    Wgm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: VerifyClaim,
    /// degree; defaults to the degree of --poly
    #[arg(long)]
    s: Option<usize>,
    /// domain dimension; defaults to that of --poly
    #[arg(long)]
    n: Option<usize>,
    /// codomain dimension of generated polynomials
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// random inputs per claim (per partition for geos and wgm)
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// seed of every random draw; equal seeds give identical reports
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// complete partition r1,..,rp; all partitions of s when omitted
    #[arg(long)]
    partition: Option<String>,
    /// polynomial JSON file; a random diagonal polynomial when omitted
    #[arg(long)]
    poly: Option<PathBuf>,
    /// identity targeted by `verify falsify`
    #[arg(long, value_enum, default_value = "hm")]
    target: FalsifyTarget,
    /// sample budget of `verify falsify`
    #[arg(long, default_value_t = theorems::DEFAULT_FALSIFY_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// also write the CSV summary of `verify all` to this file
    #[arg(long)]
    summary_csv: Option<PathBuf>,
    /// relative tolerance of the polynomial identities [default: 1e-9]
    #[arg(long)]
    identity_rel: Option<f64>,
    /// ulps of slack on the harmonic mean bounds [default: 1]
    #[arg(long)]
    exact_slack: Option<u32>,
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            };
        }
    };
    let outcome = match cli.command {
        Command::Partitions(cmd) => partitions(cmd),
        Command::Means(MeansCommand::Eval(args)) => means_eval(&args),
        Command::Poly(cmd) => poly(cmd),
        Command::Verify(args) => verify(&args),
    };
    match outcome {
        Ok((text, code)) => {
            if write!(out, "{text}").and_then(|_| out.flush()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<(String, i32)>;

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InputsDoc<V> {
    inputs: Vec<V>,
}

/// Reads a JSON array of vectors, bare or under an "inputs" key. Errors
/// name the offending field, e.g. `inputs[1]`.
fn read_inputs<V: DeserializeOwned>(path: &Path) -> Result<Vec<V>> {
    let text = read_file(path)?;
    let shape: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let located = |p: String, e: serde_json::Error| Error::Parse(format!("{}: at `{p}`: {e}", path.display()));
    if shape.is_object() {
        let doc: InputsDoc<V> =
            serde_path_to_error::deserialize(de).map_err(|e| located(e.path().to_string(), e.into_inner()))?;
        Ok(doc.inputs)
    } else {
        serde_path_to_error::deserialize(de).map_err(|e| {
            let p = e.path().to_string();
            let field = if p == "." { "inputs".to_string() } else { format!("inputs{p}") };
            located(field, e.into_inner())
        })
    }
}

fn read_poly(path: &Path, default_degree: Option<usize>) -> Result<HomogeneousPolynomial> {
    HomogeneousPolynomial::from_json_str(&read_file(path)?, default_degree).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => Error::Parse(format!("{}: {other}", path.display())),
    })
}

fn parse_list<T: std::str::FromStr>(name: &'static str, text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|item| {
            item.trim().parse().map_err(|_| Error::InvalidParameter {
                name,
                reason: format!("cannot parse `{}`", item.trim()),
            })
        })
        .collect()
}

fn partitions(cmd: PartitionsCommand) -> Outcome {
    match cmd {
        PartitionsCommand::Check { parts, s } => {
            let s = s.unwrap_or_else(|| parts.iter().sum());
            let complete = is_complete(&parts, s)?;
            let doc = json!({ "s": s, "parts": parts, "complete": complete });
            Ok((pretty(&doc), if complete { EXIT_OK } else { EXIT_FAILED }))
        }
        PartitionsCommand::List { s } => {
            let list: Vec<Vec<u64>> = enumerate_complete(s)?.into_iter().map(|cp| cp.parts().to_vec()).collect();
            Ok((pretty(&json!({ "s": s, "partitions": list })), EXIT_OK))
        }
    }
}

/// Integer parts `r_k` (weights `r_k/s`) or fractions `p/q` summing to 1.
fn parse_weights(text: &str, s: Option<u32>) -> Result<WeightVector> {
    let items: Vec<&str> = text.split(',').map(str::trim).collect();
    if items.iter().all(|t| !t.contains('/')) {
        let parts: Vec<u64> = parse_list("weights", text)?;
        let total: u64 = parts.iter().sum();
        if let Some(s) = s {
            if u64::from(s) != total {
                return Err(Error::InvalidParameter {
                    name: "weights",
                    reason: format!("parts sum to {total}, not s = {s}"),
                });
            }
        }
        if total == 0 {
            return Err(Error::InvalidParameter { name: "weights", reason: "parts sum to 0".into() });
        }
        return WeightVector::new(parts.iter().map(|&r| Ratio::new(r, total)).collect());
    }
    let ratios = items
        .iter()
        .map(|t| {
            let (p, q) = t.split_once('/').unwrap_or((t, "1"));
            match (p.trim().parse::<u64>(), q.trim().parse::<u64>()) {
                (Ok(p), Ok(q)) if q > 0 => Ok(Ratio::new(p, q)),
                _ => Err(Error::InvalidParameter { name: "weights", reason: format!("cannot parse `{t}`") }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    WeightVector::new(ratios)
}

fn check_arity(name: &'static str, s: Option<u32>, count: usize) -> Result<()> {
    match s {
        Some(s) if s as usize != count => Err(Error::InvalidParameter {
            name,
            reason: format!("s = {s} but {count} input vectors were given"),
        }),
        _ => Ok(()),
    }
}

fn means_eval(args: &MeansEvalArgs) -> Outcome {
    let method = Method::from(args.method);
    let closed_only = matches!(args.mean, MeanArg::Rmp | MeanArg::Gm) || args.exact;
    if closed_only && method != Method::ClosedForm {
        return Err(Error::InvalidParameter {
            name: "method",
            reason: "only the closed form is available for this mean or in exact mode".into(),
        });
    }
    let weights = match (args.mean, &args.weights) {
        (MeanArg::Wgm, Some(w)) => Some(parse_weights(w, args.s)?),
        (MeanArg::Wgm, None) => {
            return Err(Error::InvalidParameter { name: "weights", reason: "wgm needs --weights".into() })
        }
        _ => None,
    };
    let power = || {
        args.s.ok_or_else(|| Error::InvalidParameter { name: "s", reason: "rmp needs --s".into() })
    };

    if args.exact {
        let fs: Vec<PositiveVector<BigRational>> = read_inputs(&args.inputs)?;
        let value = match args.mean {
            MeanArg::Rmp => BigRational::root_mean_power(power()?, &fs)?,
            MeanArg::Gm => {
                check_arity("s", args.s, fs.len())?;
                BigRational::geometric_mean(&fs)?
            }
            MeanArg::Hm => {
                check_arity("s", args.s, fs.len())?;
                means::harmonic_mean(&fs)?
            }
            MeanArg::Wgm => BigRational::weighted_geometric_mean(weights.as_ref().expect("checked"), &fs)?,
        };
        let doc = json!({ "value": value, "method": method, "residual_bound": Value::Null });
        return Ok((pretty(&doc), EXIT_OK));
    }

    let fs: Vec<PositiveVector> = read_inputs(&args.inputs)?;
    let result = match args.mean {
        MeanArg::Rmp => means::MeanResult {
            value: means::root_mean_power(power()?, &fs)?,
            method,
            residual_bound: None,
        },
        MeanArg::Gm => {
            check_arity("s", args.s, fs.len())?;
            means::MeanResult { value: means::geometric_mean(&fs)?, method, residual_bound: None }
        }
        MeanArg::Hm => {
            check_arity("s", args.s, fs.len())?;
            if method == Method::ClosedForm {
                means::MeanResult { value: means::harmonic_mean(&fs)?, method, residual_bound: None }
            } else {
                means::harmonic_mean_via_infimum(&fs, &InfimumSpec::harmonic(fs.len(), args.resolution)?, method)?
            }
        }
        MeanArg::Wgm => {
            let w = weights.expect("checked");
            if method == Method::ClosedForm {
                means::MeanResult { value: means::weighted_geometric_mean(&w, &fs)?, method, residual_bound: None }
            } else {
                let spec = InfimumSpec::weighted_geometric(w.clone(), args.resolution)?;
                means::wgm_via_infimum(&w, &fs, &spec, method)?
            }
        }
    };
    Ok((pretty(&result), EXIT_OK))
}

fn poly(cmd: PolyCommand) -> Outcome {
    match cmd {
        PolyCommand::Eval(args) => {
            let p = read_poly(&args.poly, args.s)?;
            let fs: Vec<LatticeVector> = read_inputs(&args.inputs)?;
            let values = fs.iter().map(|f| p.eval(f)).collect::<Result<Vec<_>>>()?;
            Ok((pretty(&json!({ "values": values })), EXIT_OK))
        }
        PolyCommand::Polarize(args) => {
            let p = read_poly(&args.poly, args.s)?;
            let fs: Vec<LatticeVector> = read_inputs(&args.inputs)?;
            let polarized = polarize_blackbox(|f| p.eval(f), p.degree(), &fs)?;
            let stored = p.multilinear().eval_owned(&fs)?;
            let tol = Tolerances::default();
            let r = residual(&polarized, &stored, tol.relative_switch);
            let passed = r <= tol.polarization_rel;
            let doc = json!({
                "polarized": polarized,
                "multilinear": stored,
                "residual": r,
                "tolerance": tol.polarization_rel,
                "passed": passed,
            });
            Ok((pretty(&doc), if passed { EXIT_OK } else { EXIT_FAILED }))
        }
        PolyCommand::CheckOa { poly, s, trials, seed } => {
            let p = read_poly(&poly, s)?;
            let positive = if p.domain_dim() <= MAX_EXHAUSTIVE_DIM {
                exhaustive_positive_oa(&p, seed)?.merge(is_positively_orthogonally_additive(&p, trials, seed))
            } else {
                is_positively_orthogonally_additive(&p, trials, seed)
            };
            let signed = is_orthogonally_additive(&p, trials, seed);
            let structural = p.is_structurally_oa();
            let additive = positive.passed && signed.passed;
            let doc = json!({
                "structural": structural,
                "mixed_mass": crate::polynomial::mixed_mass(&p),
                "positive": positive,
                "signed": signed,
                "orthogonally_additive": additive,
            });
            Ok((pretty(&doc), if additive { EXIT_OK } else { EXIT_FAILED }))
        }
    }
}

fn claim_id(claim: VerifyClaim) -> Option<ClaimId> {
    Some(match claim {
        VerifyClaim::Rmp => ClaimId::Rmp,
        VerifyClaim::Gm => ClaimId::Gm,
        VerifyClaim::Schur => ClaimId::Schur,
        VerifyClaim::Ortho => ClaimId::Ortho,
        VerifyClaim::Hm => ClaimId::Hm,
        VerifyClaim::Geos => ClaimId::Geos,
        VerifyClaim::Wgm => ClaimId::Wgm,
        VerifyClaim::Cross => ClaimId::CrossTerms,
        VerifyClaim::Falsify | VerifyClaim::All => return None,
    })
}

fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAILED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

const CSV_HEADER: &str = "claim_id,trials,max_residual,tolerance,passed";

fn csv_row(r: &VerificationReport) -> String {
    format!("{},{},{:e},{:e},{}", r.claim_id.as_str(), r.trials, r.max_residual, r.tolerance, r.passed)
}

fn csv_table(reports: &[VerificationReport]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for r in reports {
        let _ = writeln!(s, "{}", csv_row(r));
    }
    s
}

fn human_line(r: &VerificationReport) -> String {
    let verdict = match r.verdict {
        Verdict::Pass if r.mode == Mode::Falsification => "WITNESS",
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Inconclusive => "INCONCLUSIVE",
    };
    let mut s = format!(
        "{:<12} {:<12} trials={} max_residual={:e} tolerance={:e}\n",
        r.claim_id.as_str(),
        verdict,
        r.trials,
        r.max_residual,
        r.tolerance
    );
    if let Some(cx) = &r.counterexample {
        let _ = writeln!(s, "  {} inputs={:?} lhs={:?} rhs={:?}", cx.note.as_deref().unwrap_or("witness"), cx.inputs, cx.lhs, cx.rhs);
    }
    s
}

fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json if reports.len() == 1 => pretty(&reports[0]),
        Format::Json => pretty(&reports),
        Format::Csv => csv_table(reports),
        Format::Human => reports.iter().map(human_line).collect(),
    }
}

#[derive(Serialize)]
struct SummaryRow {
    claim_id: ClaimId,
    trials: u64,
    max_residual: f64,
    tolerance: f64,
    passed: bool,
}

fn verify(args: &VerifyArgs) -> Outcome {
    let mut tolerances = Tolerances::default();
    if let Some(t) = args.identity_rel {
        if !(t > 0.0) {
            return Err(Error::InvalidParameter { name: "identity-rel", reason: "must be positive".into() });
        }
        tolerances.identity_rel = t;
    }
    if let Some(u) = args.exact_slack {
        tolerances.exact_slack_ulps = u;
    }
    let poly = args.poly.as_deref().map(|p| read_poly(p, args.s)).transpose()?;
    let s = args.s.or(poly.as_ref().map(|p| p.degree()));
    let n = args.n.or(poly.as_ref().map(|p| p.domain_dim()));
    let (Some(s), Some(n)) = (s, n) else {
        return Err(Error::InvalidParameter { name: "s/n", reason: "--s and --n are required without --poly".into() });
    };
    let partition = args
        .partition
        .as_deref()
        .map(|text| CompletePartition::with_target(parse_list("partition", text)?, s as u64))
        .transpose()?;
    let cfg = SweepConfig { s, n, d: args.d, trials: args.trials, seed: args.seed, tolerances };

    match args.claim {
        VerifyClaim::Falsify => {
            let claim = match args.target {
                FalsifyTarget::Rmp => Claim::Rmp,
                FalsifyTarget::Gm => Claim::Gm,
                FalsifyTarget::Hm => Claim::Hm,
                FalsifyTarget::Wgm => Claim::Wgm(match partition {
                    Some(cp) => cp,
                    None => CompletePartition::ones(s as u64)?,
                }),
            };
            let p = match poly {
                Some(p) => p,
                None => generated_non_additive(&cfg)?,
            };
            let report = theorems::falsify(&p, &claim, args.budget, args.seed, &tolerances)?;
            Ok((render(std::slice::from_ref(&report), args.format), exit_code(report.verdict)))
        }
        VerifyClaim::All => {
            if args.partition.is_some() {
                return Err(Error::InvalidParameter { name: "partition", reason: "`verify all` covers every partition".into() });
            }
            let reports = theorems::verify_all(&cfg, poly.as_ref())?;
            let all_passed = reports.iter().all(|r| r.passed);
            let csv = csv_table(&reports);
            if let Some(path) = &args.summary_csv {
                std::fs::write(path, &csv).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            }
            let text = match args.format {
                Format::Json => {
                    let summary: Vec<SummaryRow> = reports
                        .iter()
                        .map(|r| SummaryRow {
                            claim_id: r.claim_id,
                            trials: r.trials,
                            max_residual: r.max_residual,
                            tolerance: r.tolerance,
                            passed: r.passed,
                        })
                        .collect();
                    pretty(&json!({
                        "s": s,
                        "n": n,
                        "d": args.d,
                        "trials": args.trials,
                        "seed": args.seed,
                        "passed": all_passed,
                        "summary": summary,
                        "reports": reports,
                    }))
                }
                format => render(&reports, format),
            };
            Ok((text, if all_passed { EXIT_OK } else { EXIT_FAILED }))
        }
        claim => {
            let id = claim_id(claim).expect("single claims have ids");
            let report = theorems::sweep(id, &cfg, partition.as_ref(), poly.as_ref())?;
            Ok((render(std::slice::from_ref(&report), args.format), exit_code(report.verdict)))
        }
    }
}

/// Seeded polynomial with half of its coefficient mass on mixed terms.
fn generated_non_additive(cfg: &SweepConfig) -> Result<HomogeneousPolynomial> {
    let spec = RandomPolynomialSpec {
        degree: cfg.s,
        domain_dim: cfg.n,
        codomain_dim: cfg.d,
        pure_terms: cfg.n,
        mixed_terms: 2,
        mixed_mass: 0.5,
    };
    random_polynomial(&mut sampling::substream(cfg.seed, u64::MAX - 1), spec)
}
