//! Command-line front end: argument parsing, dispatch and report formatting.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::ideals::{diag_integral_norm, diag_scalar_norm, diag_sup_norm, Target};
use crate::multipliers::{multiplier_norm, DiagonalSymbol};
use crate::optimize::{dual_norm, NormEstimate, OptimizerConfig};
use crate::spaces::{make_space, Norm, SequenceSpace, SpaceDescriptor};
use crate::summing::{summing_norm_lb, weak_p_norm, SummingConfig, WitnessFamily};
use crate::vector::CoefficientVector;
use crate::verify::{run_suite, SuiteParams, SUITES};

/// Exit status for a completed job.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification suite reports a failure.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for malformed or invalid input.
pub const EXIT_INVALID: i32 = 2;
/// Exit status for internal failures.
pub const EXIT_INTERNAL: i32 = 3;

/// A parsed invocation.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "koethe",
    version,
    about = "Norms of diagonal operators between Köthe sequence spaces"
)]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Seed for every random choice.
    #[arg(long, global = true, env = "KOETHE_SEED")]
    pub seed: Option<u64>,
    /// Random restarts of the optimiser.
    #[arg(long, global = true)]
    pub restarts: Option<usize>,
    /// Iteration budget per coordinate for inner solvers.
    #[arg(long, global = true)]
    pub max_iter: Option<usize>,
    /// Relative tolerance of the optimiser.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Configuration document, inline JSON or a path to a JSON file.
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Norm of a vector in a space.
    Norm {
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Köthe dual norm sup_{‖x‖≤1} Σ z·x.
    DualNorm {
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Norm of the multiplier x ↦ α·x from the domain into the target.
    MultNorm {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Norm of the diagonal n-linear map with symbol α; target `scalar` for forms.
    DiagNorm {
        #[arg(long)]
        domain: String,
        #[arg(long, default_value = "scalar")]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Integral norm of the diagonal n-linear map with symbol α.
    IntegralNorm {
        #[arg(long)]
        domain: String,
        #[arg(long, default_value = "scalar")]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Lower estimate of the (E,p)-summing norm of a diagonal n-linear map.
    SummingEstimate {
        /// Index space E; its dimension follows the family size.
        #[arg(long)]
        index: String,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        domain: String,
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Largest witness family size.
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Weak ℓ_p norm of a family of vectors (rows separated by `;`).
    WeakP {
        #[arg(long)]
        space: String,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        family: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest dimension exercised.
        #[arg(long = "N")]
        n_max: Option<usize>,
        /// Random cases per configuration.
        #[arg(long)]
        cases: Option<usize>,
    },
}

/// Structured configuration document accepted by `--config`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigDocument {
    pub optimizer: OptimizerConfig,
    pub summing: SummingConfig,
}

/// Exit status and the document written for one job.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
}

/// A real printed with 17 significant digits.
#[derive(Debug, Clone, Copy)]
pub struct Real(pub f64);

impl Real {
    fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else if self.0.is_nan() {
            "\"nan\"".into()
        } else if self.0 > 0.0 {
            "\"inf\"".into()
        } else {
            "\"-inf\"".into()
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawValue::from_string(self.text())
            .expect("formatted reals are valid JSON")
            .serialize(s)
    }
}

fn reals(v: &[f64]) -> Vec<Real> {
    v.iter().copied().map(Real).collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
enum Diagnostic {
    Real(Real),
    Reals(Vec<Real>),
    Count(usize),
    Text(String),
    Space(SpaceDescriptor),
}

#[derive(Debug, Serialize)]
struct EstimateDocument {
    command: &'static str,
    value: Real,
    kind: &'static str,
    witness: Vec<Real>,
    diagnostics: BTreeMap<&'static str, Diagnostic>,
    seed: u64,
}

#[derive(Debug, Serialize)]
struct CheckDocument {
    label: String,
    cases: usize,
    failures: usize,
    max_deviation: Real,
    tolerance: Real,
    #[serde(skip_serializing_if = "String::is_empty")]
    worst: String,
}

#[derive(Debug, Serialize)]
struct SuiteDocument {
    name: String,
    passed: bool,
    elapsed_secs: Real,
    checks: Vec<CheckDocument>,
}

#[derive(Debug, Serialize)]
struct VerifyDocument {
    command: &'static str,
    passed: bool,
    seed: u64,
    suites: Vec<SuiteDocument>,
}

#[derive(Debug, Serialize)]
struct ErrorDocument {
    error: ErrorBody,
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Construction(_) => "construction",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::InvalidInput(_) => "invalid_input",
        Error::Objective(_) => "objective",
        Error::Precondition(_) => "precondition",
        Error::Refused(_) => "refused",
        Error::Parse(_) => "parse",
    }
}

fn exit_status(e: &Error) -> i32 {
    match e {
        Error::Objective(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

fn error_outcome(kind: &'static str, message: String, status: i32, format: Format) -> Outcome {
    let document = match format {
        Format::Json => serde_json::to_string_pretty(&ErrorDocument {
            error: ErrorBody { kind, message },
        })
        .expect("error documents serialize"),
        Format::Csv => format!("error,message\n{kind},{}", csv_field(&message)),
        Format::Plain => format!("error ({kind}): {message}"),
    };
    Outcome { status, document }
}

/// Parses command-line arguments and runs the job.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match JobSpec::try_parse_from(args) {
        Ok(job) => run(&job),
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            Outcome {
                status,
                document: e.render().to_string(),
            }
        }
    }
}

/// Runs a parsed job.
pub fn run(job: &JobSpec) -> Outcome {
    let format = job.common.format;
    let result = std::panic::catch_unwind(|| execute(job));
    match result {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(e)) => error_outcome(error_kind(&e), e.to_string(), exit_status(&e), format),
        Err(panic) => {
            let message = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown failure".into());
            error_outcome("internal", message, EXIT_INTERNAL, format)
        }
    }
}

fn load_config(common: &CommonArgs) -> Result<ConfigDocument> {
    let mut doc = match &common.config {
        None => ConfigDocument::default(),
        Some(text) => {
            let body = if text.trim_start().starts_with('{') {
                text.clone()
            } else {
                std::fs::read_to_string(text)
                    .map_err(|e| Error::InvalidInput(format!("cannot read config {text:?}: {e}")))?
            };
            serde_json::from_str(&body).map_err(|e| Error::Parse(format!("config: {e}")))?
        }
    };
    let opt = &mut doc.optimizer;
    if let Some(seed) = common.seed {
        opt.seed = seed;
    }
    if let Some(r) = common.restarts {
        opt.restarts = r;
    }
    if let Some(m) = common.max_iter {
        opt.max_iter = m;
    }
    if let Some(t) = common.tol {
        opt.tol = t;
    }
    opt.validate()?;
    doc.summing.optimizer = doc.optimizer;
    Ok(doc)
}

/// Parses `3,4`, `3 4` or `[3,4]`.
pub fn parse_vector(text: &str) -> Result<Vec<f64>> {
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    let values: std::result::Result<Vec<f64>, _> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s {
            "inf" => Ok(f64::INFINITY),
            _ => s.parse::<f64>(),
        })
        .collect();
    let values = values.map_err(|e| Error::Parse(format!("vector {text:?}: {e}")))?;
    if values.is_empty() {
        return Err(Error::Parse(format!("vector {text:?} is empty")));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "vector entries must be finite, got {v}"
        )));
    }
    Ok(values)
}

fn parse_space(text: &str, dim: usize) -> Result<(SpaceDescriptor, SequenceSpace)> {
    let d = SpaceDescriptor::parse(text, Some(dim))?;
    let space = make_space(&d)?;
    crate::error::check_dim(space.dim(), dim)?;
    Ok((d, space))
}

struct Report {
    command: &'static str,
    estimate: NormEstimate,
    diagnostics: BTreeMap<&'static str, Diagnostic>,
}

impl Report {
    fn new(command: &'static str, estimate: NormEstimate) -> Self {
        let mut diagnostics = BTreeMap::new();
        diagnostics.insert("residual", Diagnostic::Real(Real(estimate.residual)));
        diagnostics.insert("restarts", Diagnostic::Count(estimate.restarts));
        if let Some(note) = &estimate.note {
            diagnostics.insert("note", Diagnostic::Text(note.clone()));
        }
        Report {
            command,
            estimate,
            diagnostics,
        }
    }

    fn with(mut self, key: &'static str, d: Diagnostic) -> Self {
        self.diagnostics.insert(key, d);
        self
    }
}

fn execute(job: &JobSpec) -> Result<Outcome> {
    let config = load_config(&job.common)?;
    let cfg = config.optimizer;
    let report = match &job.command {
        Command::Norm { space, x } => {
            let x = parse_vector(x)?;
            let (d, e) = parse_space(space, x.len())?;
            let x = CoefficientVector::from_signed(&x)?;
            let value = e.norm(&x)?;
            Report::new("norm", NormEstimate::exact(value, x.into_vec()))
                .with("space", Diagnostic::Space(d))
        }
        Command::DualNorm { space, z } => {
            let z = parse_vector(z)?;
            let (d, e) = parse_space(space, z.len())?;
            let est = dual_norm(&e, &CoefficientVector::from_signed(&z)?, &cfg)?;
            Report::new("dual-norm", est).with("space", Diagnostic::Space(d))
        }
        Command::MultNorm {
            domain,
            target,
            alpha,
        } => {
            let alpha = parse_vector(alpha)?;
            let (dd, e) = parse_space(domain, alpha.len())?;
            let (td, f) = parse_space(target, alpha.len())?;
            let est = multiplier_norm(&e, &f, &DiagonalSymbol::from_signed(&alpha)?, &cfg)?;
            Report::new("mult-norm", est)
                .with("domain", Diagnostic::Space(dd))
                .with("target", Diagnostic::Space(td))
        }
        Command::DiagNorm {
            domain,
            target,
            alpha,
            n,
        } => {
            let alpha = parse_vector(alpha)?;
            let symbol = DiagonalSymbol::from_signed(&alpha)?;
            let (dd, e) = parse_space(domain, alpha.len())?;
            if target == "scalar" {
                let est = diag_scalar_norm(&e, *n, &symbol, &cfg)?;
                Report::new("diag-norm", est)
                    .with("domain", Diagnostic::Space(dd))
                    .with("target", Diagnostic::Text("scalar".into()))
            } else {
                let (td, f) = parse_space(target, alpha.len())?;
                let est = diag_sup_norm(&e, &f, *n, &symbol, &cfg)?;
                Report::new("diag-norm", est)
                    .with("domain", Diagnostic::Space(dd))
                    .with("target", Diagnostic::Space(td))
            }
        }
        Command::IntegralNorm {
            domain,
            target,
            alpha,
            n,
        } => {
            let alpha = parse_vector(alpha)?;
            let symbol = DiagonalSymbol::from_signed(&alpha)?;
            let (dd, e) = parse_space(domain, alpha.len())?;
            if target == "scalar" {
                let est = diag_integral_norm(&e, Target::Scalar, *n, &symbol, &cfg)?;
                Report::new("integral-norm", est)
                    .with("domain", Diagnostic::Space(dd))
                    .with("target", Diagnostic::Text("scalar".into()))
            } else {
                let (td, f) = parse_space(target, alpha.len())?;
                let est = diag_integral_norm(&e, Target::Space(&f), *n, &symbol, &cfg)?;
                Report::new("integral-norm", est)
                    .with("domain", Diagnostic::Space(dd))
                    .with("target", Diagnostic::Space(td))
            }
        }
        Command::SummingEstimate {
            index,
            p,
            n,
            domain,
            target,
            alpha,
            m_max,
        } => {
            let alpha = parse_vector(alpha)?;
            let symbol = DiagonalSymbol::from_signed(&alpha)?;
            let (dd, e) = parse_space(domain, alpha.len())?;
            let (td, f) = parse_space(target, alpha.len())?;
            let mut scfg = config.summing;
            if let Some(m) = m_max {
                scfg.m_max = *m;
            }
            let index = SpaceDescriptor::parse(index, Some(scfg.m_max))?;
            let r = summing_norm_lb(&index, *p, *n, &e, &f, &symbol, &scfg)?;
            let rows: Vec<Vec<Real>> = r.family.vectors().iter().map(|v| reals(v)).collect();
            Report::new("summing-estimate", r.estimate)
                .with("index", Diagnostic::Space(index))
                .with("domain", Diagnostic::Space(dd))
                .with("target", Diagnostic::Space(td))
                .with(
                    "inclusion_constant",
                    Diagnostic::Real(Real(r.inclusion.value)),
                )
                .with("profile", Diagnostic::Reals(reals(&r.profile)))
                .with("family_size", Diagnostic::Count(rows.len()))
                .with(
                    "family",
                    Diagnostic::Text(
                        r.family
                            .vectors()
                            .iter()
                            .map(|v| {
                                v.iter()
                                    .map(|x| Real(*x).text())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            })
                            .collect::<Vec<_>>()
                            .join(";"),
                    ),
                )
        }
        Command::WeakP { space, p, family } => {
            let rows: Vec<Vec<f64>> = family
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(parse_vector)
                .collect::<Result<_>>()?;
            let family = WitnessFamily::from_rows(rows)?;
            let (d, e) = parse_space(space, family.dim())?;
            let est = weak_p_norm(&e, &family, *p, &cfg)?;
            Report::new("weak-p", est)
                .with("space", Diagnostic::Space(d))
                .with("family_size", Diagnostic::Count(family.len()))
        }
        Command::Verify {
            suite,
            n_max,
            cases,
        } => {
            return verify(suite, *n_max, *cases, cfg.seed, job.common.format);
        }
    };
    Ok(Outcome {
        status: EXIT_OK,
        document: render_estimate(report, cfg.seed, job.common.format),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn diagnostic_text(d: &Diagnostic) -> String {
    match d {
        Diagnostic::Real(r) => r.text(),
        Diagnostic::Reals(v) => v.iter().map(|r| r.text()).collect::<Vec<_>>().join(";"),
        Diagnostic::Count(c) => c.to_string(),
        Diagnostic::Text(t) => t.clone(),
        Diagnostic::Space(s) => s.to_string(),
    }
}

fn render_estimate(report: Report, seed: u64, format: Format) -> String {
    let est = &report.estimate;
    let witness: Vec<String> = est.witness.iter().map(|v| Real(*v).text()).collect();
    match format {
        Format::Json => serde_json::to_string_pretty(&EstimateDocument {
            command: report.command,
            value: Real(est.value),
            kind: est.kind.as_str(),
            witness: reals(&est.witness),
            diagnostics: report.diagnostics,
            seed,
        })
        .expect("estimate documents serialize"),
        Format::Csv => {
            let mut header = vec!["command", "value", "kind", "seed", "witness"];
            let mut row = vec![
                report.command.to_string(),
                Real(est.value).text(),
                est.kind.as_str().to_string(),
                seed.to_string(),
                witness.join(";"),
            ];
            for (k, d) in &report.diagnostics {
                header.push(k);
                row.push(csv_field(&diagnostic_text(d)));
            }
            format!("{}\n{}", header.join(","), row.join(","))
        }
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{}: {} ({})",
                report.command,
                Real(est.value).text(),
                est.kind.as_str()
            );
            let _ = writeln!(out, "witness: {}", witness.join(" "));
            for (k, d) in &report.diagnostics {
                let _ = writeln!(out, "{k}: {}", diagnostic_text(d));
            }
            let _ = write!(out, "seed: {seed}");
            out
        }
    }
}

fn verify(
    suite: &str,
    n_max: Option<usize>,
    cases: Option<usize>,
    seed: u64,
    format: Format,
) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let params = SuiteParams { n_max, cases, seed };
    let reports = names
        .iter()
        .map(|name| run_suite(name, &params))
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let document = match format {
        Format::Json => serde_json::to_string_pretty(&VerifyDocument {
            command: "verify",
            passed,
            seed,
            suites: reports
                .iter()
                .map(|r| SuiteDocument {
                    name: r.name.clone(),
                    passed: r.passed,
                    elapsed_secs: Real(r.elapsed_secs),
                    checks: r
                        .checks
                        .iter()
                        .map(|c| CheckDocument {
                            label: c.label.clone(),
                            cases: c.cases,
                            failures: c.failures,
                            max_deviation: Real(c.max_deviation),
                            tolerance: Real(c.tolerance),
                            worst: if c.failures > 0 {
                                c.worst.clone()
                            } else {
                                String::new()
                            },
                        })
                        .collect(),
                })
                .collect(),
        })
        .expect("verification documents serialize"),
        Format::Csv => {
            let mut out = String::from("suite,check,cases,failures,max_deviation,tolerance,passed");
            for r in &reports {
                for c in &r.checks {
                    let _ = write!(
                        out,
                        "\n{},{},{},{},{},{},{}",
                        r.name,
                        csv_field(&c.label),
                        c.cases,
                        c.failures,
                        Real(c.max_deviation).text(),
                        Real(c.tolerance).text(),
                        c.failures == 0
                    );
                }
            }
            out
        }
        Format::Plain => {
            let mut out: String = reports.iter().map(|r| r.to_string()).collect();
            let _ = write!(
                out,
                "{} (seed {seed})",
                if passed {
                    "all suites passed"
                } else {
                    "some suites failed"
                }
            );
            out
        }
    };
    Ok(Outcome {
        status: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
        document,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_line(args: &[&str]) -> Outcome {
        run_args(std::iter::once("koethe").chain(args.iter().copied()))
    }

    fn value(outcome: &Outcome) -> f64 {
        let doc: serde_json::Value = serde_json::from_str(&outcome.document).unwrap();
        doc["value"].as_f64().unwrap()
    }

    #[test]
    fn euclidean_norm() {
        let out = run_line(&[
            "norm",
            "--space",
            r#"{"type":"lp","p":2,"N":2}"#,
            "--x",
            "3,4",
        ]);
        assert_eq!(out.status, EXIT_OK, "{}", out.document);
        assert_eq!(value(&out), 5.0);
        assert!(out.document.contains("5.0000000000000000e0"));
    }

    #[test]
    fn lorentz_dual_norm() {
        let out = run_line(&[
            "dual-norm",
            "--space",
            "lorentz(w=(1,.5,.25),p=1)",
            "--z",
            "1,1,1",
        ]);
        assert_eq!(out.status, EXIT_OK, "{}", out.document);
        assert!((value(&out) - 12.0 / 7.0).abs() < 1e-7);
    }

    #[test]
    fn validation_errors_exit_with_two() {
        let out = run_line(&["norm", "--space", "lp(p=0.5)", "--x", "1,2"]);
        assert_eq!(out.status, EXIT_INVALID);
        let doc: serde_json::Value = serde_json::from_str(&out.document).unwrap();
        assert_eq!(doc["error"]["kind"], "construction");
        assert_eq!(
            run_line(&["norm", "--space", "lp(p=2,N=3)", "--x", "1,2"]).status,
            EXIT_INVALID
        );
        assert_eq!(run_line(&["norm", "--x", "1"]).status, EXIT_INVALID);
        assert_eq!(
            run_line(&["norm", "--space", "lp(p=2)", "--x", "1,a"]).status,
            EXIT_INVALID
        );
    }

    #[test]
    fn flags_override_config() {
        let out = run_line(&[
            "dual-norm",
            "--space",
            "lorentz(w=k^-0.5,p=2)",
            "--z",
            "1,2",
            "--config",
            r#"{"optimizer":{"seed":5,"restarts":3}}"#,
            "--seed",
            "9",
        ]);
        let doc: serde_json::Value = serde_json::from_str(&out.document).unwrap();
        assert_eq!(doc["seed"], 9);
        assert_eq!(doc["diagnostics"]["restarts"], 3);
    }

    #[test]
    fn csv_and_plain_formats() {
        let out = run_line(&[
            "norm", "--space", "lp(p=1)", "--x", "1,2", "--format", "csv",
        ]);
        let lines: Vec<&str> = out.document.lines().collect();
        assert!(lines[0].starts_with("command,value,kind,seed,witness"));
        assert!(lines[1].starts_with("norm,3.0000000000000000e0,exact"));
        let out = run_line(&[
            "norm", "--space", "lp(p=1)", "--x", "1,2", "--format", "plain",
        ]);
        assert!(out
            .document
            .starts_with("norm: 3.0000000000000000e0 (exact)"));
    }

    #[test]
    fn vectors_parse() {
        assert_eq!(parse_vector("[1, 2.5]").unwrap(), vec![1.0, 2.5]);
        assert_eq!(parse_vector("1 -2").unwrap(), vec![1.0, -2.0]);
        assert!(parse_vector("").is_err());
        assert!(parse_vector("1,inf").is_err());
    }
}
