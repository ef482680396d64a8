//! Subcommand implementations. Every command produces an [`Outcome`] rather
//! than printing, so the exit-code contract can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use charvar_core::arrangement::{self, ArrangementError};
use charvar_core::decompose::{self, CertificateStatus, DecomposeError};
use charvar_core::expr::{parse_rational, parse_uni, print_uni_in, ParseError};
use charvar_core::poly::UniPoly;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::report::{
    betti_text, divisor_text, hypotheses_text, zahid_family, BettiDoc, DivisorDoc, HypothesesDoc,
    ReportDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "charvar",
    version,
    about = "Characteristic varieties of generalized Broughton curve arrangements"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Suppress standard output; the exit status carries the result.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the hypotheses on (p, q).
    Check { p: String, q: String },
    /// Betti numbers of the complement.
    Betti { p: String, q: String },
    /// Positive-dimensional components of the first characteristic variety.
    Charvar { p: String, q: String },
    /// Multiplicity profile of the special fiber f = -1.
    Divisor { p: String },
    /// Functional decomposition P = H(Q).
    Decompose {
        poly: String,
        /// Degree of the inner polynomial Q; all divisors are tried if omitted.
        #[arg(long)]
        inner_degree: Option<usize>,
    },
    /// Certify connectivity of the generic fiber of f^m + c g^n.
    Connectivity {
        p: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Report for p = x^P, q = x (x + 2) ... (x + Q).
    Zahid { p: u32, q: u32 },
    /// Write the full JSON report document.
    Report {
        p: String,
        q: String,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {what}: {source}")]
    Parse {
        what: &'static str,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Precondition(String),
    #[error("certificate inconclusive")]
    Inconclusive,
    #[error("{0}")]
    Usage(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::Precondition(_) | CliError::Io(_) => EXIT_PRECONDITION,
            CliError::Inconclusive => EXIT_INCONCLUSIVE,
        }
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<DecomposeError> for CliError {
    fn from(e: DecomposeError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_poly(what: &'static str, text: &str) -> Result<UniPoly, CliError> {
    parse_uni(text).map_err(|source| CliError::Parse { what, source })
}

fn parse_pair(p: &str, q: &str) -> Result<(UniPoly, UniPoly), CliError> {
    Ok((parse_poly("p", p)?, parse_poly("q", q)?))
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

/// Successful stdout plus the exit code (nonzero for check failures and
/// inconclusive certificates, which still print a summary).
type Produced = (i32, String);

pub fn charvar_document(p: &UniPoly, q: &UniPoly) -> Result<ReportDocument, CliError> {
    let report = arrangement::characteristic_variety(p, q)?;
    Ok(ReportDocument::new(p, q, &report))
}

/// The document produced by `zahid p q`.
pub fn zahid_document(p: u32, q: u32) -> Result<ReportDocument, CliError> {
    if p == 0 || q == 0 {
        return Err(CliError::Precondition(
            "zahid parameters must be positive".to_string(),
        ));
    }
    let (pp, qq) = zahid_family(p, q);
    charvar_document(&pp, &qq)
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Text => doc.to_text(),
    }
}

fn execute(command: &Command, format: Format) -> Result<Produced, CliError> {
    match command {
        Command::Check { p, q } => {
            let (p, q) = parse_pair(p, q)?;
            let h = arrangement::check_hypotheses(&p, &q)?;
            let code = if h.satisfied { EXIT_OK } else { EXIT_PRECONDITION };
            let doc = HypothesesDoc::from(&h);
            let out = match format {
                Format::Json => json_line(&json!({
                    "hypotheses": doc,
                    "violations": h.violations(),
                })),
                Format::Text => {
                    let mut s = hypotheses_text(&doc);
                    for v in h.violations() {
                        let _ = writeln!(s, "failed: {v}");
                    }
                    s
                }
            };
            Ok((code, out))
        }
        Command::Betti { p, q } => {
            let (p, q) = parse_pair(p, q)?;
            let doc = BettiDoc::from(&arrangement::betti(&p, &q)?);
            let out = match format {
                Format::Json => json_line(&json!({ "betti": doc })),
                Format::Text => betti_text(&doc),
            };
            Ok((EXIT_OK, out))
        }
        Command::Charvar { p, q } => {
            let (p, q) = parse_pair(p, q)?;
            Ok((EXIT_OK, render(&charvar_document(&p, &q)?, format)))
        }
        Command::Zahid { p, q } => Ok((EXIT_OK, render(&zahid_document(*p, *q)?, format))),
        Command::Divisor { p } => {
            let p = parse_poly("p", p)?;
            let d = arrangement::special_fiber_divisor(&p)?;
            let order = arrangement::orbifold_group(&p)?;
            let doc = DivisorDoc::from(&d);
            let out = match format {
                Format::Json => json_line(&json!({ "divisor": doc, "orbifold_order": order })),
                Format::Text => {
                    let mut s = divisor_text(&doc);
                    let _ = writeln!(s, "orbifold order |T(f)|: {order}");
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Command::Decompose { poly, inner_degree } => {
            let poly = parse_poly("polynomial", poly)?;
            let found = match inner_degree {
                Some(e) => decompose::uni_decompose_at(&poly, *e)?,
                None => decompose::find_decomposition(&poly),
            };
            let out = match (format, &found) {
                (Format::Json, Some(d)) => json_line(&json!({
                    "decomposable": true,
                    "outer": print_uni_in(&d.outer, "t"),
                    "inner": d.inner.to_string(),
                })),
                (Format::Json, None) => json_line(&json!({ "decomposable": false })),
                (Format::Text, Some(d)) => format!(
                    "H(t) = {}\nQ(x) = {}\n",
                    print_uni_in(&d.outer, "t"),
                    d.inner
                ),
                (Format::Text, None) => "no decomposition\n".to_string(),
            };
            Ok((EXIT_OK, out))
        }
        Command::Connectivity { p, m, n, c } => {
            let p = parse_poly("p", p)?;
            let c = parse_rational(c).map_err(|source| CliError::Parse { what: "c", source })?;
            let cert = decompose::connectivity_certificate(&p, *m, *n, &c)?;
            let code = match cert.status {
                CertificateStatus::ConnectedCertified => EXIT_OK,
                CertificateStatus::Inconclusive => EXIT_INCONCLUSIVE,
            };
            let out = match format {
                Format::Json => json_line(&json!({
                    "status": cert.status.as_str(),
                    "singular_finite": cert.singular_finite,
                    "eliminants": [
                        print_uni_in(&cert.eliminants.0, "u"),
                        print_uni_in(&cert.eliminants.1, "v"),
                    ],
                    "notes": cert.notes,
                })),
                Format::Text => {
                    let mut s = format!("{}\n", cert.status.as_str());
                    let _ = writeln!(s, "eliminant in u: {}", print_uni_in(&cert.eliminants.0, "u"));
                    let _ = writeln!(s, "eliminant in v: {}", print_uni_in(&cert.eliminants.1, "v"));
                    for note in &cert.notes {
                        let _ = writeln!(s, "  - {note}");
                    }
                    s
                }
            };
            Ok((code, out))
        }
        Command::Report { p, q, output } => {
            let (p, q) = parse_pair(p, q)?;
            let json = charvar_document(&p, &q)?.to_json();
            match output {
                Some(path) => {
                    std::fs::write(path, json)?;
                    Ok((EXIT_OK, String::new()))
                }
                None => Ok((EXIT_OK, json)),
            }
        }
    }
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let (code, stdout, stderr) = match execute(&cli.command, cli.format) {
        Ok((code, out)) => (code, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    };
    Outcome {
        code,
        stdout: if cli.quiet { String::new() } else { stdout },
        stderr,
    }
}

/// Parse raw arguments (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: CliError::Usage(String::new()).exit_code(),
                    stdout: String::new(),
                    stderr: rendered,
                },
            }
        }
    }
}
