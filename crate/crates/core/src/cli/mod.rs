//! The `polystab` command line: argument parsing, output formats and exit
//! codes (0 success, 1 usage, 2 invalid input, 3 internal inconsistency).

pub mod document;
pub mod svg;
pub mod text;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::destab::{ann, n_oplus, n_plus};
use crate::error::Error;
use crate::lattice::{centroid, enumerate_monomials, ExponentVector, SpaceSignature};
use crate::oneps::{fundamental_set, OneParamSubgroup};
use crate::pipeline::{check_support_with, classify, ClassifyOptions};
use crate::polytope::centroid_classify;
use document::{to_canonical_json, CheckDoc, ReportDocument, SupportFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polystab", version, about = "Exact GIT stability for divisors in products of projective spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Oplus,
    Plus,
    Ann,
}

#[derive(Args, Debug)]
struct SigArgs {
    /// Factor dimensions, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required = true)]
    dims: Vec<i64>,
    /// Multidegree, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required = true)]
    degrees: Vec<i64>,
}

#[derive(Args, Debug)]
struct OptSigArgs {
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, requires = "degrees")]
    dims: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, requires = "dims")]
    degrees: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run single-threaded.
    #[arg(long)]
    no_parallel: bool,
}

#[derive(Args, Debug)]
struct DedupArg {
    /// Collapse families related by swapping isomorphic factors.
    #[arg(long, value_enum, default_value = "on")]
    dedup_symmetry: Switch,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the fundamental set of normalised one-parameter subgroups.
    Fundamental {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Maximal semi-destabilised and destabilised families.
    Families {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        dedup: DedupArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Annihilators of the families that satisfy the centroid criterion.
    Annihilators {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        dedup: DedupArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The centroid, and its position relative to a support if one is given.
    Centroid {
        #[command(flatten)]
        sig: OptSigArgs,
        #[arg(long)]
        support: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check a support file with both the centroid test and the subgroup search.
    Check {
        #[arg(long, required = true)]
        support: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Full classification report.
    Classify {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        dedup: DedupArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// SVG of a projected support, its hull and the centroid (two-dimensional lattices only).
    Plot {
        #[command(flatten)]
        sig: OptSigArgs,
        /// Plot the family of this normalised subgroup (concatenated weights).
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, conflicts_with = "support")]
        lambda: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "oplus")]
        kind: Kind,
        #[arg(long)]
        support: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line with process streams and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => report(f, err),
    }
}

fn report(failure: Failure, err: &mut dyn Write) -> i32 {
    match failure {
        Failure::Invalid(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Failure::Internal(msg) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn signature(s: &SigArgs) -> Result<SpaceSignature, Failure> {
    Ok(SpaceSignature::from_signed(&s.dims, &s.degrees)?)
}

fn options(dedup: &DedupArg, out: &OutArgs) -> ClassifyOptions {
    ClassifyOptions { dedup_symmetry: dedup.dedup_symmetry == Switch::On, parallel: !out.no_parallel }
}

fn emit(target: &Option<PathBuf>, body: &str, out: &mut dyn Write) -> Outcome {
    match target {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(body.as_bytes()).map_err(|e| Failure::Invalid(format!("cannot write output: {e}"))),
    }
}

fn read_support(path: &Path) -> Result<(SpaceSignature, Vec<ExponentVector>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(SupportFile::parse(&text)?)
}

/// Signature from the flags, the support file, or both if they agree.
fn resolve(
    sig: &OptSigArgs,
    support: &Option<PathBuf>,
) -> Result<(SpaceSignature, Option<Vec<ExponentVector>>), Failure> {
    let flags = match (&sig.dims, &sig.degrees) {
        (Some(d), Some(k)) => Some(SpaceSignature::from_signed(d, k)?),
        _ => None,
    };
    let file = support.as_deref().map(read_support).transpose()?;
    match (flags, file) {
        (Some(a), Some((b, _))) if a != b => {
            Err(Failure::Invalid(format!("flags give {a} but the support file is for {b}")))
        }
        (_, Some((b, s))) => Ok((b, Some(s))),
        (Some(a), None) => Ok((a, None)),
        (None, None) => Err(Failure::Invalid("give --dims and --degrees, or --support".into())),
    }
}

fn select(doc: &ReportDocument, keys: &[&str]) -> Value {
    let Value::Object(mut map) = serde_json::to_value(doc).expect("documents serialise") else {
        unreachable!("documents are objects")
    };
    map.retain(|k, _| keys.contains(&k.as_str()));
    Value::Object(map)
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Outcome {
    match command {
        Command::Fundamental { sig, out } => {
            let sig = signature(&sig)?;
            let set = fundamental_set(&sig, !out.no_parallel);
            let body = match out.format {
                Format::Text => text::fundamental_text(&sig, &set),
                Format::Json => to_canonical_json(&set.iter().map(document::weights).collect::<Vec<_>>()),
                Format::Csv => text::fundamental_csv(&set)?,
            };
            emit(&out.out, &body, stdout)
        }
        Command::Families { sig, dedup, out } => {
            let report = classify(&signature(&sig)?, options(&dedup, &out));
            let body = match out.format {
                Format::Text => text::families_text(&report),
                Format::Json => to_canonical_json(&select(
                    &ReportDocument::from_report(&report),
                    &["schema_version", "signature", "semistable_families", "unstable_families", "dedup"],
                )),
                Format::Csv => text::families_csv(text::report_families(&report, false))?,
            };
            emit(&out.out, &body, stdout)
        }
        Command::Annihilators { sig, dedup, out } => {
            let report = classify(&signature(&sig)?, options(&dedup, &out));
            let body = match out.format {
                Format::Text => text::annihilators_text(&report),
                Format::Json => to_canonical_json(&select(
                    &ReportDocument::from_report(&report),
                    &["schema_version", "signature", "annihilators", "dedup"],
                )),
                Format::Csv => {
                    let rows = text::report_families(&report, true).into_iter().filter(|(_, k, _)| *k == "ann");
                    text::families_csv(rows)?
                }
            };
            emit(&out.out, &body, stdout)
        }
        Command::Classify { sig, dedup, out } => {
            let report = classify(&signature(&sig)?, options(&dedup, &out));
            let body = match out.format {
                Format::Text => text::report_text(&report),
                Format::Json => to_canonical_json(&ReportDocument::from_report(&report)),
                Format::Csv => text::families_csv(text::report_families(&report, true))?,
            };
            emit(&out.out, &body, stdout)
        }
        Command::Centroid { sig, support, out } => {
            let (sig, support) = resolve(&sig, &support)?;
            let o = centroid(&sig);
            let verdict = support.as_ref().map(|s| centroid_classify(s, &sig)).transpose()?;
            let body = match out.format {
                Format::Text => match (&support, &verdict) {
                    (Some(s), Some(v)) => {
                        let mut s = s.clone();
                        s.sort_by(|a, b| b.cmp(a));
                        s.dedup();
                        text::verdict_text(&sig, &s, v)
                    }
                    _ => text::centroid_text(&sig),
                },
                Format::Json => {
                    let mut v = json!({
                        "schema_version": document::SCHEMA_VERSION,
                        "signature": {"dims": sig.dims(), "degrees": sig.degrees()},
                        "centroid": document::point(&o),
                    });
                    if let Some(verdict) = &verdict {
                        v["verdict"] = serde_json::to_value(document::verdict(verdict)).expect("serialises");
                    }
                    to_canonical_json(&v)
                }
                Format::Csv => {
                    let mut s = String::from("coordinate,value\n");
                    for (i, c) in o.coords.iter().enumerate() {
                        s.push_str(&format!("{i},{}\n", document::rational(c)));
                    }
                    s
                }
            };
            emit(&out.out, &body, stdout)
        }
        Command::Check { support, out } => {
            let (sig, support) = read_support(&support)?;
            let fundamental = fundamental_set(&sig, !out.no_parallel);
            let check = check_support_with(&support, &sig, &fundamental)?;
            let body = match out.format {
                Format::Text => text::check_text(&sig, &check),
                Format::Json => to_canonical_json(&CheckDoc::from_check(&sig, &check)),
                Format::Csv => {
                    let mut s = String::from("permutation,lambda,mu\n");
                    for w in &check.witnesses {
                        let perm: Vec<String> = w
                            .permutation
                            .iter()
                            .map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                            .collect();
                        s.push_str(&format!("\"{}\",\"{}\",{}\n", perm.join("|"), w.subgroup, w.mu));
                    }
                    s
                }
            };
            emit(&out.out, &body, stdout)
        }
        Command::Plot { sig, lambda, kind, support, out } => {
            let (sig, support) = resolve(&sig, &support)?;
            if sig.projected_dim() != 2 {
                return Err(Failure::Invalid(format!(
                    "plots need a two-dimensional projected lattice, {sig} has dimension {}; \
                     the hull_vertices fields of `classify --format json` give the exact hull instead",
                    sig.projected_dim()
                )));
            }
            let (points, title) = match (support, lambda) {
                (Some(s), _) => (s, "support".to_string()),
                (None, Some(w)) => {
                    let l = OneParamSubgroup::from_i64(&sig, &w)?;
                    let family = match kind {
                        Kind::Oplus => n_oplus(&l, &sig)?,
                        Kind::Plus => n_plus(&l, &sig)?,
                        Kind::Ann => ann(&l, &sig)?,
                    };
                    let name = match kind {
                        Kind::Oplus => "N⊕",
                        Kind::Plus => "N+",
                        Kind::Ann => "Ann",
                    };
                    (family.support().to_vec(), format!("{name}{l}"))
                }
                (None, None) => (enumerate_monomials(&sig), "all monomials".to_string()),
            };
            if points.is_empty() {
                return Err(Failure::Invalid("the selected family is empty".into()));
            }
            let body = svg::render(&sig, &points, &title)?;
            emit(&out, &body, stdout)
        }
    }
}
