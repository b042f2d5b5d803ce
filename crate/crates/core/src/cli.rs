//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
//! failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalog::{Catalog, CatalogError, GroupCatalogEntry};
use crate::exactseq::{Extension, SequenceResult, DEFAULT_TORSION_BOUND};
use crate::fgab::FgAbGroup;
use crate::gaugecalc::{
    class_group, gauge_homotopy_with_bound, rational_dimension, Base, BundleSpec, GaugeError,
};
use crate::verify::{run_suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ghg", version, about = "Homotopy groups of gauge groups")]
struct Cli {
    /// Catalog file overriding the built-in one (also read from GHG_CATALOG).
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral homotopy group pi_n of the gauge group.
    Compute(ComputeArgs),
    /// Rank of pi_n of the gauge group.
    Rational(RationalArgs),
    /// List catalog entries and table depths.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(clap::Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    group: String,
    /// sphere:<m> or surface:<g>
    #[arg(long)]
    base: Base,
    /// Bundle class as comma-separated coordinates; a single integer for a
    /// cyclic class group. Defaults to the trivial bundle.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    #[arg(long)]
    degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_TORSION_BOUND)]
    torsion_bound: u64,
}

#[derive(clap::Args, Debug)]
struct RationalArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    base: Base,
    #[arg(long)]
    degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownGroup(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<GaugeError> for Failure {
    fn from(e: GaugeError) -> Self {
        match e {
            GaugeError::InvalidDegree(_) | GaugeError::InvalidBase(_) | GaugeError::ClassMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            GaugeError::Catalog(c) => c.into(),
            GaugeError::Algebra(a) => Failure::Usage(a.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// Runs the CLI with `std::env::args`, writing to the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// `argv[0]` is the program name.
pub fn run_with_io<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => compute(&cli, args, out),
        Command::Rational(args) => rational(&cli, args, out),
        Command::Catalog { format } => list_catalog(&cli, *format, out),
        Command::Verify { seed } => return verify(&cli, *seed, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

fn load(cli: &Cli) -> Result<Catalog, Failure> {
    Catalog::resolve(cli.catalog.as_deref()).map_err(|e| Failure::Compute(format!("loading catalog: {e}")))
}

fn parse_class(entry: &GroupCatalogEntry, base: Base, text: Option<&str>) -> Result<BundleSpec, Failure> {
    let Some(text) = text.map(str::trim).filter(|t| !t.is_empty()) else {
        return Ok(BundleSpec::trivial(entry, base)?);
    };
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("--class {text:?}: expected comma-separated integers")))?;
    let group = class_group(entry, base)?;
    if group.is_trivial() && coords.iter().all(|c| c == &BigInt::from(0)) {
        return Ok(BundleSpec::trivial(entry, base)?);
    }
    if coords.len() != group.ngens() {
        return Err(Failure::Usage(format!(
            "--class {text:?}: the class group of {} over {base} is {group} with {} coordinates",
            entry.name(),
            group.ngens()
        )));
    }
    Ok(BundleSpec::from_coords(entry, base, &coords)?)
}

fn group_json(g: &FgAbGroup) -> Value {
    let factors: Vec<Value> = g
        .invariant_factors()
        .iter()
        .map(|f| f.to_u64().map_or_else(|| Value::String(f.to_string()), Value::from))
        .collect();
    json!({ "rank": g.rank(), "factors": factors, "name": g.to_string() })
}

/// Text form of a sequence result.
pub fn describe(result: &SequenceResult) -> String {
    match &result.extension {
        Extension::Resolved(g) => g.to_string(),
        Extension::Ambiguous(c) => {
            let names: Vec<String> = c.iter().map(ToString::to_string).collect();
            format!("extension of {} by {}; candidates: {}", result.quot, result.sub, names.join(", "))
        }
    }
}

fn write_line(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Compute(format!("writing output: {e}")))
}

fn compute(cli: &Cli, args: &ComputeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.degree == 0 {
        return Err(GaugeError::InvalidDegree(0).into());
    }
    let catalog = load(cli)?;
    let entry = catalog.entry(&args.group)?;
    let bundle = parse_class(entry, args.base, args.class.as_deref())?;
    let stage = format!("pi_{} of the gauge group of {} over {}", args.degree, entry.name(), args.base);
    let result = gauge_homotopy_with_bound(entry, &bundle, args.degree, args.torsion_bound).map_err(|e| {
        match Failure::from(e) {
            Failure::Compute(msg) => Failure::Compute(format!("{stage}: {msg}")),
            usage => usage,
        }
    })?;
    match args.format {
        Format::Text => write_line(out, &describe(&result)),
        Format::Json => {
            let resolved = result.resolved();
            let doc = json!({
                "group": entry.name(),
                "base": args.base.to_string(),
                "class": bundle.class().coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "degree": args.degree,
                "resolved": resolved.is_some(),
                "name": describe(&result),
                "rank": resolved.map(FgAbGroup::rank),
                "factors": resolved.map(|g| group_json(g)["factors"].clone()),
                "sub": group_json(&result.sub),
                "quot": group_json(&result.quot),
                "candidates": result.candidates().iter().map(group_json).collect::<Vec<_>>(),
            });
            write_line(out, &doc.to_string())
        }
    }
}

fn rational(cli: &Cli, args: &RationalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.degree == 0 {
        return Err(GaugeError::InvalidDegree(0).into());
    }
    let catalog = load(cli)?;
    let entry = catalog.entry(&args.group)?;
    let d = rational_dimension(entry, args.base, args.degree)?;
    match args.format {
        Format::Text => write_line(out, &format!("Q^{d}")),
        Format::Json => write_line(
            out,
            &json!({
                "group": entry.name(),
                "base": args.base.to_string(),
                "degree": args.degree,
                "dimension": d,
                "name": format!("Q^{d}"),
            })
            .to_string(),
        ),
    }
}

fn list_catalog(cli: &Cli, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let catalog = load(cli)?;
    match format {
        Format::Text => {
            for e in catalog.entries() {
                let pairings: Vec<String> = e
                    .stored_pairings()
                    .map(|p| format!("({},{})", p.degrees().0, p.degrees().1))
                    .collect();
                let pairings = if pairings.is_empty() { "none".to_string() } else { pairings.join(" ") };
                write_line(
                    out,
                    &format!(
                        "{:<6} depth {:>2}  exponents {:?}  pairings {}",
                        e.name(),
                        e.depth(),
                        e.rational_exponents(),
                        pairings
                    ),
                )?;
            }
            Ok(())
        }
        Format::Json => {
            let doc: Vec<Value> = catalog
                .entries()
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name(),
                        "depth": e.depth(),
                        "abelian": e.is_abelian(),
                        "rational_exponents": e.rational_exponents(),
                        "pairings": e.stored_pairings().map(|p| [p.degrees().0, p.degrees().1]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            write_line(out, &Value::Array(doc).to_string())
        }
    }
}

fn verify(cli: &Cli, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let catalog = match load(cli) {
        Ok(c) => c,
        Err(Failure::Compute(msg) | Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_COMPUTE;
        }
    };
    let report = run_suite(&catalog, seed);
    let _ = writeln!(out, "{report}");
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ghg").chain(args.iter().copied());
        let code = run_with_io(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text() {
        let (code, out, _) = run_capture(&["compute", "--group", "SU2", "--base", "sphere:4", "--class", "6", "--degree", "2"]);
        assert_eq!((code, out.as_str()), (0, "Z/6\n"));
    }

    #[test]
    fn negative_class() {
        let (code, out, _) = run_capture(&["compute", "--group", "SU2", "--base", "sphere:4", "--class", "-8", "--degree", "2"]);
        assert_eq!((code, out.as_str()), (0, "Z/4\n"));
    }

    #[test]
    fn rational_text() {
        let (code, out, _) = run_capture(&["rational", "--group", "SU2", "--base", "surface:2", "--degree", "2"]);
        assert_eq!((code, out.as_str()), (0, "Q^4\n"));
    }

    #[test]
    fn degree_zero_is_usage() {
        let (code, _, err) = run_capture(&["compute", "--group", "SU2", "--base", "sphere:4", "--class", "1", "--degree", "0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("n = 0"), "{err}");
    }

    #[test]
    fn missing_pairing_is_compute_error() {
        let (code, _, err) = run_capture(&["compute", "--group", "SU3", "--base", "sphere:4", "--class", "1", "--degree", "2"]);
        assert_eq!(code, EXIT_COMPUTE);
        assert!(err.contains("SU3") && err.contains("pi_3 x pi_3"), "{err}");
    }

    #[test]
    fn table_depth_is_compute_error() {
        let (code, _, err) = run_capture(&["compute", "--group", "SU2", "--base", "sphere:4", "--degree", "11"]);
        assert_eq!(code, EXIT_COMPUTE);
        assert!(err.contains("SU2"), "{err}");
    }

    #[test]
    fn bad_usage() {
        assert_eq!(run_capture(&["compute", "--group", "SU2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "--group", "G2", "--base", "sphere:4", "--degree", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "--group", "SU2", "--base", "ball:4", "--degree", "2"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["compute", "--group", "SU2", "--base", "sphere:4", "--class", "1,2", "--degree", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn json_matches_text() {
        let args = ["compute", "--group", "SU2", "--base", "sphere:4", "--class", "6", "--degree", "2"];
        let (_, text, _) = run_capture(&args);
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let (code, out, _) = run_capture(&with_json);
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&out).unwrap();
        let factors: Vec<u64> = doc["factors"].as_array().unwrap().iter().map(|f| f.as_u64().unwrap()).collect();
        let g = FgAbGroup::from_u64(doc["rank"].as_u64().unwrap() as usize, &factors).unwrap();
        assert_eq!(g.to_string(), text.trim());
        assert_eq!(doc["candidates"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn catalog_listing() {
        let (code, out, _) = run_capture(&["catalog"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l.starts_with("SU2") && l.contains("depth 12")), "{out}");
    }
}
