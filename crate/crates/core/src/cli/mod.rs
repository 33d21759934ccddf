//! Command-line front end: argument parsing, the analysis pipeline and
//! report rendering.
//!
//! Exit codes: 0 success, 1 input error, 2 a theorem-level check failed.

mod report;
mod spec_file;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use crate::catalog;

pub use report::{
    catalog_report, run_report, CheckLevel, ConnectionSummary, Dims, Flags, MainTheoremSection,
    NumericSection, ReportError, ReportOptions, SpaceReport, TheoremVerdicts, Witness, ENGINE_NAME,
};
pub use spec_file::{SpaceSpecFile, SpecError};

pub const THREADS_ENV: &str = "REDUCTIVE_WORKBENCH_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERDICT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "reductive-workbench", version, about = "Exact analysis of reductive homogeneous spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a space specification file or a catalog entry
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Checks {
    #[default]
    All,
    Fast,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct AnalyzeArgs {
    /// JSON space specification
    #[arg(conflicts_with = "catalog")]
    pub file: Option<PathBuf>,
    /// Catalog entry name, or `all`
    #[arg(long)]
    pub catalog: Option<String>,
    /// Emit the machine-readable report
    #[arg(long)]
    pub json: bool,
    /// `fast` skips the exhaustive curvature, Bianchi and Killing scans
    #[arg(long, value_enum, default_value_t = Checks::All)]
    pub checks: Checks,
    /// Run floating-point flow checks (catalog entries only)
    #[arg(long)]
    pub numeric_checks: bool,
    /// Print the catalog names and exit
    #[arg(long)]
    pub list_catalog: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn options(args: &AnalyzeArgs) -> ReportOptions {
    ReportOptions {
        checks: match args.checks {
            Checks::All => CheckLevel::All,
            Checks::Fast => CheckLevel::Fast,
        },
        numeric: args.numeric_checks,
    }
}

fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got `{v}`")),
        },
    }
}

pub fn analyze_catalog_entry(name: &str, opts: ReportOptions) -> Result<SpaceReport, String> {
    let entry = catalog::construct(name).map_err(|e| e.to_string())?;
    catalog_report(&entry, opts).map_err(|e| e.to_string())
}

pub fn analyze_spec_text(text: &str, source: &str, opts: ReportOptions) -> Result<SpaceReport, String> {
    let spec = SpaceSpecFile::parse(text).map_err(|e| e.to_string())?;
    let pair = spec.pair().map_err(|e| e.to_string())?;
    run_report(&pair, source, spec.assertions(), opts, None).map_err(|e| e.to_string())
}

/// Every curated entry, analyzed in parallel and returned in catalog
/// order.
pub fn analyze_full_catalog(opts: ReportOptions, threads: Option<usize>) -> Result<Vec<SpaceReport>, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| e.to_string())?;
    pool.install(|| {
        catalog::CATALOG
            .par_iter()
            .map(|name| analyze_catalog_entry(name, opts))
            .collect()
    })
}

pub fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => {
            items.iter().all(|i| !matches!(i, Value::Object(_))) && scalar_text(v).len() <= 100
        }
        _ => true,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

/// Indented `key: value` rendering of the same document as the JSON report.
pub fn to_text(report: &SpaceReport) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut out = String::new();
    render(&value, 0, &mut out);
    out
}

fn verdict_code(reports: &[SpaceReport]) -> i32 {
    if reports.iter().all(SpaceReport::passed) {
        EXIT_OK
    } else {
        EXIT_VERDICT
    }
}

pub fn execute(args: &AnalyzeArgs) -> Outcome {
    if args.list_catalog {
        let mut stdout = String::new();
        for name in catalog::list() {
            stdout.push_str(name);
            stdout.push('\n');
        }
        return Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        };
    }
    let opts = options(args);
    let reports = match (&args.file, &args.catalog) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
            };
            match analyze_spec_text(&text, &path.display().to_string(), opts) {
                Ok(r) => vec![r],
                Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
            }
        }
        (None, Some(name)) if name == "all" => {
            let threads = match thread_cap() {
                Ok(t) => t,
                Err(e) => return Outcome::input_error(e),
            };
            match analyze_full_catalog(opts, threads) {
                Ok(r) => r,
                Err(e) => return Outcome::input_error(e),
            }
        }
        (None, Some(name)) => match analyze_catalog_entry(name, opts) {
            Ok(r) => vec![r],
            Err(e) => return Outcome::input_error(e),
        },
        _ => return Outcome::input_error("give a specification file or --catalog <name>"),
    };

    let stdout = if args.json {
        if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        }
    } else {
        reports
            .iter()
            .map(to_text)
            .collect::<Vec<_>>()
            .join("\n")
    };
    let stderr = reports
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("verdict failure ({}): {f}\n", r.source)))
        .collect();
    Outcome {
        code: verdict_code(&reports),
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> AnalyzeArgs {
        AnalyzeArgs::default()
    }

    #[test]
    fn so4_mod_so2_json() {
        let out = execute(&AnalyzeArgs {
            catalog: Some("so4_mod_so2".into()),
            json: true,
            ..args()
        });
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["dims"]["affine"], 7);
        assert_eq!(v["theorem_verdicts"]["torus_dim"], 1);
    }

    #[test]
    fn ineffective_entry_is_not_a_failure() {
        let out = execute(&AnalyzeArgs {
            catalog: Some("so3so3_mod_second_factor".into()),
            ..args()
        });
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("effective: false"));
        assert!(out.stdout.contains("transvection_equals_g: false"));
    }

    #[test]
    fn unknown_catalog_name_is_input_error() {
        let out = execute(&AnalyzeArgs {
            catalog: Some("nope".into()),
            ..args()
        });
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("unknown catalog name"));
    }

    #[test]
    fn missing_input_is_input_error() {
        assert_eq!(execute(&args()).code, EXIT_INPUT);
    }

    #[test]
    fn list_catalog() {
        let out = execute(&AnalyzeArgs {
            list_catalog: true,
            ..args()
        });
        assert_eq!(out.stdout.lines().count(), catalog::CATALOG.len());
    }

    #[test]
    fn text_render_nests() {
        let report = analyze_catalog_entry("so3_mod_so2", ReportOptions::default()).unwrap();
        let text = to_text(&report);
        assert!(text.starts_with("engine:\n  name: reductive-workbench\n"));
        assert!(text.contains("\ndims:\n  g: 3\n  h: 1\n  m: 2\n"));
    }

    #[test]
    fn fast_checks_skip_bianchi() {
        let opts = ReportOptions {
            checks: CheckLevel::Fast,
            numeric: false,
        };
        let r = analyze_catalog_entry("so3_mod_so2", opts).unwrap();
        assert_eq!(r.connection.bianchi_with_torsion, None);
        let r = analyze_catalog_entry("so3_mod_so2", ReportOptions::default()).unwrap();
        assert_eq!(r.connection.bianchi_with_torsion, Some(true));
    }
}
