//! Command-line front end. `run` does all the work and returns the exit code
//! with the text to print, so it can be driven from tests.

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::distributions::CentralWeights;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::models::{catalog, lookup, parse_model, ModelManifold};
use crate::scalar::fmt_rational;
use crate::sun::{enumerate_nat_class, weyl_dim, IrrepConfig, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_AUDIT_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "index-character", version, about = "Exact index characters of projective Dirac operators")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value = "table")]
    pub format: Format,
    /// Read the model from a text file instead of the built-in catalog.
    #[arg(long, global = true)]
    pub model_file: Option<String>,
    /// Weight every central point by 1 instead of `χ^nat(g)/N`.
    #[arg(long, global = true)]
    pub corollary_as_printed: bool,
    /// Evaluate audit rows and lemma checks on a thread pool.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in model manifolds.
    Models,
    /// `∫ Â` of a model.
    FracIndex { model: Option<String> },
    /// Index of the Dirac operator twisted by an irrep.
    IndexChar {
        model: Option<String>,
        #[arg(long)]
        rep: String,
    },
    /// Signature of a 4-dimensional model from the natural twist.
    Signature { model: Option<String> },
    /// Integrality and consistency audit over the natural class.
    Audit {
        model: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_boxes: usize,
    },
    /// List the natural class of SU(N).
    Reps {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_boxes: usize,
    },
    /// Check the central-expectation identity on random words.
    LemmaCheck {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        max_boxes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Output {
    code: i32,
    json: serde_json::Value,
    table: String,
}

impl Output {
    fn ok(json: serde_json::Value, table: String) -> Self {
        Output { code: EXIT_OK, json, table }
    }
}

fn resolve_model(cfg: &CliConfig, name: &Option<String>) -> Result<ModelManifold> {
    match (&cfg.model_file, name) {
        (Some(path), name) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::ModelParse { line: 0, msg: format!("{path}: {e}") })?;
            let m = parse_model(&text)?;
            match name {
                Some(n) if *n != m.name => Err(Error::UnknownModel(format!("{n} (file defines {})", m.name))),
                _ => Ok(m),
            }
        }
        (None, Some(name)) => lookup(name),
        (None, None) => Err(Error::UnknownModel("no model given".into())),
    }
}

fn engine(cfg: &CliConfig, max_boxes: usize) -> Engine {
    let weights = if cfg.corollary_as_printed { CentralWeights::AsPrinted } else { CentralWeights::Lemma };
    let cutoff = IrrepConfig::default().max_boxes.max(max_boxes);
    Engine::new(IrrepConfig { max_boxes: cutoff }).with_weights(weights).with_parallel(cfg.parallel)
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn dispatch(cfg: &CliConfig) -> Result<Output> {
    match &cfg.command {
        Command::Models => {
            let mut table = format!("{:<8} {:>3} {:>10} {:>9} {:>5}\n", "name", "dim", "volume", "signature", "euler");
            let mut rows = Vec::new();
            for m in catalog() {
                let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
                let _ = writeln!(
                    table,
                    "{:<8} {:>3} {:>10} {:>9} {:>5}",
                    m.name,
                    m.n(),
                    m.volume.to_string(),
                    opt(m.signature),
                    opt(m.euler)
                );
                rows.push(json!({
                    "name": m.name,
                    "dim": m.n(),
                    "volume": m.volume.to_string(),
                    "signature": m.signature,
                    "euler": m.euler,
                }));
            }
            Ok(Output::ok(json!(rows), table))
        }
        Command::FracIndex { model } => {
            let m = resolve_model(cfg, model)?;
            let v = fmt_rational(&engine(cfg, 0).fractional_index(&m)?);
            Ok(Output::ok(json!({ "model": m.name, "fractional_index": v }), format!("{v}\n")))
        }
        Command::IndexChar { model, rep } => {
            let m = resolve_model(cfg, model)?;
            let p = Partition::parse(rep)?;
            let v = fmt_rational(&engine(cfg, p.boxes()).index_character(&m, &p)?);
            Ok(Output::ok(json!({ "model": m.name, "rep": p.label(), "index": v }), format!("{v}\n")))
        }
        Command::Signature { model } => {
            let m = resolve_model(cfg, model)?;
            let v = fmt_rational(&engine(cfg, 1).signature_check(&m)?);
            Ok(Output::ok(json!({ "model": m.name, "signature": v }), format!("{v}\n")))
        }
        Command::Audit { model, max_boxes } => {
            let m = resolve_model(cfg, model)?;
            let report = engine(cfg, *max_boxes).integrality_audit(&m, *max_boxes)?;
            let mut table = format!("{:<12} {:>5} {:>8} {:>8}  {}\n", "irrep", "dim", "index", "pairing", "I_j");
            for r in &report.rows {
                let opt = |v: &Option<_>| v.as_ref().map_or("-".to_string(), fmt_rational);
                let spectral: Vec<String> = r.spectral.iter().map(fmt_rational).collect();
                let _ = write!(
                    table,
                    "{:<12} {:>5} {:>8} {:>8}  {}",
                    r.partition.to_string(),
                    r.dim,
                    opt(&r.index),
                    opt(&r.distribution),
                    spectral.join(" ")
                );
                if let Some(e) = &r.error {
                    let _ = write!(table, "  error: {e}");
                }
                table.push('\n');
            }
            let f = &report.flags;
            let _ = writeln!(
                table,
                "fractional index {}, bump pairing {}\nintegral {}, consistent {}, bump {}, reportable {}",
                fmt_rational(&report.fractional_index),
                fmt_rational(&report.bump_pairing),
                f.all_integral,
                f.theorem_matches_corollary,
                f.bump_matches_fractional_index,
                f.all_reportable
            );
            let code = if report.passed() { EXIT_OK } else { EXIT_AUDIT_FAILED };
            Ok(Output { code, json: to_json(&report), table })
        }
        Command::Reps { n, max_boxes } => {
            let mut table = format!("{:<12} {:>6}\n", "irrep", "dim");
            let mut rows = Vec::new();
            for p in enumerate_nat_class(*n, *max_boxes) {
                let d = weyl_dim(&p, *n)?;
                let _ = writeln!(table, "{:<12} {:>6}", p.to_string(), d);
                rows.push(json!({ "partition": p.label(), "dim": d }));
            }
            Ok(Output::ok(json!({ "group": n, "max_boxes": max_boxes, "reps": rows }), table))
        }
        Command::LemmaCheck { n, samples, max_boxes, seed } => {
            let report = engine(cfg, *max_boxes).lemma_check(*n, *max_boxes, *samples, *seed)?;
            let mut table = format!(
                "SU({n}): {} elements x {} test functions, {} checks, {} failures\n",
                report.elements,
                report.test_functions,
                report.checks,
                report.failures.len()
            );
            for f in &report.failures {
                let _ = writeln!(table, "  {f}");
            }
            let code = if report.passed() { EXIT_OK } else { EXIT_AUDIT_FAILED };
            Ok(Output { code, json: to_json(&report), table })
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code with the rendered output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            return (code, e.to_string());
        }
    };
    match dispatch(&cfg) {
        Ok(out) => {
            let text = match cfg.format {
                Format::Table => out.table,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n",
            };
            (out.code, text)
        }
        Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
    }
}
