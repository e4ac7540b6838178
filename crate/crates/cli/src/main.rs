//! Command-line driver: catalog verification, orbit enumeration over finite
//! fields, isomorphism queries on algebra files, and the classification
//! report.
//!
//! Exit codes: 0 = pass, 1 = mismatch / non-isomorphic, 2 = budget or usage
//! error. The environment variable `EVOCLASS_BUDGET` overrides the default
//! search budget.

use clap::{Args, Parser, Subcommand, ValueEnum};
use evoclass_core::aut::DEFAULT_SEARCH_BUDGET;
use evoclass_core::catalog;
use evoclass_core::enumerate::enumerate_orbits;
use evoclass_core::field::Field;
use evoclass_core::fingerprint::{isocheck, Verdict};
use evoclass_core::json::{self, algebra_to_json, FieldJson};
use evoclass_core::report;
use evoclass_core::verify::{render_json, render_text, run_verify, VerifyOptions};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "evoclass",
    about = "Exact classification toolkit for nilpotent evolution algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FieldArg {
    /// ground field: "q" for the rationals or "fp:P" for a prime field
    #[arg(long, default_value = "q")]
    field: String,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "q" || s == "Q" {
        return Ok(Field::rational());
    }
    if let Some(p) = s.strip_prefix("fp:") {
        let p: u64 = p.parse().map_err(|_| format!("bad modulus in {s:?}"))?;
        return Field::fp(p).map_err(|e| e.to_string());
    }
    Err(format!("unknown field spec {s:?} (expected \"q\" or \"fp:P\")"))
}

fn budget_from_env(cli_budget: Option<u64>) -> u64 {
    if let Some(b) = cli_budget {
        return b;
    }
    std::env::var("EVOCLASS_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEARCH_BUDGET)
}

#[derive(Subcommand)]
enum Command {
    /// Recompute and diff every catalog entry of a dimension, with witness
    /// and rigidity checks where they apply
    Verify {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// seed for the sampled witness parameters
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Enumerate admissible cocycle tuples over a catalog base and bucket
    /// them into isomorphism classes
    Enumerate {
        /// catalog name of the base algebra
        #[arg(long)]
        base: String,
        /// number of cocycles in each tuple
        #[arg(long)]
        ext: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide isomorphism of two algebras given as JSON files
    Isocheck {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit the classification document for a dimension
    Report {
        #[arg(long, default_value_t = 5)]
        dim: usize,
        /// directory to write report.txt and report.json into
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { dim, field, format, seed, budget } => {
            if !(1..=5).contains(&dim) {
                return Err(format!("dimension {dim} is out of the catalog range 1..=5"));
            }
            let field = parse_field(&field.field)?;
            let opts = VerifyOptions {
                field,
                seed,
                budget: budget_from_env(budget),
                ..VerifyOptions::default()
            };
            let outcome = run_verify(dim, &opts);
            match format {
                Format::Text => print!("{}", render_text(&outcome)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&render_json(&outcome)).unwrap()
                ),
            }
            Ok(if outcome.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Enumerate { base, ext, field, format, budget } => {
            let field = parse_field(&field.field)?;
            if !field.is_finite() {
                return Err("enumeration needs a finite field, e.g. --field fp:3".into());
            }
            if ext == 0 {
                return Err("--ext must be positive".into());
            }
            let base_alg = catalog::get(&base, field, None).map_err(|e| e.to_string())?;
            let enumeration = enumerate_orbits(&base_alg, ext, budget_from_env(budget))
                .map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!(
                        "base {base} over {field}, extension dimension {ext}: {} admissible \
                         tuples, {} class orbits, {} isomorphism classes{}",
                        enumeration.admissible,
                        enumeration.class_orbits.len(),
                        enumeration.iso_classes.len(),
                        if enumeration.complete { "" } else { " (PARTIAL: budget exhausted)" },
                    );
                    for (i, class) in enumeration.iso_classes.iter().enumerate() {
                        let rep: Vec<String> =
                            class.rep.iter().map(|t| t.to_string()).collect();
                        println!(
                            "  class {}: rep ({}) | members {} in {} class orbits | {}",
                            i + 1,
                            rep.join("; "),
                            class.members,
                            class.class_orbits,
                            class.algebra.table(),
                        );
                    }
                }
                Format::Json => {
                    let v = json!({
                        "base": base,
                        "field": FieldJson::of(field),
                        "ext": ext,
                        "admissible": enumeration.admissible,
                        "complete": enumeration.complete,
                        "class_orbits": enumeration.class_orbits.len(),
                        "iso_classes": enumeration.iso_classes.iter().map(|c| json!({
                            "rep": c.rep.iter().map(|t| t.diag.iter().map(|e| field.format(e)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                            "members": c.members,
                            "class_orbits": c.class_orbits,
                            "algebra": algebra_to_json(&c.algebra, None),
                        })).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(if enumeration.complete { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Isocheck { a, b, format, budget } => {
            let read = |p: &PathBuf| -> Result<_, String> {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                json::algebra_from_str(&text).map_err(|e| format!("{}: {e}", p.display()))
            };
            let alg_a = read(&a)?;
            let alg_b = read(&b)?;
            let verdict = isocheck(&alg_a, &alg_b, budget_from_env(budget))
                .map_err(|e| e.to_string())?;
            let code = match &verdict {
                Verdict::Isomorphic { .. } => ExitCode::SUCCESS,
                Verdict::NonIsomorphic { .. } => ExitCode::from(1),
                Verdict::Inconclusive { .. } => ExitCode::from(2),
            };
            match format {
                Format::Text => {
                    println!("{verdict}");
                    if let Verdict::Isomorphic { witness } = &verdict {
                        println!("witness (column convention):\n{witness}");
                    }
                }
                Format::Json => {
                    let field = alg_a.field();
                    let v = match &verdict {
                        Verdict::Isomorphic { witness } => json!({
                            "verdict": "isomorphic",
                            "witness": (0..witness.rows).map(|i| witness
                                .row(i)
                                .iter()
                                .map(|e| field.format(e))
                                .collect::<Vec<_>>()).collect::<Vec<_>>(),
                        }),
                        Verdict::NonIsomorphic { invariant } => json!({
                            "verdict": "non-isomorphic",
                            "invariant": invariant,
                        }),
                        Verdict::Inconclusive { reason } => json!({
                            "verdict": "inconclusive",
                            "reason": reason,
                        }),
                    };
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(code)
        }
        Command::Report { dim, out, format } => {
            if !(1..=5).contains(&dim) {
                return Err(format!("dimension {dim} is out of the catalog range 1..=5"));
            }
            let text = report::classification_text(dim);
            let json_doc =
                serde_json::to_string_pretty(&report::classification_json(dim)).unwrap();
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
                std::fs::write(dir.join("report.txt"), &text).map_err(|e| e.to_string())?;
                std::fs::write(dir.join("report.json"), format!("{json_doc}\n"))
                    .map_err(|e| e.to_string())?;
                println!(
                    "wrote {} and {}",
                    dir.join("report.txt").display(),
                    dir.join("report.json").display()
                );
            } else {
                match format {
                    Format::Text => print!("{text}"),
                    Format::Json => println!("{json_doc}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
