//! Command-line verifier for the structural theorems of A-hypergeometric
//! systems: toric ideal construction, dimension certificates, holonomicity,
//! the homogenization reduction, generic-fiber finiteness, and pointwise
//! transversality batteries, over exact rational arithmetic.
//!
//! Exit codes: 0 all verdicts pass; 1 a theorem verdict failed (this should
//! never happen for valid input and indicates an engine bug); 2 invalid
//! input.

mod input;
mod render;

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use gkzcheck_core::hypergeo::{
    characteristic_section, face_infos, family_check, homogenization_reduction, toric_section,
    transversality_battery, verification_report, verify_holonomicity, verify_parameter_theorem,
    CheckOptions,
};
use gkzcheck_core::poly::text::render_rational;
use gkzcheck_core::toric::homogenize;
use gkzcheck_core::Error;

use input::{parse_beta_flag, parse_input, MatrixInput};

#[derive(Parser)]
#[command(name = "gkzcheck", version, about = "Exact verifier for A-hypergeometric structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification pipeline and aggregate all verdicts
    Check(RunArgs),
    /// Toric ideal, kernel lattice, and the A-homogeneity audit
    Toric(RunArgs),
    /// Faces of the cone with supporting-functional certificates
    Faces(RunArgs),
    /// Characteristic ideal generators, route, and dimension
    CharIdeal(RunArgs),
    /// Parameter-theorem and holonomicity dimension verdicts
    Dim(RunArgs),
    /// Homogenized matrix and the contraction consistency verdict
    Homogenize(RunArgs),
    /// Generic fiber degrees at seeded sample points
    Fibers(RunArgs),
    /// Per-face transversality certificate battery
    Transversality(RunArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Toric(_) => "toric",
            Command::Faces(_) => "faces",
            Command::CharIdeal(_) => "char-ideal",
            Command::Dim(_) => "dim",
            Command::Homogenize(_) => "homogenize",
            Command::Fibers(_) => "fibers",
            Command::Transversality(_) => "transversality",
        }
    }

    fn args(&self) -> &RunArgs {
        match self {
            Command::Check(a)
            | Command::Toric(a)
            | Command::Faces(a)
            | Command::CharIdeal(a)
            | Command::Dim(a)
            | Command::Homogenize(a)
            | Command::Fibers(a)
            | Command::Transversality(a) => a,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Input file (JSON document or integer grid); stdin when omitted
    input: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for all sampling (overrides a seed in the input document)
    #[arg(long)]
    seed: Option<u64>,

    /// Sample count for the family and transversality batteries
    #[arg(long)]
    samples: Option<usize>,

    /// Parameter vector as comma-separated rationals, echoed in reports
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,

    /// Batch mode: run `check` over every file in a directory
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// One machine-readable report: input echo, per-check results, engine
/// version, seed, and wall-clock timing.
#[derive(Serialize)]
struct ReportDocument {
    engine_version: String,
    command: String,
    label: Option<String>,
    matrix: Vec<Vec<i64>>,
    beta: Option<Vec<String>>,
    seed: u64,
    samples: usize,
    status: String,
    results: serde_json::Value,
    timing_ms: serde_json::Value,
}

/// Typed results per command, used by the text renderer; the JSON path
/// serializes the same values into `ReportDocument::results`.
enum SectionResults {
    Check(Box<gkzcheck_core::report::VerificationReport>),
    Toric(gkzcheck_core::report::ToricSection),
    Faces(Vec<gkzcheck_core::report::FaceInfo>),
    CharIdeal(gkzcheck_core::report::CharacteristicSection),
    Dim {
        parameter: gkzcheck_core::report::ParameterTheoremVerdict,
        holonomicity: gkzcheck_core::report::HolonomicityVerdict,
    },
    Homogenize {
        matrix: Vec<Vec<String>>,
        verdict: gkzcheck_core::report::HomogenizationVerdict,
    },
    Fibers(gkzcheck_core::report::FamilyVerdict),
    Transversality(gkzcheck_core::report::TransversalityReport),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: &Command) -> Result<ExitCode, Error> {
    let args = command.args();
    if let Some(dir) = &args.corpus {
        if !matches!(command, Command::Check(_)) {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "--corpus batch mode is only available with `check`".to_string(),
            });
        }
        return run_corpus(dir, args);
    }

    let text = read_input(args.input.as_deref())?;
    let parsed = parse_input(&text)?;
    let (doc, sections, pass) = run_single(command.name(), args, &parsed)?;
    emit(&doc, &sections, args.format);
    if pass {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "verdict failure: for valid input this indicates an engine bug; \
             please keep the input and report it"
        );
        Ok(ExitCode::from(1))
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Error> {
    let io_err = |e: std::io::Error| Error::Parse {
        line: 1,
        column: 1,
        message: format!("cannot read input: {e}"),
    };
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(io_err),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
            Ok(buf)
        }
    }
}

fn resolve_options(args: &RunArgs, parsed: &MatrixInput) -> Result<CheckOptions, Error> {
    let beta = match &args.beta {
        Some(flag) => Some(parse_beta_flag(flag)?),
        None => parsed.beta.clone(),
    };
    if let Some(beta) = &beta {
        let d = parsed.matrix.len();
        if beta.len() != d {
            return Err(Error::DimensionMismatch {
                context: format!("beta has length {}, expected d = {d}", beta.len()),
            });
        }
    }
    let samples = args.samples.unwrap_or(3);
    if samples == 0 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "--samples must be at least 1".to_string(),
        });
    }
    Ok(CheckOptions {
        label: parsed.label.clone(),
        beta,
        seed: args.seed.or(parsed.seed).unwrap_or(0),
        samples,
    })
}

fn run_single(
    command: &str,
    args: &RunArgs,
    parsed: &MatrixInput,
) -> Result<(ReportDocument, SectionResults, bool), Error> {
    let opts = resolve_options(args, parsed)?;
    let matrix = parsed.to_matrix()?;
    let started = Instant::now();

    let (results, sections, pass) = match command {
        "check" => {
            let report = verification_report(&matrix, &opts)?;
            let pass = report.all_pass;
            (
                serde_json::to_value(&report).expect("serializes"),
                SectionResults::Check(Box::new(report)),
                pass,
            )
        }
        "toric" => {
            let section = toric_section(&matrix)?;
            let pass = section.pass;
            (
                serde_json::json!({ "toric": section }),
                SectionResults::Toric(section),
                pass,
            )
        }
        "faces" => {
            let infos = face_infos(&matrix)?;
            (
                serde_json::json!({ "faces": infos }),
                SectionResults::Faces(infos),
                true,
            )
        }
        "char-ideal" => {
            let section = characteristic_section(&matrix)?;
            let pass = section.routes_consistent;
            (
                serde_json::json!({ "characteristic": section }),
                SectionResults::CharIdeal(section),
                pass,
            )
        }
        "dim" => {
            let parameter = verify_parameter_theorem(&matrix)?;
            let holonomicity = verify_holonomicity(&matrix)?;
            let pass = parameter.pass && holonomicity.pass;
            (
                serde_json::json!({
                    "parameter_theorem": parameter,
                    "holonomicity": holonomicity,
                }),
                SectionResults::Dim {
                    parameter,
                    holonomicity,
                },
                pass,
            )
        }
        "homogenize" => {
            let hat = homogenize(&matrix);
            let echo: Vec<Vec<String>> = (0..hat.matrix().rows())
                .map(|i| {
                    hat.matrix()
                        .row(i)
                        .iter()
                        .map(|e| e.to_string())
                        .collect()
                })
                .collect();
            let verdict = homogenization_reduction(&matrix)?;
            let pass = verdict.pass;
            (
                serde_json::json!({ "homogenized_matrix": echo, "verdict": verdict }),
                SectionResults::Homogenize {
                    matrix: echo,
                    verdict,
                },
                pass,
            )
        }
        "fibers" => {
            let family = family_check(&matrix, opts.samples, opts.seed)?;
            let pass = family.pass;
            (
                serde_json::json!({ "family": family }),
                SectionResults::Fibers(family),
                pass,
            )
        }
        "transversality" => {
            let battery = transversality_battery(&matrix, opts.samples, opts.seed)?;
            let pass = battery.pass;
            (
                serde_json::json!({ "transversality": battery }),
                SectionResults::Transversality(battery),
                pass,
            )
        }
        other => unreachable!("unknown command {other}"),
    };

    let mut timing = BTreeMap::new();
    timing.insert(
        "total".to_string(),
        serde_json::Value::from(started.elapsed().as_millis() as u64),
    );
    let doc = ReportDocument {
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.to_string(),
        label: opts.label.clone(),
        matrix: parsed.matrix.clone(),
        beta: opts
            .beta
            .as_ref()
            .map(|b| b.iter().map(render_rational).collect()),
        seed: opts.seed,
        samples: opts.samples,
        status: if pass { "pass" } else { "fail" }.to_string(),
        results,
        timing_ms: serde_json::Value::Object(timing.into_iter().collect()),
    };
    Ok((doc, sections, pass))
}

fn emit(doc: &ReportDocument, sections: &SectionResults, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(doc).expect("report serializes")
            );
        }
        Format::Text => {
            print!("{}", render_text(doc, sections));
        }
    }
}

fn render_text(doc: &ReportDocument, sections: &SectionResults) -> String {
    let mut out = String::new();
    match sections {
        SectionResults::Check(report) => return render::check(report),
        SectionResults::Toric(section) => render::toric(&mut out, section),
        SectionResults::Faces(infos) => render::faces(&mut out, infos),
        SectionResults::CharIdeal(section) => render::characteristic(&mut out, section),
        SectionResults::Dim {
            parameter,
            holonomicity,
        } => {
            render::parameter(&mut out, parameter);
            render::holonomicity(&mut out, holonomicity);
        }
        SectionResults::Homogenize { matrix, verdict } => {
            let rows: Vec<String> = matrix.iter().map(|r| format!("[{}]", r.join(","))).collect();
            out.push_str(&format!("homogenized matrix [{}]\n", rows.join(",")));
            render::homogenization(&mut out, verdict);
        }
        SectionResults::Fibers(family) => render::family(&mut out, family),
        SectionResults::Transversality(battery) => render::transversality(&mut out, battery),
    }
    let header = format!(
        "== {}: {} ==\nmatrix            {}\n",
        doc.command,
        doc.label.as_deref().unwrap_or("input"),
        render::matrix_line(&doc.matrix)
    );
    let footer = format!("status            {}\n", doc.status);
    format!("{header}{out}{footer}")
}

#[derive(Serialize)]
struct CorpusRow {
    file: String,
    outcome: String,
    report: Option<serde_json::Value>,
    error: Option<String>,
}

fn run_corpus(dir: &Path, args: &RunArgs) -> Result<ExitCode, Error> {
    let io_err = |e: std::io::Error| Error::Parse {
        line: 1,
        column: 1,
        message: format!("cannot read corpus directory: {e}"),
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io_err)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("corpus directory {} has no files", dir.display()),
        });
    }

    // Independent inputs verify concurrently; output stays in input order.
    let rows: Vec<CorpusRow> = files
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().to_string())
                .unwrap_or_else(|| path.display().to_string());
            let outcome = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("cannot read {}: {e}", path.display()),
                })
                .and_then(|text| parse_input(&text))
                .and_then(|parsed| run_single("check", args, &parsed));
            match outcome {
                Ok((doc, _, pass)) => CorpusRow {
                    file: name,
                    outcome: if pass { "pass" } else { "fail" }.to_string(),
                    report: Some(serde_json::to_value(&doc).expect("serializes")),
                    error: None,
                },
                Err(e) => CorpusRow {
                    file: name,
                    outcome: "invalid".to_string(),
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();

    let passed = rows.iter().filter(|r| r.outcome == "pass").count();
    let failed = rows.iter().filter(|r| r.outcome == "fail").count();
    let invalid = rows.iter().filter(|r| r.outcome == "invalid").count();

    match args.format {
        Format::Json => {
            let summary = serde_json::json!({
                "corpus": rows,
                "summary": {
                    "total": rows.len(),
                    "passed": passed,
                    "failed": failed,
                    "invalid": invalid,
                },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("serializes")
            );
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.file.len()).max().unwrap_or(4).max(4);
            println!("{:width$}  outcome  detail", "file");
            for r in &rows {
                let detail = match (&r.error, &r.report) {
                    (Some(e), _) => e.clone(),
                    (None, Some(report)) => {
                        let label = report["label"].as_str().unwrap_or("-");
                        let n = &report["results"]["n"];
                        let d = &report["results"]["d"];
                        format!("label={label} d={d} n={n}")
                    }
                    _ => String::new(),
                };
                println!("{:width$}  {:7}  {}", r.file, r.outcome, detail);
            }
            println!(
                "total {}: {} passed, {} failed, {} invalid",
                rows.len(),
                passed,
                failed,
                invalid
            );
        }
    }

    if invalid > 0 {
        Ok(ExitCode::from(2))
    } else if failed > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
