//! `affdim`: classify two-level designs, compute indicator coefficients,
//! evaluate maximal-determinant bounds and run optimal-design searches.
//!
//! Every successful run prints one machine-readable JSON document to
//! stdout (or `--output FILE`); human-oriented notes go to stderr. Exit
//! codes: 0 success, 1 usage or input error, 2 computational error
//! (budget exceeded, singular input where forbidden, missing target).

mod report;

use affdim::bounds;
use affdim::search::{
    conjecture_audit, exhaustive_search, saturated_exhaustive, saturated_local_search, AuditConfig,
    LocalSearchConfig, OptimalityCriterion, MAX_EXHAUSTIVE_RUNS,
};
use affdim::{classify, indicator_coefficients, Design, Error as CoreError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "affdim",
    version,
    about = "Two-level design classification and optimal-design search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputOptions,
}

#[derive(Args)]
struct OutputOptions {
    /// Output format of the stdout document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the document to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a design file as full / regular / subset / affinely
    /// full-dimensional, with its defining relations.
    Classify {
        /// Design file: one run per line, entries 1/+1/-1 (or 0/1).
        file: PathBuf,
    },
    /// Exact indicator-function coefficients of a design file.
    Indicator { file: PathBuf },
    /// Maximal-determinant bound report for saturated run sizes.
    Bounds {
        /// Single run size.
        #[arg(long, conflicts_with = "range")]
        runs: Option<u64>,
        /// Inclusive range `a..b` of run sizes, one report per size.
        #[arg(long)]
        range: Option<RangeArg>,
    },
    /// Exhaustive D-/A-/E-optimal search over r-run designs on s factors.
    Search {
        #[arg(long)]
        factors: usize,
        #[arg(long)]
        runs: usize,
        #[arg(long, value_enum)]
        criterion: CriterionArg,
        /// Candidate budget (default 10^8).
        #[arg(long)]
        budget: Option<u128>,
        /// Worker threads for the enumeration (result is thread-count
        /// independent).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Saturated maximal-determinant search (exhaustive r <= 6, else
    /// seeded steepest-ascent restarts).
    Maxdet {
        #[arg(long)]
        runs: u64,
        /// Force full enumeration (r <= 6 only).
        #[arg(long, conflicts_with = "local")]
        exhaustive: bool,
        /// Force stochastic local search (r >= 5).
        #[arg(long)]
        local: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        restarts: u64,
        /// Stop as soon as this |det| is attained.
        #[arg(long)]
        target: Option<BigInt>,
    },
    /// Audit the mod-8 rule against attained maximal determinants for
    /// desk-scale run sizes (4..=13 have built-in targets).
    Conjecture {
        /// Run sizes: a single value `7` or an inclusive range `4..13`.
        #[arg(long)]
        runs: RangeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        restarts: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    D,
    A,
    E,
}

impl CriterionArg {
    fn to_core(self) -> OptimalityCriterion {
        match self {
            CriterionArg::D => OptimalityCriterion::D,
            CriterionArg::A => OptimalityCriterion::A,
            CriterionArg::E => OptimalityCriterion::E,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CriterionArg::D => "d",
            CriterionArg::A => "a",
            CriterionArg::E => "e",
        }
    }
}

/// `a..b` inclusive, or a single value.
#[derive(Clone, Copy)]
struct RangeArg {
    start: u64,
    end: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (
                a.parse().map_err(|_| format!("bad range start `{a}`"))?,
                b.parse().map_err(|_| format!("bad range end `{b}`"))?,
            ),
            None => {
                let v = s.parse().map_err(|_| format!("bad run size `{s}`"))?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(RangeArg { start, end })
    }
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::EmptyDesign
            | CoreError::RaggedRow { .. }
            | CoreError::InvalidToken { .. }
            | CoreError::DuplicateRun { .. }
            | CoreError::InvalidLevel { .. }
            | CoreError::NoFactors
            | CoreError::DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

fn read_design(path: &PathBuf) -> Result<Design, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Design::parse(&text)?)
}

/// Runs a subcommand, producing the stdout document and stderr notes.
fn run(command: Command, format: Format) -> Result<(String, Vec<String>), CliError> {
    match command {
        Command::Classify { file } => {
            let design = read_design(&file)?;
            let result = classify(&design);
            let doc = match format {
                Format::Json => pretty(&report::classification_json(&design, &result)),
                Format::Text => report::classification_text(&design, &result),
            };
            Ok((doc, vec![]))
        }
        Command::Indicator { file } => {
            let design = read_design(&file)?;
            let poly = indicator_coefficients(&design)?;
            let doc = match format {
                Format::Json => pretty(&report::indicator_json(&poly)),
                Format::Text => {
                    let Value::Array(terms) = report::indicator_json(&poly) else {
                        unreachable!()
                    };
                    let mut out = String::new();
                    for t in terms {
                        let word: Vec<String> = t["word"]
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|j| format!("x{j}"))
                            .collect();
                        let name = if word.is_empty() {
                            "1".to_string()
                        } else {
                            word.join("")
                        };
                        out.push_str(&format!(
                            "{} {}\n",
                            t["coefficient"].as_str().unwrap(),
                            name
                        ));
                    }
                    out
                }
            };
            let notes = vec![format!(
                "{} nonzero of {} coefficients",
                poly.numerators().iter().filter(|&&n| n != 0).count(),
                poly.numerators().len()
            )];
            Ok((doc, notes))
        }
        Command::Bounds { runs, range } => {
            let range = match (runs, range) {
                (Some(r), None) => RangeArg { start: r, end: r },
                (None, Some(g)) => g,
                _ => {
                    return Err(CliError::Usage(
                        "bounds needs exactly one of --runs or --range".into(),
                    ))
                }
            };
            let mut docs = Vec::new();
            for r in range.start..=range.end {
                let rep = bounds::bound_report(r)?;
                let prop = if r >= 5 && (r % 4 == 1 || r % 4 == 2) {
                    Some(bounds::proposition_consistency(r)?)
                } else {
                    None
                };
                docs.push(report::bound_json(&rep, prop.as_ref()));
            }
            let doc = if range.start == range.end {
                docs.pop().unwrap()
            } else {
                Value::Array(docs)
            };
            Ok((pretty(&doc), vec![]))
        }
        Command::Search {
            factors,
            runs,
            criterion,
            budget,
            threads,
        } => {
            let result = exhaustive_search(factors, runs, criterion.to_core(), budget, threads)?;
            let notes = vec![format!(
                "evaluated {} candidate designs ({} optimal)",
                result.num_evaluated, result.num_maximizers
            )];
            Ok((
                pretty(&report::search_json(criterion.name(), &result)),
                notes,
            ))
        }
        Command::Maxdet {
            runs,
            exhaustive,
            local,
            seed,
            restarts,
            target,
        } => {
            let use_exhaustive = if exhaustive {
                true
            } else if local {
                false
            } else {
                runs <= MAX_EXHAUSTIVE_RUNS
            };
            let result = if use_exhaustive {
                saturated_exhaustive(runs)?
            } else {
                let config = LocalSearchConfig {
                    seed,
                    restarts,
                    max_steps: None,
                    target: target.clone(),
                };
                saturated_local_search(runs, &config)?
            };
            let achieved = result.value.as_maxdet().expect("maxdet value").clone();
            let doc = json!({
                "runs": runs,
                "method": if use_exhaustive { "exhaustive" } else { "local-search" },
                "max_abs_det": report::big_number(&achieved),
                "design": report::design_rows(&result.design),
                "class": report::class_str(result.classification.class),
                "relations": report::relations_json(&result.classification),
                "num_evaluated": result.num_evaluated,
                "num_maximizers": result.num_maximizers,
                "exhaustive": result.exhaustive,
                "seed": result.seed,
                "target": target.as_ref().map(report::big_number),
                "target_reached": target.as_ref().map(|t| &achieved >= t),
            });
            Ok((pretty(&doc), vec![]))
        }
        Command::Conjecture {
            runs,
            seed,
            restarts,
        } => {
            let r_list: Vec<u64> = (runs.start..=runs.end).collect();
            let config = AuditConfig {
                seed,
                restarts,
                max_steps: None,
            };
            let rows = conjecture_audit(&r_list, &config)?;
            let all_agree = rows.iter().all(|r| r.agrees);
            let notes = vec![
                report::audit_text(&rows),
                format!(
                    "{} rows, prediction {} on all of them",
                    rows.len(),
                    if all_agree { "agrees" } else { "DISAGREES" }
                ),
            ];
            let doc = match format {
                Format::Json => pretty(&report::audit_json(seed, &rows)),
                Format::Text => report::audit_text(&rows),
            };
            Ok((doc, notes))
        }
    }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and --version are ordinary exits.
            if e.use_stderr() {
                eprintln!("{e}");
                println!("{}", json!({ "error": e.to_string() }));
                return ExitCode::from(1);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command, cli.output.format) {
        Ok((doc, notes)) => {
            for note in notes {
                eprintln!("{note}");
            }
            match cli.output.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, doc + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => println!("{doc}"),
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            println!("{}", json!({ "error": msg }));
            ExitCode::from(1)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            println!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}
