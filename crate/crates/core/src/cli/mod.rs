//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{enumerate_sign_modules, format_pattern, ModuleKind, TripleShape};
use crate::output::{f17, solution_document, stats_json, to_json_string, write_solutions_csv};
use crate::ricci::{ricci_closed_form, ricci_general, MetricParams};
use crate::solver::{
    classify, concrete_count_check, count_lower_bound, solve_general, solve_symmetric,
    symmetric_candidates, triple_table, DEFAULT_CLASSIFY_TOL, DEFAULT_TOL,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sp-einstein",
    version,
    about = "Einstein metrics on compact symplectic groups Sp(n)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Relative tolerance of the naturally-reductive classifier.
    #[arg(long, default_value_t = DEFAULT_CLASSIFY_TOL, global = true)]
    pub classify_tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyCase {
    Lemma43,
    ExistenceGrid,
    RicciCrosscheck,
    Transcription,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact pipeline for y1 = y2, y5 = y6 = 1 on shape (k, k, l).
    SolveSymmetric {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
    },
    /// Multistart Newton on the six-parameter system for shape (k1, k2, k3).
    SolveGeneral {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        k3: usize,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        /// Einstein residual tolerance.
        #[arg(long, env = "SP_EINSTEIN_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Run a reproduction check.
    Verify {
        #[arg(long, value_enum)]
        case: VerifyCase,
        /// Newton starts for the lemma43 case.
        #[arg(long, default_value_t = 200)]
        starts: usize,
    },
    /// Guaranteed count 2*floor((n-1)/3) of non-naturally reductive metrics.
    Count {
        #[arg(long)]
        n: u64,
        /// Also produce the metrics with the symmetric pipeline.
        #[arg(long)]
        concrete: bool,
    },
    /// Modules of sp(2 n1 n2) under the block-sign involutions.
    Modules {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
    /// Ricci components of metrics read from a JSON file.
    Ricci {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify metrics read from a JSON file.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
}

/// What a command produced: a JSON document, an optional CSV rendering, and
/// the exit code.
struct Outcome {
    json: Value,
    csv: Option<Vec<u8>>,
    code: i32,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRank(_)
            | Error::InvalidArgument(_)
            | Error::NonPositiveScale { .. }
            | Error::LengthMismatch { .. }
            | Error::Precondition(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => match emit(&cli, &outcome) {
            Ok(()) => outcome.code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_FAILED
            }
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILED
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> std::io::Result<()> {
    let bytes = match (cli.format, &outcome.csv) {
        (Format::Csv, Some(csv)) => csv.clone(),
        _ => to_json_string(&outcome.json).into_bytes(),
    };
    match &cli.out {
        Some(path) => fs::write(path, bytes),
        None => std::io::stdout().write_all(&bytes),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::SolveSymmetric { k, l } => cmd_solve_symmetric(*k, *l, cli.classify_tol),
        Command::SolveGeneral {
            k1,
            k2,
            k3,
            starts,
            tol,
        } => cmd_solve_general(
            TripleShape::new(*k1, *k2, *k3)?,
            *starts,
            *tol,
            cli.classify_tol,
        ),
        Command::Verify { case, starts } => cmd_verify(*case, *starts),
        Command::Count { n, concrete } => cmd_count(*n, *concrete),
        Command::Modules { n1, n2 } => cmd_modules(*n1, *n2),
        Command::Ricci { input } => cmd_ricci(input),
        Command::Classify { input } => cmd_classify(input, cli.classify_tol),
    }
}

fn csv_of(set: &crate::solver::SolutionSet) -> Vec<u8> {
    let mut buf = Vec::new();
    write_solutions_csv(set, &mut buf).expect("in-memory write");
    buf
}

fn rows_csv(header: &[&str], rows: &[Vec<String>]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    w.into_inner().expect("in-memory write")
}

/// Reclassifies every solution with the requested tolerance.
fn reclassify(set: &mut crate::solver::SolutionSet, tol: f64) {
    for s in &mut set.solutions {
        s.classification = classify(&s.y, tol);
    }
}

fn cmd_solve_symmetric(k: u64, l: u64, classify_tol: f64) -> Result<Outcome, CliError> {
    if k == 0 || l == 0 {
        return Err(CliError::Usage(format!(
            "k and l must be positive, got k = {k}, l = {l}"
        )));
    }
    let mut set = solve_symmetric(k, l)?;
    reclassify(&mut set, classify_tol);
    let candidates = symmetric_candidates(k, l)?;
    let nnr = set.count_non_naturally_reductive();
    let guaranteed = k < l;
    let stats = json!({
        "positive_roots_of_h": candidates.len(),
        "rejected": candidates
            .iter()
            .filter_map(|c| c.rejected.as_ref().map(|r| json!({ "y4": f17(c.y4), "reason": r })))
            .collect::<Vec<_>>(),
        "non_naturally_reductive": nnr,
        "guarantee_applies": guaranteed,
    });
    let params = json!({ "k": k, "l": l, "shape": [k, k, l] });
    Ok(Outcome {
        json: solution_document("solve-symmetric", params, &set, stats),
        csv: Some(csv_of(&set)),
        code: if guaranteed && nnr < 2 {
            EXIT_FAILED
        } else {
            EXIT_OK
        },
    })
}

fn cmd_solve_general(
    shape: TripleShape,
    starts: usize,
    tol: f64,
    classify_tol: f64,
) -> Result<Outcome, CliError> {
    if starts == 0 {
        return Err(CliError::Usage("--starts must be at least 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    let (mut set, stats) = solve_general(shape, starts, tol)?;
    reclassify(&mut set, classify_tol);
    let mut stats = stats_json(&stats);
    stats["non_naturally_reductive"] = json!(set.count_non_naturally_reductive());
    let params = json!({
        "shape": [shape.k1, shape.k2, shape.k3],
        "starts": starts,
        "tol": f17(tol),
    });
    Ok(Outcome {
        json: solution_document("solve-general", params, &set, stats),
        csv: Some(csv_of(&set)),
        code: EXIT_OK,
    })
}

fn cmd_verify(case: VerifyCase, starts: usize) -> Result<Outcome, CliError> {
    let report = match case {
        VerifyCase::Lemma43 => verify::lemma43(starts)?,
        VerifyCase::ExistenceGrid => verify::existence_grid(6)?,
        VerifyCase::RicciCrosscheck => verify::ricci_crosscheck()?,
        VerifyCase::Transcription => verify::transcription()?,
    };
    let rows: Vec<Vec<String>> = report
        .items
        .iter()
        .map(|i| vec![i.name.clone(), i.passed.to_string()])
        .collect();
    let mut json = report.to_json();
    json["command"] = json!("verify");
    Ok(Outcome {
        json,
        csv: Some(rows_csv(&["check", "passed"], &rows)),
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_FAILED
        },
    })
}

fn cmd_count(n: u64, concrete: bool) -> Result<Outcome, CliError> {
    let count = count_lower_bound(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut json = json!({ "command": "count", "params": { "n": n }, "count": count });
    let mut code = EXIT_OK;
    if concrete {
        let check = concrete_count_check(n)?;
        json["concrete"] = json!({
            "per_k": check
                .per_k
                .iter()
                .map(|&(k, l, found)| json!({ "k": k, "l": l, "non_naturally_reductive": found }))
                .collect::<Vec<_>>(),
            "found": check.found,
            "passed": check.passed,
        });
        if !check.passed {
            code = EXIT_FAILED;
        }
    }
    Ok(Outcome {
        csv: Some(rows_csv(
            &["n", "count"],
            &[vec![n.to_string(), count.to_string()]],
        )),
        json,
        code,
    })
}

fn cmd_modules(n1: usize, n2: usize) -> Result<Outcome, CliError> {
    if n1 == 0 || n2 < 2 {
        return Err(CliError::Usage(format!(
            "need n1 >= 1 and n2 >= 2, got n1 = {n1}, n2 = {n2}"
        )));
    }
    let dec = enumerate_sign_modules(n1, n2)?;
    let mut rows = Vec::new();
    let modules: Vec<Value> = dec
        .modules()
        .iter()
        .map(|m| {
            let pattern = m.sign_pattern.clone().unwrap_or_default();
            let kind = match m.kind {
                ModuleKind::SubalgebraFactor => "subalgebra-factor",
                ModuleKind::OffDiagonal => "off-diagonal",
            };
            let blocks: Vec<[usize; 2]> =
                m.block_pairs.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            rows.push(vec![
                m.label.clone(),
                kind.to_string(),
                pattern
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                m.dim().to_string(),
            ]);
            json!({
                "label": m.label,
                "kind": kind,
                "sign_pattern": pattern,
                "dim": m.dim(),
                "blocks": blocks,
            })
        })
        .collect();
    let absent: Vec<String> = dec
        .absent_patterns()
        .iter()
        .map(|p| format_pattern(p))
        .collect();
    let total: usize = dec.dims().iter().sum();
    let json = json!({
        "command": "modules",
        "params": { "n1": n1, "n2": n2, "rank": 2 * n1 * n2 },
        "modules": modules,
        "module_count": modules.len(),
        "absent_patterns": absent,
        "total_dim": total,
    });
    Ok(Outcome {
        json,
        csv: Some(rows_csv(&["label", "kind", "sign_pattern", "dim"], &rows)),
        code: EXIT_OK,
    })
}

/// Each entry pairs the source JSON object with its six scales.
type MetricEntries = Vec<(Value, [f64; 6])>;

/// Metrics in an input document: either `{"y": [...]}` or a solution
/// document with `solutions[*].y`. The shape comes from `shape` or
/// `params.shape`.
fn read_metrics(path: &PathBuf) -> Result<(Option<TripleShape>, MetricEntries), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", path.display())))?;
    let shape = doc
        .get("shape")
        .or_else(|| doc.pointer("/params/shape"))
        .map(|v| {
            let s: Vec<usize> = serde_json::from_value(v.clone())
                .map_err(|e| CliError::Usage(format!("bad shape: {e}")))?;
            match s.as_slice() {
                [a, b, c] => Ok(TripleShape::new(*a, *b, *c)?),
                _ => Err(CliError::Usage("shape must have three entries".into())),
            }
        })
        .transpose()?;
    let entries: Vec<Value> = match (doc.get("y"), doc.get("solutions")) {
        (Some(_), _) => vec![doc.clone()],
        (None, Some(Value::Array(sols))) => sols.clone(),
        _ => {
            return Err(CliError::Usage(
                "input needs a `y` array or a `solutions` list".into(),
            ))
        }
    };
    let mut out = Vec::new();
    for e in entries {
        let y: Vec<f64> = serde_json::from_value(e.get("y").cloned().unwrap_or(Value::Null))
            .map_err(|err| CliError::Usage(format!("bad `y`: {err}")))?;
        let y: [f64; 6] = y.try_into().map_err(|v: Vec<f64>| {
            CliError::Usage(format!("`y` must have 6 entries, got {}", v.len()))
        })?;
        MetricParams::new(y.to_vec())?;
        out.push((e, y));
    }
    Ok((shape, out))
}

fn cmd_ricci(input: &PathBuf) -> Result<Outcome, CliError> {
    let (shape, metrics) = read_metrics(input)?;
    let shape = shape.ok_or_else(|| CliError::Usage("input must give a shape".into()))?;
    let table = triple_table(shape)?;
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for (_, y) in &metrics {
        let m = MetricParams::new(y.to_vec())?;
        let closed = ricci_closed_form(shape, &m)?;
        let general = ricci_general(&table, &m)?;
        let gap = closed
            .components
            .iter()
            .zip(&general.components)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let mut row: Vec<String> = y.iter().map(|v| crate::output::format_f17(*v)).collect();
        row.extend(
            closed
                .components
                .iter()
                .map(|v| crate::output::format_f17(*v)),
        );
        row.push(crate::output::format_f17(closed.residual));
        row.push(crate::output::format_f17(general.residual));
        rows.push(row);
        results.push(json!({
            "y": y.iter().map(|&v| f17(v)).collect::<Vec<_>>(),
            "closed_form": closed.components.iter().map(|&v| f17(v)).collect::<Vec<_>>(),
            "general": general.components.iter().map(|&v| f17(v)).collect::<Vec<_>>(),
            "einstein_constant_estimate": f17(closed.einstein_constant_estimate),
            "residual": f17(closed.residual),
            "general_residual": f17(general.residual),
            "max_path_difference": f17(gap),
        }));
    }
    let json = json!({
        "command": "ricci",
        "params": { "shape": [shape.k1, shape.k2, shape.k3], "input": input.display().to_string() },
        "metrics": results,
    });
    let header = [
        "y1",
        "y2",
        "y3",
        "y4",
        "y5",
        "y6",
        "r1",
        "r2",
        "r3",
        "r4",
        "r5",
        "r6",
        "residual",
        "general_residual",
    ];
    Ok(Outcome {
        json,
        csv: Some(rows_csv(&header, &rows)),
        code: EXIT_OK,
    })
}

fn cmd_classify(input: &PathBuf, tol: f64) -> Result<Outcome, CliError> {
    let (_, metrics) = read_metrics(input)?;
    let mut all_match = true;
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for (entry, y) in &metrics {
        let c = classify(y, tol);
        let stored_nr = entry.get("naturally_reductive").and_then(Value::as_bool);
        let stored_case = entry.get("nr_case").map(|v| v.as_u64().map(|c| c as u8));
        let matches = match (stored_nr, stored_case) {
            (None, None) => None,
            (nr, case) => Some(
                nr.is_none_or(|v| v == c.naturally_reductive) && case.is_none_or(|v| v == c.case),
            ),
        };
        if matches == Some(false) {
            all_match = false;
        }
        rows.push(vec![
            y.iter()
                .map(|v| crate::output::format_f17(*v))
                .collect::<Vec<_>>()
                .join(" "),
            c.naturally_reductive.to_string(),
            c.case.map(|v| v.to_string()).unwrap_or_default(),
        ]);
        results.push(json!({
            "y": y.iter().map(|&v| f17(v)).collect::<Vec<_>>(),
            "naturally_reductive": c.naturally_reductive,
            "nr_case": c.case,
            "nr_cases": c.cases,
            "matches_stored": matches,
        }));
    }
    let json = json!({
        "command": "classify",
        "params": { "input": input.display().to_string(), "classify_tol": f17(tol) },
        "classifications": results,
        "all_match_stored": all_match,
    });
    Ok(Outcome {
        json,
        csv: Some(rows_csv(&["y", "naturally_reductive", "nr_case"], &rows)),
        code: if all_match { EXIT_OK } else { EXIT_FAILED },
    })
}
