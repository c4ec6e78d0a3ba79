//! Document serialisation. JSON floats are written with 17 significant
//! digits so documents are byte-stable and round-trip exactly; CSV flattens
//! solution lists.

use std::io::Write;

use serde_json::{json, Value};

use crate::solver::{EinsteinSolution, NewtonStats, SolutionSet, Source};

/// Formats a float with 17 significant digits in scientific notation.
pub fn format_f17(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON number for a finite float, `null` otherwise.
pub fn f17(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Renders a JSON value with every float written at 17 significant digits.
pub fn to_json_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => out.push_str(&i.to_string()),
            (_, Some(u), _) => out.push_str(&u.to_string()),
            (_, _, Some(f)) => out.push_str(&format_f17(f)),
            _ => out.push_str(&n.to_string()),
        },
        Value::Array(items) => {
            if items.iter().all(|x| !x.is_array() && !x.is_object()) {
                out.push('[');
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_value(x, indent, out);
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (i, x) in items.iter().enumerate() {
                    out.push_str(&pad(indent + 1));
                    write_value(x, indent + 1, out);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&pad(indent));
                out.push(']');
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn floats(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| f17(x)).collect())
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::SymmetricPipeline => "symmetric-pipeline",
        Source::Newton => "newton",
    }
}

/// One entry of the `solutions` array.
pub fn solution_json(s: &EinsteinSolution) -> Value {
    json!({
        "y": floats(&s.y),
        "lambda": f17(s.einstein_constant),
        "residual": f17(s.residual),
        "general_residual": s.general_residual.map(f17).unwrap_or(Value::Null),
        "naturally_reductive": s.classification.naturally_reductive,
        "nr_case": s.classification.case,
        "nr_cases": s.classification.cases,
        "source": source_name(s.source),
        "canonical": floats(&s.canonical),
    })
}

pub fn solutions_json(set: &SolutionSet) -> Value {
    Value::Array(set.solutions.iter().map(solution_json).collect())
}

pub fn stats_json(stats: &NewtonStats) -> Value {
    serde_json::to_value(stats).expect("plain struct")
}

/// Top-level document `{command, params, solutions, stats}`.
pub fn solution_document(command: &str, params: Value, set: &SolutionSet, stats: Value) -> Value {
    json!({
        "command": command,
        "params": params,
        "solutions": solutions_json(set),
        "stats": stats,
    })
}

pub const CSV_HEADER: [&str; 20] = [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6",
    "lambda",
    "residual",
    "general_residual",
    "naturally_reductive",
    "nr_case",
    "source",
    "canonical1",
    "canonical2",
    "canonical3",
    "canonical4",
    "canonical5",
    "canonical6",
    "k1_k2_k3",
    "nr_cases",
];

/// One CSV row per solution with the JSON fields flattened.
pub fn write_solutions_csv<W: Write>(set: &SolutionSet, out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for s in &set.solutions {
        let mut row: Vec<String> = s.y.iter().map(|&x| format_f17(x)).collect();
        row.push(format_f17(s.einstein_constant));
        row.push(format_f17(s.residual));
        row.push(s.general_residual.map(format_f17).unwrap_or_default());
        row.push(s.classification.naturally_reductive.to_string());
        row.push(
            s.classification
                .case
                .map(|c| c.to_string())
                .unwrap_or_default(),
        );
        row.push(source_name(s.source).to_string());
        row.extend(s.canonical.iter().map(|&x| format_f17(x)));
        row.push(format!("{} {} {}", s.shape.k1, s.shape.k2, s.shape.k3));
        row.push(
            s.classification
                .cases
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        w.write_record(&row)?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits_and_round_trip() {
        let x = 0.1 + 0.2;
        let text = to_json_string(&json!({ "x": f17(x) }));
        assert!(text.contains("3.0000000000000004e-1"), "{text}");
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["x"].as_f64().unwrap(), x);
    }

    #[test]
    fn integers_stay_integers() {
        let text = to_json_string(&json!({ "n": 4, "v": [1, 2] }));
        assert_eq!(text, "{\n  \"n\": 4,\n  \"v\": [1, 2]\n}\n");
    }
}
