use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sp-einstein"));
    c.env_remove("SP_EINSTEIN_TOL");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    (
        code,
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")),
    )
}

#[test]
fn solve_symmetric_one_two() {
    let (code, doc) = json(&["solve-symmetric", "--k", "1", "--l", "2"]);
    assert_eq!(code, 0);
    let sols = doc["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 2);
    for s in sols {
        assert_eq!(s["naturally_reductive"], false);
        assert_eq!(s["y"].as_array().unwrap().len(), 6);
        assert_eq!(s["source"], "symmetric-pipeline");
    }
    for key in ["command", "params", "solutions", "stats"] {
        assert!(doc.get(key).is_some());
    }
}

#[test]
fn solve_symmetric_without_guarantee_and_bad_input() {
    let (code, doc) = json(&["solve-symmetric", "--k", "1", "--l", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["stats"]["guarantee_applies"], false);
    assert_eq!(run(&["solve-symmetric", "--k", "0", "--l", "2"]).0, 2);
    assert_eq!(run(&["solve-symmetric", "--k", "x", "--l", "2"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn solve_general_examples() {
    let (code, doc) = json(&["solve-general", "--k1", "1", "--k2", "1", "--k3", "2"]);
    assert_eq!(code, 0);
    assert!(doc["stats"]["non_naturally_reductive"].as_u64().unwrap() >= 3);
    assert_eq!(doc["stats"]["starts"], 200);

    let (code, doc) = json(&[
        "solve-general",
        "--k1",
        "1",
        "--k2",
        "2",
        "--k3",
        "3",
        "--starts",
        "60",
    ]);
    assert_eq!(code, 0);
    for s in doc["solutions"].as_array().unwrap() {
        assert!(s["residual"].as_f64().unwrap() < 1e-9);
    }

    let (code, _) = json(&[
        "solve-general",
        "--k1",
        "1",
        "--k2",
        "1",
        "--k3",
        "2",
        "--starts",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        run(&["solve-general", "--k1", "0", "--k2", "1", "--k3", "2"]).0,
        2
    );
}

#[test]
fn tolerance_from_environment() {
    let out = bin()
        .args([
            "solve-general",
            "--k1",
            "1",
            "--k2",
            "1",
            "--k3",
            "2",
            "--starts",
            "5",
        ])
        .env("SP_EINSTEIN_TOL", "1e-6")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["params"]["tol"].as_f64().unwrap(), 1e-6);
    // An explicit flag wins over the environment.
    let out = bin()
        .args([
            "solve-general",
            "--k1",
            "1",
            "--k2",
            "1",
            "--k3",
            "2",
            "--starts",
            "5",
            "--tol",
            "1e-10",
        ])
        .env("SP_EINSTEIN_TOL", "1e-6")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["params"]["tol"].as_f64().unwrap(), 1e-10);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "solve-general",
        "--k1",
        "1",
        "--k2",
        "1",
        "--k3",
        "2",
        "--starts",
        "80",
    ];
    assert_eq!(run(&args).1, run(&args).1);
    let args = ["solve-symmetric", "--k", "2", "--l", "3"];
    let (_, a, _) = run(&args);
    assert_eq!(a, run(&args).1);
    // 17 significant digits.
    assert!(a.contains("e-1") && a.split("e-1").next().unwrap().ends_with(char::is_numeric));
}

#[test]
fn classify_round_trip_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sols.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = run(&[
        "solve-general",
        "--k1",
        "1",
        "--k2",
        "1",
        "--k3",
        "2",
        "--out",
        p,
    ]);
    assert_eq!(code, 0);
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (code, doc) = json(&["classify", "--input", p]);
    assert_eq!(code, 0);
    assert_eq!(doc["all_match_stored"], true);
    let got = doc["classifications"].as_array().unwrap();
    let want = stored["solutions"].as_array().unwrap();
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert_eq!(g["naturally_reductive"], w["naturally_reductive"]);
        assert_eq!(g["nr_case"], w["nr_case"]);
    }
    let (code, doc) = json(&["ricci", "--input", p]);
    assert_eq!(code, 0);
    for m in doc["metrics"].as_array().unwrap() {
        assert!(m["residual"].as_f64().unwrap() < 1e-9);
        assert!(m["max_path_difference"].as_f64().unwrap() < 1e-9);
    }
}

#[test]
fn classify_single_metric_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(
        &path,
        r#"{"y": [1, 1, 1, 1, 1, 1], "naturally_reductive": false}"#,
    )
    .unwrap();
    let (code, doc) = json(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["classifications"][0]["nr_case"], 4);
    std::fs::write(&path, r#"{"y": [1, 1, -1, 1, 1, 1]}"#).unwrap();
    assert_eq!(run(&["classify", "--input", path.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["classify", "--input", "/nonexistent/file.json"]).0, 2);
}

#[test]
fn ricci_on_printed_metric() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(
        &path,
        r#"{"shape": [1, 1, 2], "y": [0.114935, 0.114935, 0.180564, 0.508812, 0.326608, 0.326608]}"#,
    )
    .unwrap();
    let (code, doc) = json(&["ricci", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(doc["metrics"][0]["residual"].as_f64().unwrap() < 1e-4);
    let (code, out, _) = run(&[
        "ricci",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("y1,y2,y3,y4,y5,y6,r1"));
}

#[test]
fn count_command() {
    assert_eq!(json(&["count", "--n", "4"]).1["count"], 2);
    assert_eq!(json(&["count", "--n", "10"]).1["count"], 6);
    assert_eq!(run(&["count", "--n", "3"]).0, 2);
    let (code, doc) = json(&["count", "--n", "7", "--concrete"]);
    assert_eq!(code, 0);
    assert_eq!(doc["concrete"]["found"], 4);
}

#[test]
fn modules_command() {
    let (code, doc) = json(&["modules", "--n1", "1", "--n2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["module_count"], 10);
    assert_eq!(doc["total_dim"], 36);
    assert_eq!(doc["absent_patterns"][0], "m(-1,1,-1)");

    let (_, doc) = json(&["modules", "--n1", "2", "--n2", "2"]);
    for m in doc["modules"].as_array().unwrap() {
        if m["kind"] == "subalgebra-factor" {
            assert_eq!(m["dim"], 10);
        }
    }
    let (_, doc) = json(&["modules", "--n1", "1", "--n2", "3"]);
    let mods = doc["modules"].as_array().unwrap();
    let off = mods.iter().filter(|m| m["kind"] == "off-diagonal").count();
    assert_eq!((mods.len() - off, off), (6, 15));
    assert_eq!(run(&["modules", "--n1", "1", "--n2", "1"]).0, 2);
    let (_, csv, _) = run(&["modules", "--n1", "1", "--n2", "2", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 11);
}

#[test]
fn verify_cases_pass() {
    for case in [
        "lemma43",
        "existence-grid",
        "ricci-crosscheck",
        "transcription",
    ] {
        let (code, doc) = json(&["verify", "--case", case]);
        assert_eq!(code, 0, "{case}: {doc}");
        assert_eq!(doc["passed"], true);
    }
    let (_, doc) = json(&["verify", "--case", "existence-grid"]);
    assert_eq!(doc["items"].as_array().unwrap().len(), 15);
    let (_, doc) = json(&["verify", "--case", "transcription"]);
    let rows = doc["items"][0]["detail"]["rows"].as_array().unwrap();
    assert_eq!(rows[1], serde_json::json!([1, 2, "5832", "-432"]));
}

#[test]
fn verify_lemma43_with_too_few_starts_fails() {
    let (code, doc) = json(&["verify", "--case", "lemma43", "--starts", "1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["passed"], false);
}

#[test]
fn csv_solution_rows() {
    let (code, out, _) = run(&["solve-symmetric", "--k", "1", "--l", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("y1,y2,y3,y4,y5,y6,lambda,residual"));
    assert_eq!(lines.count(), 2);
}
