use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn shirshov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shirshov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = shirshov(&full);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "invalid JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), doc)
}

#[test]
fn divide_found_and_not_found() {
    let (code, doc) = json(&["divide", "cba", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["format"], "shirshov/divide/v1");
    assert_eq!(doc["factors"], serde_json::json!(["c", "b", "a"]));

    let (code, doc) = json(&["divide", "abc", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["divisible"], false);
}

#[test]
fn strong_divide() {
    let word = format!("{}{}", "ba".repeat(5), "ab".repeat(5));
    let (code, doc) = json(&["divide", &word, "--n", "2", "--strong", "--periods", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["exponent"], 4);
    let (code, _) = json(&["divide", &"ab".repeat(6), "--n", "2", "--strong"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(shirshov(&["divide", "--n", "2"]).status.code(), Some(2));
    assert_eq!(shirshov(&["divide", "abc", "--n", "0"]).status.code(), Some(2));
    assert_eq!(shirshov(&["divide", "a?c", "--n", "2"]).status.code(), Some(2));
    assert_eq!(shirshov(&["bounds", "--l", "3"]).status.code(), Some(2));
    assert_eq!(shirshov(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    fs::write(&path, "cba\n").unwrap();
    let out = shirshov(&["divide", "cba", "--file", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn word_files_and_integer_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("words.txt");
    fs::write(&path, "1 2 3\n\n3 2 1\n").unwrap();
    let file = path.to_str().unwrap();
    let (code, doc) = json(&["divide", "--file", file, "--line", "2", "--int", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["word"], "3 2 1");
    let (code, _) = json(&["divide", "--file", file, "--int", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(
        shirshov(&["divide", "--file", file, "--line", "3", "--int", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn character_map() {
    let (code, doc) = json(&["divide", "zyx", "--chars", "xyz", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["factors"], serde_json::json!(["z", "y", "x"]));
}

#[test]
fn height_report() {
    let word = format!("{}c{}", "ab".repeat(6), "ac".repeat(6));
    let (code, doc) = json(&["height", &word, "--period-len", "2", "--exp", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["height"], 2);
    assert_eq!(doc["exact"], true);
    let (_, doc) = json(&["height", &word, "--period-len", "2", "--exp", "4", "--large"]);
    assert!(doc["height"].as_u64().unwrap() >= 1);
}

#[test]
fn omega_audit_and_dot() {
    let word = format!("{}c{}", "ab".repeat(9), "ac".repeat(9));
    let (code, doc) = json(&["omega", &word, "--period-len", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["audit"]["graph"], "gamma");
    assert_eq!(doc["representatives"].as_array().unwrap().len(), 2);
    let out = shirshov(&["omega", &word, "--period-len", "2", "--n", "3", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph"));

    let word = format!("{}{}", "abc".repeat(9), "acb".repeat(9));
    let (_, doc) = json(&["omega", &word, "--period-len", "3", "--n", "4"]);
    assert_eq!(doc["audit"]["graph"], "triangle");
}

#[test]
fn rauzy_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let word = "ab".repeat(10);
    let (code, doc) = json(&[
        "rauzy",
        &word,
        "--order",
        "2",
        "--max-cycle",
        "3",
        "--threshold",
        "3",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["stats"]["cycles"][0]["traversals"], 9);
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("label=\"ab\""));
}

#[test]
fn extremal_report_and_word_file() {
    let dir = tempfile::tempdir().unwrap();
    let word_path = dir.path().join("extremal.txt");
    let (code, doc) = json(&[
        "extremal",
        "--n",
        "4",
        "--l",
        "10",
        "--word-out",
        word_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["plan"]["edges"].as_array().unwrap().len(), 12);
    assert!(doc["certificate"]["small_height"]["height"].as_u64().unwrap() >= 2);
    assert!(doc["word"].is_null());
    let word = fs::read_to_string(&word_path).unwrap();
    assert_eq!(word.trim().len(), doc["word_length"].as_u64().unwrap() as usize);

    let (code, _) = json(&["divide", "--file", word_path.to_str().unwrap(), "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(
        shirshov(&["extremal", "--n", "4", "--l", "8"]).status.code(),
        Some(2)
    );
}

#[test]
fn encode_commands() {
    let dir = tempfile::tempdir().unwrap();
    let family = dir.path().join("family.json");
    fs::write(
        &family,
        r#"{"t": 2, "l": 2, "cycles": [{"number": 1, "word": "ab"}]}"#,
    )
    .unwrap();
    let f = family.to_str().unwrap();
    let (code, doc) = json(&["encode", "pair", "--family", f, "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["format"], "shirshov/encode-pair/v1");
    assert_eq!(doc["encoded"]["t"], 1);
    assert_eq!(doc["encoded"]["l"], 4);

    let x32 = dir.path().join("x32.json");
    fs::write(
        &x32,
        r#"{"t": 3, "l": 2, "cycles": [{"number": 1, "word": "aab"}, {"number": 2, "word": "abb"}]}"#,
    )
    .unwrap();
    let (code, doc) = json(&["encode", "pad", "--family", x32.to_str().unwrap(), "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["target_n"], 5);
    assert_eq!(doc["encoded"]["t"], 4);
    assert_eq!(doc["encoded"]["l"], 3);

    fs::write(
        &family,
        r#"{"t": 2, "l": 2, "cycles": [{"number": 1, "word": "aa"}]}"#,
    )
    .unwrap();
    assert_eq!(
        shirshov(&["encode", "pair", "--family", f]).status.code(),
        Some(2)
    );
}

#[test]
fn beth_search_small() {
    let (code, doc) = json(&["beth-search", "--t", "1", "--l", "3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["value"], 3);
    assert_eq!(doc["exhaustive"], true);
}

#[test]
fn bounds_table() {
    let (code, doc) = json(&["bounds", "--l", "3", "--n", "4"]);
    assert_eq!(code, 0);
    let rows = doc["rows"][0]["bounds"].as_array().unwrap();
    let beth2 = rows.iter().find(|r| r["name"] == "beth2").unwrap();
    assert_eq!(beth2["value"], "15");
    let (_, doc) = json(&["bounds", "--l", "3", "--n", "4", "--grid"]);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 6);
    let text = String::from_utf8(shirshov(&["bounds", "--l", "3", "--n", "4"]).stdout).unwrap();
    assert!(text.contains("beth2") && text.contains("15"));
}

#[test]
fn verify_exit_codes_and_seed() {
    let (code, doc) = json(&["verify", "--suite", "dilworth", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["suites"][0]["seed"], 7);
    let (code, doc) = json(&["verify", "--suite", "potential"]);
    assert_eq!(code, 1);
    assert!(!doc["suites"][0]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "theorem1", "--format", "json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["suites"][0]["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(strip(shirshov(&args)), strip(shirshov(&args)));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = shirshov(&[
        "divide",
        "cba",
        "--n",
        "2",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["n"], 2);
}
