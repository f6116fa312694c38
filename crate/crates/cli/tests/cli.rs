use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["semirep"];
    full.extend_from_slice(args);
    let code = semirep_cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semirep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn analyze_trivial() {
    let v = json(&["analyze", &corpus("trivial")]);
    assert_eq!(v["j_classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["j_classes"][0]["regular"], true);
    assert_eq!(v["idempotents"], serde_json::json!([0]));
    assert_eq!(v["regular_classes"][0]["sandwich"], serde_json::json!([[0]]));
}

#[test]
fn analyze_left_zero_sandwich() {
    let v = json(&["analyze", &corpus("left-zero-2")]);
    let class = &v["regular_classes"][0];
    assert_eq!((class["m"].as_u64(), class["n"].as_u64()), (Some(2), Some(1)));
    assert_eq!(class["sandwich"].as_array().unwrap().len(), 2);
}

#[test]
fn analyze_marks_non_regular_classes() {
    let v = json(&["analyze", &corpus("nilpotent-monoid-3")]);
    let regular: Vec<bool> = v["j_classes"].as_array().unwrap().iter().map(|c| c["regular"].as_bool().unwrap()).collect();
    assert_eq!(regular.iter().filter(|r| !**r).count(), 1);
    assert_eq!(v["regular_classes"].as_array().unwrap().len(), 2);
}

#[test]
fn irreps_t2_over_q() {
    let (code, out, err) = run(&["irreps", &corpus("full-transformations-2"), "--field", "Q"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["simples"], 3);
    assert!(err.starts_with("3 simple modules"));
    // rationals are written as num/den strings
    assert_eq!(v["simples"][0]["actions"][0][0][0].as_str().map(|s| s.contains('/')), Some(true));
}

#[test]
fn irreps_over_fp_use_integers() {
    let v = json(&["irreps", &corpus("symmetric-3"), "--field", "Fp:7"]);
    assert_eq!(v["summary"]["simples"], 3);
    assert!(v["simples"][0]["actions"][0][0][0].is_u64());
    assert_eq!(v["field"], "Fp:7");
}

#[test]
fn chop_t3_over_f7() {
    let v = json(&["chop", &corpus("full-transformations-3"), "--field", "Fp:7"]);
    assert_eq!(v["distinct_factors"], 6);
    assert_eq!(v["module_dim"], 27);
    let total: u64 = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["dim"].as_u64().unwrap() * f["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 27);
}

#[test]
fn chop_reports_null_factors_without_apex() {
    let v = json(&["chop", &corpus("nilpotent-monoid-3"), "--field", "Fp:2"]);
    assert_eq!(v["distinct_factors"], 2);
    assert!(v["factors"].as_array().unwrap().iter().all(|f| f["apex"].is_u64()));
    // every product is the zero, so the regular module has a null quotient
    let p = temp_file("null.json", r#"{"type":"cayley","table":[[1,1],[1,1]]}"#);
    let v = json(&["chop", &p.to_string_lossy(), "--field", "Q"]);
    assert_eq!(v["distinct_factors"], 1);
    let apexes: Vec<&Value> = v["factors"].as_array().unwrap().iter().map(|f| &f["apex"]).collect();
    assert_eq!(apexes.iter().filter(|a| a.is_null()).count(), 1);
}

#[test]
fn schutz_tables() {
    let v = json(&["schutz", &corpus("full-transformations-2"), "--jclass", "1", "--side", "right"]);
    let n = v["size"].as_u64().unwrap() as usize;
    let mats = v["matrices"].as_array().unwrap();
    assert_eq!(mats.len(), 4);
    for m in mats {
        assert_eq!(m.as_array().unwrap().len(), n);
    }
    let left = json(&["schutz", &corpus("left-zero-2"), "--jclass", "0", "--side", "left"]);
    assert_eq!(left["size"], 2);
    assert_eq!(left["side"], "left");
}

#[test]
fn verify_prints_one_line_per_check() {
    let (code, out, err) = run(&["verify", &corpus("free-band-2"), "--field", "Fp:3", "--seed", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(err.lines().count(), checks.len());
    assert!(err.lines().all(|l| l.starts_with("PASS ")));
    assert_eq!(v["seed"], 5);
}

#[test]
fn output_is_reproducible() {
    let a = run(&["irreps", &corpus("full-transformations-3"), "--field", "Fp:3", "--seed", "9"]);
    let b = run(&["irreps", &corpus("full-transformations-3"), "--field", "Fp:3", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn input_errors_exit_with_2() {
    let t2 = corpus("full-transformations-2");
    assert_eq!(run(&["irreps", &t2, "--field", "Fp:4"]).0, 2);
    assert_eq!(run(&["irreps", &t2, "--field", "R"]).0, 2);
    assert_eq!(run(&["irreps", &t2]).0, 2);
    assert_eq!(run(&["analyze", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["schutz", &t2, "--jclass", "9"]).0, 2);
    let nil = corpus("nilpotent-monoid-3");
    let v = json(&["analyze", &nil]);
    let bad = v["j_classes"].as_array().unwrap().iter().find(|c| c["regular"] == false).unwrap()["id"].to_string();
    assert_eq!(run(&["schutz", &nil, "--jclass", &bad]).0, 2);
}

#[test]
fn malformed_files_get_diagnostics() {
    let p = temp_file("broken.json", "{\"type\": \"cayley\",\n \"table\": [[0, 1], [1, 0]\n");
    let (code, _, err) = run(&["analyze", &p.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
    let p = temp_file("range.json", r#"{"type":"cayley","table":[[0,0],[0,7]]}"#);
    let (code, _, err) = run(&["analyze", &p.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(err.contains("table[1][1]"), "{err}");
    let p = temp_file("assoc.json", r#"{"type":"cayley","table":[[0,1],[0,0]]}"#);
    let (code, _, err) = run(&["analyze", &p.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(err.contains("associative"), "{err}");
    let p = temp_file("degree.json", r#"{"type":"transformations","degree":3,"generators":[[0,1]]}"#);
    let (code, _, err) = run(&["analyze", &p.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(err.contains("generators[0]"), "{err}");
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("irreps"));
}
