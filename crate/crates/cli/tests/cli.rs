use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_str().unwrap().to_string()
}

fn surfalt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfalt")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_trefoil_json() {
    let out = surfalt(&["analyze", &data("trefoil.sld"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["signature_black"], -2);
    assert_eq!(v["form_black"]["determinant"], 3);
    assert_eq!(v["form_black"]["verdict"], "negative-definite");
    assert_eq!(v["consistent"], true);
}

#[test]
fn import_virtual_trefoil() {
    let out = surfalt(&["import-gauss", "O1+O2+U1+U2+", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["colorable"], false);
    assert_eq!(v["colorable_gf2"], false);
}

#[test]
fn import_prints_sld_on_request() {
    let out = surfalt(&["import-gauss", "O1+U2+/U1+O2+", "--sld"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let sld = std::fs::read_to_string(data("hopf.sld")).unwrap();
    let body: String = sld.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert!(text.starts_with(&body), "{text}");
}

#[test]
fn suite_passes() {
    let out = surfalt(&["suite", "--max-crossings", "6", "--count", "1000", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with("PASS"));
}

#[test]
fn orient_flag_changes_linking() {
    let hopf = data("hopf.sld");
    let a = json(&surfalt(&["analyze", &hopf, "--json"]));
    // the file orients the components "-+"
    let b = json(&surfalt(&["analyze", &hopf, "--json", "--orient", "+-"]));
    let c = json(&surfalt(&["analyze", &hopf, "--json", "--orient", "--"]));
    assert_eq!(a["total_linking"], 2);
    assert_eq!(b["orientation"], serde_json::json!(["+", "-"]));
    assert_eq!(b["total_linking"], 2);
    assert_eq!(c["total_linking"], -2);
    // the absolute Euler number does not see the orientation
    assert_eq!(a["euler_black"]["absolute"], c["euler_black"]["absolute"]);
}

#[test]
fn certify_prints_verdicts() {
    let out = surfalt(&["certify", &data("torus_link.sld")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("alternating by definiteness  yes"));
    assert!(text.contains("minimal genus certified      yes"));
    let v = json(&surfalt(&["certify", &data("virtual_trefoil.sld"), "--json"]));
    assert!(v["minimal_genus_certified"].is_null());
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sld");
    std::fs::write(&bad, "crossings 1\nedge 0.0 0.1\nedge 0.1 0.2\n").unwrap();
    let out = surfalt(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("used twice"), "{err}");

    assert_eq!(surfalt(&["analyze", "/nonexistent.sld"]).status.code(), Some(1));
    assert_eq!(surfalt(&["import-gauss", "O1+U2+"]).status.code(), Some(1));
    assert_eq!(surfalt(&["analyze", &data("hopf.sld"), "--orient", "+"]).status.code(), Some(1));
    assert_eq!(surfalt(&["analyze", &data("hopf.sld"), "--orient", "+x"]).status.code(), Some(1));
    assert_eq!(surfalt(&["random", "--crossings", "0"]).status.code(), Some(1));
    assert_eq!(surfalt(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(surfalt(&["--help"]).status.code(), Some(0));
}

#[test]
fn random_writes_parseable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("diagrams");
    let out = surfalt(&[
        "random",
        "--crossings",
        "5",
        "--count",
        "4",
        "--seed",
        "9",
        "--alternating",
        "--connected",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 4);
    for f in &files {
        let v = json(&surfalt(&["analyze", f.to_str().unwrap(), "--json"]));
        assert_eq!(v["alternating_scan"], true);
        assert_eq!(v["split"], false);
        assert_eq!(v["alternating_by_definiteness"], true);
    }
    let again = surfalt(&["random", "--crossings", "5", "--count", "4", "--seed", "9", "--alternating", "--connected"]);
    let text = String::from_utf8(again.stdout).unwrap();
    let first = std::fs::read_to_string(&files[0]).unwrap();
    assert!(text.contains(&first));
}

#[test]
fn split_report_lists_pieces() {
    let out = surfalt(&["import-gauss", "O1+U1+/O2+U2+"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("split             yes"));
    assert!(text.contains("piece 1:"));
}

#[test]
fn run_is_callable_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = surfalt_cli::run(["surfalt", "import-gauss", "O1+U1+", "--json"], &mut out, &mut err);
    assert_eq!(code, surfalt_cli::EXIT_OK);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["faces"], 3);
    assert!(err.is_empty());
}
