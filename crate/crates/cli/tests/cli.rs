use std::fs;
use std::process::Command;

use siegel_cli::run;

fn siegel() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_siegel"));
    c.env_remove("SIEGEL_CONFIG");
    c
}

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("siegel").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn lvalue_prints_pi_over_four() {
    let o = siegel().args(["lvalue", "--d", "-4", "--sigma", "1", "--t", "0"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("0.785398"), "{text}");
}

#[test]
fn coeffs_table() {
    let (code, out, _) = run_args(&["coeffs", "--d1", "-3", "--d2", "-4", "--nmax", "10"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,a_n");
    assert_eq!(lines[1], "1,1");
    assert_eq!(lines[2], "2,0");
    assert_eq!(lines.len(), 11);
}

#[test]
fn empty_character_list() {
    let (code, out, _) = run_args(&["chars", "list", "--limit", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "d,modulus,parity\n");
}

#[test]
fn exit_code_classes() {
    let o = siegel().arg("frobnicate").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("Usage"), "{err}");

    let (code, _, err) = run_args(&["lvalue", "--d", "6", "--sigma", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a fundamental discriminant"), "{err}");

    let (code, _, _) = run_args(&["coeffs", "--d1", "-4", "--d2", "-4"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_args(&["lvalue", "--sigma"]);
    assert_eq!(code, 2);
}

#[test]
fn config_file_is_applied_and_checked() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.cfg");
    fs::write(&good, "format=json\nheight=150\n").unwrap();
    let o = siegel()
        .env("SIEGEL_CONFIG", &good)
        .args(["scan", "siegel", "--dmax", "8"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("{\n  \"scan_kind\": \"siegel\""));

    let bad = dir.path().join("bad.cfg");
    fs::write(&bad, "step=abc\n").unwrap();
    let o = siegel().arg("--config").arg(&bad).args(["chars", "list", "--limit", "5"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 1"));

    let o = siegel()
        .arg("--config")
        .arg(dir.path().join("missing.cfg"))
        .args(["chars", "list", "--limit", "5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let o = siegel()
            .args(["scan", "siegel", "--dmax", "500", "--format", "json", "--output"])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        texts.push(fs::read(&path).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    assert!(!texts[0].is_empty());
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no/such/dir/out.csv");
    let (code, _, err) = run_args(&["chars", "list", "--limit", "10", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("out.csv"));
}

#[test]
fn seeded_samples_are_reproducible() {
    let args = ["perron", "verify", "--d1", "-3", "--d2", "-4", "--samples", "3", "--seed", "7"];
    let a = run_args(&args);
    let b = run_args(&args);
    assert_eq!(a.0, 0, "{}", a.2);
    assert_eq!(a.1, b.1);
    assert_eq!(a.1.lines().count(), 4);
    let c = run_args(&["perron", "verify", "--d1", "-3", "--d2", "-4", "--samples", "3", "--seed", "8"]);
    assert_ne!(a.1, c.1);
}

#[test]
fn perron_grid_passes() {
    let (code, out, err) = run_args(&[
        "perron", "verify", "--d1", "-3", "--d2", "-4", "--x", "2,50", "--w", "0.5", "--format", "json",
    ]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn decomposition_json_schema() {
    let (code, out, err) = run_args(&[
        "perron", "decompose", "--d1", "-3", "--d2", "-4", "--x", "50", "--w", "0.9", "--format", "json",
    ]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        ["x", "w", "d1", "d2", "oracle", "quadrature", "main", "fw", "remainder", "abs_error"]
    );
    assert!(v["abs_error"].as_f64().unwrap() < 1e-5);
    let (code, _, _) = run_args(&["perron", "decompose", "--d1", "-3", "--d2", "-4", "--x", "50", "--w", "0.99"]);
    assert_eq!(code, 1);
}

#[test]
fn scans_run() {
    let (code, out, _) = run_args(&["scan", "zeros", "--d", "-3", "--grid", "20"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 22);
    let (code, out, _) = run_args(&["scan", "sw", "--x", "100", "--qmax", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("q:a,count,expected,error\n3:1,"));
    let (code, out, _) = run_args(&["scan", "growth", "--d1", "-3", "--d2", "-4", "--sigma", "0", "--t", "10"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().ends_with(",0"));
    let (code, _, _) = run_args(&["scan", "growth", "--d1", "-3", "--d2", "-4", "--t", "1"]);
    assert_eq!(code, 1);
}
