use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn alt() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_alt"));
    cmd.env_remove("ALT_WORDBANK").env_remove("ALT_STOPWORDS");
    cmd
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn temp_with(bytes: &[u8]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(bytes).unwrap();
    f
}

#[test]
fn analyze_text_report() {
    let (code, out, _) = run(alt().arg("analyze").arg(fixture("tractatus.txt")));
    assert_eq!(code, 0);
    assert!(out.starts_with("Resultado: 6 (alta)"), "{out}");
}

#[test]
fn empty_document_exits_2() {
    let f = temp_with(b"  \n\t 1.11 \n");
    let (code, out, err) = run(alt().arg("analyze").arg(f.path()));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("no letters"), "{err}");
}

#[test]
fn io_and_format_errors_exit_1() {
    let (code, _, err) = run(alt().args(["analyze", "/nonexistent/doc.txt"]));
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent/doc.txt"));
    let f = temp_with(b"Ol\xE1.");
    let (code, _, err) = run(alt().arg("analyze").arg(f.path()));
    assert_eq!(code, 1);
    assert!(err.contains("UTF-8"), "{err}");
}

#[test]
fn json_keywords() {
    let f = temp_with("\u{feff}O Brasil deve o nome ao pau-brasil, madeira vermelha.".as_bytes());
    let (code, out, _) = run(alt().arg("analyze").arg(f.path()).args([
        "--format",
        "json",
        "--keywords",
        "brasil,madeira",
    ]));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let kw = v["keywords"].as_array().unwrap();
    assert_eq!(kw.len(), 2);
    assert_eq!(kw[0]["token"], "brasil");
    assert_eq!(kw[0]["absolute"], 1);
    assert_eq!(kw[1]["token"], "madeira");
    assert_eq!(kw[1]["absolute"], 1);
    assert_eq!(v["stats"]["letters"].as_u64().unwrap(), 43);
}

#[test]
fn stdin_and_original_profile() {
    let mut child = alt()
        .args(["analyze", "-", "--format", "json", "--profile", "original"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all("Oi. Tudo bem?".as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stats"]["sentences"], 2);
    assert_eq!(v["indices"]["profile"], "adapted-pt");
    assert_eq!(v["originalIndices"]["profile"], "original");
}

#[test]
fn wordbank_from_env() {
    let bank = temp_with(b"sol\nlua\n");
    let doc = temp_with("O sol e a lua.".as_bytes());
    let (code, out, _) = run(alt()
        .env("ALT_WORDBANK", bank.path())
        .arg("analyze")
        .arg(doc.path())
        .args(["--format", "json"]));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["stats"]["complexWords"], 3);

    let (code, _, _) = run(alt()
        .env("ALT_WORDBANK", "/nonexistent/bank.txt")
        .arg("analyze")
        .arg(doc.path()));
    assert_eq!(code, 1);
}

#[test]
fn stopwords_flag() {
    let stops = temp_with(b"# custom\nsol\n");
    let doc = temp_with("sol sol lua de".as_bytes());
    let (code, out, _) = run(alt()
        .arg("cloud")
        .arg(doc.path())
        .arg("--stopwords")
        .arg(stops.path())
        .args(["--format", "json"]));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let tokens: Vec<_> = v["cloud"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["token"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(tokens, ["de", "lua"]);
}

#[test]
fn cloud_text() {
    let doc = temp_with("sol sol lua".as_bytes());
    let (code, out, _) = run(alt().arg("cloud").arg(doc.path()).args(["--topn", "1"]));
    assert_eq!(code, 0);
    assert_eq!(out, "sol\t2\t0.6667\n");
}

#[test]
fn calibrate_exact_plane() {
    let mut csv = String::from("x,y,gl\n");
    for i in 0..12 {
        let (x, y) = (i as f64 * 0.5, (i * i % 7) as f64);
        csv.push_str(&format!("{x},{y},{}\n", 1.5 - 2.0 * x + 0.25 * y));
    }
    let f = temp_with(csv.as_bytes());
    let residuals = tempfile::NamedTempFile::new().unwrap();
    let (code, out, _) = run(alt()
        .arg("calibrate")
        .arg(f.path())
        .args(["--format", "json", "--residuals"])
        .arg(residuals.path()));
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["r2"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["coefficients"][1]["value"].as_f64().unwrap() + 2.0).abs() < 1e-9);
    assert_eq!(v["dof"], 9);
    let lines = std::fs::read_to_string(residuals.path()).unwrap();
    assert_eq!(lines.lines().count(), 12);

    let (code, out, _) = run(alt().arg("calibrate").arg(f.path()));
    assert_eq!(code, 0);
    assert!(out.contains("Std. error") && out.contains("p-value") && out.contains("R²"));
}

#[test]
fn calibrate_rank_deficient() {
    let f = temp_with(b"x,y,gl\n1,2,3\n2,4,5\n3,6,7\n4,8,9\n5,10,2\n");
    let (code, _, err) = run(alt().arg("calibrate").arg(f.path()));
    assert_eq!(code, 1);
    assert!(err.contains("rank deficient"), "{err}");
}

#[test]
fn compare_text_table() {
    let (code, out, _) = run(alt().arg("compare").arg(fixture("translation-pairs.csv")));
    assert_eq!(code, 0);
    let fk = out.lines().find(|l| l.starts_with("FK")).unwrap();
    assert!(fk.contains("98.0%"), "{fk}");
}
