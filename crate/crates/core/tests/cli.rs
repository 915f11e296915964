use std::path::Path;
use std::process::{Command, Output};

fn okounkov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_okounkov")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn report(dir: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap()
}

const SIMPLEX_ALL: &str = r#"{"vertices": [[0,0],[1,0],[0,1]], "chosen": [0,1,2]}"#;

#[test]
fn toric_run_writes_report_and_pictures() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "in.json", SIMPLEX_ALL);
    let out = tmp.path().join("out");
    let o = okounkov(&["toric", "--input", &input, "--out", out.to_str().unwrap(), "--k-max", "8", "--svg"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&out);
    assert_eq!(r["mode"], "toric");
    assert_eq!(r["xi"], "1/2");
    assert_eq!(r["certified"], true);
    assert_eq!(r["bodies"].as_array().unwrap().len(), 3);
    for f in ["body_1.svg", "body_3.svg", "subdivision.svg", "timings.json", "oracle.json"] {
        assert!(out.join(f).exists(), "{f} missing");
    }
    assert!(std::fs::read_to_string(out.join("body_1.svg")).unwrap().starts_with("<svg"));
}

#[test]
fn report_is_byte_identical_across_runs() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "in.json", SIMPLEX_ALL);
    let mut texts = Vec::new();
    for name in ["a", "b"] {
        let out = tmp.path().join(name);
        let o = okounkov(&["check", "--input", &input, "--out", out.to_str().unwrap(), "--k-max", "6"]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        texts.push(std::fs::read(out.join("report.json")).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn surface_two_points() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "s.json", r#"{"N": 2, "curves": "delpezzo", "L": [1, 0, 0]}"#);
    let out = tmp.path().join("out");
    let o = okounkov(&["surface", "--input", &input, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&out);
    assert_eq!(r["xi"], "1/2");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn seshadri_to_stdout() {
    let tmp = tempfile::tempdir().unwrap();
    let input = write(tmp.path(), "in.json", SIMPLEX_ALL);
    let o = okounkov(&["seshadri", "--from", &input]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["xi"], "1/2");
    assert!(r["witness"].is_object());
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let bad_json = write(tmp.path(), "bad.json", "{");
    assert_eq!(okounkov(&["toric", "--input", &bad_json]).status.code(), Some(2));
    let unknown = write(tmp.path(), "unknown.json", r#"{"shape": 1}"#);
    assert_eq!(okounkov(&["toric", "--input", &unknown]).status.code(), Some(2));
    let singular = write(tmp.path(), "sing.json", r#"{"vertices": [[0,0],[2,0],[0,1]], "chosen": [0]}"#);
    let o = okounkov(&["toric", "--input", &singular]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    let missing = tmp.path().join("nope.json");
    assert_ne!(okounkov(&["toric", "--input", missing.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(okounkov(&["toric"]).status.code(), Some(2));
}
