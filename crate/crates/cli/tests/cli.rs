use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-reductive"))
}

fn config(dir: &Path, text: &str) -> PathBuf {
    let path = dir.join("run.toml");
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn run_writes_csv_for_one_method_group() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "methods = [\"all\"]\n");
    let out_path = dir.path().join("out.csv");
    let out = bin()
        .args(["run", "--config"])
        .arg(&cfg)
        .args(["--class", "1", "--method", "tip", "--format", "csv", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "method,family,direction,case,rpcf,conclusion");
    assert_eq!(lines.len(), 1 + 4 * 8);
    assert!(lines[1..].iter().all(|l| l.starts_with("tip,")));
}

#[test]
fn run_markdown_shows_dmm_headline() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "methods = [\"dmm:three-valued\"]\n");
    let out = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("| DMM | three-valued | 88.06 | 88.06 | 88.06 |"));
}

#[test]
fn run_json_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "format = \"json\"\nmethods = [\"aars\"]\n");
    let out = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    let report = fuzzy_reductive::Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.rows.len(), 2 * 8);
}

#[test]
fn check_passes_on_the_standard_suite() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "classes = [1, 2]\n");
    let out = bin()
        .args(["check", "--config"])
        .arg(&cfg)
        .args(["--tolerance", "0.05"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 implementation bugs"), "{text}");
    assert!(text.contains("paper-erratum"));
}

#[test]
fn tables_writes_every_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("tables");
    let out = bin().arg("tables").arg("--out-dir").arg(&out_dir).output().unwrap();
    assert!(out.status.success());
    let mut names: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 8, "{names:?}");
    assert!(names.contains(&"table11_class2_summary.md".to_string()));
}

#[test]
fn bad_input_fails_with_a_message() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "antecedent = [1.5, 0]\nconsequent = [0, 1]\n");
    let out = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("antecedent"));

    let out = bin()
        .args(["run", "--config"])
        .arg(dir.path().join("missing.toml"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let cfg = config(dir.path(), "");
    let out = bin().args(["run", "--config"]).arg(&cfg).args(["--class", "3"]).output().unwrap();
    assert!(!out.status.success());
}
