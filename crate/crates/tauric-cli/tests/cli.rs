//! End-to-end tests of the `tauric` binary: formats, exit codes, and
//! byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tauric"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn workspace_data(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file)
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tauric-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

#[test]
fn fixtures_command_lists_ids() {
    let output = run(&["fixtures"]);
    assert!(output.status.success());
    let text = stdout(&output);
    for id in ["P2", "P1xP1", "dP6", "dP7", "dP8"] {
        assert!(text.lines().any(|l| l == id), "missing {id}");
    }
}

#[test]
fn check_surfaces_exits_zero_with_clean_summary() {
    let output = run(&[
        "check", "-F", "P2", "-F", "P1xP1", "-F", "dP8", "-F", "dP7", "-F", "dP6",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(
        err.contains("checked=5 equality=2 violations=0 rejects=0"),
        "summary was {err}"
    );
}

#[test]
fn check_surfaces_file_matches_fixtures() {
    let from_file = run(&["check", workspace_data("surfaces.txt").to_str().unwrap()]);
    let from_fixtures = run(&[
        "check", "-F", "P2", "-F", "P1xP1", "-F", "dP8", "-F", "dP7", "-F", "dP6",
    ]);
    assert_eq!(stdout(&from_file), stdout(&from_fixtures));
}

#[test]
fn transpose_flag_round_trips() {
    let normal = temp_path("p2-normal.txt");
    let transposed = temp_path("p2-transposed.txt");
    std::fs::write(&normal, "# P2\n3 2\n1 0\n0 1\n-1 -1\n").unwrap();
    std::fs::write(&transposed, "# P2\n2 3\n1 0 -1\n0 1 -1\n").unwrap();
    let a = run(&["invariants", normal.to_str().unwrap()]);
    let b = run(&["invariants", transposed.to_str().unwrap(), "--transpose"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("P2,2,3,1,3,3,3,0,0,true,2,"));
}

#[test]
fn rejects_exit_with_code_two() {
    let path = temp_path("singular.txt");
    std::fs::write(&path, "# square\n4 2\n1 1\n1 -1\n-1 1\n-1 -1\n").unwrap();
    let output = run(&["check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("reject square"), "stderr was {err}");
}

#[test]
fn parse_errors_exit_with_code_two() {
    let path = temp_path("broken.txt");
    std::fs::write(&path, "3 2\n1 0\n1 x\n-1 -1\n").unwrap();
    let output = run(&["check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("non-integer entry"), "stderr was {err}");
}

#[test]
fn no_input_exits_with_code_two() {
    let output = run(&["check"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn tau_command_reports_certificates_only() {
    let output = run(&["tau", "-F", "P2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().next().unwrap(), "name,tau,certificate");
    assert!(text.contains("P2,3,(1);(1);(1)"), "output was {text}");
}

#[test]
fn json_report_carries_verdicts_only_for_check() {
    let check = run(&["check", "-F", "dP6", "--report", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(value["entries"][0]["rho"], 4);
    assert_eq!(
        value["entries"][0]["verdicts"]["total_index"]["inequality_holds"],
        true
    );

    let invariants = run(&["invariants", "-F", "dP6", "--report", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&invariants)).unwrap();
    assert_eq!(value["entries"][0]["rho"], 4);
    assert!(value["entries"][0].get("verdicts").is_none());
}

#[test]
fn oracle_flag_cross_checks() {
    let output = run(&["check", "-F", "P2", "-F", "P1xP1", "--oracle"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn jobs_do_not_change_output() {
    let sequential = run(&["check", workspace_data("surfaces.txt").to_str().unwrap()]);
    let parallel = run(&[
        "check",
        workspace_data("surfaces.txt").to_str().unwrap(),
        "--jobs",
        "4",
    ]);
    assert_eq!(stdout(&sequential), stdout(&parallel));
}

#[test]
fn out_flag_writes_byte_identical_files_across_runs() {
    let first = temp_path("out-a.csv");
    let second = temp_path("out-b.csv");
    for (path, _) in [(&first, 0), (&second, 1)] {
        let output = run(&[
            "check",
            workspace_data("surfaces.txt").to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(output.status.code(), Some(0));
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn structured_input_is_accepted() {
    let path = temp_path("p2.json");
    std::fs::write(
        &path,
        r#"[{ "name": "P2", "dim": 2, "vertices": [[1,0],[0,1],[-1,-1]] }]"#,
    )
    .unwrap();
    let output = run(&["check", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("P2,2,3,1,3,3,3,0,0,true,2,"));
}

#[test]
fn broken_pipe_is_not_a_panic() {
    let script = format!(
        "{} fixtures | head -n 1; exit ${{PIPESTATUS[0]:-0}}",
        env!("CARGO_BIN_EXE_tauric")
    );
    let output = Command::new("bash")
        .args(["-c", &script])
        .output()
        .expect("shell runs");
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(!err.contains("panicked"), "stderr was {err}");
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn threefold_database_survives_the_oracle_sweep() {
    // Every total index in the bundled classification, recomputed by the
    // exhaustive solver; a mismatch would surface as a reject.
    let output = run(&[
        "check",
        workspace_data("smooth_fano_3folds.json").to_str().unwrap(),
        "--format",
        "structured",
        "--oracle",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(
        err.contains("checked=18 equality=3 violations=0 rejects=0"),
        "summary was {err}"
    );
}

#[test]
fn unknown_fixture_exits_with_code_two() {
    let output = run(&["check", "-F", "dP5"]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("unknown fixture"), "stderr was {err}");
}
