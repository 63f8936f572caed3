//! Golden-file and exit-code tests for the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn space_id2() -> PathBuf {
    golden_dir().join("space_id2.txt")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tenalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn eval(space: &std::path::Path, expr: &str) -> Output {
    run(&["eval", "--space", space.to_str().unwrap(), expr])
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn golden_eval_outputs() {
    let cases = std::fs::read_to_string(golden_dir().join("eval_cases.txt")).unwrap();
    let space = space_id2();
    let mut checked = 0;
    for block in cases.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let (expr, expected) = block
            .split_once('\n')
            .expect("expression line plus output line");
        let output = eval(&space, expr);
        assert!(
            output.status.success(),
            "'{expr}' failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        assert_eq!(
            stdout(&output),
            format!("{}\n", expected.trim_end()),
            "output mismatch for '{expr}'"
        );
        checked += 1;
    }
    assert!(checked >= 10, "golden file should hold at least 10 cases");
}

#[test]
fn golden_outputs_reparse_to_themselves() {
    // printed results are themselves valid expressions with the same
    // canonical form, except the delta tables which are print-only
    let cases = std::fs::read_to_string(golden_dir().join("eval_cases.txt")).unwrap();
    let space = space_id2();
    for block in cases.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let (_, printed) = block.split_once('\n').unwrap();
        let printed = printed.trim_end();
        if printed.starts_with('Σ') {
            continue;
        }
        let output = eval(&space, printed);
        assert!(
            output.status.success(),
            "'{printed}' failed to reparse: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        assert_eq!(stdout(&output), format!("{printed}\n"));
    }
}

#[test]
fn parse_error_exits_2() {
    let output = eval(&space_id2(), "e1 @ @ e2");
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("syntax error"));
    assert!(output.stdout.is_empty());
}

#[test]
fn type_error_exits_2() {
    for expr in ["e1 + f1", "dual(f1, f1)", "(e1*e2) o_s e1", "e1 ; e1"] {
        let output = eval(&space_id2(), expr);
        assert_eq!(output.status.code(), Some(2), "for '{expr}'");
        assert!(output.stdout.is_empty());
    }
}

#[test]
fn cap_and_range_errors_exit_2() {
    let output = eval(&space_id2(), "symm(pow(e1, 8))");
    assert_eq!(output.status.code(), Some(2));
    let output = eval(&space_id2(), "e3");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unreadable_space_file_exits_2() {
    let missing = golden_dir().join("no_such_space.txt");
    let output = run(&["eval", "--space", missing.to_str().unwrap(), "e1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn malformed_space_file_exits_2() {
    let dir = std::env::temp_dir().join("tenalg_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_space.txt");
    std::fs::write(&path, "dim_u 2\ndim_v 2\nself_dual true\nfoo 1\n").unwrap();
    let output = run(&["eval", "--space", path.to_str().unwrap(), "e1"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown key"));
}

#[test]
fn check_report_is_deterministic_and_matches_golden() {
    let space = space_id2();
    let args = [
        "check",
        "--space",
        space.to_str().unwrap(),
        "--seed",
        "42",
        "--max-grade",
        "3",
        "--trials",
        "20",
        "--no-timing",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second), "report must be deterministic");
    let golden = std::fs::read_to_string(golden_dir().join("check_report.txt")).unwrap();
    assert_eq!(stdout(&first), golden);
    // the two structurally false laws keep the full run red
    assert_eq!(first.status.code(), Some(1));
}

#[test]
fn check_different_seed_changes_counterexamples_not_determinism() {
    let space = space_id2();
    let args = |seed: &'static str| {
        vec![
            "check".to_string(),
            "--space".to_string(),
            space.to_str().unwrap().to_string(),
            "--seed".to_string(),
            seed.to_string(),
            "--max-grade".to_string(),
            "2".to_string(),
            "--trials".to_string(),
            "5".to_string(),
            "--no-timing".to_string(),
        ]
    };
    let a = run(&args("7").iter().map(String::as_str).collect::<Vec<_>>());
    let b = run(&args("7").iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn check_zero_trials_reports_empty_and_exits_0() {
    let space = space_id2();
    let output = run(&[
        "check",
        "--space",
        space.to_str().unwrap(),
        "--trials",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("summary: 0 run, 0 passed, 0 failed, 0 skipped"));
}

#[test]
fn check_rejects_oversized_max_grade() {
    let space = space_id2();
    let output = run(&[
        "check",
        "--space",
        space.to_str().unwrap(),
        "--max-grade",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn phi_matrix_golden() {
    let space = space_id2();
    let output = run(&[
        "phi-matrix",
        "--space",
        space.to_str().unwrap(),
        "--mode",
        "tensor",
        "--max-grade",
        "2",
    ]);
    assert!(output.status.success());
    let golden =
        std::fs::read_to_string(golden_dir().join("phi_matrix_tensor_g2.txt")).unwrap();
    assert_eq!(stdout(&output), golden);
}

#[test]
fn phi_matrix_rejects_bad_mode_and_rectangular_space() {
    let space = space_id2();
    let output = run(&[
        "phi-matrix",
        "--space",
        space.to_str().unwrap(),
        "--mode",
        "diagonal",
        "--max-grade",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let rect = golden_dir().join("space_rect23.txt");
    let output = run(&[
        "phi-matrix",
        "--space",
        rect.to_str().unwrap(),
        "--mode",
        "tensor",
        "--max-grade",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn rectangular_space_evaluates_v_side_generators() {
    let rect = golden_dir().join("space_rect23.txt");
    let output = run(&[
        "eval",
        "--space",
        rect.to_str().unwrap(),
        "dual(e2, f3)",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "2/3\n");
}
