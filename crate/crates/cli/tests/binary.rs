use std::process::{Command, Output};

fn ladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_canonical_form() {
    let o = ladder(&["eval", "h[0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Z[0,0] - 2*Z[1,1] + Z[2,2]\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let o = ladder(&["eval", "Z[1,0] +"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("expected"), "{err}");
    // The caret line sits directly under an unprefixed copy of the input.
    let lines: Vec<&str> = err.lines().collect();
    let at = lines
        .iter()
        .position(|l| *l == "Z[1,0] +")
        .expect("input echoed on its own line");
    assert!(lines[at + 1].starts_with("        ^"), "{err}");
}

#[test]
fn mixed_universes_exit_with_two() {
    let o = ladder(&["eval", "Z[1,0] + E[0,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("phi("));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(ladder(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(ladder(&["matrix", "Z[1,0]"]).status.code(), Some(2));
    assert_eq!(
        ladder(&["virasoro", "bracket", "1", "-1", "--mu", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_writes_report_lines() {
    let dir = std::env::temp_dir().join(format!("ladder-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.jsonl");
    let o = ladder(&[
        "verify",
        "sy-equivalence",
        "--trials",
        "10",
        "--seed",
        "5",
        "--max-index",
        "6",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&o));
    let v: serde_json::Value = serde_json::from_str(written.trim()).unwrap();
    assert_eq!(v["suite"], "sy-equivalence");
    assert_eq!(v["seed"], 5);
    assert_eq!(v["max_index"], 6);
    assert_eq!(v["pass"], true);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn virasoro_bracket_emits_json_lines() {
    let o = ladder(&[
        "virasoro",
        "bracket",
        "3",
        "-3",
        "--mu",
        "1/2",
        "--lambda",
        "1/3*i",
        "--max-degree",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|l| l["pass"] == true && l["n"] == 3 && l["m"] == -3));
}
