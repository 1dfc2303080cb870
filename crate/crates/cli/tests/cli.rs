use std::path::Path;
use std::process::{Command, Output};

use tribisect_cli::report::BisectReport;

const EXAMPLE: &str = "4,2 1,9 10,1";

fn tribisect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tribisect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bisect_worked_query_text() {
    let o = tribisect(&[
        "bisect",
        "--triangle",
        EXAMPLE,
        "--dir",
        "-3,2",
        "--dp",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("case A: (x, w) = (-4.88, 0.88)"), "{text}");
    assert!(text.contains("case B: (x, w) = (5.57, -0.14)"), "{text}");
    assert!(text.contains("case C: (x, w) = (39.00, 8.00)"), "{text}");
    assert!(text.contains("selected: A"));
    assert!(text.contains("t = 0.436492"));
    assert!(text.contains("PASS"));
}

#[test]
fn bisect_json_round_trips() {
    let o = tribisect(&[
        "bisect",
        "--triangle",
        EXAMPLE,
        "--dir",
        "3,2",
        "--dir",
        "-4,5",
        "--slope",
        "0.25",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: BisectReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.queries.len(), 3);
    assert!(report.passed);

    let q = &report.queries[0];
    assert_eq!(q.case, 'B');
    assert_eq!(q.dir, [3.0, 2.0]);
    let y = q.y_intercept.unwrap();
    assert!((y - 0.4).abs() < 0.05);

    let median = &report.queries[1];
    assert!(median.degenerate_median);
    assert!(!median.outcomes[1].defined);
    assert_eq!(median.outcomes[1].x, None);
    assert_eq!(report.queries[2].dir, [1.0, 0.25]);

    // values survive a second serialization unchanged
    let again: BisectReport =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn degenerate_triangle_exit_code() {
    let o = tribisect(&["bisect", "--triangle", "0,0 1,1 2,2", "--dir", "1,0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0,0 1,1 2,2"));
}

#[test]
fn parse_error_exit_code() {
    let o = tribisect(&["bisect", "--triangle", "4,2 1,nine 10,1", "--dir", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nine"));
    let o = tribisect(&["bisect", "--triangle", EXAMPLE]);
    assert_eq!(o.status.code(), Some(2));
    let o = tribisect(&["family", "--triangle", EXAMPLE, "--samples", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn vertical_slope() {
    let o = tribisect(&[
        "bisect",
        "--triangle",
        EXAMPLE,
        "--slope",
        "vertical",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: BisectReport = serde_json::from_str(&stdout(&o)).unwrap();
    let q = &report.queries[0];
    assert_eq!(q.dir, [0.0, 1.0]);
    assert_eq!(q.y_intercept, None);
    assert!(q.audit.passed);
}

#[test]
fn zero_direction_exit_code() {
    let o = tribisect(&["bisect", "--triangle", EXAMPLE, "--dir", "0,0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn family_small_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    for p in [&p1, &p2] {
        let o = tribisect(&[
            "family",
            "--triangle",
            EXAMPLE,
            "--samples",
            "2",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p2).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("case,w,t,base_x,base_y,dir_x,dir_y\n"));
    // no stray temporaries next to the output
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn family_io_error() {
    let o = tribisect(&[
        "family",
        "--triangle",
        EXAMPLE,
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn render_example_figure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.svg");
    let o = tribisect(&[
        "render",
        "--triangle",
        EXAMPLE,
        "--dir",
        "-3,2",
        "--dir",
        "3,2",
        "--dir",
        "-4,5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches("class=\"edge-bisect\"").count(), 3);
    assert_eq!(svg.matches("class=\"bisector\"").count(), 3);
    assert!(svg.contains("stroke-dasharray=\"2,4\""));
    assert!(svg.contains("stroke-dasharray=\"8,5\""));
    assert!(svg.contains("<text"));
}

#[test]
fn render_rejects_zero_direction_before_writing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.svg");
    let o = tribisect(&[
        "render",
        "--triangle",
        EXAMPLE,
        "--dir",
        "0,0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!Path::new(&out).exists());
}

#[test]
fn verify_default_and_strict() {
    let o = tribisect(&[
        "verify",
        "--triangle",
        EXAMPLE,
        "--dir",
        "-3,2",
        "--dir",
        "3,2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("query dir -3,2"));
    assert!(
        text.contains("305/305 lines passed"),
        "{}",
        text.lines().last().unwrap()
    );

    let o = tribisect(&[
        "verify",
        "--triangle",
        EXAMPLE,
        "--dir",
        "-3,2",
        "--tol",
        "1e-15",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_sweep_only() {
    let o = tribisect(&["verify", "--triangle", EXAMPLE, "--samples", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("query"));
    assert!(text.contains("33/33 lines passed"));
}
