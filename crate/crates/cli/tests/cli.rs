use std::process::{Command, Output};

fn billiard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_billiard"))
        .args(args)
        .env_remove(billiard_cli::FORMAT_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_exceptional_triangle() {
    let o = billiard(&["--format", "json", "classify", "--triangle", "3,5,7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "Lattice");
    assert_eq!(v["veech_group"], "D(15,inf,inf)");
    assert!(o.stderr.is_empty());
}

#[test]
fn unfold_pillowcase() {
    let o = billiard(&[
        "unfold",
        "--triangle",
        "1,1,2",
        "--k",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 0);
    let points: i64 = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            assert_eq!(c["order"], -1);
            c["count"].as_i64().unwrap()
        })
        .sum();
    assert_eq!(points, 4);
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["classify", "--triangle", "0,1,2"][..],
        &["classify"],
        &["frobnicate"],
        &["index", "--regular", "4"],
        &["unfold", "--triangle", "1,2,3", "--k", "0"],
        &["table", "--max-denominator", "2"],
        &["classify", "--triangle", "1,2,3", "--format", "csv"],
        &["unfold", "--polygon", "1/3,1/3,1/2"],
        &["--tolerance", "-1", "index", "--regular", "5"],
    ] {
        let o = billiard(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn version_reports_registry() {
    let o = billiard(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("registry 1.0.0"));
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_billiard"))
        .args(["index", "--regular", "12"])
        .env(billiard_cli::FORMAT_ENV, "json")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "8\n");
    let o = billiard(&["index", "--regular", "5"]);
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn surface_emits_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t113.json");
    let o = billiard(&[
        "--format",
        "json",
        "surface",
        "--triangle",
        "1,1,3",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["copy_count"], 10);
    assert_eq!(summary["edge_pairs"], 15);
    assert_eq!(summary["genus"], 2);
    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(record["N"], 5);
    assert_eq!(record["copy_count"], 10);
    assert_eq!(record["pairs"].as_array().unwrap().len(), 15);
    let multiples: Vec<i64> = record["vertex_classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["cone_angle_multiple_of_2pi"].as_i64().unwrap())
        .collect();
    assert_eq!(multiples, vec![1, 1, 3]);
}

#[test]
fn compare_and_regular_polygon_inputs() {
    let o = billiard(&["--format", "json", "compare", "--triangle", "2,3,4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["variant"], "identical");
    let o = billiard(&["--format", "json", "classify", "--regular", "7"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ambient_group"], "D(2,7,inf)");
    assert_eq!(v["index"], 8);
    assert_eq!(v["regular"], 7);
    let o = billiard(&[
        "--format",
        "json",
        "unfold",
        "--polygon",
        "1/2,1/2,1/2,1/2",
        "--k",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 0);
}

#[test]
fn export_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.svg");
    let h = 2f64.sqrt().to_string();
    let o = billiard(&[
        "export-svg",
        "--triangle",
        "1,1,2",
        "--sides",
        &format!("{h},1,1"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 8);

    let bad = dir.path().join("bad.svg");
    let o = billiard(&[
        "export-svg",
        "--triangle",
        "1,1,1",
        "--sides",
        "1,1,2",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!bad.exists());
}

#[test]
fn run_is_usable_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = billiard_cli::run(["billiard", "index", "--regular", "8"], &mut out, &mut err);
    assert_eq!(code, billiard_cli::EXIT_OK);
    assert_eq!(out, b"2\n");
}
