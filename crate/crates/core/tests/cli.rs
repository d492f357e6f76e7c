use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secant-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_line(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn macdonald_examples() {
    let o = run(&[
        "macdonald",
        "--g",
        "6",
        "--s",
        "2",
        "--m",
        "6",
        "--d",
        "2",
        "--r",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_line(&o);
    assert_eq!(v["value"], "4");
    assert_eq!(v["rho"], 0);
    assert_eq!(v["mu"], 0);

    let o = run(&[
        "macdonald",
        "--g",
        "3",
        "--s",
        "2",
        "--m",
        "4",
        "--d",
        "2",
        "--r",
        "1",
        "--version",
        "closed",
    ]);
    assert!(stdout(&o).starts_with("value: 0\n"));

    let o = run(&[
        "macdonald",
        "--g",
        "6",
        "--s",
        "2",
        "--m",
        "6",
        "--d",
        "2",
        "--r",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn macdonald_versions_agree() {
    let args = [
        "macdonald",
        "--g",
        "10",
        "--s",
        "4",
        "--m",
        "12",
        "--d",
        "6",
        "--r",
        "3",
        "--format",
        "json",
    ];
    for version in ["one", "two"] {
        let mut a = args.to_vec();
        a.extend(["--version", version]);
        assert_eq!(json_line(&run(&a))["value"], "41");
    }
    let o = run(&[
        "macdonald",
        "--g",
        "10",
        "--s",
        "4",
        "--m",
        "12",
        "--d",
        "6",
        "--r",
        "3",
        "--version",
        "closed",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_examples() {
    let v = json_line(&run(&[
        "count", "--case", "r1", "--t", "1", "--u", "2", "--method", "brute", "--format", "json",
    ]));
    assert_eq!(v["value"], "4");
    let v = json_line(&run(&[
        "count",
        "--case",
        "r1",
        "--t",
        "2",
        "--u",
        "2",
        "--method",
        "stratified",
        "--format",
        "json",
    ]));
    assert_eq!(v["value"], "40");
    let v = json_line(&run(&[
        "count", "--case", "rs1", "--r", "3", "--u", "1", "--format", "json",
    ]));
    assert_eq!(v["value"], "0");
    let v = json_line(&run(&[
        "count", "--case", "rs1", "--r", "2", "--u", "3", "--method", "brute", "--format", "json",
    ]));
    assert_eq!(v["value"], "174");
}

#[test]
fn count_usage_errors() {
    assert_eq!(
        run(&["count", "--case", "r1", "--u", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--case", "r1", "--t", "9", "--u", "9", "--method", "brute"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["count", "--case", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn grid_stratified_reports_leftover() {
    let v = json_line(&run(&[
        "count",
        "--case",
        "grid",
        "--labels",
        "1,3,2,4,3,5",
        "--modulus",
        "5",
        "--g",
        "10",
        "--method",
        "stratified",
        "--format",
        "json",
    ]));
    assert_eq!(v["leftover"], "4");
    assert_eq!(v["value"], "4");
}

#[test]
fn json_records_round_trip() {
    for (t, u) in [(1, 3), (2, 3), (3, 2)] {
        let (t, u) = (t.to_string(), u.to_string());
        let v = json_line(&run(&[
            "count", "--case", "r1", "--t", &t, "--u", &u, "--format", "json",
        ]));
        let again = json_line(&run(&[
            "count",
            "--case",
            "r1",
            "--t",
            &v["t"].to_string(),
            "--u",
            &v["u"].to_string(),
            "--method",
            "brute",
            "--format",
            "json",
        ]));
        assert_eq!(v["value"], again["value"]);
    }
}

#[test]
fn nk_table_csv() {
    let o = run(&["table", "--what", "nk", "--d", "2..6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,k,value"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.contains(&"4,2,148"));
    assert!(rows.contains(&"6,2,501908"));
    assert_eq!(rows.len(), 1 + 2 + 3 + 4 + 5);

    let o = run(&["table", "--what", "nk", "--d", "5"]);
    assert_eq!(
        stdout(&o),
        "d,k,value\n5,0,3264\n5,1,16920\n5,2,11664\n5,3,920\n"
    );
}

#[test]
fn counts_table_json_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("counts.json");
    let o = run(&[
        "table",
        "--what",
        "counts",
        "--case",
        "r1",
        "--t",
        "1",
        "--u",
        "1..3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let values: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["0", "4", "12"]);

    let o = run(&[
        "table",
        "--what",
        "counts",
        "--output",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let o = run(&[
        "verify",
        "--suite",
        "identities",
        "--max-d",
        "4",
        "--max-u",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--suite", "claims", "--max-s", "4"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let _: Value = serde_json::from_str(line).unwrap();
    }
}

#[test]
fn verify_fixtures_reports_ambient_defect() {
    let o = run(&["verify", "--suite", "fixtures"]);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let failed: Vec<&str> = lines
        .iter()
        .filter(|v| v["pass"] == false)
        .map(|v| v["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["ambient"]);
}

#[test]
fn verify_fixture_override() {
    let dir = tempfile::tempdir().unwrap();
    let ambient = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/chan_ambient.txt"
    ))
    .unwrap();
    let included = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/chan_included.txt"
    ))
    .unwrap();
    // Z5 incoming (0,5,6) replaced by (1,4,6) clears the one defect.
    let repaired = ambient.replacen("# Z5\n0 5 6", "# Z5\n1 4 6", 1);
    assert_ne!(repaired, ambient);
    std::fs::write(dir.path().join("chan_ambient.txt"), repaired).unwrap();
    std::fs::write(dir.path().join("chan_included.txt"), included).unwrap();
    let o = run(&[
        "verify",
        "--suite",
        "fixtures",
        "--fixtures",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    std::fs::write(dir.path().join("chan_ambient.txt"), "not a table\n").unwrap();
    assert_eq!(
        run(&[
            "verify",
            "--suite",
            "fixtures",
            "--fixtures",
            dir.path().to_str().unwrap()
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn thread_env_var() {
    let o = Command::new(env!("CARGO_BIN_EXE_secant-census"))
        .args(["count", "--case", "rs1", "--r", "3", "--u", "2"])
        .env("SECANT_CENSUS_THREADS", "1")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("value: 41\n"));
    let o = Command::new(env!("CARGO_BIN_EXE_secant-census"))
        .args(["count", "--case", "rs1", "--r", "3", "--u", "2"])
        .env("SECANT_CENSUS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
