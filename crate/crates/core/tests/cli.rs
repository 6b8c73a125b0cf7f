use std::process::{Command, Output};

fn pebbling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebbling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sequence_ends_with_46() {
    let o = pebbling(&["sequence", "--k-max", "7", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("k,G\n"));
    assert_eq!(out.lines().last(), Some("7,46"));
}

#[test]
fn constants_json_has_decimal_strings() {
    let o = pebbling(&["constants", "--digits", "15", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let z = rows.iter().find(|r| r["name"] == "z_star").unwrap();
    assert_eq!(z["value"], "0.430729593137930");
    assert_eq!(z["digits"], 15);
}

#[test]
fn piped_output_defaults_to_json() {
    let o = pebbling(&["w0", "--l-max", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][3]["W0"], "15");
}

#[test]
fn verify_passes() {
    let o = pebbling(&[
        "verify", "--k-max", "60", "--order", "100", "--digits", "20", "--format", "csv",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        pebbling(&["sequence", "--k-max", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pebbling(&["table", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(pebbling(&["bogus"]).status.code(), Some(2));
    let o = pebbling(&["constants", "--digits", "30", "--order", "20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("series order"));
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("pebbling-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let o = pebbling(&["table", "--k-max", "40", "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["command"], "table");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn asymptotic_marks_inapplicable_rows() {
    let o = pebbling(&[
        "asymptotic",
        "--k-max",
        "20",
        "--step",
        "10",
        "--m-max",
        "3",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("10,3,inapplicable"));
    assert!(out.contains("20,3,"));
}

#[test]
fn enumerate_compares_with_recurrence() {
    let o = pebbling(&[
        "enumerate",
        "--m-max",
        "2",
        "--max-steps",
        "6",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("m,k,clean,visited,recurrence,agrees\n"));
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(out.contains("1,7,6,18,6,true"));
}

#[test]
fn state_budget_exits_3_with_partial_rows() {
    let o = pebbling(&[
        "enumerate",
        "--max-steps",
        "20",
        "--state-limit",
        "500",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("partial results"));
    let out = stdout(&o);
    assert!(out.contains("0,9,243,243,243,true"));
    assert!(!out.contains("0,10,"));
}
