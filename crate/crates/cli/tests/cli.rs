use std::process::{Command, Output};

use serde_json::Value;

fn sylow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylow")).args(args).output().expect("run sylow")
}

fn stdout(args: &[&str]) -> String {
    let out = sylow(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn tables_match_golden_files() {
    for n in ["5", "25", "125"] {
        assert_eq!(stdout(&["tables", n]), golden(&format!("table_{n}.txt")), "tables {n}");
    }
    assert_eq!(stdout(&["--json", "tables", "25"]), golden("table_25.json"));
}

#[test]
fn table_25_has_eleven_classes_all_confirmed() {
    let v = json(&["tables", "25"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let total: u64 = rows.iter().map(|r| r["members"].as_u64().unwrap()).sum();
    assert_eq!(total, 649);
    for r in rows {
        assert_eq!(r["members"], r["oracle_agrees"], "{r}");
    }
    let omegas: Vec<&str> = rows.iter().map(|r| r["omega"].as_str().unwrap()).collect();
    assert_eq!(omegas.iter().filter(|s| s.starts_with('°')).count(), 2);
    assert_eq!(omegas.iter().filter(|s| s.contains('⊔')).count(), 1);
}

#[test]
fn table_125_pairs() {
    let v = json(&["tables", "125"]);
    let pairs: Vec<(u64, u64)> =
        v["rows"].as_array().unwrap().iter().map(|r| (r["m"].as_u64().unwrap(), r["M"].as_u64().unwrap())).collect();
    assert_eq!(
        pairs,
        [(123, 125), (124, 124), (119, 120), (99, 100), (119, 120), (99, 100), (95, 100), (95, 100)]
    );
    assert_eq!(v["source"], "formula path only");
}

#[test]
fn omega_member_outside_bound() {
    assert_eq!(stdout(&["omega", "member", "--theta", "X(1;1;0)", "--lambda", "[98,27]"]).trim(), "Out");
    let v = json(&["omega", "member", "--theta", "X(0;1)", "--lambda", "[24,1]"]);
    assert_eq!(v["membership"], "In");
}

#[test]
fn omega_describe_json() {
    let v = json(&["omega", "describe", "--theta", "X(1;0)"]);
    assert_eq!(v["shape"], serde_json::json!({"kind": "punctured_box", "n": 25, "t": 20}));
    assert_eq!((v["m"].as_u64(), v["M"].as_u64()), (Some(19), Some(20)));
    assert_eq!(v["punctured"], true);
    let v = json(&["omega", "gap", "--theta", "X(1;1;1)"]);
    assert_eq!((v["gap"].as_u64(), v["gamma1"].as_u64(), v["c"].as_u64()), (Some(5), Some(5), Some(0)));
}

#[test]
fn lr_and_star() {
    assert_eq!(json(&["lr", "--lambda", "[2,2]", "--mu", "[2]", "--nu", "[2]"])["coefficient"], 1);
    assert_eq!(stdout(&["lr", "--lambda", "[3,2,1]", "--mu", "[2,1]", "--nu", "[2,1]"]).trim(), "2");
    let v = json(&["star", "--a", "{[4]}", "--b", "{[3],[2,1]}"]);
    let set: Vec<Vec<u32>> = serde_json::from_value(v["set"].clone()).unwrap();
    assert_eq!(set, [vec![7], vec![6, 1], vec![5, 2], vec![5, 1, 1], vec![4, 3], vec![4, 2, 1]]);
    let v = json(&["star", "--a", "pbox:13:8", "--b", "pbox:13:8", "--symbolic"]);
    assert_eq!(v, serde_json::json!({"kind": "box", "n": 26, "t": 16}));
}

#[test]
fn irr_list_counts() {
    assert_eq!(json(&["irr", "list", "-p", "5", "-k", "2"]).as_array().unwrap().len(), 649);
    let out = sylow(&["irr", "list", "-p", "5", "-k", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_and_is_reproducible() {
    let args = ["verify", "-n", "25", "--sample", "12", "--seed", "7"];
    let a = json(&args);
    assert_eq!(a["characters"], 12);
    assert_eq!(a["failures"], 0);
    assert_eq!(a, json(&args));
    let v = json(&["verify", "-n", "30", "--theta", "X(1;1) * 0"]);
    assert_eq!(v["failures"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(sylow(&["omega", "describe", "--theta", "X(9;0)"]).status.code(), Some(2));
    assert_eq!(sylow(&["lr", "--lambda", "[2,x]", "--mu", "[1]", "--nu", "[1]"]).status.code(), Some(2));
    assert_eq!(sylow(&["verify", "-n", "125"]).status.code(), Some(2));
    assert_eq!(sylow(&["tables", "7"]).status.code(), Some(2));
}
