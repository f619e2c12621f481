//! End-to-end runs of the `ratdec` binary over the fixture files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ratdec"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    for a in args {
        if let Some(f) = a.strip_prefix("fx:") {
            cmd.arg(fixture(f));
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().expect("spawn ratdec")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn encode_then_decode_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cw_path = dir.path().join("cw.txt");
    let o = run(&[
        "encode",
        "--code",
        "fx:rs15_5.json",
        "--in",
        "fx:data5.txt",
        "--out",
        cw_path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{o:?}");
    let cw = std::fs::read_to_string(&cw_path).unwrap();
    assert_eq!(cw.split_whitespace().count(), 15);

    let o = run(&[
        "decode",
        "--code",
        "fx:rs15_5.json",
        "--in",
        cw_path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "unique");
    assert_eq!(v["candidates"][0]["distance"], 0);
    assert_eq!(v["candidates"][0]["word"].as_str().unwrap(), cw.trim());
}

#[test]
fn listdecode_seven_errors_lists_transmitted() {
    let o = run(&[
        "listdecode",
        "--code",
        "fx:rs15_5.json",
        "--t",
        "7",
        "--in",
        "fx:ex1_r.txt",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "list");
    let words: Vec<&str> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["word"].as_str().unwrap())
        .collect();
    assert_eq!(words.len(), 2);
    assert!(words.contains(&"0 a^12 a^10 a^11 a^7 a^5 a^11 a^11 a^6 a^8 a^14 a^11 a^6 a^2 a"));
}

#[test]
fn listdecode_t_beyond_limit_is_usage_error() {
    let o = run(&[
        "listdecode",
        "--code",
        "fx:rs15_5.json",
        "--t",
        "8",
        "--in",
        "fx:ex1_r.txt",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("beyond limit 7"), "{err}");
}

#[test]
fn classical_decode_failure_exits_one() {
    let o = run(&["decode", "--code", "fx:rs15_5.json", "--in", "fx:ex1_r.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "failure");
}

#[test]
fn bch_listdecode_example() {
    let o = run(&[
        "listdecode",
        "--code",
        "fx:bch63_21.json",
        "--t",
        "13",
        "--in",
        "fx:ex6_r.txt",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "list");
    assert_eq!(v["candidates"].as_array().unwrap().len(), 2);
}

#[test]
fn plan_single_and_sweep() {
    let o = run(&["plan", "--code", "fx:rs15_5.json", "--t", "7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 7);
    assert_eq!(v["p_y"], 16);
    assert_eq!(v["n_free"], 425);
    assert_eq!(v["n_cstr"], 420);

    let o = run(&["plan", "--code", "fx:rs15_5.json"]);
    let text = stdout(&o);
    assert!(text.starts_with("t,m_prop,m_GS,Py_prop,Py_GS,N_free,N_cstr\n"));
    assert!(text.contains("\n7,7,16,16,31,425,420\n"), "{text}");

    let o = run(&["plan", "--code", "fx:rs15_5.json", "--epsilon", "1"]);
    assert_eq!(stdout(&o), "t,m\n5,1\n");

    let o = run(&[
        "plan",
        "--code",
        "fx:rs15_5.json",
        "--capability-table",
        "--steps",
        "9",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("D,classical,rs_list,bch_list\n"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn plan_sweep_rs255_112() {
    let o = run(&["plan", "--code", "fx:rs255_112.json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    // d = 144: sweep runs from t = 73 up to the limit 86
    assert_eq!(
        rows.first().map(|r| r.split(',').next().unwrap()),
        Some("73")
    );
    assert_eq!(
        rows.last().map(|r| r.split(',').next().unwrap()),
        Some("86")
    );
    for row in rows {
        let cols: Vec<i64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols.len(), 7);
        let (m_prop, m_gs, n_free, n_cstr) = (cols[1], cols[2], cols[5], cols[6]);
        assert!(m_prop >= 1 && m_prop <= m_gs, "{row}");
        assert!(n_free > n_cstr, "{row}");
    }
}

#[test]
fn plan_sweep_rs2047_1647() {
    let o = run(&["plan", "--code", "fx:rs2047_1647.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("\n205,1,143,"), "{text}");
    assert!(text.contains("\n211,26,2197,"), "{text}");
    assert_eq!(text.lines().last().unwrap().split(',').next(), Some("211"));
}

#[test]
fn plan_sweep_bch63_21() {
    let o = run(&["plan", "--code", "fx:bch63_21.json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    let cols: Vec<&str> = last.split(',').collect();
    assert_eq!((cols[0], cols[1], cols[3]), ("13", "11", "57"));
}

#[test]
fn simulate_rs_at_lecc_limit_recovers_always() {
    let o = run(&[
        "simulate",
        "--code",
        "fx:rs15_5.json",
        "--t",
        "7",
        "--weight",
        "7",
        "--trials",
        "500",
        "--seed",
        "1",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["recovery_fraction"], 1.0);
    assert!(v["mean_list_size"].as_f64().unwrap() >= 1.0);
}

#[test]
fn simulate_is_deterministic_and_recovers_in_classical_region() {
    let args = [
        "simulate",
        "--code",
        "fx:bch15_7.json",
        "--t",
        "5",
        "--weight",
        "3",
        "--trials",
        "40",
        "--seed",
        "7",
    ];
    let a = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let b = run(&args);
    assert_eq!(
        stdout(&a),
        stdout(&b),
        "summaries differ between identical runs"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["recovery_fraction"], 1.0);
    assert_eq!(v["rng"], "chacha12/seed-le64x4");
}
