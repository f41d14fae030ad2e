use std::path::PathBuf;
use std::process::{Command, Output};

fn qhaar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhaar"))
        .args(args)
        .env_remove("QHAAR_FORMAT")
        .env_remove("QHAAR_CACHE_DIR")
        .env_remove("QHAAR_MAX_ORDER")
        .env_remove("QHAAR_NO_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("qhaar-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn order_one_table() {
    let o = qhaar(&["--no-cache", "table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.contains("h(aek) = 1/(q^6 + 2*q^4 + 2*q^2 + 1)"));
}

#[test]
fn solver_and_algorithm_print_the_same_json() {
    let a = qhaar(&["--no-cache", "--format", "json", "table", "2"]);
    let b = qhaar(&["--no-cache", "--format", "json", "table", "2", "--method", "algorithm"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let t = qhaar::HaarTable::from_json(&v).unwrap();
    assert_eq!(t.len(), 21);
    assert_eq!(t.values, qhaar::Haar::new().table(2).unwrap().values);
}

#[test]
fn bad_orders_and_words_are_usage_errors() {
    assert_eq!(qhaar(&["--no-cache", "table", "0"]).status.code(), Some(2));
    assert_eq!(qhaar(&["--no-cache", "--max-order", "2", "table", "3"]).status.code(), Some(2));
    assert_eq!(qhaar(&["--no-cache", "haar", "aiek"]).status.code(), Some(2));
    assert_eq!(qhaar(&["--no-cache", "table", "2", "--method", "closed"]).status.code(), Some(2));
    assert_eq!(qhaar(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn haar_values() {
    let o = qhaar(&["--no-cache", "haar", "cegafh"]);
    assert_eq!(o.status.code(), Some(0));
    let want = qhaar::haar::haar(&qhaar::Word::parse("cegafh", 3).unwrap()).unwrap();
    assert_eq!(stdout(&o).trim(), want.to_string());
    assert_eq!(stdout(&qhaar(&["--no-cache", "haar", "ab"])).trim(), "0");
    assert_eq!(stdout(&qhaar(&["--no-cache", "haar", "x11 x22 x33"])).trim(), "1/(q^6 + 2*q^4 + 2*q^2 + 1)");
}

#[test]
fn verify_suites() {
    let o = qhaar(&["--no-cache", "verify", "appendixC"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("8/8 checks passed\n"));
    let o = qhaar(&["--no-cache", "verify", "weingarten"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_all_is_reproducible() {
    let a = qhaar(&["--no-cache", "--max-order", "3", "verify", "all"]);
    let b = qhaar(&["--no-cache", "--max-order", "3", "verify", "all"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn relation_between_keys() {
    let o = qhaar(&["--no-cache", "relation", "--eq", "0.0.0.0.0.2", "--cmp", "1.0.0.0.0.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("h(aekceg)"));
}

#[test]
fn cache_is_written_and_corruption_is_reported() {
    let dir = scratch_dir("corrupt");
    let d = dir.to_str().unwrap();
    assert_eq!(qhaar(&["--cache-dir", d, "table", "1"]).status.code(), Some(0));
    let file = qhaar::HaarTable::cache_path(&dir, 1);
    assert!(file.exists());
    assert_eq!(qhaar(&["--cache-dir", d, "table", "1"]).stdout, qhaar(&["--no-cache", "table", "1"]).stdout);
    std::fs::write(&file, "{\"order\": 1, \"values\": ").unwrap();
    let o = qhaar(&["--cache-dir", d, "table", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn environment_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_qhaar"))
        .args(["haar", "aek"])
        .env("QHAAR_FORMAT", "latex")
        .env("QHAAR_NO_CACHE", "true")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\\frac"));
}
