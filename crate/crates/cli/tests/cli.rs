use std::process::{Command, Output};

fn classgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classgraph"))
        .args(args)
        .env_remove("BDG_MAX_P")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_p3_passes() {
    let o = classgraph(&["verify", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("B(G) = K_{2,5}: PASS"));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("|x1^G| = 6"));
}

#[test]
fn verify_json_is_valid() {
    let o = classgraph(&["verify", "--p", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overall"], true);
    assert_eq!(v["p"], 3);
}

#[test]
fn invalid_p_exits_2() {
    for p in ["2", "9", "1"] {
        assert_eq!(
            classgraph(&["verify", "--p", p]).status.code(),
            Some(2),
            "p = {p}"
        );
    }
}

#[test]
fn gate_refusal_exits_1() {
    let o = classgraph(&["classes", "--p", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit"));
}

#[test]
fn conflicting_sources_exit_2() {
    assert_eq!(
        classgraph(&["graph", "--p", "3", "--sizes", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(classgraph(&["graph"]).status.code(), Some(2));
    assert_eq!(
        classgraph(&["graph", "--sizes", "0,6"]).status.code(),
        Some(2)
    );
}

#[test]
fn graph_dot_from_sizes() {
    let o = classgraph(&["graph", "--sizes", "6,12,36,72,96", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph B {"));
    assert_eq!(text.matches(" -- ").count(), 10);
    let vertices = text
        .lines()
        .filter(|l| l.ends_with(';') && !l.contains("--"))
        .count();
    assert_eq!(vertices, 7);
}

#[test]
fn graph_json_for_family() {
    let o = classgraph(&["graph", "--p", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["primes"], serde_json::json!([2, 5]));
    assert_eq!(v["sizes"], serde_json::json!([10, 20, 400, 800, 2560]));
    assert_eq!(v["shape"]["kind"], "CompleteBipartite");
    assert_eq!(v["shape"]["m"], 2);
    assert_eq!(v["shape"]["n"], 5);
    assert_eq!(v["shape"]["girth"], 4);
}

#[test]
fn graph_from_table_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/s3.tbl");
    let o = classgraph(&["graph", "--table", path, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([2, 3]));
    assert_eq!(v["shape"]["components"], 2);
    assert_eq!(v["shape"]["girth"], "infinite");
}

#[test]
fn malformed_table_exits_2() {
    let dir = std::env::temp_dir().join(format!("classgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.tbl");
    std::fs::write(&path, "0 1\n1 1\n").unwrap();
    let o = classgraph(&["graph", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        classgraph(&["graph", "--table", "/nonexistent.tbl"])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn classes_json_lists_every_class() {
    let o = classgraph(&["classes", "--p", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 56);
    let total: u64 = classes.iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 1728);
}
