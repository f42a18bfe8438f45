use std::process::{Command, Output};

fn wrlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrlat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_cubic() {
    let o = wrlat(&["cubic", "construct", "-m", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("df = x^3 - x^2 - 2x + 1"), "{s}");
    assert!(s.contains("disc = 49"));
}

#[test]
fn construct_rejects_bad_conductor() {
    let o = wrlat(&["cubic", "construct", "-m", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("12"));
}

#[test]
fn construct_quartic() {
    let s = stdout(&wrlat(&["quartic", "construct", "-a", "1", "-b", "2", "-c", "1", "-d", "5"]));
    assert!(s.contains("df = x^4 - 10x^2 + 5"), "{s}");
    assert!(s.contains("disc = 2000"));
    assert!(s.contains("case III"));
    let s = stdout(&wrlat(&["quartic", "construct", "-a", "-1", "-b", "2", "-c", "1", "-d", "5"]));
    assert!(s.contains("disc = 125") && s.contains("case IV"), "{s}");
    let o = wrlat(&["quartic", "construct", "-a", "1", "-b", "2", "-c", "2", "-d", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_listings() {
    let field = "quartic:1,2,1,5";
    let s = stdout(&wrlat(&["decompose", "--field", field, "--prime", "5", "--oracle"]));
    assert!(s.contains("P^4, N(P)=5") && s.contains("oracle: agree"), "{s}");
    let s = stdout(&wrlat(&["decompose", "--field", field, "--prime", "2"]));
    assert!(s.contains("P^2, N(P)=4") && s.contains("e=2 f=2"), "{s}");
    let s = stdout(&wrlat(&["decompose", "--field", field, "--prime", "3"]));
    assert!(s.contains("inert"), "{s}");
    assert_eq!(wrlat(&["decompose", "--field", field, "--prime", "9"]).status.code(), Some(2));
    assert_eq!(wrlat(&["decompose", "--field", "cubic:8", "--prime", "2"]).status.code(), Some(2));
}

#[test]
fn scan_json_is_deterministic() {
    let args = ["scan", "--fields", "cubic:7;cubic:9", "--norm-bound", "60", "--json"];
    let (a, b) = (wrlat(&args), wrlat(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(v["summary"]["ideals"].as_u64().unwrap() as usize, records.len());
    let wr49 = records
        .iter()
        .find(|r| r["field_id"] == "cubic:7" && r["ideal_norm"] == 49)
        .unwrap();
    assert_eq!(wr49["wr"], true);
    assert_eq!(wr49["orthogonal"], true);
    assert_eq!(wr49["minimum"], "49/1");
}

#[test]
fn scan_csv_to_file_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let cfg = dir.path().join("scan.toml");
    std::fs::write(&cfg, "fields = \"cubic:13\"\nnorm_bound = 5\nformat = \"text\"\n").unwrap();
    let o = wrlat(&[
        "scan",
        "--config",
        cfg.to_str().unwrap(),
        "--norm-bound",
        "30",
        "--csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("field_id,ideal_norm,hnf,minimum,wr,strongly_wr,orthogonal,predicate,divides_disc")
    );
    assert!(lines.any(|l| l.starts_with("cubic:13,13,")), "{text}");
    std::fs::write(&cfg, "fields = \"cubic:13\"\nbogus = 1\n").unwrap();
    assert_eq!(wrlat(&["scan", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn empty_selection_succeeds() {
    let o = wrlat(&["scan", "--fields", "cubic:10..12", "--norm-bound", "10", "--text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fields=0 ideals=0"));
    assert_eq!(wrlat(&["crosscheck", "--fields", ""]).status.code(), Some(0));
}

#[test]
fn crosscheck_and_fault() {
    let ok = wrlat(&["crosscheck", "--fields", "cubic:1..100;quartic:1,2,1,5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).trim_end().ends_with("PASS"));
    let bad = wrlat(&["crosscheck", "--fields", "cubic:1..100", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL"));
}

#[test]
fn conjecture_reports() {
    let o = wrlat(&["conjecture", "--fields", "quartic:-1,2,1,5", "--norm-bound", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("counterexamples=0"));
    let o = wrlat(&["conjecture", "--fields", "quartic:1,2,1,5", "--norm-bound", "500", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let norms: Vec<u64> = v["expected_nonconforming"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["ideal_norm"].as_u64().unwrap())
        .collect();
    assert_eq!(norms, [484, 484]);
    let o = wrlat(&["conjecture", "--fields", "quartic:-1,2,1,5", "--norm-bound", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("COUNTEREXAMPLE quartic:-1,2,1,5 N=11"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wrlat(&["scan", "--fields", "cubic:7", "--norm-bound", "0"]).status.code(), Some(2));
    assert_eq!(wrlat(&["scan", "--fields", "sextic:1"]).status.code(), Some(2));
    assert_eq!(wrlat(&["frobnicate"]).status.code(), Some(2));
}
