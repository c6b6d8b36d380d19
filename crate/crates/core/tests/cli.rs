use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use cyclic_bound::cli::{CheckRow, CodeSpecFile, CosetListing, DecodeOutput, ReportRecord};
use tempfile::NamedTempFile;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic-bound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spec_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

const LENGTH21: &str = r#"{"q": 2, "n": 21, "coset_reps": [1, 3, 7, 9], "name": "length 21"}"#;

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn bound_report_round_trips() {
    let f = spec_file(LENGTH21);
    let o = bin(&["bound", path(&f)]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let rec: ReportRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.code.name.as_deref(), Some("length 21"));
    assert_eq!(rec.code.summary.k, 7);
    assert_eq!(rec.bch.unwrap().value, 5);
    assert_eq!(rec.ht.as_ref().unwrap().value, Some(6));
    let nzl = rec.nzl.as_ref().unwrap();
    assert_eq!(nzl.d_star, 7);
    assert!(cyclic_bound::nzl::verify_certificate(
        &rec.code.summary.defining_set,
        21,
        &nzl.certificate
    ));
    assert_eq!(rec.oracle.as_ref().unwrap().d, Some(8));
    let again: ReportRecord = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(again, rec);
}

#[test]
fn selected_bounds_only() {
    let f = spec_file(LENGTH21);
    let o = bin(&["bound", path(&f), "--bch", "--nzl"]);
    let rec: ReportRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rec.bch.is_some() && rec.nzl.is_some());
    assert!(rec.ht.is_none() && rec.oracle.is_none());
    let human = stdout(&bin(&["bound", path(&f), "--human"]));
    assert!(
        human.starts_with("length 21: q = 2, n = 21, k = 7"),
        "{human}"
    );
}

#[test]
fn oracle_cap_is_reported() {
    let f = spec_file(r#"{"q": 2, "n": 65, "coset_reps": [1, 5]}"#);
    let o = bin(&["bound", path(&f), "--oracle", "--cap", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: ReportRecord = serde_json::from_str(&stdout(&o)).unwrap();
    let oracle = rec.oracle.unwrap();
    assert!(oracle.capped && oracle.d.is_none());
}

#[test]
fn cosets_json() {
    let o = bin(&["cosets", "21", "2", "--json"]);
    let l: CosetListing = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(l.cosets.iter().map(Vec::len).sum::<usize>(), 21);
    assert!(l.cosets.contains(&vec![7, 14]));
}

#[test]
fn encode_then_decode() {
    let f = spec_file(LENGTH21);
    let o = bin(&[
        "encode",
        path(&f),
        "--message",
        "1011001",
        "--locator",
        "spc:5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cw = stdout(&o).trim().to_string();
    assert_eq!(cw.len(), 21);
    let mut r: Vec<char> = cw.chars().collect();
    for p in [2, 9, 20] {
        r[p] = if r[p] == '0' { '1' } else { '0' };
    }
    let r: String = r.into_iter().collect();
    let o = bin(&["decode", path(&f), "--received", &r, "--locator", "spc:5"]);
    assert_eq!(o.status.code(), Some(0));
    let out: DecodeOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.radius, 3);
    assert!(out.result.is_success());
    assert_eq!(out.result.positions, vec![2, 9, 20]);
    let corrected: String = out
        .result
        .corrected
        .unwrap()
        .iter()
        .map(|d| d.to_string())
        .collect();
    assert_eq!(corrected, cw);
}

#[test]
fn decoding_failure_still_exits_zero() {
    let f = spec_file(LENGTH21);
    // five errors on the zero word exceed the radius
    let o = bin(&[
        "decode",
        path(&f),
        "--received",
        "111110000000000000000",
        "--locator",
        "spc:5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out: DecodeOutput = serde_json::from_str(&stdout(&o)).unwrap();
    if out.result.is_success() {
        // a miscorrection must still land on a codeword
        assert_ne!(out.result.positions, vec![0, 1, 2, 3, 4]);
    } else {
        assert!(out.result.corrected.is_none() && out.result.reason.is_some());
    }
}

#[test]
fn reference_checks_pass() {
    let o = bin(&["check", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<CheckRow> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rows.len() > 20 && rows.iter().all(|r| r.pass));
    assert_eq!(
        bin(&["check", "--only", "no-such-fixture"]).status.code(),
        Some(1)
    );
}

#[test]
fn ratio_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("grid.csv");
    let o = bin(&[
        "ratio-grid",
        "--nu-range",
        "1..2",
        "--d0-range",
        "2..4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "nu,d0,m,d_star,ht,ratio");
    assert_eq!(lines.len(), 1 + 2 * 3);
    assert_eq!(lines[1], "1,2,3,3,3,1.000000");
}

#[test]
fn usage_errors_exit_one() {
    let missing = Path::new("/nonexistent/spec.json").to_str().unwrap();
    for args in [
        vec!["bound", missing],
        vec!["cosets", "21"],
        vec!["cosets", "22", "2"],
        vec!["ratio-grid", "--m-rule", "nu+1"],
        vec!["frobnicate"],
    ] {
        let o = bin(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let bad = spec_file(r#"{"q": 2, "n": 21, "coset_reps": [1], "extra": 1}"#);
    assert_eq!(bin(&["bound", path(&bad)]).status.code(), Some(1));
    let f = spec_file(LENGTH21);
    assert_eq!(
        bin(&["decode", path(&f), "--received", "0120"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        bin(&["decode", path(&f), "--received", "0101"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_cyclic-bound"))
        .args(["cosets", "7", "2"])
        .env("CYCLIC_BOUND_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn spec_file_forms_agree() {
    let a = CodeSpecFile::from_json(LENGTH21)
        .unwrap()
        .to_code()
        .unwrap();
    let b = CodeSpecFile::from_json(
        r#"{"q": 2, "n": 21, "defining_set": [1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18]}"#,
    )
    .unwrap()
    .to_code()
    .unwrap();
    assert_eq!(a, b);
}
