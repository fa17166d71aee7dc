#![allow(clippy::excessive_precision)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperq::hypergraph::{build, io};
use hyperq::report::Record;
use hyperq::scan_splits;
use serde_json::Value;
use tempfile::TempDir;

fn hyperq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend(["--out", path.to_str().unwrap()]);
    let out = hyperq(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn header(path: &Path) -> String {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_expected_headers() {
    let dir = TempDir::new().unwrap();
    assert_eq!(header(&gen(&dir, "fano.txt", &["fano"])), "3 7 7");
    assert_eq!(header(&gen(&dir, "b8.txt", &["bn", "8"])), "3 8 48");
    assert_eq!(header(&gen(&dir, "k4.txt", &["complete", "4", "3"])), "3 4 4");
    assert_eq!(header(&gen(&dir, "t.txt", &["two-part", "5", "4"])), "3 9 70");
    let out = hyperq(&["gen", "bn", "8", "--out", s(&dir.path().join("again.txt"))]);
    assert_eq!(stdout(&out), "3 8 48\n");
}

#[test]
fn gen_without_out_prints_the_file() {
    let out = hyperq(&["gen", "fano"]);
    assert_eq!(code(&out), 0);
    assert_eq!(io::parse(&stdout(&out)).unwrap(), build::fano());
}

#[test]
fn gen_expansion_of_a_triangle() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "tri.txt", "2 3 3\n0 1\n1 2\n0 2\n");
    let path = gen(&dir, "exp.txt", &["expansion", s(&base), "3"]);
    assert_eq!(header(&path), "3 6 3");
    let bad = hyperq(&["gen", "expansion", s(&gen(&dir, "f.txt", &["fano"])), "3"]);
    assert_eq!(code(&bad), 2);
}

fn spectral_json(path: &Path, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["spectral", s(path), "--format", "json"];
    args.extend_from_slice(extra);
    let out = hyperq(&args);
    (code(&out), serde_json::from_str(&stdout(&out)).unwrap())
}

#[test]
fn spectral_reports_known_radii() {
    let dir = TempDir::new().unwrap();
    let b8 = gen(&dir, "b8.txt", &["bn", "8"]);
    let (c, v) = spectral_json(&b8, &[]);
    assert_eq!(c, 0);
    assert!((v["rho"].as_f64().unwrap() - 36.0).abs() < 1e-8);
    assert_eq!(v["converged"], Value::Bool(true));
    assert!(v.get("eigenvector").is_none());

    let single = write(&dir, "one.txt", "3 3 1\n0 1 2\n");
    let (_, v) = spectral_json(&single, &["--eigenvector"]);
    assert!((v["rho"].as_f64().unwrap() - 2.0).abs() < 1e-10);
    assert_eq!(v["eigenvector"].as_array().unwrap().len(), 3);
    let (_, v) = spectral_json(&single, &["--operator", "a"]);
    assert!((v["rho"].as_f64().unwrap() - 1.0).abs() < 1e-10);

    let empty = write(&dir, "empty.txt", "3 4 0\n");
    let (c, v) = spectral_json(&empty, &[]);
    assert_eq!(c, 0);
    assert_eq!(v["rho"].as_f64(), Some(0.0));
    assert_eq!(v["converged"], Value::Bool(true));
}

#[test]
fn spectral_iteration_limit_exits_4() {
    let dir = TempDir::new().unwrap();
    let b9 = gen(&dir, "b9.txt", &["bn", "9"]);
    let (c, v) = spectral_json(&b9, &["--max-iter", "3"]);
    assert_eq!(c, 4);
    assert_eq!(v["converged"], Value::Bool(false));
    let lower = v["lower"].as_f64().unwrap();
    let upper = v["upper"].as_f64().unwrap();
    assert!(lower <= 46.881_063_880_271_487 && 46.881_063_880_271_487 <= upper);
}

#[test]
fn check_fano_and_two_coloring() {
    let dir = TempDir::new().unwrap();
    let k7 = gen(&dir, "k7.txt", &["complete", "7", "3"]);
    let out = hyperq(&["check", s(&k7), "fano", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "contains");
    let map: Vec<usize> = serde_json::from_value(v["witness"].clone()).unwrap();
    let host = io::parse(&std::fs::read_to_string(&k7).unwrap()).unwrap();
    let mut distinct = map.clone();
    distinct.sort_unstable();
    distinct.dedup();
    assert_eq!(distinct.len(), 7);
    for e in build::fano().edges() {
        let image: Vec<usize> = e.iter().map(|&v| map[v]).collect();
        assert!(host.contains_edge(&image), "witness {map:?}");
    }

    let fano = gen(&dir, "fano.txt", &["fano"]);
    let out = hyperq(&["check", s(&fano), "two-color"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "not 2-colorable\n");

    let b9 = gen(&dir, "b9.txt", &["bn", "9"]);
    let out = hyperq(&["check", s(&b9), "fano"]);
    assert_eq!((code(&out), stdout(&out)), (0, "fano-free\n".to_owned()));
    let out = hyperq(&["check", s(&b9), "two-color"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("2-colorable\ncoloring "));

    let graph = write(&dir, "g.txt", "2 3 1\n0 1\n");
    assert_eq!(code(&hyperq(&["check", s(&graph), "fano"])), 2);
}

fn verify_records(args: &[&str]) -> (i32, Vec<Record>) {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.extend(["--format", "json"]);
    let out = hyperq(&full);
    (code(&out), serde_json::from_str(&stdout(&out)).unwrap())
}

#[test]
fn verify_bounds_and_splits_pass() {
    let (c, records) = verify_records(&["bounds", "4:40"]);
    assert_eq!(c, 0);
    assert_eq!(records.len(), 37);
    assert!(records.iter().all(|r| r.pass && r.op == "bounds"));

    let (c, records) = verify_records(&["splits", "8:20"]);
    assert_eq!(c, 0);
    for r in &records {
        let best_a = r.inputs["best_a"].as_u64().unwrap();
        assert!((2 * best_a).abs_diff(r.n) <= 1);
    }
}

#[test]
fn verify_json_round_trips_in_process_values() {
    let (_, records) = verify_records(&["splits", "4:30"]);
    for r in records {
        let scan = scan_splits::<f64>(r.n as usize).unwrap();
        assert!((r.value - scan.best().q_value).abs() <= 1e-12);
    }
}

#[test]
fn verify_criterion_passes_and_fails_by_sigma() {
    let (c, records) = verify_records(&["criterion", "50:120", "--sigma", "0.05"]);
    assert_eq!(c, 0);
    assert_eq!(records.len(), 2 * 71);
    let out = hyperq(&["verify", "criterion", "51", "--sigma", "1e-9"]);
    assert_eq!(code(&out), 5);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_deletion_and_extremal_pass() {
    let (c, records) = verify_records(&["deletion", "6:9", "--samples", "20"]);
    assert_eq!(c, 0);
    assert_eq!(records.len(), 8);
    let (c, records) = verify_records(&["extremal", "8:9", "--samples", "40"]);
    assert_eq!(c, 0);
    assert!(records.iter().all(|r| r.value < r.bound - 1e-6));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify",
        "deletion",
        "6:8",
        "--samples",
        "10",
        "--seed",
        "7",
        "--format",
        "csv",
    ];
    let first = hyperq(&args);
    let second = hyperq(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).starts_with("op,n,inputs,value,bound,pass\n"));
}

#[test]
fn report_can_go_to_a_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let out = hyperq(&["verify", "splits", "8:10", "--format", "json", "--out", s(&path)]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let records: Vec<Record> = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(records.len(), 3);
}

#[test]
fn errors_map_to_exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&hyperq(&["verify", "bounds", "9:4"])), 2);
    assert_eq!(code(&hyperq(&["verify", "bounds", "x"])), 2);
    assert_eq!(code(&hyperq(&["frobnicate"])), 2);
    assert_eq!(code(&hyperq(&["gen", "bn", "2"])), 2);
    assert_eq!(code(&hyperq(&["spectral", "x.txt", "--tol", "-1"])), 2);
    let malformed = write(&dir, "bad.txt", "3 4 1\n0 1\n");
    assert_eq!(code(&hyperq(&["spectral", s(&malformed)])), 2);
    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&hyperq(&["spectral", s(&missing)])), 3);
    let unwritable = dir.path().join("no/such/dir/out.txt");
    assert_eq!(code(&hyperq(&["gen", "fano", "--out", s(&unwritable)])), 3);
}
