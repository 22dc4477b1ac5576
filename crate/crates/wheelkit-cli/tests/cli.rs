use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn wheelkit(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wheelkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON: {e}\n{}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write_fixture(dir: &Path, name: &str, fixture: &str) -> std::path::PathBuf {
    let out = wheelkit(&["gen", fixture], dir);
    assert!(out.status.success(), "gen {fixture}: {}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join(name);
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn find_wheel_on_k33_reports_null() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = write_fixture(dir.path(), "k33.el", "k33");
    let out = wheelkit(&["find-wheel", k33.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "wheelkit/1");
    assert!(v["wheel"].is_null());
}

#[test]
fn cycle3_on_k23_emits_a_splitter() {
    let dir = tempfile::tempdir().unwrap();
    let k23 = write_fixture(dir.path(), "k23.el", "theta:2,2,2");
    let out = wheelkit(
        &["cycle3", k23.to_str().unwrap(), "--x", "2", "--y", "3", "--z", "4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["cycle"].is_null());
    assert_eq!(v["splitter"]["A"], serde_json::json!([0]));
    assert_eq!(v["splitter"]["B"], serde_json::json!([1]));
}

#[test]
fn color_rejects_r35_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let r35 = write_fixture(dir.path(), "r35.el", "r35");
    let out = wheelkit(&["color", r35.to_str().unwrap(), "--colors", "3"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"], "not wheel-free");
    assert!(v["witness"]["rim"].is_array());
}

#[test]
fn every_emitted_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let k23 = write_fixture(d, "k23.el", "theta:2,2,2");
    let k33 = write_fixture(d, "k33.el", "k33");
    let k4 = write_fixture(d, "k4.el", "k4");
    let cube = write_fixture(d, "cube.el", "cube");

    let cases: Vec<(std::path::PathBuf, Vec<&str>)> = vec![
        (k23.clone(), vec!["cycle3", k23.to_str().unwrap(), "--x", "2", "--y", "3", "--z", "4"]),
        (k4.clone(), vec!["cycle3", k4.to_str().unwrap(), "--x", "0", "--y", "1", "--z", "2"]),
        (k33.clone(), vec!["color", k33.to_str().unwrap(), "--colors", "3"]),
        (k4.clone(), vec!["color", k4.to_str().unwrap(), "--colors", "4"]),
        (cube.clone(), vec!["find-wheel", cube.to_str().unwrap()]),
    ];
    for (graph, args) in cases {
        let out = wheelkit(&args, d);
        assert!(out.status.code() == Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        let cert = d.join("cert.json");
        std::fs::write(&cert, &out.stdout).unwrap();
        let check = wheelkit(&["verify", graph.to_str().unwrap(), cert.to_str().unwrap()], d);
        assert_eq!(check.status.code(), Some(0), "{args:?} verify: {}", String::from_utf8_lossy(&check.stdout));
        let v = stdout_json(&check);
        assert_eq!(v["valid"], true, "{args:?}");
    }
}

#[test]
fn verify_flags_corrupted_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let k23 = write_fixture(d, "k23.el", "theta:2,2,2");
    let out = wheelkit(
        &["cycle3", k23.to_str().unwrap(), "--x", "2", "--y", "3", "--z", "4"],
        d,
    );
    let mut v = stdout_json(&out);
    v["splitter"]["A"] = serde_json::json!([0, 2]);
    let cert = d.join("bad.json");
    std::fs::write(&cert, serde_json::to_string(&v).unwrap()).unwrap();
    let check = wheelkit(&["verify", k23.to_str().unwrap(), cert.to_str().unwrap()], d);
    assert_eq!(check.status.code(), Some(2));
    let result = stdout_json(&check);
    assert_eq!(result["valid"], false);
    assert!(!result["violations"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let k33 = write_fixture(d, "k33.el", "k33");
    let a = wheelkit(&["analyze", k33.to_str().unwrap()], d);
    let b = wheelkit(&["analyze", k33.to_str().unwrap()], d);
    assert_eq!(a.stdout, b.stdout);
    let g1 = wheelkit(&["gen", "random", "--n", "9", "--p", "0.4", "--seed", "5"], d);
    let g2 = wheelkit(&["gen", "random", "--n", "9", "--p", "0.4", "--seed", "5"], d);
    assert_eq!(g1.stdout, g2.stdout);
}

#[test]
fn gen_formats_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let el = wheelkit(&["gen", "petersen", "--format", "el"], d);
    let g6 = wheelkit(&["gen", "petersen", "--format", "g6"], d);
    let p_el = d.join("p.el");
    let p_g6 = d.join("p.g6");
    std::fs::write(&p_el, &el.stdout).unwrap();
    std::fs::write(&p_g6, &g6.stdout).unwrap();
    let a = wheelkit(&["analyze", p_el.to_str().unwrap()], d);
    let b = wheelkit(&["analyze", p_g6.to_str().unwrap()], d);
    assert_eq!(a.stdout, b.stdout, "formats describe the same graph");
}

#[test]
fn oracle_subcommand_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r35 = write_fixture(d, "r35.el", "r35");
    let out = wheelkit(&["oracle", r35.to_str().unwrap(), "--op", "alpha-omega"], d);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["oracle"]["alpha"], 4);
    assert_eq!(v["oracle"]["omega"], 2);
    // r35 has 13 vertices; the default cycle budget (12) must refuse it
    let refused = wheelkit(&["oracle", r35.to_str().unwrap(), "--op", "wheel"], d);
    assert_eq!(refused.status.code(), Some(1));
    let lifted = wheelkit(&["oracle", r35.to_str().unwrap(), "--op", "wheel", "--budget", "13"], d);
    assert_eq!(lifted.status.code(), Some(0));
    assert!(!stdout_json(&lifted)["oracle"]["wheel"].is_null());
}

#[test]
fn parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let bad = d.join("bad.el");
    std::fs::write(&bad, "2\n0 0\n").unwrap();
    let out = wheelkit(&["analyze", bad.to_str().unwrap()], d);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert!(v["error"].as_str().unwrap().contains("self-loop"));
    let missing = wheelkit(&["analyze", d.join("nope.el").to_str().unwrap()], d);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = wheelkit(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}
