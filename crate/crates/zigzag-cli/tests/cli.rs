use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zigzag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zigzag")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = zigzag(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zigzag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn dump_has_the_expected_dimension() {
    let d = json(&["dump", "--type", "b", "--rank", "2"]);
    assert_eq!(d["dim"], 10);
    assert_eq!(d["basis"].as_array().unwrap().len(), 10);
    let a = json(&["dump", "--type", "a", "--rank", "3"]);
    assert_eq!(a["dim"], 10);
}

#[test]
fn intersection_agrees_with_poincare() {
    let i = zigzag(&["intersect", "--rank", "2", "--left", "b1", "--right-word", "2 1", "--right", "b2"]);
    let p =
        zigzag(&["poincare", "--side", "b", "--rank", "2", "--source", "1", "--target-word", "2 1", "--target", "2"]);
    assert!(i.status.success() && p.status.success());
    assert_eq!(stdout(&i), stdout(&p));
    let c = zigzag(&["curve", "intersect", "--left-word", "", "--left", "b1", "--right-word", "2 1", "--right", "b2"]);
    assert_eq!(stdout(&c), stdout(&i));
}

#[test]
fn basic_self_intersection() {
    let v = json(&["intersect", "--rank", "3", "--left", "b2", "--right", "b2"]);
    assert_eq!(v["polynomial"], "1 + q3 + q2 + q2*q3");
}

#[test]
fn verify_reports_each_relation() {
    let o = zigzag(&["verify", "braid-relations", "--side", "b", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1 2 1 2 ~ 2 1 2 1"));
    assert!(text.lines().skip(1).all(|l| l.trim_start().starts_with("ok")));
}

#[test]
fn verify_all_passes_at_rank_two() {
    let v = json(&["verify", "all", "--rank", "2", "--samples", "10"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 12);
    assert!(reports.iter().all(|r| r["ok"] == true));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(zigzag(&["act", "--rank", "2", "--word", "3"]).status.code(), Some(2));
    assert_eq!(zigzag(&["act", "--rank", "2", "--word", "x"]).status.code(), Some(2));
    assert_eq!(zigzag(&["dump", "--type", "b", "--rank", "1"]).status.code(), Some(2));
    assert_eq!(zigzag(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(zigzag(&["dump"]).status.code(), Some(2));
    assert_eq!(zigzag(&["intersect", "--left", "c1", "--right", "b1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["act", "--rank", "3", "--word", "1 -2 3", "--format", "json"];
    assert_eq!(zigzag(&args).stdout, zigzag(&args).stdout);
}

#[test]
fn act_minimize_and_extend_through_files() {
    let b = scratch("twisted.json");
    let a = scratch("extended.json");
    let o = zigzag(&["act", "--rank", "2", "--word", "2 1 2", "--projective", "1", "--format", "json"]);
    assert!(o.status.success());
    std::fs::write(&b, &o.stdout).unwrap();
    let m = json(&["minimize", "--in", b.to_str().unwrap()]);
    assert_eq!(m["generators"].as_array().unwrap().len(), 1);
    let o = zigzag(&["extend", "--rank", "2", "--in", b.to_str().unwrap(), "--out", a.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let ext: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(ext["algebra"]["type"], "a");
    assert_eq!(ext["algebra"]["rank"], 3);
    // P1 of type B extends to P2 of type A, so the single generator stays single.
    assert_eq!(ext["generators"].as_array().unwrap().len(), 1);
    assert_eq!(zigzag(&["extend", "--rank", "3", "--in", b.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn k0_matrix_block() {
    let m = json(&["k0", "matrix", "--side", "b", "--rank", "3", "--gen", "1"]);
    assert_eq!(m["rows"][0][0], "-q*s");
    assert_eq!(m["rows"][0][1], "-1 - s");
    let o = zigzag(&["k0", "verify-square", "--rank", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn curve_commands_emit_curve_json() {
    let c = json(&["curve", "act", "--word", "1 2", "--base", "b2"]);
    assert_eq!(c["type"], "b");
    assert!(c["crossings"].as_array().unwrap().iter().all(|x| x["mu"].as_array().unwrap().len() == 3));
    let l = json(&["lift", "--rank", "2", "--base", "b2"]);
    assert_eq!(l["components"].as_array().unwrap().len(), 2);
    let l = json(&["lift", "--rank", "2", "--base", "b1"]);
    assert_eq!(l["components"].as_array().unwrap().len(), 1);
}
