use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn addprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_addprod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const C4_EDGES: &str = r#"{"n":4,"atoms":[[[0,1]],[[1,2]],[[2,3]],[[0,3]]]}"#;
const K4_EDGES: &str = r#"{"n":4,"atoms":[[[0,1]],[[0,2]],[[0,3]],[[1,2]],[[1,3]],[[2,3]]]}"#;

#[test]
fn poly_of_c4_edge_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.json", C4_EDGES);
    let o = addprod(&["poly", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "coefficients 1 0 -4 0 2"), "{}", stdout(&o));
}

#[test]
fn one_indexed_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.json", r#"{"n":4,"atoms":[[[1,2]],[[2,3]],[[3,4]],[[1,4]]]}"#);
    let o = addprod(&["poly", "--indexing", "one", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("coefficients 1 0 -4 0 2"));
}

#[test]
fn freeconv_preset() {
    let o = addprod(&["freeconv", "--preset", "c4c4c4"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().find(|l| l.starts_with("right_edge")).unwrap().to_string();
    let x: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((x - (5.0 * 5f64.sqrt() + 11.0).sqrt()).abs() < 1e-6);
}

#[test]
fn freeconv_measure_file() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"measures":[{"atoms":[[1,"1/2"],[-1,"1/2"]]},{"atoms":[[1,"1/2"],[-1,"1/2"]]},{"atoms":[[1,"1/2"],[-1,"1/2"]]}]}"#);
    let o = addprod(&["--json", "freeconv", "--measures", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["right_edge"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-8);
    assert_eq!(v["manifest"]["subcommand"], "freeconv");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(addprod(&["frobnicate"]).status.code(), Some(64));
    let bad = write(dir.path(), "bad.json", "{");
    assert_eq!(addprod(&["poly", bad.to_str().unwrap()]).status.code(), Some(65));
    let loop_ = write(dir.path(), "loop.json", r#"{"n":2,"atoms":[[[1,1]]]}"#);
    assert_eq!(addprod(&["poly", loop_.to_str().unwrap()]).status.code(), Some(65));
    let disc = write(dir.path(), "disc.json", r#"{"n":4,"atoms":[[[0,1]],[[2,3]]]}"#);
    let o = addprod(&["poly", disc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
    let c4 = write(dir.path(), "c4.json", C4_EDGES);
    let o = addprod(&["certify", c4.to_str().unwrap(), "--rho", "3/2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("FAIL"));
    let o = addprod(&["certify", c4.to_str().unwrap(), "--rho", "auto"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn search_then_lift_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.json", K4_EDGES);
    let cert = dir.path().join("cert.json");
    let o = addprod(&["search", "--n", "2", "--rho", "auto", g.to_str().unwrap(), "--out", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let c = &v["certificate"];
    assert_eq!(c["bound_holds"], true);
    assert_eq!(c["version"], env!("CARGO_PKG_VERSION"));
    let hex = c["encoding_hex"].as_str().unwrap();
    let new: Vec<f64> = c["new_spectrum"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!(new.iter().all(|&x| x <= 8f64.sqrt() + 1e-9));

    let enc = write(dir.path(), "enc.hex", hex);
    let o = addprod(&["--json", "lift", "--n", "2", "--encoding", enc.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let l: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let again: Vec<f64> = l["new_spectrum"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(new.len(), again.len());
    for (a, b) in new.iter().zip(&again) {
        assert!((a - b).abs() < 1e-9);
    }
    assert_eq!(l["document"], c["lift"]);
}

#[test]
fn exact_outputs_repeat_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.json", K4_EDGES);
    let out = |name: &str| {
        let p = dir.path().join(name);
        let o = addprod(&["search", "--n", "2", g.to_str().unwrap(), "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v["manifest"]["inputs"] = Value::Null;
        v
    };
    assert_eq!(out("a.json"), out("b.json"));
}

#[test]
fn mcperm_csv_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#;
    let gs = write(dir.path(), "g.json", &format!(r#"{{"graphs":[{c4},{c4},{c4}]}}"#));
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = addprod(&["mcperm", "--graphs", gs.to_str().unwrap(), "--t", "3", "--trials", "20", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read_to_string(p).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    assert_eq!(a.lines().count(), 21);
    assert!(a.starts_with("trial,lambda2,within"));
}

#[test]
fn ball_and_specrad() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.json", K4_EDGES);
    let o = addprod(&["--json", "ball", "--radius", "1", g.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["document"]["n"], 4);
    assert_eq!(v["words"].as_array().unwrap().len(), 4);
    let o = addprod(&["--json", "specrad", "--radius", "6", g.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let (lo, hi) = (v["bracket"]["lower"].as_f64().unwrap(), v["bracket"]["upper"].as_f64().unwrap());
    assert!(lo <= 8f64.sqrt() && 8f64.sqrt() <= hi);
}

#[test]
fn walks_table() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.json", C4_EDGES);
    let o = addprod(&["walks", "--k", "4", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "4 24 24 true"));
}

#[test]
fn selftest_subset() {
    let o = addprod(&["selftest", "--only", "1,9"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 2);
    assert!(s.contains("selftest PASS"));
}
