use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn circdiam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circdiam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = circdiam(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn report_u4() {
    let r = json(&["report", "@u4", "--max-depth", "5", "--json"]);
    assert_eq!(r["facets"], 8);
    assert_eq!(r["dim"], 4);
    assert_eq!(r["graph_diameter"], 5);
    assert_eq!(r["circuit_diameter"], 4);
    assert_eq!(r["hirsch_bound"], 4);
    assert_eq!(r["graph_hirsch_satisfied"], false);
    assert_eq!(r["circuit_hirsch_satisfied"], true);
    assert_eq!(r["bounded"], false);
}

#[test]
fn report_q4_sym_and_cube4() {
    let r = json(&["report", "@q4_sym", "--json"]);
    assert_eq!(
        (r["facets"].as_u64(), r["dim"].as_u64()),
        (Some(9), Some(4))
    );
    assert_eq!(r["graph_diameter"], 5);
    assert_eq!(r["circuit_diameter"], 3);
    assert_eq!(r["vertices"], 27);

    let r = json(&["report", "@cube4", "--json"]);
    assert_eq!(
        (r["facets"].as_u64(), r["dim"].as_u64()),
        (Some(8), Some(4))
    );
    assert_eq!(r["graph_diameter"], 4);
    assert_eq!(r["circuit_diameter"], 4);
    assert_eq!(r["hirsch_bound"], 4);
    assert_eq!(r["graph_hirsch_satisfied"], true);
    assert_eq!(r["circuit_hirsch_satisfied"], true);
}

#[test]
fn small_depth_reports_unknown() {
    let r = json(&["report", "@cube3", "--max-depth", "2", "--json"]);
    assert_eq!(r["circuit_diameter"], Value::Null);
    assert_eq!(r["circuit_hirsch_satisfied"], Value::Null);
    let text = circdiam(&["report", "@cube3", "--max-depth", "2"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("circuit diameter  > 2"));
}

#[test]
fn graph_and_circuit_distance_with_certificate() {
    let d = json(&[
        "distance", "@u4", "--from", "V5678", "--to", "V1234", "--mode", "graph", "--json",
    ]);
    assert_eq!(d["distance"], 5);

    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("walk.json");
    let cert_arg = cert.to_str().unwrap();
    let d = json(&[
        "distance",
        "@u4",
        "--from",
        "V5678",
        "--to",
        "V1234",
        "--mode",
        "circuit",
        "--max-depth",
        "5",
        "--emit-cert",
        cert_arg,
        "--json",
    ]);
    assert!(d["distance"].as_u64().unwrap() <= 4);

    let v = json(&["verify-walk", cert_arg, "--json"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["steps"], d["distance"]);
    let plain = circdiam(&["verify-walk", cert_arg]);
    assert_eq!(code(&plain), 0);
}

#[test]
fn tampered_certificates_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("walk.json");
    let cert_arg = cert.to_str().unwrap();
    let out = circdiam(&[
        "distance",
        "@cube2",
        "--from",
        "V12",
        "--to",
        "V34",
        "--emit-cert",
        cert_arg,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");

    let original: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();

    let mut halved = original.clone();
    halved["steps"][0]["length"] = Value::from("1/2");
    fs::write(&cert, halved.to_string()).unwrap();
    let out = circdiam(&["verify-walk", cert_arg]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("not maximal"));

    let mut diagonal = original.clone();
    diagonal["steps"] = serde_json::json!([{ "direction": ["1", "1"], "length": "1/1" }]);
    fs::write(&cert, diagonal.to_string()).unwrap();
    let v = circdiam(&["verify-walk", cert_arg, "--json"]);
    assert_eq!(code(&v), 1);
    let v: Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["violation"].as_str().unwrap().contains("not a circuit"));

    fs::write(&cert, "{ not json").unwrap();
    assert_eq!(code(&circdiam(&["verify-walk", cert_arg])), 2);
}

#[test]
fn input_errors_exit_with_2() {
    let out = circdiam(&["distance", "@u4", "--from", "V9999", "--to", "V1234"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("V9999"));

    assert_eq!(code(&circdiam(&["report", "@nonesuch"])), 2);
    assert_eq!(code(&circdiam(&["report", "/no/such/file.hrep"])), 2);
    assert_eq!(
        code(&circdiam(&[
            "distance", "@u4", "--from", "V5678", "--to", "V1234", "--mode", "walk"
        ])),
        2
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hrep");
    fs::write(&bad, "dim 2\nineq 1\n1 x 0\n").unwrap();
    let out = circdiam(&["vertices", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn perturb_check_verdicts() {
    let r = json(&["perturb-check", "@q4_sym", "@q4_pert", "--json"]);
    assert_eq!(r["equivalent"], true);
    assert_eq!(r["first"]["circuit_diameter"], 3);
    assert_eq!(r["second"]["circuit_diameter"], 4);

    let r = json(&["perturb-check", "@u4", "@u4", "--json"]);
    assert_eq!(r["equivalent"], true);
    assert_eq!(r["first"]["circuit_diameter"], 4);
    assert_eq!(r["second"]["circuit_diameter"], 4);

    let out = circdiam(&["perturb-check", "@cube2", "@simplex2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("facet counts differ"));

    let dir = tempfile::tempdir().unwrap();
    let kite = dir.path().join("kite.hrep");
    // same facet count as the square but a triangle's combinatorics plus a redundant row
    fs::write(&kite, "dim 2\nineq 4\n1 0 0\n0 1 0\n-1 -1 -1\n-1 -1 -2\n").unwrap();
    let out = circdiam(&["perturb-check", "@cube2", kite.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("not combinatorially equivalent"));
}

#[test]
fn listing_subcommands() {
    let vs = json(&["vertices", "@cube2", "--json"]);
    let labels: Vec<&str> = vs
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["V12", "V14", "V23", "V34"]);
    assert_eq!(vs[3]["coords"], serde_json::json!(["1/1", "1/1"]));

    let cs = json(&["circuits", "@q4_sym", "--json"]);
    assert_eq!(cs.as_array().unwrap().len(), 84);
    assert!(cs
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["direction"] == serde_json::json!(["1", "0", "3", "0"])));

    let sk = json(&["skeleton", "@q4_sym", "--json"]);
    assert_eq!(sk["vertices"].as_array().unwrap().len(), 27);
    assert_eq!(sk["edges"].as_array().unwrap().len(), 54);
}

#[test]
fn diameter_subcommand() {
    let d = json(&["diameter", "@cube3", "--mode", "graph", "--json"]);
    assert_eq!(d["diameter"], 3);
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("witness.json");
    let d = json(&[
        "diameter",
        "@u4",
        "--emit-cert",
        cert.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(d["diameter"], 4);
    let v = json(&["verify-walk", cert.to_str().unwrap(), "--json"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["steps"], 4);
}

#[test]
fn file_instances_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.hrep");
    fs::write(
        &path,
        "# unit square\ndim 2\nineq 4\n1 0 0\n0 1 0\n-1 0 -1\n0 -1 -1\n",
    )
    .unwrap();
    let path = path.to_str().unwrap();
    let a = circdiam(&["report", path, "--json"]);
    let b = circdiam(&["report", "@cube2", "--json"]);
    let (ra, rb): (Value, Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&b.stdout).unwrap(),
    );
    assert_eq!(ra["circuit_diameter"], rb["circuit_diameter"]);
    assert_eq!(ra["vertices"], rb["vertices"]);

    for args in [
        vec!["report", "@u4"],
        vec!["circuits", "@u4", "--json"],
        vec![
            "distance", "@u4", "--from", "V5678", "--to", "V1234", "--json",
        ],
    ] {
        assert_eq!(circdiam(&args).stdout, circdiam(&args).stdout, "{args:?}");
    }
}
