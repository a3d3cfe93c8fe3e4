use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyptile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyptile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn regular_heptagon_with_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r7.json");
    let svg = dir.path().join("r7.svg");
    let o = hyptile(&[
        "construct",
        "regular",
        "--n",
        "7",
        "--angle",
        "2pi/3",
        "--out",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["model"], "hyperboloid");
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 7);
    let area = doc["area"].as_f64().unwrap();
    assert!((area - std::f64::consts::PI / 3.0).abs() < 1e-12);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.contains("<svg") && svg.matches(" A ").count() == 7);

    let rendered = dir.path().join("again.svg");
    let o = hyptile(&["render", out.to_str().unwrap(), "--out", rendered.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(rendered.exists());
}

#[test]
fn equilateral_tile_reports_its_parameters() {
    let o = hyptile(&["construct", "equilateral-tile", "--n", "12", "--area", "6pi"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let p = &doc["params"];
    assert_eq!(p["sigma"].as_f64(), Some(4.0));
    assert!((p["m"].as_f64().unwrap() - 0.4).abs() < 1e-15);
    assert!((doc["theta1_over_pi"].as_f64().unwrap() - 0.125).abs() < 1e-15);
    assert!((doc["theta_over_pi"].as_f64().unwrap() - 0.375).abs() < 1e-15);
}

#[test]
fn exit_codes() {
    // area outside ((n−2)π/2, (n−2)π)
    assert_eq!(code(&hyptile(&["construct", "equilateral-tile", "--n", "12", "--area", "4.5pi"])), 2);
    // malformed literal, unknown suite, missing subcommand
    assert_eq!(code(&hyptile(&["construct", "regular", "--n", "7", "--angle", "2pq"])), 1);
    assert_eq!(code(&hyptile(&["verify", "nope"])), 1);
    assert_eq!(code(&hyptile(&["construct"])), 1);
    assert_eq!(code(&hyptile(&["audit", "scalene", "--k", "1,1,1"])), 2);
    // a non-embedded root only: the even-gon search cannot close it
    assert_eq!(code(&hyptile(&["construct", "regular", "--n", "4", "--angle", "pi/2"])), 2);
}

#[test]
fn other_constructors() {
    for args in [
        vec!["construct", "iso-triangle", "--area", "pi/3"],
        vec!["construct", "rhombus", "--area", "pi/2"],
        vec!["construct", "equilateral-even", "--angles", "pi/2,pi/3,pi/4"],
        vec!["construct", "regular", "--n", "5", "--area", "pi/3"],
    ] {
        let o = hyptile(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(json(&o)["vertices"].as_array().unwrap().len() >= 3);
    }
    let o = hyptile(&["construct", "chain", "--side", "1", "--angles", "2pi/3,2pi/3"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["open"], true);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_is_deterministic() {
    let a = hyptile(&["verify", "combinatorics", "--seed", "7", "--no-timing"]);
    let b = hyptile(&["verify", "combinatorics", "--seed", "7", "--no-timing", "--sequential"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["passed"], true);
    assert!(r.get("runtime_seconds").is_none());
    let timed = json(&hyptile(&["verify", "heptagon"]));
    assert!(timed["runtime_seconds"].is_number());
}

#[test]
fn audits() {
    let o = hyptile(&["audit", "graph", &fixture("klein_quartic.json")]);
    assert_eq!(code(&o), 0);
    let a = json(&o);
    assert_eq!(a["v_bar"].as_f64(), Some(7.0));
    assert_eq!(a["k"], 7);
    assert_eq!(a["equality"], true);

    let o = hyptile(&["audit", "combos", "--angles", "pi/2,pi/3,pi/7"]);
    assert_eq!(json(&o)["solutions"].as_array().unwrap().len(), 6);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"chi": 0, "faces": [{"sides": 3}], "vertices": [], "edges": 1}"#).unwrap();
    assert_eq!(code(&hyptile(&["audit", "graph", bad.to_str().unwrap()])), 2);
}
