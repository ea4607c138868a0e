use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hudg-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Runs the binary and returns the exit code and the parsed stdout line.
fn hudg(args: &[&dyn AsRef<std::ffi::OsStr>]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hudg")).args(args.iter().map(|a| a.as_ref())).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("{e}: {stdout:?}"));
    (out.status.code().unwrap(), json)
}

#[test]
fn every_emitted_file_feeds_the_next_command() {
    let dir = scratch("chain");
    let f = |n: &str| dir.join(n);
    let (code, _) = hudg(&[&"gen-arrangement", &"--n", &"2", &"--seed", &"0", &"--out", &f("a.json")]);
    assert_eq!(code, 0);
    let (code, v) = hudg(&[&"cells", &"--in", &f("a.json"), &"--out", &f("d.json")]);
    assert_eq!((code, v["cells"].as_u64()), (0, Some(4)));
    let (code, v) = hudg(&[&"reduce", &"--in", &f("d.json"), &"--out", &f("g.json")]);
    assert_eq!((code, v["vertices"].as_u64(), v["edges"].as_u64()), (0, Some(8), Some(16)));
    let solve = hudg(&[
        &"solve", &"--graph", &f("g.json"), &"--geometry", &"euclidean", &"--seed", &"0",
        &"--restarts", &"50", &"--max-iters", &"3000", &"--margin", &"0.005", &"--out", &f("e.json"),
    ]);
    assert_eq!(solve.0, 0, "{}", solve.1);
    let (code, emb) = hudg(&[&"embed", &"--graph", &f("g.json"), &"--realization", &f("e.json"), &"--out", &f("h.json")]);
    assert_eq!(code, 0);
    let (code, ver) = hudg(&[&"verify", &"--graph", &f("g.json"), &"--realization", &f("h.json")]);
    assert_eq!((code, ver["status"].as_str()), (0, Some("accept")));
    assert_eq!(ver["interval"], emb["interval"]);
    assert_eq!(ver["threshold_admitted"], Value::Bool(true));
    let (code, x) = hudg(&[&"extract", &"--graph", &f("g.json"), &"--realization", &f("h.json"), &"--out", &f("x.json")]);
    assert_eq!(code, 0);
    let original: Value = serde_json::from_str(&std::fs::read_to_string(f("d.json")).unwrap()).unwrap();
    let recovered: Value = serde_json::from_str(&std::fs::read_to_string(f("x.json")).unwrap()).unwrap();
    assert_eq!(original["payload"], recovered["payload"]);
    assert_eq!(x["cells"], original["payload"]["cells"]);
    for input in ["a.json", "d.json", "g.json", "e.json", "h.json"] {
        let (code, _) = hudg(&[&"plot", &"--in", &f(input), &"--out", &f("p.svg")]);
        assert_eq!(code, 0, "plot {input}");
        assert!(std::fs::read_to_string(f("p.svg")).unwrap().starts_with("<?xml"));
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_star_certificate() {
    let (code, v) = hudg(&[&"verify", &"--graph", &data("star6_graph.json"), &"--realization", &data("star6_hyperbolic.json")]);
    assert_eq!((code, v["status"].as_str()), (0, Some("accept")));
    let lo = v["interval"]["lo"].as_f64().unwrap();
    let hi = v["interval"]["hi"].as_f64().unwrap();
    assert!((lo - 2f64.cosh()).abs() < 1e-6);
    assert!((hi - 7.577058209004121).abs() < 1e-6);
    assert!((v["suggested_threshold"].as_f64().unwrap() - 2.359323428966032).abs() < 1e-9);
}

#[test]
fn plot_leaves_verdict_unchanged() {
    let dir = scratch("plot");
    let before = hudg(&[&"verify", &"--graph", &data("star6_graph.json"), &"--realization", &data("star6_hyperbolic.json")]);
    let (code, _) = hudg(&[&"plot", &"--in", &data("star6_hyperbolic.json"), &"--out", &dir.join("s.svg")]);
    assert_eq!(code, 0);
    let after = hudg(&[&"verify", &"--graph", &data("star6_graph.json"), &"--realization", &data("star6_hyperbolic.json")]);
    assert_eq!(before, after);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn wrong_graph_is_rejected() {
    let dir = scratch("reject");
    let (code, _) = hudg(&[&"reduce", &"--in", &data("concurrent_lines.json"), &"--out", &dir.join("g.json")]);
    assert_eq!(code, 2);
    // Star certificate checked against a triangle plus isolated vertices.
    let g = r#"{"version":1,"meta":{},"kind":"graph","payload":{"vertices":["v","v","v","v","v","v","v"],"edges":[[0,1],[0,2],[1,2]]}}"#;
    std::fs::write(dir.join("tri.json"), g).unwrap();
    let (code, v) = hudg(&[&"verify", &"--graph", &dir.join("tri.json"), &"--realization", &data("star6_hyperbolic.json")]);
    assert_eq!((code, v["status"].as_str()), (1, Some("reject")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn non_simple_arrangement_is_invalid() {
    let dir = scratch("nonsimple");
    let (code, v) = hudg(&[&"cells", &"--in", &data("concurrent_lines.json"), &"--out", &dir.join("d.json")]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("not simple"));
    let (code, _) = hudg(&[&"cells", &"--in", &data("missing.json"), &"--out", &dir.join("d.json")]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn pipeline_three_lines() {
    let dir = scratch("pipeline");
    let (code, v) = hudg(&[&"pipeline", &"--n", &"3", &"--seed", &"1", &"--out-dir", &dir]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["round_trip"], Value::Bool(true));
    for name in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(name.unwrap().path()).unwrap();
        if !text.starts_with("<?xml") {
            let doc: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(doc["version"], 1);
        }
    }
    std::fs::remove_dir_all(dir).unwrap();
}
