use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn tsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsl")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn s(&self, name: &str) -> String {
        self.path(name).to_string_lossy().into_owned()
    }

    fn write(&self, name: &str, v: &Value) -> String {
        fs::write(self.path(name), v.to_string()).unwrap();
        self.s(name)
    }

    fn build(&self, name: &str, args: &[&str]) -> String {
        let out = self.s(name);
        let mut full = vec!["build"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["-o", &out]);
        let o = tsl(&full);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        out
    }
}

fn read(path: impl AsRef<Path>) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn build_grid_and_graph() {
    let d = Dir::new();
    let g = read(d.build("g.json", &["grid", "--n", "3"]));
    assert_eq!(g["name"], "grid(3)");
    assert_eq!(g["outcomes"].as_array().unwrap().len(), 9);
    assert_eq!(g["tests"].as_array().unwrap().len(), 6);
    let e = read(d.build("e.json", &["ext-space", "--ext", "graph", "--n", "2"]));
    assert_eq!(e["tests"], json!([[0, 3], [1, 2]]));
    let l = read(d.build("l.json", &["classical", "--labels", "up,down"]));
    assert_eq!(l["outcomes"], json!(["up", "down"]));
}

#[test]
fn round_trip_is_byte_identical() {
    let d = Dir::new();
    let bits = d.build("b.json", &["bits"]);
    let fr = d.s("fr.json");
    assert_eq!(code(&tsl(&["product", &bits, &bits, "--fr", "-o", &fr])), 0);
    let files = [d.build("c.json", &["construction", "--ext", "grid", "--n", "2"]), d.build("g.json", &["graph", "--n", "3"]), fr];
    for path in files {
        let original = fs::read_to_string(&path).unwrap();
        let mut again = serde_json::to_string_pretty(&serde_json::from_str::<Value>(&original).unwrap()).unwrap();
        again.push('\n');
        assert_eq!(original, again);
        let compact = d.write("compact.json", &read(&path));
        let o = tsl(&["product", &compact, &d.build("one.json", &["classical", "--n", "1"]), "--cartesian"]);
        assert_eq!(code(&o), 0);
    }
}

#[test]
fn triangle_has_one_state() {
    let d = Dir::new();
    let t = d.build("t.json", &["triangle"]);
    let o = tsl(&["states", &t]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["count"], 1);
    assert_eq!(v["states"][0]["weights"], json!(["1/2", "1/2", "1/2"]));
    let dim = stdout_json(&tsl(&["states", &t, "--dim"]));
    assert_eq!(dim["affine_dim"], 0);
}

#[test]
fn grid_states_are_permutations() {
    let d = Dir::new();
    let g = d.build("g.json", &["grid", "--n", "3"]);
    let v = stdout_json(&tsl(&["states", &g, "--vertices"]));
    assert_eq!(v["count"], 6);
    let dim = stdout_json(&tsl(&["states", &g, "--dim"]));
    assert_eq!(dim["affine_dim"], 4);
    let csv = tsl(&["states", &g, "--csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().skip(1).all(|l| l.split(',').filter(|w| *w == "1/1").count() == 3));
}

#[test]
fn dispersion_free_states_of_graph() {
    let d = Dir::new();
    let e = d.build("e.json", &["ext-space", "--ext", "graph", "--n", "2"]);
    let v = stdout_json(&tsl(&["states", &e, "--dispersion-free"]));
    assert_eq!(v["count"], 4);
}

#[test]
fn algebraicity_and_logic() {
    let d = Dir::new();
    let t = d.build("t.json", &["triangle"]);
    let o = tsl(&["check", "--algebraic", &t]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["status"], "refuted");
    assert!(v["witness"]["a"].is_array());
    assert_eq!(code(&tsl(&["logic", &t])), 1);

    let g = d.build("g.json", &["graph", "--n", "2"]);
    let l = stdout_json(&tsl(&["logic", &g]));
    assert_eq!(l["elements"], 6);
    assert_eq!(l["atoms"].as_array().unwrap().len(), 4);
    let dot = String::from_utf8(tsl(&["logic", &g, "--dot"]).stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 8);
}

/// PR box over two binary tests per side: `a ⊕ b = s ∧ t`.
fn pr_box() -> Value {
    let weights: Vec<&str> = (0..16)
        .map(|p| {
            let (x, y) = (p / 4, p % 4);
            let (s, a, t, b) = (x / 2, x % 2, y / 2, y % 2);
            if a ^ b == s & t {
                "1/2"
            } else {
                "0/1"
            }
        })
        .collect();
    json!({ "space": "bits×bits", "weights": weights })
}

#[test]
fn pr_box_is_nonsignaling_and_entangled() {
    let d = Dir::new();
    let bits = d.build("b.json", &["bits"]);
    let pr = d.write("pr.json", &pr_box());
    let o = tsl(&["check", "--nonsignaling", &bits, &bits, &pr]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["status"], "verified");
    let o = tsl(&["check", "--separable", &bits, &bits, &pr]);
    assert_eq!(code(&o), 1);
    assert!(stdout_json(&o)["witness"]["normal"].is_array());

    let uniform = d.write("u.json", &json!({ "space": "bits×bits", "weights": vec!["1/4"; 16] }));
    assert_eq!(code(&tsl(&["check", "--separable", &bits, &bits, &uniform])), 0);
}

#[test]
fn morphism_checks() {
    let d = Dir::new();
    let g = d.build("g.json", &["grid", "--n", "2"]);
    let id = d.write("id.json", &json!({ "images": [[0], [1], [2], [3]] }));
    assert_eq!(code(&tsl(&["check", "--morphism", &g, &g, &id])), 0);
    let collapse = d.write("c.json", &json!({ "images": [[0], [0], [2], [2]] }));
    let o = tsl(&["check", "--morphism", &g, &g, &collapse]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["status"], "refuted");
}

#[test]
fn extension_tensor() {
    let o = tsl(&["product", "--ext-tensor", "--ext", "graph", "--na", "2", "--nb", "2"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["outcomes"].as_array().unwrap().len(), 16);
    assert_eq!(v["tests"].as_array().unwrap().len(), 24);
}

#[test]
fn ext_properties() {
    assert_eq!(code(&tsl(&["ext", "--ext", "graph", "--regular"])), 0);
    let o = tsl(&["ext", "--ext", "grid", "--regular"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["regular"], false);
    assert_eq!(code(&tsl(&["ext", "--ext", "grid", "--reasonable"])), 1);
    assert_eq!(code(&tsl(&["ext", "--ext", "trivial", "--laws", "--max-n", "3"])), 0);
}

#[test]
fn verify_suites() {
    let d = Dir::new();
    for (ext, n) in [("graph", "3"), ("grid", "3")] {
        let report = d.s(&format!("{ext}.json"));
        let o = tsl(&["verify", "paper", "--ext", ext, "--max-n", n, "--report", &report]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let r = read(&report);
        assert_eq!(r["suite"], "claims");
        let ids: Vec<&str> = r["items"].as_array().unwrap().iter().map(|i| i["claim_id"].as_str().unwrap()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
    let o = tsl(&["verify", "products", "--max-n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["items"].as_array().unwrap().len(), 8);
}

#[test]
fn unexpected_refutations_fail_verify() {
    let d = Dir::new();
    let none = d.write("none.json", &json!({}));
    let o = tsl(&["verify", "extension-laws", "--ext", "grid", "--max-n", "3", "--expectations", &none]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unexpected"));
}

#[test]
fn errors_exit_two() {
    let d = Dir::new();
    assert_eq!(code(&tsl(&["states", &d.s("missing.json")])), 2);
    let bad = d.write("bad.json", &json!({ "name": "x", "outcomes": ["a"], "tests": [[3]] }));
    assert_eq!(code(&tsl(&["states", &bad])), 2);
    let extra = d.write("extra.json", &json!({ "name": "x", "outcomes": ["a"], "tests": [[0]], "more": 1 }));
    assert_eq!(code(&tsl(&["states", &extra])), 2);
    assert_eq!(code(&tsl(&["build", "grid"])), 2);
    assert_eq!(code(&tsl(&["bogus"])), 2);
    assert_eq!(code(&tsl(&["verify", "paper", "--max-n", "1"])), 2);
}
