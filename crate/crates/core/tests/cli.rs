use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn tileforce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tileforce")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: TempDir::new().unwrap(),
        }
    }

    fn gen(&self, name: &str, shape: &[&str]) -> PathBuf {
        let path = self.dir.path().join(name);
        let mut args = vec!["gen"];
        args.extend_from_slice(shape);
        args.extend(["--out", path.to_str().unwrap()]);
        let out = tileforce(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        path
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cell_count(args: &[&str]) -> usize {
    let out = tileforce(args);
    json(&out)["cells"].as_array().unwrap().len()
}

#[test]
fn gen_counts() {
    assert_eq!(cell_count(&["gen", "--shape", "square", "--n", "6"]), 36);
    assert_eq!(cell_count(&["gen", "--shape", "hexagon", "--a", "3", "--b", "4", "--c", "6"]), 108);
    assert_eq!(cell_count(&["gen", "--shape", "rectangle", "--m", "2", "--n", "7"]), 14);
    assert_eq!(tileforce(&["gen", "--shape", "square", "--n", "0"]).status.code(), Some(2));
    assert_eq!(tileforce(&["gen", "--shape", "square"]).status.code(), Some(2));
}

#[test]
fn gen_ascii() {
    let out = tileforce(&["gen", "--shape", "rectangle", "--m", "3", "--n", "2", "--format", "ascii"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "###\n###\n");
}

#[test]
fn check_verdicts() {
    let w = Workspace::new();
    let sq = w.gen("sq6.json", &["--shape", "square", "--n", "6"]);
    let out = tileforce(&["check", s(&sq)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["tiles"], 18);

    let odd = w.gen("r13.json", &["--shape", "rectangle", "--m", "1", "--n", "3"]);
    assert_eq!(tileforce(&["check", s(&odd)]).status.code(), Some(1));

    let asym = w.gen("asym.json", &["--shape", "hexagon", "--a", "2", "--b", "2", "--c", "2", "--t", "1"]);
    let out = tileforce(&["check", s(&asym)]);
    assert_eq!(out.status.code(), Some(1));
    let body = json(&out);
    assert_eq!(body["tileable"], false);
    assert_eq!(body["net"], 3);
}

#[test]
fn heights_and_bound() {
    let w = Workspace::new();
    for (name, shape, bound) in [
        ("sq6.json", vec!["--shape", "square", "--n", "6"], 3),
        ("hex.json", vec!["--shape", "hexagon", "--a", "3", "--b", "4", "--c", "6"], 3),
        ("sq2.json", vec!["--shape", "square", "--n", "2"], 1),
    ] {
        let path = w.gen(name, &shape);
        for cmd in ["heights", "bound"] {
            let out = tileforce(&[cmd, s(&path)]);
            assert_eq!(out.status.code(), Some(0));
            assert_eq!(json(&out)["lower_bound"], bound, "{name}");
        }
    }
    let sq2 = w.gen("sq2.json", &["--shape", "square", "--n", "2"]);
    let body = json(&tileforce(&["heights", s(&sq2)]));
    assert_eq!(body["hmax"]["1,1"], 2);
    assert_eq!(body["hmin"]["1,1"], -2);
    assert_eq!(body["g"]["1,1"], 4);
    assert_eq!(body["argmax"], serde_json::json!([1, 1]));
}

#[test]
fn force_modes() {
    let w = Workspace::new();
    let sq4 = w.gen("sq4.json", &["--shape", "square", "--n", "4"]);
    let body = json(&tileforce(&["force", "--exact", s(&sq4)]));
    assert_eq!(body["f"], 2);
    assert_eq!(body["optimality"], "bound-met");

    let hex = w.gen("hex.json", &["--shape", "hexagon", "--a", "2", "--b", "2", "--c", "2"]);
    assert_eq!(json(&tileforce(&["force", "--exact", s(&hex)]))["f"], 2);

    let sq10 = w.gen("sq10.json", &["--shape", "square", "--n", "10"]);
    assert_eq!(json(&tileforce(&["force", "--upper", s(&sq10)]))["f"], 5);
    assert_eq!(tileforce(&["force", "--exact", s(&sq10)]).status.code(), Some(3));
    assert_eq!(tileforce(&["force", s(&sq4)]).status.code(), Some(2));
    assert_eq!(tileforce(&["force", "--exact", "--max-tilings", "10", s(&sq4)]).status.code(), Some(3));
}

#[test]
fn excess_values() {
    let w = Workspace::new();
    for (name, shape, want) in [
        ("sq6.json", vec!["--shape", "square", "--n", "6"], 3),
        ("hex.json", vec!["--shape", "hexagon", "--a", "2", "--b", "2", "--c", "2"], 2),
        ("dom.json", vec!["--shape", "rectangle", "--m", "1", "--n", "2"], 0),
    ] {
        let path = w.gen(name, &shape);
        assert_eq!(json(&tileforce(&["excess", s(&path)]))["min_max_excess"], want, "{name}");
    }
    let big = w.gen("sq8.json", &["--shape", "square", "--n", "8"]);
    assert_eq!(tileforce(&["excess", s(&big)]).status.code(), Some(3));
}

#[test]
fn render_outputs() {
    let w = Workspace::new();
    let sq2 = w.write("sq2.txt", "##\n##\n");
    let out = tileforce(&["render", s(&sq2), "--target", "ascii", "--tiling", "min"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ab\nab\n");
    let out = tileforce(&["render", s(&sq2), "--target", "ascii", "--tiling", "max"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "aa\nbb\n");

    let hex = w.gen("hex.json", &["--shape", "hexagon", "--a", "1", "--b", "1", "--c", "1"]);
    assert_eq!(tileforce(&["render", s(&hex), "--target", "ascii"]).status.code(), Some(2));
    let svg = w.dir.path().join("hex.svg");
    let out = tileforce(&["render", s(&hex), "--tiling", "upper", "--forcing-set", "--out", s(&svg)]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("polygon")).count(), 3 + 1);
}

#[test]
fn verify_reports() {
    let w = Workspace::new();
    for (name, shape) in [
        ("sq4.json", vec!["--shape", "square", "--n", "4"]),
        ("hex.json", vec!["--shape", "hexagon", "--a", "2", "--b", "2", "--c", "2"]),
    ] {
        let path = w.gen(name, &shape);
        let out = tileforce(&["verify", s(&path)]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(json(&out)["pass"], true);
    }
    let ring = w.write("ring.txt", "###\n#.#\n###\n");
    assert_eq!(tileforce(&["verify", s(&ring)]).status.code(), Some(2));
}

#[test]
fn deterministic_and_thread_capped() {
    let w = Workspace::new();
    let sq6 = w.gen("sq6.json", &["--shape", "square", "--n", "6"]);
    let first = tileforce(&["heights", s(&sq6)]).stdout;
    let capped = Command::new(env!("CARGO_BIN_EXE_tileforce"))
        .args(["heights", s(&sq6)])
        .env("TILEFORCE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first, capped.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_tileforce"))
        .args(["heights", s(&sq6)])
        .env("TILEFORCE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn unreadable_input() {
    assert_eq!(tileforce(&["check", "/nonexistent/region.json"]).status.code(), Some(2));
    let w = Workspace::new();
    let broken = w.write("broken.json", "{\"lattice\":\"square\"");
    assert_eq!(tileforce(&["check", s(&broken)]).status.code(), Some(2));
}
