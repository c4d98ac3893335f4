use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;
use weilzeta::io::SeriesJson;
use weilzeta_core::eisenstein;
use weilzeta_core::exactnum::int;
use weilzeta_core::{GramLattice, Weight};

struct Sandbox(TempDir);

impl Sandbox {
    fn new() -> Self {
        Sandbox(tempfile::tempdir().unwrap())
    }

    fn gram(&self, name: &str, json: &str) -> PathBuf {
        let path = self.0.path().join(name);
        std::fs::write(&path, json).unwrap();
        path
    }
}

fn weilzeta(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weilzeta"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("WEILZETA_THREADS", t),
        None => cmd.env_remove("WEILZETA_THREADS"),
    };
    cmd.output().unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = weilzeta(args, None);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> (i32, String) {
    let out = weilzeta(args, None);
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn discform_reports_and_rejects() {
    let sb = Sandbox::new();
    let unary = sb.gram("a.json", r#"{"gram": [[2]]}"#);
    let text = run_ok(&["discform", unary.to_str().unwrap()]);
    assert_eq!(text.lines().next(), Some("signature (1,0), group Z/2, level 4"));
    let hyp = sb.gram("h.json", r#"{"gram": [[0, 1], [1, 0]]}"#);
    let text = run_ok(&["discform", hyp.to_str().unwrap()]);
    assert!(text.starts_with("signature (1,1), group trivial, level 1"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&run_ok(&["discform", unary.to_str().unwrap(), "--format", "json"])).unwrap();
    assert_eq!(json["level"], 4);
    assert_eq!(json["cosets"][1]["q"], "1/4");

    let odd = sb.gram("odd.json", r#"{"gram": [[1]]}"#);
    assert_eq!(code(&["discform", odd.to_str().unwrap()]).0, 3);
    let broken = sb.gram("broken.json", r#"{"gram": [[2]"#);
    assert_eq!(code(&["discform", broken.to_str().unwrap()]).0, 2);
    assert_eq!(code(&["discform", "/nonexistent/gram.json"]).0, 2);
}

#[test]
fn eisenstein_text_and_parity() {
    let sb = Sandbox::new();
    let hyp = sb.gram("h.json", r#"{"gram": [[0, 1], [1, 0]]}"#);
    let text = run_ok(&["eisenstein", hyp.to_str().unwrap(), "--weight", "2", "--prec", "4"]);
    assert!(text.contains("1 - 24q - 72q^2 - 96q^3 - 168q^4"), "{text}");
    let unary = sb.gram("a.json", r#"{"gram": [[2]]}"#);
    let text = run_ok(&["eisenstein", unary.to_str().unwrap(), "-w", "3/2", "-p", "2"]);
    assert!(text.contains("-4q^{3/4}"), "{text}");

    let (c, stderr) = code(&["eisenstein", unary.to_str().unwrap(), "--weight", "1", "--prec", "1"]);
    assert_eq!(c, 4);
    assert!(stderr.contains("2k + b+ - b- = 0 mod 4"), "{stderr}");
    assert_eq!(code(&["eisenstein", unary.to_str().unwrap(), "--weight", "1/3", "--prec", "1"]).0, 2);
    assert_eq!(code(&["eisenstein", unary.to_str().unwrap(), "--weight", "3/2", "--prec", "x"]).0, 2);
}

#[test]
fn json_round_trip_and_string_rationals() {
    let sb = Sandbox::new();
    let path = sb.gram("g.json", r#"{"gram": [[0, 2], [2, 0]]}"#);
    let out = run_ok(&["eisenstein", path.to_str().unwrap(), "--weight", "2", "--prec", "5/2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["weight"], "2");
    assert_eq!(value["prec"], "5/2");
    for c in value["coeffs"].as_array().unwrap() {
        assert!(c["n"].is_string() && c["c"].is_string());
        assert!(c["gamma"].as_array().unwrap().iter().all(|g| g.is_string()));
    }
    let parsed: SeriesJson = serde_json::from_str(&out).unwrap();
    let l = GramLattice::new(vec![vec![0, 2], vec![2, 0]]).unwrap();
    let expected = eisenstein::series(&l, &Weight::parse("2").unwrap(), &(int(5) / int(2))).unwrap();
    assert_eq!(parsed.to_series().unwrap(), expected);
}

#[test]
fn output_is_independent_of_threads() {
    let sb = Sandbox::new();
    let path = sb.gram("g.json", r#"{"gram": [[2, 0, 0], [0, 2, 0], [0, 0, -2]]}"#);
    let args = ["eisenstein", path.to_str().unwrap(), "--weight", "3/2", "--prec", "3", "--format", "json"];
    let one = weilzeta(&args, Some("1"));
    let four = weilzeta(&args, Some("4"));
    let default = weilzeta(&args, None);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
    assert_eq!(weilzeta(&args, Some("0")).status.code(), Some(2));
}

#[test]
fn output_file() {
    let sb = Sandbox::new();
    let path = sb.gram("g.json", r#"{"gram": [[2]]}"#);
    let target = sb.0.path().join("out.txt");
    // [[2]] is positive definite: the theta oracle needs a negative definite lattice
    assert_eq!(code(&["theta", path.to_str().unwrap(), "--prec", "2"]).0, 3);
    let neg = sb.gram("n.json", r#"{"gram": [[-2]]}"#);
    let stdout = run_ok(&["theta", neg.to_str().unwrap(), "--prec", "4", "-o", target.to_str().unwrap()]);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.contains("e_(0): 1 + 2q + 2q^4"), "{text}");
}

#[test]
fn corrections_json() {
    let sb = Sandbox::new();
    let hex = sb.gram("hex.json", r#"{"gram": [[-2, -1], [-1, -2]]}"#);
    let v: serde_json::Value =
        serde_json::from_str(&run_ok(&["corrections", hex.to_str().unwrap(), "--weight", "1", "--format", "json"])).unwrap();
    assert_eq!(v["weight1"][0]["gamma"], serde_json::json!(["0", "0"]));
    assert_eq!(v["weight1"][0]["add"], "1");

    let hyp = sb.gram("h.json", r#"{"gram": [[0, 1], [1, 0]]}"#);
    let v: serde_json::Value =
        serde_json::from_str(&run_ok(&["corrections", hyp.to_str().unwrap(), "--weight", "2", "--format", "json"])).unwrap();
    assert_eq!(v["weight2"][0]["A_times_pi"], "3");

    let unary = sb.gram("a.json", r#"{"gram": [[2]]}"#);
    let v: serde_json::Value =
        serde_json::from_str(&run_ok(&["corrections", unary.to_str().unwrap(), "--weight", "3/2", "--format", "json"])).unwrap();
    let shadow = v["shadow"].as_array().unwrap();
    assert!(shadow.iter().any(|e| e["gamma"] == serde_json::json!(["0"]) && e["n"] == "0" && e["a"] == "-24"), "{v}");
    assert!(shadow.iter().any(|e| e["gamma"] == serde_json::json!(["1/2"]) && e["n"] == "-1/4" && e["a"] == "-48"), "{v}");
}

#[test]
fn localfactor_and_hurwitz() {
    let sb = Sandbox::new();
    let hex = sb.gram("hex.json", r#"{"gram": [[-2, -1], [-1, -2]]}"#);
    let text = run_ok(&["localfactor", hex.to_str().unwrap(), "--p", "3"]);
    assert!(text.contains("numerator: 1\ndenominator: 1 - 3t\n"), "{text}");
    let text = run_ok(&["localfactor", hex.to_str().unwrap(), "--p", "2"]);
    assert!(text.contains("numerator: 1 + t\ndenominator: 1 - 4t^2\n"), "{text}");
    assert_eq!(code(&["localfactor", hex.to_str().unwrap(), "--p", "2", "--gamma", "1/3"]).0, 2);
    assert_eq!(run_ok(&["hurwitz", "3", "4", "0", "7/2"]), "H(3) = 1/3\nH(4) = 1/2\nH(0) = -1/12\nH(7/2) = 0\n");
}

#[test]
fn verify_suites() {
    let ok = run_ok(&["verify", "zagier"]);
    assert!(ok.starts_with("zagier: "), "{ok}");
    run_ok(&["verify", "jacobi4"]);
    let (c, stderr) = code(&["verify", "unknown-name"]);
    assert_eq!(c, 2);
    assert!(stderr.contains("available: "), "{stderr}");
}
