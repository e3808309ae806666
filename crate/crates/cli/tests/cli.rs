use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const GAUSSIAN_2X2: &str = r#"{"kind":"matrix","size":2,"base":"gaussian_rational","involution":"transpose"}"#;
const INTEGER_4X4: &str = r#"{"kind":"matrix","size":4,"base":"integer","involution":"transpose"}"#;
const Z4: &str = r#"{"kind":"modular","modulus":4,"involution":"identity"}"#;
const KLEIN: &str = r#"{"kind":"group_ring","p":3,"group":"klein4","involution":"swap_ab"}"#;
const F5_SQUARED: &str =
    r#"{"kind":"product","factor":{"kind":"modular","modulus":5,"involution":"identity"},"involution":"swap"}"#;
const Q_SQUARED: &str = r#"{"kind":"product","factor":{"kind":"matrix","size":1,"base":"rational","involution":"identity"},"involution":"swap"}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }
}

fn mwg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwg")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn analyze(ring: &str, element: &str, extra: &[&str]) -> Output {
    let ws = Workspace::new();
    let r = ws.file("ring.json", ring);
    let e = ws.file("element.json", element);
    let mut args = vec!["analyze", "--ring", path(&r), "--element", path(&e), "--stable"];
    args.extend_from_slice(extra);
    mwg(&args)
}

#[test]
fn analyze_two_inverse_example() {
    let out = analyze(GAUSSIAN_2X2, r#"[["1","0"],["i","0"]]"#, &["--m", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let o = &v["orders"][0];
    assert_eq!(o["m"], 1);
    assert_eq!(o["exists"], true);
    assert_eq!(o["unique"], false);
    assert_eq!(o["size"]["kind"], "dimension");
    assert_eq!(o["size"]["value"], 1);
    assert_eq!(v["element"], "[[1,0],[i,0]]");
}

#[test]
fn analyze_four_by_four_example() {
    let a = r#"[["1","0","0","0"],["1","0","1","0"],["0","0","0","2"],["0","0","0","0"]]"#;
    let v = json(&analyze(INTEGER_4X4, a, &["--m", "1,2"]));
    assert_eq!(v["drazin"]["index"], 3);
    assert_eq!(v["drazin"]["inverse"], "[[1,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]");
    assert_eq!(v["orders"][0]["exists"], false);
    assert_eq!(v["orders"][1]["exists"], true);
}

#[test]
fn analyze_zero_matrix() {
    let v = json(&analyze(GAUSSIAN_2X2, "[[0,0],[0,0]]", &["--m", "0,1"]));
    for o in v["orders"].as_array().unwrap() {
        assert_eq!(o["exists"], true);
        assert_eq!(o["canonical"], "[[0,0],[0,0]]");
    }
}

#[test]
fn analyze_group_ring_and_product_elements() {
    let v = json(&analyze(KLEIN, r#"{"e":"2","a":"1","b":"0","c":"0"}"#, &["--m", "1", "--group-ep"]));
    assert_eq!(v["element"], "2e+a");
    assert_eq!(v["drazin"]["index"], 1);
    assert_eq!(v["group_ep"]["applicable"], true);
    let v = json(&analyze(F5_SQUARED, r#"["1","0"]"#, &["--m", "0"]));
    assert_eq!(v["element"], "(1,0)");
    let v = json(&analyze(Z4, "\"2\"", &["--m", "1", "--group-ep"]));
    assert_eq!(v["group_ep"]["a2"], "2");
    assert_eq!(v["group_ep"]["nilpotency_index"], 2);
}

#[test]
fn reports_are_deterministic_with_fixed_key_order() {
    let first = analyze(GAUSSIAN_2X2, "[[1,0],[i,0]]", &[]);
    let second = analyze(GAUSSIAN_2X2, "[[1,0],[i,0]]", &[]);
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let keys = ["\"ring\"", "\"element\"", "\"drazin\"", "\"orders\""];
    let positions: Vec<_> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert!(!text.contains("timings"));
}

#[test]
fn timings_only_without_stable() {
    let ws = Workspace::new();
    let r = ws.file("ring.json", Z4);
    let e = ws.file("element.json", "3");
    let out = mwg(&["analyze", "--ring", path(&r), "--element", path(&e), "--compact"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(json_str(&text)["timings"]["drazin_ms"].is_number());
}

fn json_str(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn plain_rendering() {
    let out = analyze(GAUSSIAN_2X2, "[[1,0],[i,0]]", &["--m", "1", "--plain"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("drazin   index 1"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("1  true    false   dimension 1")), "{text}");
}

#[test]
fn classify_reports() {
    let ws = Workspace::new();
    let z4 = ws.file("z4.json", Z4);
    let out = mwg(&["classify", "--ring", path(&z4)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["proper"], false);
    assert_eq!(v["weak_proper"], true);
    assert_eq!(v["idempotents_left_cancellable"], true);
    assert_eq!(v["witnesses"][0]["property"], "proper");
    assert_eq!(v["witnesses"][0]["element"], "2");
    assert_eq!(v["conditions"]["agree"], true);

    let f5 = ws.file("f5.json", F5_SQUARED);
    let v = json(&mwg(&["classify", "--ring", path(&f5)]));
    assert_eq!(v["weak_proper"], true);
    assert_eq!(v["idempotents_left_cancellable"], false);
    let w: Vec<_> = v["witnesses"].as_array().unwrap().iter().filter(|w| w["property"] == "idempotents_left_cancellable").collect();
    assert_eq!(w[0]["element"], "(1,0)");

    let klein = ws.file("klein.json", KLEIN);
    let quiet = json(&mwg(&["classify", "--ring", path(&klein)]));
    let verbose = json(&mwg(&["classify", "--ring", path(&klein), "--verbose"]));
    assert_eq!(quiet["witnesses"][0]["element"], "2e+a");
    assert!(verbose["witnesses"].as_array().unwrap().len() > quiet["witnesses"].as_array().unwrap().len());

    let out = mwg(&["classify", "--ring", path(&klein), "--plain"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("(agree)"));
}

#[test]
fn examples_command() {
    let out = mwg(&["examples"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");

    let out = mwg(&["examples", "--corrupt", "m4-drazin"]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 1);
    assert!(text.contains("FAIL  m4-drazin"), "{text}");

    let out = mwg(&["examples", "--filter", "no-such-fixture"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn check_command() {
    let ws = Workspace::new();
    let r = ws.file("ring.json", GAUSSIAN_2X2);
    let a = ws.file("a.json", "[[1,0],[i,0]]");
    let x2 = ws.file("x2.json", r#"[["0","-i"],["0","1"]]"#);
    let b = ws.file("b.json", "[[0,1],[0,0]]");
    let good = mwg(&["check", "--ring", path(&r), "--element", path(&a), "--candidate", path(&x2), "--m", "1", "--k", "1"]);
    assert_eq!(code(&good), 0);
    let v = json(&good);
    for eq in ["power", "idempotent", "weighted", "hermitian"] {
        assert_eq!(v["equations"][eq], true, "{eq}");
    }
    let bad = mwg(&["check", "--ring", path(&r), "--element", path(&a), "--candidate", path(&b), "--m", "1", "--k", "1"]);
    assert_eq!(code(&bad), 1);
    assert_eq!(json(&bad)["equations"]["power"], false);

    let z = ws.file("z.json", INTEGER_4X4);
    let a4 = ws.file("a4.json", "[[1,0,0,0],[1,0,1,0],[0,0,0,2],[0,0,0,0]]");
    let d = ws.file("d.json", "[[1,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]");
    let out = mwg(&["check", "--ring", path(&z), "--element", path(&a4), "--candidate", path(&d), "--m", "3", "--k", "3", "--plain"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("verified"));
}

#[test]
fn parse_errors_exit_2() {
    let ws = Workspace::new();
    let good = ws.file("ring.json", GAUSSIAN_2X2);
    let broken = ws.file("broken.json", "{\"kind\":");
    let invalid = ws.file("invalid.json", r#"{"kind":"modular","modulus":0,"involution":"identity"}"#);
    let element = ws.file("e.json", "[[1,0],[i,0]]");
    let bad_element = ws.file("bad.json", "[[1,0],[i,");
    let wrong_shape = ws.file("shape.json", "[[1,0,0],[0,1,0],[0,0,1]]");
    let missing = ws.dir.path().join("missing.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", "--ring", path(&broken), "--element", path(&element)],
        vec!["analyze", "--ring", path(&invalid), "--element", path(&element)],
        vec!["analyze", "--ring", path(&good), "--element", path(&bad_element)],
        vec!["analyze", "--ring", path(&good), "--element", path(&wrong_shape)],
        vec!["analyze", "--ring", path(&missing), "--element", path(&element)],
        vec!["analyze", "--ring", path(&good), "--element", path(&element), "--m", "x"],
        vec!["check", "--ring", path(&good), "--element", path(&element), "--candidate", path(&element), "--m", "1", "--k", "0"],
        vec!["bogus"],
    ];
    for args in cases {
        let out = mwg(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unsupported_rings_exit_3() {
    let out = analyze(Q_SQUARED, r#"[[["1"]],[["0"]]]"#, &[]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
    let nilpotent_32 = r#"{"kind":"modular","modulus":32,"involution":"identity"}"#;
    let out = analyze(nilpotent_32, "2", &["--max-k", "2"]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 2"));
    assert_eq!(code(&analyze(nilpotent_32, "2", &["--max-k", "8"])), 0);
}

#[test]
fn enumerating_an_infinite_ring_exits_4() {
    let ws = Workspace::new();
    for ring in [GAUSSIAN_2X2, Q_SQUARED] {
        let r = ws.file("ring.json", ring);
        let out = mwg(&["classify", "--ring", path(&r)]);
        assert_eq!(code(&out), 4);
    }
}

#[test]
fn not_drazin_invertible_over_the_integers() {
    let v = json(&analyze(INTEGER_4X4, "[[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]", &["--group-ep"]));
    assert_eq!(v["drazin"]["exists"], false);
    assert!(v["orders"].as_array().unwrap().iter().all(|o| o["exists"] == false));
    assert_eq!(v["group_ep"]["applicable"], false);
}
