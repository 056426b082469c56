use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brauer-kit"));
    cmd.env("BRAUER_KIT_COLOR", "never");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fixtures() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"].iter().collect()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", stderr(out));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn vigenere_both_ways() {
    let out = run(&[
        "encrypt",
        "--system",
        "vigenere",
        "--key",
        "MDPI",
        "classicalcryptography",
    ]);
    assert_eq!(stdout(&out), "OOPAELRIXFGGBWDODDEPK\n");
    let out = run(&[
        "decrypt",
        "--system",
        "vigenere",
        "--key",
        "MDPI",
        "OOPAELRIXFGGBWDODDEPK",
    ]);
    assert_eq!(stdout(&out), "CLASSICALCRYPTOGRAPHY\n");
}

#[test]
fn text_from_stdin_and_strip() {
    let mut child = bin()
        .args(["encrypt", "--system", "vigenere", "--key", "B", "--strip"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a b, c!\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "BCD\n");
}

#[test]
fn transposition_and_route() {
    let out = run(&[
        "encrypt",
        "--system",
        "transposition",
        "--key",
        "3 4 1 2",
        "CRYPTOGRAPHY",
    ]);
    assert_eq!(stdout(&out), "YPCRGRTOHYAP\n");
    let out = run(&[
        "decrypt",
        "--system",
        "route",
        "--key",
        "4x3:snake-cols",
        "CRARGPYOHPTY",
    ]);
    assert_eq!(stdout(&out), "CRYPTOGRAPHY\n");
}

#[test]
fn analyze_a_ciphertext() {
    let v = json(&run(&[
        "analyze",
        "--ciphertext",
        "OOPAELRIXFGGBWDODDEPK",
        "--keylen",
        "4",
    ]));
    assert_eq!(v["dimLambda"], 35);
    assert_eq!(v["dimCenter"], 14);
    assert_eq!(v["loops"], 9);
    assert_eq!(v["ioc"]["numerator"], 18);
    assert_eq!(v["ioc"]["denominator"], 420);
    assert_eq!(v["brauerIoc"]["numerator"], 27);
}

#[test]
fn analyze_a_config_file() {
    let v = json(&run(&["analyze", "--config", &fixture("vigenere_split.config")]));
    assert_eq!(v["dimLambda"], 35);
    assert_eq!(v["source"], "config");
}

#[test]
fn analyze_scores_and_profiles() {
    let v = json(&run(&["analyze", "--score", &fixture("canon_a6.bsc")]));
    assert_eq!(v["dimLambda"], 109);
    assert_eq!(v["dimCenter"], serde_json::Value::Null);
    let v = json(&run(&["analyze", "--profile", &fixture("canon_qi.profile")]));
    assert_eq!(v["dimLambda"], 1565);
}

#[test]
fn strict_score_errors_are_validation_failures() {
    let out = run(&["analyze", "--score", &fixture("canon_qi.bsc")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).starts_with("brauer-kit: error[score]: "),
        "{}",
        stderr(&out)
    );
    let v = json(&run(&["analyze", "--score", &fixture("canon_qi.bsc"), "--lax"]));
    assert_eq!(v["warnings"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["encrypt", "--system", "enigma", "--key", "A", "HELLO"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("brauer-kit: error[usage]: unknown system"));
    assert_eq!(run(&["analyze", "--ciphertext", "ABCD"]).status.code(), Some(2));
    assert_eq!(
        run(&["analyze", "--config", "/nonexistent/x.config"]).status.code(),
        Some(2)
    );
    let out = bin()
        .env("BRAUER_KIT_COLOR", "bogus")
        .args(["score-check", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error[env]"));
}

#[test]
fn score_check_reports_a_summary() {
    let out = run(&["score-check", &fixture("canon_a6.bsc")]);
    assert!(stdout(&out).starts_with("ok: 9 measures, "), "{}", stdout(&out));
    let out = run(&["score-check", "--lax", &fixture("canon_qi.bsc")]);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("warning: ")).count(), 5);
}

#[test]
fn attack_recovers_the_key() {
    let plain = "THEREISNOTHINGMOREDIFFICULTTOTAKEINHANDMOREPERILOUSTOCONDUCTORMOREUNCERTAININITSSUCCESS\
                 THANTOTAKETHELEADINTHEINTRODUCTIONOFANEWORDEROFTHINGSBECAUSETHEINNOVATORHASFORENEMIES\
                 ALLTHOSEWHOHAVEDONEWELLUNDERTHEOLDCONDITIONSANDLUKEWARMDEFENDERSINTHOSEWHOMAYDOWELL\
                 UNDERTHENEWTHISCOOLNESSARISESPARTLYFROMFEAROFTHEOPPONENTSWHOHAVETHELAWSONTHEIRSIDE";
    let cipher = stdout(&run(&["encrypt", "--system", "vigenere", "--key", "LEMON", plain]));
    let v = json(&run(&["attack", cipher.trim()]));
    assert_eq!(v["keylength"], 5);
    assert_eq!(v["keyCandidates"][0]["key"], "LEMON");
    assert!(v["brauer"]["dimLambda"].as_u64().unwrap() > 0);
}

#[test]
fn fixtures_match_their_goldens() {
    let out = run(&["analyze", "--verify", &fixtures().to_string_lossy()]);
    assert!(out.status.success(), "{}{}", stdout(&out), stderr(&out));
    assert!(stdout(&out).lines().all(|l| l.starts_with("ok ")));
}

#[test]
fn verify_flags_a_drifted_golden() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixtures().join("vigenere_split.config"), dir.path().join("v.config")).unwrap();
    std::fs::write(dir.path().join("v.config.json"), "{}\n").unwrap();
    let out = run(&["analyze", "--verify", &dir.path().to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("MISMATCH"));
    assert!(run(&["analyze", "--verify", &dir.path().to_string_lossy(), "--bless"])
        .status
        .success());
    assert!(run(&["analyze", "--verify", &dir.path().to_string_lossy()])
        .status
        .success());
}

#[test]
fn graph_writes_svg_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("a6.svg");
    let js = dir.path().join("a6.json");
    let out = run(&[
        "graph",
        "--score",
        &fixture("canon_a6.bsc"),
        "--svg",
        &svg.to_string_lossy(),
        "--json",
        &js.to_string_lossy(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("<circle").count(), 14);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 16);
    let golden = std::fs::read_to_string(fixtures().join("canon_a6.bsc.graph.json")).unwrap();
    assert_eq!(std::fs::read_to_string(&js).unwrap(), golden);
}

#[test]
fn graph_edge_sidecar_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.txt");
    std::fs::write(&edges, "0 1\n").unwrap();
    let out = run(&[
        "graph",
        "--score",
        &fixture("canon_a6.bsc"),
        "--edges",
        &edges.to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rest"), "{}", stderr(&out));
    std::fs::write(&edges, "1 4\n").unwrap();
    let v = json(&run(&[
        "graph",
        "--score",
        &fixture("canon_a6.bsc"),
        "--edges",
        &edges.to_string_lossy(),
    ]));
    assert!(v["edges"].as_array().unwrap().contains(&serde_json::json!([1, 4])));
    let v = json(&run(&[
        "graph",
        "--score",
        &fixture("canon_a6.bsc"),
        "--orientation",
        "reversed",
    ]));
    assert_eq!(v["points"][1]["y"], -1);
}

#[test]
fn output_is_deterministic() {
    let args = ["analyze", "--score", &fixture("canon_crab.bsc"), "--lax"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["graph", "--score", &fixture("slym.bsc"), "--lax"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
