use std::path::PathBuf;
use std::process::{Command, Output};

use boxtensor_core::actions::ActionSystem;
use boxtensor_core::catalog::klein_four_action;
use boxtensor_core::group::construct::klein_four;
use boxtensor_core::group::fingerprint;
use boxtensor_core::sweep::action_tables;
use boxtensor_core::tensor::{TensorFile, TensorResult};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxtensor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--output", "structured"];
    all.extend_from_slice(args);
    let o = run(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("json document"))
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn psi_ab_box_tensor() {
    let o = run(&["tensor", "--kind", "box", &path("psi_ab.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 8, identified as C4 x C2"), "{}", stdout(&o));
}

#[test]
fn routes_agree() {
    let o = run(&["tensor", "--kind", "box", "--route", "via-eta", &path("psi_ab.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 8, identified as C4 x C2"));
}

#[test]
fn psi_b_is_not_fully_compatible() {
    let o = run(&["check-compat", &path("psi_b.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("fully compatible: NO"));
    assert!(s.contains("witness fc1a: (a,a,a) gives a vs ab"), "{s}");
    let o = run(&["check-compat", &path("psi_ab.json")]);
    assert!(stdout(&o).contains("fully compatible: yes"));
}

#[test]
fn coset_limit_is_inconclusive() {
    let o = run(&["--max-cosets", "4", "tensor", "--kind", "box", &path("psi_ab.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("high-water mark"));
    let (code, doc) = structured(&["--max-cosets", "4", "tensor", "--kind", "box", &path("psi_ab.json")]);
    assert_eq!(code, 3);
    assert_eq!(doc["status"], "inconclusive");
}

#[test]
fn invalid_input_exits_two() {
    // a bare group file is not an action system
    let o = run(&["tensor", "--kind", "box", &path("groups/c2.json")]);
    assert_eq!(o.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = run(&["check-compat", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check-compat", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["tensor", "--kind", "nope", &path("psi_ab.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn box_on_incompatible_system_is_rejected() {
    let o = run(&["tensor", "--kind", "bl", &path("psi_b.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structured_tensor_round_trips() {
    let (code, doc) = structured(&["tensor", "--kind", "box", &path("psi_ab.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "tensor");
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["result"]["name"], "C4 x C2");
    let file: TensorFile = serde_json::from_value(doc["result"]["tensor"].clone()).unwrap();
    let stored = file.fingerprint.clone();
    let t = TensorResult::from_file(file).unwrap();
    assert_eq!(t.order(), 8);
    assert_eq!(fingerprint(&t.group), stored);

    // written to disk and read back through a temporary file
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.json");
    std::fs::write(&p, serde_json::to_string(&t.to_file()).unwrap()).unwrap();
    let back: TensorFile = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(TensorResult::from_file(back).unwrap(), t);
}

#[test]
fn fixture_matches_catalog_system() {
    let sys = ActionSystem::load(fixture("psi_ab.json")).unwrap();
    assert_eq!(sys.sigma_g(), &klein_four_action(3));
}

#[test]
fn klein_four_equal_sweep() {
    let (code, doc) = structured(&[
        "sweep",
        "--g",
        &path("groups/v4.json"),
        "--h",
        &path("groups/v4.json"),
        "--family",
        "equal",
        "--box-always",
    ]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    let tables = action_tables(&klein_four(), &klein_four()).unwrap();
    let order_at = |i: usize| {
        let row = rows.iter().find(|r| r["index"][0] == i).unwrap();
        row["box"]["order"].as_u64().unwrap()
    };
    assert_eq!(order_at(0), 16);
    // the three actions with a and b acting alike
    for (fixed, order) in [(3, 8), (2, 4), (1, 4)] {
        let i = tables.iter().position(|t| t == &klein_four_action(fixed)).unwrap();
        assert_eq!(order_at(i), order, "fixed {fixed}");
    }
}

#[test]
fn small_sweeps() {
    let o = run(&["sweep", "--g", &path("groups/c2.json"), "--h", &path("groups/c2.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("family all: 1 rows"));
    let (code, doc) = structured(&[
        "sweep",
        "--g",
        &path("groups/trivial.json"),
        "--h",
        &path("groups/s3.json"),
        "--family",
        "conjugation",
    ]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["box"]["order"], 1);
}

#[test]
fn verify_checks_pass_on_psi_ab() {
    for check in ["prop23", "identities", "expansions", "thm42", "cyclic-derivative", "crossed-module"] {
        let o = run(&["verify", "--check", check, &path("psi_ab.json")]);
        assert_eq!(o.status.code(), Some(0), "{check}: {}", stdout(&o));
    }
}

#[test]
fn homology_of_inversion_action() {
    let (code, doc) = structured(&["homology", &path("c2_c4_inversion.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["h1_name"], "C2");
    assert_eq!(doc["result"]["h0_name"], "C2");
    assert_eq!(doc["result"]["report"]["a_prime_order"], 1);
}

#[test]
fn eta_and_identify() {
    let o = run(&["eta", &path("psi_ab.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("commutator subgroup: order 8"));
    let o = run(&["identify", &path("groups/d4.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order 8"));
}
