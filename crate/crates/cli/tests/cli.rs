//! End-to-end tests of the `laxcat` binary: every exit-code path, report
//! shape, and byte stability of the canonical output.

use assert_cmd::Command;
use predicates::prelude::*;
use tempfile::TempDir;

fn laxcat() -> Command {
    Command::cargo_bin("laxcat").unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn z2_smc_doc() -> String {
    let c = laxcat::corpus::discrete_group_smc(&[2]);
    serde_json::to_string(&laxcat::json::smc_to_doc(&c)).unwrap()
}

fn instance_doc() -> String {
    let (dom, cod, phi) = laxcat::corpus::z2_to_chain_lax();
    serde_json::to_string(&laxcat::json::laxlimit_instance_to_doc(&dom, &cod, &phi))
        .unwrap()
}

fn strat_doc() -> String {
    let s = laxcat::corpus::theta_example_stratification();
    serde_json::to_string(&laxcat::json::stratification_to_doc(&s)).unwrap()
}

fn stdout_json(cmd: &mut Command) -> serde_json::Value {
    let out = cmd.output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn validate_lawful_smc_exits_zero() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z2.json", &z2_smc_doc());
    laxcat()
        .args(["validate", &path])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"ok\":true"));
}

#[test]
fn validate_broken_table_exits_one_and_names_the_law() {
    // Break an identity-law composite in the superline: id∘f must be f.
    let c = laxcat::corpus::superline_smc();
    let mut doc = laxcat::json::smc_to_doc(&c);
    let ids: Vec<String> = doc.identities.values().cloned().collect();
    let entry = doc
        .composition
        .iter_mut()
        .find(|[g, f, r]| ids.contains(g) && f == r && !ids.contains(f))
        .expect("an identity-precomposition entry with a non-identity f");
    entry[2] = entry[0].clone();
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.json", &serde_json::to_string(&doc).unwrap());
    laxcat()
        .args(["validate", &path])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("\"ok\":false"))
        .stdout(predicate::str::contains("unit law"));
}

#[test]
fn validate_malformed_json_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.json", "{\"schema\": \"smc/v1\", nope");
    laxcat().args(["validate", &path]).assert().code(2);
}

#[test]
fn validate_unknown_key_exits_two() {
    let dir = TempDir::new().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&z2_smc_doc()).unwrap();
    v.as_object_mut().unwrap().insert("surprise".into(), 1.into());
    let path = write(&dir, "extra.json", &serde_json::to_string(&v).unwrap());
    laxcat().args(["validate", &path]).assert().code(2);
}

#[test]
fn missing_file_exits_two() {
    laxcat().args(["validate", "/nonexistent/nope.json"]).assert().code(2);
}

#[test]
fn dualizables_discrete_group_lists_every_object() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z2.json", &z2_smc_doc());
    let report = stdout_json(laxcat().args(["dualizables", &path]));
    let objects = report["objects"].as_array().unwrap();
    assert_eq!(objects.len(), 2);
    assert!(objects.iter().all(|o| o["oracle"] == true && o["agree"] == true));
}

#[test]
fn dualizables_instance_lists_exactly_the_unit_and_agrees() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let report =
        stdout_json(laxcat().args(["dualizables", &path, "--method", "both"]));
    assert_eq!(report["agree"], true);
    let listed: Vec<&str> = report["objects"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["criterion"] == true)
        .map(|o| o["object"].as_str().unwrap())
        .collect();
    assert_eq!(listed, ["(0,1,1<=1)"]);
}

#[test]
fn dualizables_stratification_agrees() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "strat.json", &strat_doc());
    let report =
        stdout_json(laxcat().args(["dualizables", &path, "--method", "both"]));
    assert_eq!(report["agree"], true);
    assert!(!report["objects"].as_array().unwrap().is_empty());
}

#[test]
fn dualizables_size_limit_exits_three() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    laxcat()
        .args(["dualizables", &path, "--max-objects", "2"])
        .assert()
        .code(3)
        .stdout(predicate::str::contains("SizeLimit"));
}

#[test]
fn reports_are_byte_stable_and_jobs_invariant() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let a = laxcat().args(["dualizables", &path]).output().unwrap().stdout;
    let b = laxcat().args(["dualizables", &path]).output().unwrap().stdout;
    let c = laxcat()
        .args(["dualizables", &path, "--jobs", "4"])
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn check_reports_detailed_verdicts() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let report = stdout_json(laxcat().args(["check", &path]));
    assert_eq!(report["agree"], true);
    let first = &report["objects"][0];
    assert!(first["detail"]["two_object_matches_all_w"].as_bool().unwrap());
}

#[test]
fn check_single_object_filter() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let report = stdout_json(laxcat().args([
        "check",
        &path,
        "--object",
        "(0,1,1<=1)",
    ]));
    assert_eq!(report["objects"].as_array().unwrap().len(), 1);
    laxcat()
        .args(["check", &path, "--object", "no-such-object"])
        .assert()
        .code(2);
}

#[test]
fn laxlimit_emits_a_lawful_smc_document() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let out = laxcat().args(["laxlimit", &path]).output().unwrap();
    assert!(out.status.success());
    let emitted = write(&dir, "limit.json", std::str::from_utf8(&out.stdout).unwrap());
    laxcat()
        .args(["validate", &emitted])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"schema\":\"smc/v1\""));
}

#[test]
fn links_emits_one_instance_per_strict_pair() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "strat.json", &strat_doc());
    let report = stdout_json(laxcat().args(["links", &path]));
    let links = report["links"].as_array().unwrap();
    assert_eq!(links.len(), 3); // strict pairs of the 3-chain
    // Each emitted instance must itself validate.
    for link in links {
        let text = serde_json::to_string(&link["instance"]).unwrap();
        let p = write(&dir, "link.json", &text);
        laxcat().args(["validate", &p]).assert().success();
    }
}

#[test]
fn peel_verifies_the_comparison() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "strat.json", &strat_doc());
    let report = stdout_json(laxcat().args(["peel", &path]));
    assert_eq!(report["strict_monoidal_bijection"], true);
    assert_eq!(report["sections"], report["peeled_objects"]);
}

#[test]
fn peel_non_chain_exits_one() {
    let s = laxcat::corpus::identity_stratification(
        laxcat::corpus::v_poset(),
        laxcat::corpus::chain_min_smc(2),
    );
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "v.json",
        &serde_json::to_string(&laxcat::json::stratification_to_doc(&s)).unwrap(),
    );
    laxcat()
        .args(["peel", &path])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("NotAChain"));
}

#[test]
fn bord_eval_identity_and_circle() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z2.json", &z2_smc_doc());
    let datum = ["--x", "1", "--dual", "1", "--ev", "0<=0", "--coev", "0<=0"];
    // Identity bordism evaluates to the identity of x.
    let mut cmd = laxcat();
    cmd.args(["bord", "eval", &path]).args(datum).args([
        "--bordism",
        "src=+; tgt=+; arcs=(s1:t1)",
    ]);
    let report = stdout_json(&mut cmd);
    assert_eq!(report["morphism"], "1<=1");
    // The circle evaluates to the identity of the unit.
    let mut cmd = laxcat();
    cmd.args(["bord", "eval", &path]).args(datum).args([
        "--bordism",
        "src=; tgt=; arcs=; circles=1",
    ]);
    let report = stdout_json(&mut cmd);
    assert_eq!(report["morphism"], "0<=0");
}

#[test]
fn bord_eval_triangle_failure_exits_one() {
    // In the chain-min category the non-unit object is not dualizable, so
    // any candidate datum fails the triangles (or typing).
    let c = laxcat::corpus::chain_min_smc(2);
    let doc = serde_json::to_string(&laxcat::json::smc_to_doc(&c)).unwrap();
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chain.json", &doc);
    laxcat()
        .args(["bord", "eval", &path])
        .args(["--x", "0", "--dual", "0", "--ev", "0<=1", "--coev", "0<=1"])
        .args(["--bordism", "src=+; tgt=+; arcs=(s1:t1)"])
        .assert()
        .code(1);
}

#[test]
fn bord_eval_bad_literal_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z2.json", &z2_smc_doc());
    laxcat()
        .args(["bord", "eval", &path])
        .args(["--x", "1", "--dual", "1", "--ev", "0<=0", "--coev", "0<=0"])
        .args(["--bordism", "src=+?; tgt=+"])
        .assert()
        .code(2);
}

#[test]
fn roundtrip_unit_object_succeeds() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    let report = stdout_json(laxcat().args([
        "roundtrip",
        &path,
        "--object",
        "(0,1,1<=1)",
        "--bound",
        "4",
    ]));
    assert_eq!(report["round_trip"], true);
    assert_eq!(report["square_cells"], 31); // words of length ≤ 4
}

#[test]
fn roundtrip_non_dualizable_exits_one_with_stage() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    laxcat()
        .args(["roundtrip", &path, "--object", "(1,0,0<=0)"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("NotDualizable"));
}

#[test]
fn roundtrip_unknown_object_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "inst.json", &instance_doc());
    laxcat()
        .args(["roundtrip", &path, "--object", "(9,9,x)"])
        .assert()
        .code(2);
}

#[test]
fn seed_is_echoed_into_reports() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z2.json", &z2_smc_doc());
    let report = stdout_json(laxcat().args(["validate", &path, "--seed", "7"]));
    assert_eq!(report["seed"], 7);
}
