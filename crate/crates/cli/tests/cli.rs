use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_holoprime"))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn dims(v: &Value) -> Vec<u64> {
    v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dim"].as_u64().unwrap())
        .collect()
}

#[test]
fn decompose_prints_components() {
    let out = run(&["decompose", "--group", "spin7", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(dims(&json_of(&out)), vec![7, 21]);

    let out = run(&["decompose", "--group", "g2", "--degree", "3"]);
    assert_eq!(dims(&json_of(&out)), vec![1, 7, 27]);

    let out = run(&["decompose", "--group", "g2", "--degree", "0"]);
    assert_eq!(dims(&json_of(&out)), vec![1]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["decompose", "--group", "g2", "--degree", "8"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--group", "e8", "--degree", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "r5", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["check-prime", "/definitely/missing.json"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 4, \"k\": 2, \"basis\": [[\"1\"]]}").unwrap();
    assert_eq!(run(&["check-prime", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn ambient_cap_from_environment() {
    let out = bin()
        .args(["mp-search", "--n", "8"])
        .env("HOLOPRIME_MAX_DIM", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["check-prime", &fixture("su3.json")])
        .env("HOLOPRIME_MAX_DIM", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_r5_reports_product_dimension() {
    let out = run(&["verify", "--suite", "r5", "--samples", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let items = v["suites"][0]["items"].as_array().unwrap();
    let product = items.iter().find(|i| i["id"] == "r5.Λ+(W).product_dim").unwrap();
    assert_eq!(product["details"]["dim"], 7);
    assert!(items.iter().all(|i| i["passed"] == true));
}

#[test]
fn verify_spin7_writes_p2_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("spin7.json");
    let out = run(&[
        "verify",
        "--suite",
        "spin7",
        "--samples",
        "5",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let p2: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("p2_matrix.json")).unwrap()).unwrap();
    assert_eq!(p2["blade_adapted"]["rank"], 27);
    assert_eq!(p2["projected_blade"]["rank"], 27);
    assert_eq!(p2["blade_adapted"]["entries"].as_array().unwrap().len(), 27);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify", "--suite", "all", "--seed", "1", "--samples", "10"]);
    let b = run(&["verify", "--suite", "all", "--seed", "1", "--samples", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let md = run(&["verify", "--suite", "koszul", "--samples", "10", "--format", "markdown"]);
    assert!(String::from_utf8_lossy(&md.stdout).starts_with("# Suite `koszul`"));
}

#[test]
fn claim_map_lists_every_check() {
    let out = run(&["verify", "--suite", "g2", "--samples", "2", "--claim-map"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("g2.dims\t")));
    assert!(text.lines().all(|l| l.contains('\t')));
}

#[test]
fn check_prime_modes() {
    let out = run(&["check-prime", &fixture("g2_lambda2_14.json"), "--transitive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"]["status"], "certified_prime");

    let out = run(&["check-prime", &fixture("r4_omega12.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["verdict"]["status"], "not_prime");
    assert!(v["verdict"]["witness"].is_object());

    let out = run(&["check-prime", &fixture("su3.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"]["status"], "evidence_only");

    let out = run(&["check-prime", &fixture("su3.json"), "--mode", "numeric", "--samples", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json_of(&out)["numeric"]["minimum"].as_f64().unwrap() > 0.1);

    let out = run(&["check-prime", &fixture("r4_omega12.json"), "--mode", "witness"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_complete_prime_cases() {
    let out = run(&["check-complete-prime", "--e", &fixture("g2_star_phi.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["exact"], true);

    let out = run(&["check-complete-prime", "--e", &fixture("g2_lambda2_7.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["first_report"]["exact_at"], serde_json::json!([true, true, false]));

    let out = run(&[
        "check-complete-prime",
        "--f",
        &fixture("g2_lambda2_7.json"),
        "--e",
        &fixture("g2_lambda3_27.json"),
        "--lambda",
        "generic",
        "--samples",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dims"], serde_json::json!([7, 8, 1]));

    let out = run(&[
        "check-complete-prime",
        "--f",
        &fixture("r4_zero_lambda1.json"),
        "--e",
        &fixture("r4_full_lambda2.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "check-complete-prime",
        "--e",
        &fixture("g2_star_phi.json"),
        "--covector",
        "0,0,0,0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "check-complete-prime",
        "--e",
        &fixture("g2_star_phi.json"),
        "--covector",
        "1,-1/2,0,3,0,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn mp_search_and_replay() {
    let out = run(&["mp-search", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dimension"], 3);

    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = run(&["mp-search", "--n", "8", "--out", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(v["dimension"].as_u64().unwrap() >= 15);
    assert_eq!(run(&["mp-replay", cert.to_str().unwrap()]).status.code(), Some(0));

    // a certificate with an extension step, tampered so that α = λ∧ω^j ∈ L(λ)
    let out = run(&["mp-search", "--n", "7", "--out", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    v = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let step = &mut v["steps"][0];
    let n = step["n"].as_u64().unwrap();
    let l = step["lambdas"][0]["terms"][0]["idx"][0].as_u64().unwrap();
    let j = if l == 2 { 3 } else { 2 };
    let (a, b) = (l.min(j), l.max(j));
    step["alphas"][0] = serde_json::json!({
        "n": n, "k": 2, "terms": [{ "idx": [a, b], "num": "1", "den": "1" }]
    });
    let tampered = dir.path().join("tampered.json");
    std::fs::write(&tampered, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["mp-replay", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["replayed"], false);

    std::fs::write(&tampered, "{").unwrap();
    assert_eq!(run(&["mp-replay", tampered.to_str().unwrap()]).status.code(), Some(2));
}
