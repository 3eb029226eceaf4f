use std::process::{Command, Output};

use tdmc_core::report::ClassificationReport;

fn tdmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdmc"))
        .args(args)
        .env_remove("TDMC_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_s3_untwisted() {
    let v = stdout_json(&tdmc(&["classify", "--group", "S3", "--omega", "0", "--format", "json"]));
    assert_eq!(v["totals"]["pairs"], 28);
    assert_eq!(v["totals"]["fiber_functors"], 4);
    assert_eq!(v["admissible"].as_array().unwrap().len(), 22);
}

#[test]
fn omega_is_reduced_modulo_the_period() {
    let a = tdmc(&["classify", "--group", "S3", "--omega", "-1"]);
    let b = tdmc(&["classify", "--group", "S3", "--omega", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["omega_k"], 5);
}

#[test]
fn no_fiber_functors_at_order_two_twist() {
    let v = stdout_json(&tdmc(&["fiber-functors", "--group", "S3", "--omega", "3"]));
    assert_eq!(v, serde_json::json!([]));
}

#[test]
fn cohomology_of_s3() {
    let v = stdout_json(&tdmc(&["cohomology", "--group", "S3", "--degree", "3"]));
    assert_eq!(v["invariant_factors"], serde_json::json!([6]));
    let v = stdout_json(&tdmc(&["cohomology", "--group", "S3", "--degree", "2"]));
    assert_eq!(v["invariant_factors"], serde_json::json!([]));
}

#[test]
fn rank_of_one_pair() {
    let v = stdout_json(&tdmc(&["rank", "--group", "S3", "--subgroup", "H11", "--psi", ""]));
    assert_eq!(v["rank"], 8);
    assert_eq!(v["orbit_count"], 3);
}

#[test]
fn exit_codes() {
    let out = tdmc(&["classify", "--group", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(tdmc(&["classify"]).status.code(), Some(2));
    assert_eq!(tdmc(&["frobnicate"]).status.code(), Some(2));
    // H9 = S3 × e carries no trivialization once ω ≠ 0
    let out = tdmc(&["rank", "--group", "S3", "--omega", "1", "--subgroup", "H9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--group", "S3", "--omega", "2", "--format", "table"];
    let a = tdmc(&args);
    let b = tdmc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_round_trips() {
    let out = tdmc(&["classify", "--group", "S3", "--omega", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: ClassificationReport = serde_json::from_str(&text).unwrap();
    let original: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), original);
    assert_eq!(report.totals.pairs, 12);
}

#[test]
fn perm_spec_from_file() {
    let dir = std::env::temp_dir().join(format!("tdmc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    std::fs::write(&path, r#"{"type":"perm","degree":3,"generators":[[2,1,3],[2,3,1]]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let v = stdout_json(&tdmc(&["cohomology", "--group", &arg, "--degree", "3"]));
    assert_eq!(v["invariant_factors"], serde_json::json!([6]));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn max_order_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_tdmc"))
        .args(["classify", "--group", "S3"])
        .env("TDMC_MAX_ORDER", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_paper_passes_and_is_stable() {
    let a = tdmc(&["verify-paper"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let text = String::from_utf8(a.stdout.clone()).unwrap();
    assert!(text.trim_end().ends_with("0 failed"));
    assert_eq!(tdmc(&["verify-paper"]).stdout, a.stdout);
}

#[test]
fn verify_paper_reports_a_perturbed_table() {
    let mut golden: serde_json::Value = serde_json::from_str(tdmc_core::verify::S3_GOLDEN).unwrap();
    for class in golden["classes"].as_array_mut().unwrap() {
        if class["label"] == "H7" {
            class["rank"] = 9.into();
        }
    }
    let dir = std::env::temp_dir().join(format!("tdmc-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.json");
    std::fs::write(&path, golden.to_string()).unwrap();
    let out = tdmc(&["verify-paper", "--golden", path.to_str().unwrap()]);
    let _ = std::fs::remove_dir_all(&dir);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let failures: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert!(failures.contains(&"FAIL rank H7: expected 9, found 10"), "{text}");
    assert!(failures.iter().all(|l| l.contains("H7")));
}
