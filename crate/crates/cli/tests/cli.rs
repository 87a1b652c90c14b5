use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qpoincare")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn nf_reorients_the_commutator_relation() {
    let (code, out, _) = run(&["nf", "--regime", "unit-circle", "--expr", "delta*alpha"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "alpha*delta - (1/t)*(q - 1/q)*beta*gamma");
    let (_, out, _) = run(&["nf", "--regime", "unit-circle", "--expr", "star(beta)"]);
    assert_eq!(out.trim(), "gamma");
    let (_, out, _) = run(&["nf", "--regime", "unit-circle", "--expr", "[alpha, delta] - (1/t)*(q - 1/q)*beta*gamma"]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn nf_reaches_crossed_and_braided_generators() {
    let (code, out, _) = run(&["nf", "--regime", "unit-circle", "--expr", "x[1,1]'*h[11,12]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "h11_12*alpha'");
    let (code, out, _) = run(&["nf", "--regime", "unit-circle", "--expr", "u[1,1]*alpha"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "u11*alpha");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--bogus"]).0, 2);
    assert_eq!(run(&["verify", "--regime", "elliptic"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "everything"]).0, 2);
    let (code, _, err) = run(&["nf", "--expr", "alpha/beta"]);
    assert_eq!(code, 2);
    assert!(err.contains("noncommutative"), "{}", err);
    assert_eq!(run(&["nf", "--expr", "omega"]).0, 2);
    assert_eq!(run(&["eval", "--q", "2,0"]).0, 2);
    assert_eq!(run(&["eval", "--regime", "real-q"]).0, 2);
}

#[test]
fn eval_at_a_fifth_root_passes() {
    let (code, out, err) =
        run(&["eval", "--q", "0.80902,0.58779", "--t", "2.0", "--samples", "5", "--tol", "1e-9", "--regime", "unit-circle"]);
    assert_eq!(code, 0, "{}", out);
    assert!(err.contains("projected"));
    assert_eq!(out.lines().filter(|l| l.starts_with("sample ")).count(), 5);
    assert!(!out.contains("FAIL"));
}

fn strip_timing(v: &mut serde_json::Value) {
    if let Some(checks) = v["checks"].as_array_mut() {
        for c in checks {
            c.as_object_mut().unwrap().remove("elapsed_ms");
        }
    }
}

#[test]
fn eval_is_deterministic_given_a_seed() {
    let args = ["eval", "--samples", "3", "--seed", "7", "--format", "json"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    let mut a: serde_json::Value = serde_json::from_str(&a).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&b).unwrap();
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(a, b);
    let (_, c, _) = run(&["eval", "--samples", "3", "--seed", "8", "--format", "json"]);
    let mut c: serde_json::Value = serde_json::from_str(&c).unwrap();
    strip_timing(&mut c);
    assert_ne!(a, c);
}

#[test]
fn json_report_schema() {
    let dir = std::env::temp_dir().join(format!("qpoincare-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) =
        run(&["verify", "--regime", "generic", "--suite", "pbw", "--format", "json", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), file["checks"].as_array().unwrap().len());
    assert_eq!(v["version"], 1);
    assert_eq!(v["regime"], "generic");
    let checks = v["checks"].as_array().unwrap();
    for c in checks {
        for k in ["check_id", "regime", "status", "elapsed_ms"] {
            assert!(c.get(k).is_some(), "missing {} in {}", k, c);
        }
    }
    let s = &v["summary"];
    assert_eq!(s["passed"].as_u64().unwrap() as usize + s["failed"].as_u64().unwrap() as usize + s["skipped"].as_u64().unwrap() as usize, checks.len());
    // The generic obstruction passes because it is nonzero.
    let obs = checks.iter().find(|c| c["check_id"] == "obstruction.aad.nonzero-generic").unwrap();
    assert_eq!(obs["status"], "pass");
    assert_eq!(obs["expect"], "nonzero");
    let ids: Vec<&str> = checks.iter().map(|c| c["check_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_unit_circle_reports_only_the_divisibility_failure() {
    let (code, out, _) = run(&["verify", "--regime", "unit-circle", "--suite", "all", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check_id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["compat.sigma=1.divisible-by-q^2-1"]);
    let n = v["checks"].as_array().unwrap().len();
    assert!((40..=120).contains(&n), "{} checks", n);
}

#[test]
fn other_commands_succeed() {
    for args in [
        &["relations", "--regime", "real-q"][..],
        &["relations", "--regime", "case2-", "--format", "json"],
        &["obstruction"],
        &["length", "--regime", "unit-circle"],
        &["verify", "--regime", "case2+", "--suite", "length"],
        &["verify", "--regime", "unit-circle", "--suite", "delta"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{:?}: {}{}", args, out, err);
    }
    let (_, out, _) = run(&["length", "--regime", "unit-circle"]);
    assert!(out.contains("c = -2/t^(1/2)"), "{}", out);
}
