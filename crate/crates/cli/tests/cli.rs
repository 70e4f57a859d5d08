use std::path::Path;
use std::process::Command;

use diskdet_cli::run_with;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], env_tol: Option<&str>) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("diskdet").chain(args.iter().copied());
    let code = run_with(argv, env_tol, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

#[test]
fn det_free_field_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "free.json", r#"{"radius": 2.0, "profile": {"polynomial": []}}"#);
    let r = run(&["det", "--config", &cfg], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["total_re"], 0.0);
    assert_eq!(v["total_im"], 0.0);
    assert_eq!(v["index"], serde_json::json!([0, 0, 0]));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["kappa", "k", "bulk", "zero_mode_part", "free_re", "free_im", "total_re", "total_im", "index"]
    );
}

#[test]
fn det_gaussian_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "g.json", r#"{"radius": 1.0, "profile": {"polynomial": [0.0, -0.5]}}"#);
    let v = json(&run(&["det", "--config", &cfg], None).stdout);
    // interacting part -1/4 + 1 + ln(1 - 1/e); free part -ln 2 - iπ/2
    let interacting = -0.25 + 1.0 + (1.0 - (-1.0f64).exp()).ln();
    let total_re = interacting - std::f64::consts::LN_2;
    assert!((v["total_re"].as_f64().unwrap() - total_re).abs() < 1e-9, "{v}");
    assert!((v["total_im"].as_f64().unwrap() + std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    assert_eq!(v["k"], 0);
    let ratio = json(&run(&["det", "--config", &cfg, "--ratio-route"], None).stdout);
    assert!((ratio["total_re"].as_f64().unwrap() - total_re).abs() < 1e-8);
}

#[test]
fn det_output_is_byte_identical_and_honours_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("result.json");
    let text = format!(
        r#"{{"radius": 1.5, "profile": {{"tabulated": [[0, 0], [0.5, -0.1], [1.0, -0.4], [1.5, -0.9]]}}, "output_path": {}}}"#,
        serde_json::to_string(out.to_str().unwrap()).unwrap()
    );
    let cfg = write_config(dir.path(), "tab.json", &text);
    let first = run(&["det", "--config", &cfg], None);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert!(first.stdout.is_empty());
    let a = std::fs::read(&out).unwrap();
    assert_eq!(run(&["det", "--config", &cfg], None).code, 0);
    assert_eq!(a, std::fs::read(&out).unwrap());
    // --output wins over the config
    let other = dir.path().join("other.json");
    assert_eq!(run(&["det", "--config", &cfg, "--output", other.to_str().unwrap()], None).code, 0);
    assert_eq!(a, std::fs::read(&other).unwrap());
}

#[test]
fn index_example() {
    let r = run(&["index", "--kappa", "2.5"], None);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.stdout), serde_json::json!({"index": [3, 3, 3]}));
    let r = run(&["index", "--kappa", "-0.5"], None);
    assert_eq!(json(&r.stdout), serde_json::json!({"index": [0, 0, 0]}));
}

#[test]
fn zeros_csv() {
    let r = run(&["zeros", "--nu", "0", "--count", "3"], None);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "nu,l,zero");
    // scipy.special.jn_zeros(0, 3)
    let expected = [2.404825557695773, 5.520078110286311, 8.653727912911013];
    for (line, want) in lines[1..].iter().zip(expected) {
        let got: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!((got - want).abs() < 1e-13, "{line}");
    }
    let v = json(&run(&["zeros", "--nu", "1", "--count", "2", "--format", "json"], None).stdout);
    assert_eq!(v["zeros"].as_array().unwrap().len(), 2);
}

#[test]
fn oracle_csv_and_require() {
    let r = run(&["oracle", "--n", "1", "--k", "0", "--grid", "800", "--format", "csv"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let mut lines = r.stdout.lines();
    assert_eq!(lines.next(), Some("n,l,exact,fd,rel_err"));
    assert_eq!(lines.count(), 5);
    let r = run(&["oracle", "--n", "1", "--k", "0", "--grid", "200", "--require", "1e-9"], None);
    assert_eq!(r.code, 3);
    assert_eq!(json(&r.stdout)["bc_type"], "upper_dirichlet");
}

#[test]
fn malformed_config_exits_1_naming_field() {
    let dir = tempfile::tempdir().unwrap();
    for (text, field) in [
        (r#"{"radius": 0, "profile": {"polynomial": []}}"#, "radius"),
        (r#"{"radius": 1, "profile": {"tabulated": [[0.1, 0], [1, 0]]}}"#, "profile.tabulated"),
        (r#"{"radius": 1, "profile": {"polynomial": [0, "a"]}}"#, "profile.polynomial"),
        (r#"{"radius": 1}"#, "profile"),
    ] {
        let cfg = write_config(dir.path(), "bad.json", text);
        let r = run(&["det", "--config", &cfg], None);
        assert_eq!(r.code, 1, "{text}");
        assert!(r.stderr.contains(field), "{text}: {}", r.stderr);
    }
    let r = run(&["det", "--config", "/nonexistent/diskdet.json"], None);
    assert_eq!(r.code, 1);
    assert_eq!(run(&["frobnicate"], None).code, 1);
}

#[test]
fn unsupported_sector_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    // φ = 1.25 r² has flux -2.5, level k = -3
    let cfg = write_config(dir.path(), "neg.json", r#"{"radius": 1, "profile": {"polynomial": [0, 1.25]}}"#);
    let r = run(&["det", "--config", &cfg], None);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("k = -3"), "{}", r.stderr);
    assert_eq!(run(&["index", "--kappa", "-2.5"], None).code, 2);
    assert_eq!(run(&["zeros", "--nu", "-1", "--count", "3"], None).code, 2);
}

#[test]
fn tolerance_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let plain = write_config(dir.path(), "p.json", r#"{"radius": 1, "profile": {"polynomial": [0, -0.5]}}"#);
    // an unreachable tail tolerance from the environment makes the series give up
    let r = run(&["det", "--config", &plain], Some("zeta_tail=1e-45"));
    assert_eq!(r.code, 3, "{}", r.stderr);
    // the config overrides the environment
    let cfg = write_config(
        dir.path(),
        "t.json",
        r#"{"radius": 1, "profile": {"polynomial": [0, -0.5]}, "tolerances": {"zeta_tail": 1e-9}}"#,
    );
    assert_eq!(run(&["det", "--config", &cfg], Some("zeta_tail=1e-45")).code, 0);
    let r = run(&["det", "--config", &plain], Some("tight"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("DISKDET_TOL"));
}

#[test]
fn eta_and_zeta_subcommands() {
    let v = json(&run(&["eta", "--kappa", "1.5"], None).stdout);
    assert_eq!(v["eta0"], 0.0);
    assert!(v["eta0_numeric"].as_f64().unwrap().abs() < 1e-6);
    let v = json(&run(&["zeta", "--nu", "0.5"], None).stdout);
    assert!((v["fprime0"].as_f64().unwrap() + 0.5 * std::f64::consts::LN_2).abs() < 1e-9);
}

#[test]
fn symbol_subcommands() {
    let v = json(&run(&["symbol", "calderon", "--dim", "4", "--xi", "0,0,1,0", "--normal", "0,0,0,1"], None).stdout);
    assert_eq!(v["rank"], 2);
    assert!(v["idempotence_defect"].as_f64().unwrap() < 1e-14);
    let v = json(&run(&["symbol", "ellipticity", "--operator", "chiral4d", "--beta", "0.6,-0.8"], None).stdout);
    assert_eq!(v["outcome"], "not_elliptic");
    let v = json(&run(&["symbol", "ellipticity", "--operator", "full2d"], None).stdout);
    assert_eq!(v["outcome"], "elliptic");
    let v = json(&run(&["symbol", "witness", "--beta", "1,0"], None).stdout);
    assert_eq!(v["rank_bq"], 0);
    let r = run(&["symbol", "calderon", "--dim", "2", "--xi", "1,0", "--normal", "1,0"], None);
    assert_eq!(r.code, 2);
}

#[test]
fn spectrum_matches_zeros() {
    let v = json(&run(&["spectrum", "--n", "-1", "--k", "-1", "--radius", "2"], None).stdout);
    let first = v["eigenvalues"][0].as_f64().unwrap();
    assert!((first - 2.404825557695773 / 2.0).abs() < 1e-14);
}

#[test]
fn selftest_passes_and_fault_injection_fails() {
    let r = run(&["selftest"], None);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("[PASS] kappa = 1 phase"));
    assert!(!r.stdout.contains("[FAIL]"));

    let r = run(&["selftest", "--perturb-zeros", "1e-6", "--json"], None);
    assert_eq!(r.code, 3);
    let v = json(&r.stdout);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["zeta consistency"]);
    assert!(r.stderr.contains("checks failed"));
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_diskdet");
    let out = Command::new(bin).args(["index", "--kappa", "2.5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["index", "--kappa", "-3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["det"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
