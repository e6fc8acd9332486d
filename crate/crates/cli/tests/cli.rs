use std::path::Path;
use std::process::{Command, Output};

use hv_cli::{parse_config, run, OutputFormat};

fn hvcheck(config: &str, extra: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    std::fs::write(&path, config).unwrap();
    hvcheck_at(&path, extra)
}

fn hvcheck_at(path: &Path, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hvcheck"))
        .arg("--config")
        .arg(path)
        .args(extra)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const OMEGA_AXIOMS: &str = r#"{
    "module": {"family": "omega", "lambda": "2", "alpha": "3", "mu": ["1"], "beta": "0"},
    "command": "check-axioms",
    "bounds": {"index": 3, "monomial": 1, "window": 3}
}"#;

const TRIVIAL_PROBE: &str = r#"{
    "module": {"family": "intermediate", "alpha": "0", "beta": "0", "F": "0"},
    "command": "probe-irreducible",
    "bounds": {"index": 3, "window": 3}
}"#;

#[test]
fn omega_axioms_pass() {
    let o = hvcheck(OMEGA_AXIOMS, &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).ends_with("0 violations\n"), "{}", stdout(&o));
}

#[test]
fn trivial_line_is_the_witness() {
    let o = hvcheck(TRIVIAL_PROBE, &[]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("verdict\treducible\n"), "{out}");
    assert!(out.contains("witness\tv[0]\n"), "{out}");
}

#[test]
fn zero_lambda_is_rejected() {
    let o = hvcheck(&OMEGA_AXIOMS.replace("\"lambda\": \"2\"", "\"lambda\": \"0\""), &[]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("lambda must be nonzero"), "{err}");
}

#[test]
fn unknown_field_is_rejected() {
    let o = hvcheck(&TRIVIAL_PROBE.replace("\"command\"", "\"colour\": 1, \"command\""), &[]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("colour"), "{err}");
}

#[test]
fn seeded_flaw_fails_the_sweep() {
    let cfg = OMEGA_AXIOMS.replace("\"command\"", "\"flaw\": \"omega-lambda-exponent\", \"command\"");
    let o = hvcheck(&cfg, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).ends_with("0 violations\n"));
    let cfg = r#"{"command": "jacobi-sweep", "arity": 1, "flaw": "central-cocycle", "bounds": {"index": 3, "monomial": 0}}"#;
    assert_eq!(hvcheck(cfg, &[]).status.code(), Some(1));
    assert!(hvcheck(&cfg.replace(", \"flaw\": \"central-cocycle\"", ""), &[]).status.success());
}

#[test]
fn output_is_byte_identical_across_runs_and_seeds() {
    for cfg in [OMEGA_AXIOMS, TRIVIAL_PROBE] {
        let a = stdout(&hvcheck(cfg, &[]));
        assert_eq!(a, stdout(&hvcheck(cfg, &[])));
        assert_eq!(a, stdout(&hvcheck(cfg, &["--seed", "7"])));
        let j = stdout(&hvcheck(cfg, &["--out", "json"]));
        assert_eq!(j, stdout(&hvcheck(cfg, &["--out", "json", "--seed", "11"])));
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["pass"], true);
    }
    let flawed = OMEGA_AXIOMS.replace("\"command\"", "\"flaw\": \"omega-lambda-exponent\", \"command\"");
    assert_eq!(stdout(&hvcheck(&flawed, &[])), stdout(&hvcheck(&flawed, &["--seed", "3"])));
}

#[test]
fn config_round_trip() {
    let text = r#"{
        "module": {"family": "tensor",
            "left": {"family": "verma", "quotient": [{"point": ["0"], "order": 2}],
                     "phi": [{"gen": "d( 0 )", "value": "2/4"}, {"gen": "C_I", "exp": [1], "value": "-0"}], "max_level": 2},
            "right": {"family": "evaluation", "point": ["1"], "order": 1,
                      "inner": {"kind": "highest-weight", "phi": [{"gen": "I(0)", "value": "1"}], "max_level": 2}}},
        "command": "weights",
        "f": [{"exp": [2], "coeff": "6/3"}],
        "output": "json"
    }"#;
    let parsed = parse_config(text).unwrap();
    let normal = parsed.normalized().unwrap();
    let serialized = serde_json::to_string(&normal).unwrap();
    let back = parse_config(&serialized).unwrap();
    assert_eq!(back, normal);
    assert_eq!(serde_json::to_string(&back.normalized().unwrap()).unwrap(), serialized);
    assert!(serialized.contains("\"gen\":\"d(0)\""));
    assert!(serialized.contains("\"value\":\"1/2\""));
    assert!(serialized.contains("\"value\":\"0\""));
    assert!(serialized.contains("\"coeff\":\"2\""));
}

#[test]
fn report_commands() {
    let verma = r#"{"family": "verma", "quotient": [{"point": ["0"], "order": 3}],
        "phi": [{"gen": "d(0)", "value": "1/3"}, {"gen": "C", "value": "1"}, {"gen": "I(0)", "value": "2"}], "max_level": 3}"#;
    let cfg = format!(r#"{{"module": {verma}, "command": "hc-suite", "f": [{{"exp": [1], "coeff": "1"}}], "bounds": {{"level": 2}}}}"#);
    let r = run(&parse_config(&cfg).unwrap(), None).unwrap();
    assert!(r.pass, "{}", r.render(OutputFormat::Tsv));
    assert_eq!(r.summary, "0 failures");

    let cfg = format!(r#"{{"module": {verma}, "command": "singular-vectors", "bounds": {{"level": 2}}}}"#);
    let r = run(&parse_config(&cfg).unwrap(), None).unwrap();
    assert!(r.render(OutputFormat::Tsv).starts_with("kernel\t"));

    let cfg = r#"{"module": {"family": "omega", "lambda": "-1/3", "alpha": "1", "mu": ["3/2", "0"], "beta": "2"},
        "command": "invariants"}"#;
    let r = run(&parse_config(cfg).unwrap(), None).unwrap();
    assert!(r.pass);
    assert!(r.render(OutputFormat::Tsv).contains("mu\t3/2\t0\n"));

    let cfg = r#"{"module": {"family": "evaluation", "point": ["2"], "order": 2,
            "inner": {"kind": "series", "alpha": "1/2", "beta": "1/3", "F": "1"}},
        "command": "annihilator", "bounds": {"index": 2, "window": 2}}"#;
    let r = run(&parse_config(cfg).unwrap(), None).unwrap();
    assert_eq!(r.summary, "1 of 2 annihilate");

    let cfg = r#"{"module": {"family": "intermediate", "alpha": "1/2", "beta": "0", "F": "1"},
        "command": "weights", "bounds": {"window": 2}}"#;
    let r = run(&parse_config(cfg).unwrap(), None).unwrap();
    assert_eq!(r.summary, "5 weight spaces");
}

#[test]
fn preconditions_name_the_field() {
    let cases = [
        (r#"{"command": "weights"}"#, "module is required for weights"),
        (
            r#"{"module": {"family": "intermediate", "alpha": "0", "beta": "0", "F": "0"}, "command": "hc-suite"}"#,
            "module must be a verma module for hc-suite",
        ),
        (
            r#"{"module": {"family": "omega", "lambda": "1", "alpha": "1/0", "mu": [], "beta": "0"}, "command": "invariants"}"#,
            "alpha must be an exact scalar, got `1/0`",
        ),
        (
            r#"{"module": {"family": "intermediate", "alpha": "0", "beta": "0", "F": "0"}, "command": "weights", "bounds": {"index": 0}}"#,
            "bounds.index must be at least 1",
        ),
    ];
    for (cfg, msg) in cases {
        let err = run(&parse_config(cfg).unwrap(), None).unwrap_err();
        assert_eq!(err.to_string(), msg);
    }
}
