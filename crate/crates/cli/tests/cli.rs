use std::process::Command as Process;

use clap::Parser;
use deuler_cli::document::{parse_document, VerifyReport, CSV_HEADER};
use deuler_cli::{run, Cli, CliError, Outcome};
use serde_json::{json, Value};

const DOCUMENT_SCHEMA: &str = include_str!("../schema/output-document.schema.json");
const REPORT_SCHEMA: &str = include_str!("../schema/verify-report.schema.json");

fn invoke(args: &[&str]) -> Result<Outcome, CliError> {
    let cli = Cli::try_parse_from(std::iter::once("deuler").chain(args.iter().copied()))
        .unwrap_or_else(|e| panic!("{args:?} failed to parse: {e}"));
    run(&cli, None)
}

fn stdout(args: &[&str]) -> String {
    let out = invoke(args).unwrap();
    assert_eq!(out.code, 0, "{args:?}");
    out.stdout
}

fn values(args: &[&str]) -> Value {
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    v["values"].clone()
}

fn assert_valid(schema: &str, text: &str) {
    let schema: Value = serde_json::from_str(schema).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance: Value = serde_json::from_str(text).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}\n{text}");
}

fn table_invocations() -> Vec<Vec<&'static str>> {
    let mut all = Vec::new();
    for lambda in ["symbolic", "0", "-1/3", "1"] {
        for (family, routes) in [
            (
                "eulerian-number",
                &["explicit", "recursion", "gf-recursion"][..],
            ),
            (
                "eulerian-poly",
                &["explicit", "recursion", "gf-recursion"][..],
            ),
            ("bernoulli", &["triangular"][..]),
            ("stirling1", &["triangular"][..]),
            ("stirling2", &["explicit", "eulerian"][..]),
        ] {
            for route in routes {
                all.push(vec![
                    "table", family, "--n-max", "5", "--route", route, "--lambda", lambda,
                ]);
            }
        }
        all.push(vec![
            "eval", "powersum", "--m", "4", "--n", "3", "--lambda", lambda,
        ]);
        all.push(vec![
            "eval",
            "eulerian-at",
            "--x",
            "-1",
            "--n",
            "4",
            "--lambda",
            lambda,
        ]);
        all.push(vec![
            "eval",
            "eulerian-at",
            "--x",
            "5/2",
            "--n",
            "3",
            "--lambda",
            lambda,
        ]);
    }
    all
}

#[test]
fn bernoulli_table_golden() {
    assert_eq!(
        values(&[
            "table",
            "bernoulli",
            "--n-max",
            "3",
            "--lambda",
            "symbolic",
            "--format",
            "json"
        ]),
        json!([
            ["1"],
            ["-1/2", "1/2"],
            ["1/6", "0", "-1/6"],
            ["0", "-1/4", "0", "1/4"]
        ])
    );
}

#[test]
fn eulerian_numbers_at_zero() {
    assert_eq!(
        values(&["table", "eulerian-number", "--n-max", "1", "--lambda", "0"]),
        json!([["1"], ["1", "0"]])
    );
    let v = values(&["table", "eulerian-number", "--n-max", "3", "--lambda", "0"]);
    assert_eq!(v[3], json!(["1", "4", "1", "0"]));
}

#[test]
fn eval_examples() {
    assert_eq!(
        values(&["eval", "powersum", "--m", "2", "--n", "2", "--lambda", "0"]),
        json!("5")
    );
    assert_eq!(
        values(&["eval", "powersum", "--m", "2", "--n", "2", "--lambda", "1"]),
        json!("2")
    );
    assert_eq!(
        values(&["eval", "powersum", "--m", "2", "--n", "2"]),
        json!(["5", "-3"])
    );
    for route in ["explicit", "recursion", "gf-recursion", "bernoulli"] {
        assert_eq!(
            values(&[
                "eval",
                "eulerian-at",
                "--x",
                "-1",
                "--n",
                "2",
                "--lambda",
                "1/3",
                "--route",
                route
            ]),
            json!("-2/3"),
            "{route}"
        );
    }
    for route in ["direct", "eulerian", "bernoulli"] {
        assert_eq!(
            values(&["eval", "powersum", "--m", "2", "--n", "2", "--route", route]),
            json!(["5", "-3"])
        );
    }
}

#[test]
fn routes_agree_in_output() {
    let base = values(&["table", "eulerian-poly", "--n-max", "6"]);
    for route in ["recursion", "gf-recursion"] {
        assert_eq!(
            values(&["table", "eulerian-poly", "--n-max", "6", "--route", route]),
            base
        );
    }
    assert_eq!(
        values(&["table", "stirling2", "--n-max", "6", "--route", "eulerian"]),
        values(&["table", "stirling2", "--n-max", "6"])
    );
}

#[test]
fn route_and_range_errors() {
    for args in [
        &["table", "bernoulli", "--n-max", "3", "--route", "explicit"][..],
        &["table", "stirling2", "--n-max", "3", "--route", "recursion"],
        &[
            "table",
            "eulerian-number",
            "--n-max",
            "3",
            "--route",
            "triangular",
        ],
        &[
            "eval",
            "eulerian-at",
            "--x",
            "2",
            "--n",
            "3",
            "--route",
            "bernoulli",
        ],
        &["eval", "powersum", "--m", "0", "--n", "3"],
        &["table", "bernoulli", "--n-max", "65"],
    ] {
        assert!(invoke(args).is_err(), "{args:?}");
    }
    let cli = Cli::try_parse_from(["deuler", "table", "bernoulli", "--n-max", "5"]).unwrap();
    assert!(matches!(
        run(&cli, Some("4")),
        Err(CliError::OverCap { cap: 4, .. })
    ));
    assert!(run(&cli, Some("5")).is_ok());
    assert!(matches!(run(&cli, Some("five")), Err(CliError::BadCap(_))));
}

#[test]
fn floats_are_rejected_at_parse_time() {
    for args in [
        &[
            "deuler",
            "table",
            "bernoulli",
            "--n-max",
            "3",
            "--lambda",
            "0.5",
        ][..],
        &["deuler", "eval", "eulerian-at", "--x", "-1.0", "--n", "2"],
        &[
            "deuler", "eval", "powersum", "--m", "2", "--n", "2", "--lambda", "1e3",
        ],
    ] {
        let err = Cli::try_parse_from(args).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}

#[test]
fn documents_match_schema_and_round_trip() {
    for args in table_invocations() {
        let text = stdout(&args);
        assert_valid(DOCUMENT_SCHEMA, &text);
        let (doc, decoded) = parse_document(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(decoded.to_json(), doc.values);
        assert_eq!(doc.to_json_string(), text, "{args:?}");
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in table_invocations() {
        assert_eq!(stdout(&args), stdout(&args));
    }
    let verify = ["verify", "--n-max", "6", "--m-max", "6", "--k-max", "6"];
    assert_eq!(stdout(&verify), stdout(&verify));
}

#[test]
fn timestamp_is_opt_in() {
    let plain: Value =
        serde_json::from_str(&stdout(&["table", "bernoulli", "--n-max", "2"])).unwrap();
    assert!(plain["metadata"].get("generated_at").is_none());
    let text = stdout(&["table", "bernoulli", "--n-max", "2", "--timestamp"]);
    assert_valid(DOCUMENT_SCHEMA, &text);
    let stamped: Value = serde_json::from_str(&text).unwrap();
    assert!(stamped["metadata"]["generated_at"].as_u64().unwrap() > 0);
}

#[test]
fn csv_output() {
    let csv = stdout(&["table", "eulerian-poly", "--n-max", "2", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(
        &lines[1..],
        &[
            "eulerian-poly,0,,0,0,1",
            "eulerian-poly,1,,0,0,1",
            "eulerian-poly,2,,0,0,1",
            "eulerian-poly,2,,0,1,-1",
            "eulerian-poly,2,,1,0,1",
            "eulerian-poly,2,,1,1,1",
        ]
    );
    let csv = stdout(&[
        "eval", "powersum", "--m", "2", "--n", "2", "--lambda", "1", "--format", "csv",
    ]);
    assert_eq!(csv, format!("{CSV_HEADER}\npowersum,2,,,,2\n"));
}

#[test]
fn human_rendering() {
    let text = stdout(&["table", "eulerian-number", "--n-max", "3", "--human"]);
    assert!(text.contains("n=3 k=0: 1 - 3λ + 2λ²"), "{text}");
    let text = stdout(&["eval", "powersum", "--m", "2", "--n", "2", "--human"]);
    assert!(text.ends_with("5 - 3λ\n"), "{text}");
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "--check", "thm-2.7-worpitzky", "--n-max", "8"]);
    assert_valid(REPORT_SCHEMA, &text);
    let report: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.suite, "selection");
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].status, "pass");
    assert_eq!(report.checks[0].range.n_max, Some(8));

    let smoke = stdout(&[
        "verify", "--smoke", "--n-max", "5", "--m-max", "5", "--k-max", "5",
    ]);
    assert_valid(REPORT_SCHEMA, &smoke);
    let report: VerifyReport = serde_json::from_str(&smoke).unwrap();
    assert_eq!(report.mode, "smoke");
    assert_eq!(report.summary.failed, 0);
    assert!(report.checks.len() >= 16);

    let text = stdout(&[
        "verify",
        "--check",
        "thm-2.2-vanishing",
        "--n-max",
        "4",
        "--format",
        "text",
    ]);
    assert!(
        text.starts_with("PASS thm-2.2-vanishing [n_max=4]\n"),
        "{text}"
    );

    assert!(matches!(
        invoke(&["verify", "--check", "no-such-id"]),
        Err(CliError::Verify(_))
    ));
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_deuler"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn binary_exit_codes() {
    let out = binary(&["table", "bernoulli", "--n-max", "3", "--lambda", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p/q"));

    let out = binary(&["verify", "--check", "no-such-id"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("thm-2.7-worpitzky") && err.contains("lambda0-descent-oracle"),
        "{err}"
    );

    let out = binary(&["verify", "--check", "thm-2.7-worpitzky", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));

    let out = binary(&[
        "eval",
        "eulerian-at",
        "--x",
        "-1",
        "--n",
        "2",
        "--lambda",
        "1/3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["values"], json!("-2/3"));
    assert_eq!(doc["parameters"]["x"], json!("-1"));

    let out = Process::new(env!("CARGO_BIN_EXE_deuler"))
        .args(["table", "stirling1", "--n-max", "9"])
        .env("DEULER_N_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
