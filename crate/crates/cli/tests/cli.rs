use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_specyc"));
    cmd.args(args)
        .env_remove("SPECYC_TOL")
        .env_remove("SPECYC_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&o.stdout)
        )
    })
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{name}.schema.json"))
}

fn assert_valid(schema: &str, instance: &Value) {
    let text = std::fs::read_to_string(schema_path(schema)).unwrap();
    let schema_json: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema_json).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{instance:#}");
}

fn stderr_diagnostics(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stderr)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|_| panic!("stderr line is not JSON: {l}")))
        .collect()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["construct", "--family", "star-plus", "--n", "26"], "", 0),
        (&["construct", "--family", "star-plus", "--n", "2"], "", 2),
        (
            &["construct", "--family", "no-such-family", "--n", "5"],
            "",
            2,
        ),
        (&["rho"], "Bw\nC~\n", 0),
        (&["rho"], "Bw\nnot a graph\n", 2),
        (&["detect", "--what", "fan"], "Bw\n", 0),
        (
            &["detect", "--what", "edge-disjoint-cycles", "--budget", "1"],
            "K~~~~~~~~~~~\n",
            3,
        ),
        (&["enumerate", "--n", "11"], "", 2),
        (&["enumerate", "--n", "5", "--unknown-flag"], "", 2),
        (&["spex", "--n", "6", "--predicate", "gamma-k-free"], "", 2),
        (
            &["verify", "--theorem", "T1", "--n-min", "4", "--n-max", "9"],
            "",
            0,
        ),
        (
            &["verify", "--theorem", "T5", "--n-min", "4", "--n-max", "5"],
            "",
            1,
        ),
        (
            &[
                "verify",
                "--theorem",
                "T2",
                "--n-min",
                "12",
                "--n-max",
                "14",
            ],
            "",
            3,
        ),
        (
            &["verify", "--theorem", "T9", "--n-min", "4", "--n-max", "5"],
            "",
            2,
        ),
        (
            &["verify", "--theorem", "T1", "--n-min", "6", "--n-max", "4"],
            "",
            2,
        ),
        (
            &[
                "turan",
                "--n",
                "6",
                "--predicate",
                "gamma-2-free",
                "--csv",
                "/dev/null",
            ],
            "",
            0,
        ),
        (&["enumerate", "--n", "4", "--csv", "/dev/null"], "", 2),
    ];
    for (args, stdin, expected) in cases {
        let o = run(args, stdin);
        assert_eq!(
            code(&o),
            *expected,
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        for d in stderr_diagnostics(&o) {
            assert_valid("diagnostic", &d);
        }
    }
}

#[test]
fn construct_prints_one_line() {
    let o = run(&["construct", "--family", "star-plus", "--n", "26"], "");
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let g = specyc::from_graph6(text.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (26, 26));
}

#[test]
fn malformed_input_reports_line_numbers() {
    let o = run(&["rho"], "Bw\nC~\nnot a graph\n@\nDQc\n");
    assert_eq!(code(&o), 2);
    let diags = stderr_diagnostics(&o);
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0]["line"], 3);
    assert_eq!(diags[0]["code"], "MalformedGraph6");
    let report = json(&o);
    assert_eq!(report["payload"]["graphs"].as_array().unwrap().len(), 4);
}

#[test]
fn reports_match_their_schemas() {
    let cases: &[(&str, &[&str], &str)] = &[
        (
            "construct",
            &["construct", "--family", "k33-star", "--n", "9", "--json"],
            "",
        ),
        ("catalog", &["construct", "--catalog"], ""),
        ("rho", &["rho"], "Bw\nC~\nDQc\n"),
        (
            "enumerate-count",
            &["enumerate", "--n", "6", "--connected", "--count"],
            "",
        ),
        (
            "spex",
            &[
                "spex",
                "--n",
                "6",
                "--predicate",
                "no-2-edge-disjoint-cycles",
            ],
            "",
        ),
        (
            "spex",
            &[
                "spex",
                "--n",
                "9",
                "--predicate",
                "fan-2-free",
                "--mode",
                "hillclimb",
                "--restarts",
                "3",
            ],
            "",
        ),
        (
            "turan",
            &[
                "turan",
                "--n",
                "6",
                "--predicate",
                "gamma-k-free",
                "--k",
                "2",
            ],
            "",
        ),
        (
            "verify",
            &["verify", "--theorem", "T5", "--n-min", "4", "--n-max", "6"],
            "",
        ),
        (
            "verify",
            &[
                "verify",
                "--theorem",
                "L_QUOTIENT_CONSISTENCY",
                "--n-min",
                "6",
                "--n-max",
                "20",
            ],
            "",
        ),
        (
            "verify",
            &[
                "verify",
                "--theorem",
                "T6",
                "--n-min",
                "8",
                "--n-max",
                "12",
                "--n-step",
                "4",
                "--k",
                "2",
                "--restarts",
                "4",
            ],
            "",
        ),
    ];
    for (schema, args, stdin) in cases {
        let o = run(args, stdin);
        assert!(matches!(code(&o), 0 | 1), "{args:?}");
        assert_valid(schema, &json(&o));
    }
}

#[test]
fn detect_lines_match_their_schema() {
    let input = "Bw\nC~\nEFz_\nK~~~~~~~~~~~\n";
    for what in [
        "repeated-length",
        "edge-disjoint-cycles",
        "triangle-packing",
        "fan",
    ] {
        for k in [None, Some("2")] {
            let mut args = vec!["detect", "--what", what];
            if let Some(k) = k {
                args.extend(["--k", k]);
            }
            let o = run(&args, input);
            assert_eq!(code(&o), 0, "{args:?}");
            let lines: Vec<Value> = String::from_utf8(o.stdout)
                .unwrap()
                .lines()
                .map(|l| serde_json::from_str(l).unwrap())
                .collect();
            assert_eq!(lines.len(), 4);
            for l in &lines {
                assert_valid("detect-line", l);
            }
        }
    }
}

#[test]
fn payloads_do_not_depend_on_worker_count() {
    let commands: &[&[&str]] = &[
        &[
            "spex",
            "--n",
            "12",
            "--predicate",
            "gamma-2-free",
            "--mode",
            "hillclimb",
            "--seed",
            "3",
            "--restarts",
            "6",
        ],
        &[
            "verify",
            "--theorem",
            "L_HOFFMAN_SMITH",
            "--n-min",
            "6",
            "--n-max",
            "30",
            "--seed",
            "9",
        ],
        &["verify", "--theorem", "T1", "--n-min", "4", "--n-max", "8"],
        &["turan", "--n", "7", "--predicate", "fan-2-free"],
    ];
    for args in commands {
        let payloads: Vec<Value> = ["1", "3", "8"]
            .iter()
            .map(|w| {
                let mut a = args.to_vec();
                a.extend(["--workers", w]);
                json(&run(&a, ""))["payload"].clone()
            })
            .collect();
        assert_eq!(payloads[0], payloads[1], "{args:?}");
        assert_eq!(payloads[0], payloads[2], "{args:?}");
        let env_run = json(&run_env(args, "", &[("SPECYC_WORKERS", "2")]));
        assert_eq!(payloads[0], env_run["payload"]);
    }
}

#[test]
fn environment_overrides_and_flag_precedence() {
    let o = run_env(&["rho"], "Bw\n", &[("SPECYC_TOL", "1e-6")]);
    assert_eq!(json(&o)["payload"]["tolerance"], 1e-6);
    let o = run_env(&["rho", "--tol", "1e-9"], "Bw\n", &[("SPECYC_TOL", "1e-6")]);
    assert_eq!(json(&o)["payload"]["tolerance"], 1e-9);
    let o = run_env(&["rho"], "Bw\n", &[("SPECYC_TOL", "-1")]);
    assert_eq!(code(&o), 2);
    let o = run_env(&["rho"], "Bw\n", &[("SPECYC_WORKERS", "0")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn out_and_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let csv = dir.path().join("summary.csv");
    let o = run(
        &[
            "verify",
            "--theorem",
            "T1",
            "--n-min",
            "4",
            "--n-max",
            "7",
            "--out",
            out.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_valid("verify", &report);
    let table = std::fs::read_to_string(&csv).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("n,check,status,margin,extremalGraph6"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn verify_reads_a_population() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pop.g6");
    let k33 = run(&["construct", "--family", "k33-star", "--n", "12"], "");
    let k4 = run(&["construct", "--family", "k4-star", "--n", "12"], "");
    let mut text = String::from_utf8(k33.stdout).unwrap();
    text.push_str(&String::from_utf8(k4.stdout).unwrap());
    std::fs::write(&path, text).unwrap();
    let o = run(
        &[
            "verify",
            "--theorem",
            "T1",
            "--n-min",
            "12",
            "--n-max",
            "12",
            "--in",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let report = json(&o);
    assert_eq!(report["payload"]["perN"][0]["status"], "PASS");
    assert_eq!(report["payload"]["perN"][0]["margin"], 0.0);
}

#[test]
fn enumerate_streams_graph6() {
    let o = run(&["enumerate", "--n", "5", "--connected"], "");
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 21);
    let o = run(&["rho"], &text);
    assert_eq!(code(&o), 0);
}
