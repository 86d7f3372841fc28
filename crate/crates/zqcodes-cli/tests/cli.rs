//! End-to-end checks of the `zqcodes` binary: flag validation, output
//! formats, exit statuses, and the cap override precedence.

use std::process::{Command, Output};

use zqcodes_cli::output::{MatrixDocument, WdistDocument};

fn zqcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zqcodes"))
        .args(args)
        .env_remove("ZQCODES_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn construct_prints_rows_in_text_form() {
    let out = zqcodes(&["construct", "--family", "simplex", "--q", "4", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1 1 2 3\n1 0 1 1 1\n");
}

#[test]
fn construct_json_round_trips() {
    let out = zqcodes(&[
        "construct",
        "--family",
        "macdonald",
        "--q",
        "4",
        "--k",
        "3",
        "--u",
        "2",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let doc = MatrixDocument::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(doc.family, "macdonald");
    assert_eq!((doc.q, doc.k, doc.u, doc.n), (4, 3, Some(2), 16));
    assert_eq!(doc.rows.len(), 3);
    assert_eq!(serde_json::to_string(&doc).unwrap(), stdout(&out).trim());
}

#[test]
fn construct_rejects_out_of_range_u() {
    let out = zqcodes(&[
        "construct",
        "--family",
        "macdonald",
        "--q",
        "4",
        "--k",
        "3",
        "--u",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("2 <= u <= k-1"), "stderr: {err}");
}

#[test]
fn family_and_u_combinations_are_validated() {
    let out = zqcodes(&[
        "construct",
        "--family",
        "simplex",
        "--q",
        "4",
        "--k",
        "3",
        "--u",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("macdonald"));

    let out = zqcodes(&["construct", "--family", "macdonald", "--q", "4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--u"));
}

#[test]
fn unknown_subcommand_exits_2_with_usage() {
    let out = zqcodes(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).to_lowercase().contains("usage"));
}

#[test]
fn params_prints_the_parameter_line() {
    let out = zqcodes(&["params", "--family", "simplex", "--q", "4", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n=21 k=3 d=11\n");
}

#[test]
fn params_brute_prints_both_sides() {
    let out = zqcodes(&[
        "params",
        "--family",
        "macdonald",
        "--q",
        "4",
        "--k",
        "3",
        "--u",
        "2",
        "--brute",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "closed-form: n=16 k=3 d=7\nbrute-force: n=16 k=3 d=7\n"
    );
}

#[test]
fn params_without_closed_form_defers_to_brute() {
    let out = zqcodes(&[
        "params",
        "--family",
        "macdonald",
        "--q",
        "2",
        "--k",
        "4",
        "--u",
        "2",
        "--brute",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("d=unknown"), "{text}");
    assert!(text.contains("brute-force: n=12 k=4"), "{text}");
}

#[test]
fn wdist_brute_and_formula_agree_up_to_the_method_field() {
    for args in [
        ["--family", "simplex", "--q", "5", "--k", "2"].as_slice(),
        ["--family", "simplex", "--q", "6", "--k", "3"].as_slice(),
        ["--family", "macdonald", "--q", "6", "--k", "3", "--u", "2"].as_slice(),
    ] {
        let brute =
            zqcodes(&[&["wdist"], args, &["--method", "brute", "--output", "json"]].concat());
        let formula = zqcodes(
            &[
                &["wdist"],
                args,
                &["--method", "formula", "--output", "json"],
            ]
            .concat(),
        );
        assert!(brute.status.success() && formula.status.success());
        let mut brute_doc = WdistDocument::from_json(stdout(&brute).trim()).unwrap();
        let formula_doc = WdistDocument::from_json(stdout(&formula).trim()).unwrap();
        assert_eq!(brute_doc.method, "brute");
        assert_eq!(formula_doc.method, "formula");
        brute_doc.method = "formula".into();
        assert_eq!(brute_doc, formula_doc, "args: {args:?}");
    }
}

#[test]
fn wdist_formula_rejects_unsupported_shapes() {
    let out = zqcodes(&[
        "wdist", "--family", "simplex", "--q", "4", "--k", "4", "--method", "formula",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no closed-form distribution"));
}

#[test]
fn wdist_text_and_csv_forms() {
    let out = zqcodes(&[
        "wdist", "--family", "simplex", "--q", "2", "--k", "2", "--method", "brute",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "family=simplex q=2 k=2 u=- n=3 method=brute\n0 1\n2 3\n"
    );

    let out = zqcodes(&[
        "wdist", "--family", "simplex", "--q", "2", "--k", "2", "--method", "brute", "--output",
        "csv",
    ]);
    assert_eq!(stdout(&out), "weight,count\n0,1\n2,3\n");
}

#[test]
fn verify_exits_zero_on_a_clean_sweep_and_one_otherwise() {
    let out = zqcodes(&["verify", "--q-min", "2", "--q-max", "3", "--k-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("failed=0"));

    // A starved cap fails entries, which must surface as exit status 1.
    let out = zqcodes(&[
        "verify", "--q-min", "2", "--q-max", "2", "--k-max", "2", "--cap", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("skipped: cap"));
}

#[test]
fn verify_validates_its_range() {
    let out = zqcodes(&["verify", "--q-min", "5", "--q-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zqcodes(&["verify", "--q-min", "1", "--q-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_violations_exit_one() {
    let out = zqcodes(&[
        "wdist", "--family", "simplex", "--q", "4", "--k", "3", "--method", "brute", "--cap", "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("enumeration too large"));
    assert!(stderr(&out).contains("10"));
}

#[test]
fn cap_env_var_is_honored_and_flag_wins() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_zqcodes"));
        cmd.args([
            "wdist", "--family", "simplex", "--q", "4", "--k", "3", "--method", "brute",
        ])
        .args(extra)
        .env_remove("ZQCODES_MAX_ENUM");
        if let Some(value) = env {
            cmd.env("ZQCODES_MAX_ENUM", value);
        }
        cmd.output().expect("binary runs")
    };

    assert_eq!(run(Some("10"), &[]).status.code(), Some(1));
    assert_eq!(run(Some("100"), &[]).status.code(), Some(0));
    // The explicit flag overrides the environment in both directions.
    assert_eq!(run(Some("10"), &["--cap", "100"]).status.code(), Some(0));
    assert_eq!(run(Some("100"), &["--cap", "10"]).status.code(), Some(1));
    let bad = run(Some("banana"), &[]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("ZQCODES_MAX_ENUM"));
}

#[test]
fn wdist_output_is_stable_across_worker_counts() {
    let run = |workers: &str| {
        let out = zqcodes(&[
            "wdist",
            "--family",
            "macdonald",
            "--q",
            "5",
            "--k",
            "3",
            "--u",
            "2",
            "--method",
            "brute",
            "--output",
            "json",
            "--workers",
            workers,
        ]);
        assert!(out.status.success());
        stdout(&out)
    };
    let single = run("1");
    assert_eq!(single, run("4"));
    assert_eq!(single, run("13"));
}
