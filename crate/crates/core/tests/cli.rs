//! Integration tests for the `doubler` command line: spec'd output shapes,
//! exit codes, and byte-stable JSON.

use std::process::Command;

use doubler::cli;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let full: Vec<String> = std::iter::once("doubler".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = cli::run(full, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn mul_quaternion_basis() {
    let (code, out) = run(&[
        "mul",
        "--tower",
        "cd:-1,cd:-1",
        "--x",
        r#"["0","0","1","0"]"#,
        "--y",
        r#"["0","1","0","0"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":[\"0\",\"0\",\"0\",\"1\"]}\n");
}

#[test]
fn witness_output_shape() {
    let (code, out) = run(&[
        "witness",
        "--tower",
        "cd:-1",
        "--a",
        r#"["3/5","4/5"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"witness\":[\"8/5\",\"4/5\"],\"branch\":\"general\"}\n");

    let (code, out) = run(&["witness", "--tower", "cd:-1", "--a", r#"["-1","0"]"#]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"witness\":[\"0\",\"1\"],\"branch\":\"minus_one\"}\n");
}

#[test]
fn pythagoras_tuples() {
    let (code, out) = run(&["pythagoras", "--n", "1", "--seeds", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"tuple\":[3,4,5]}\n");

    let (code, out) = run(&["pythagoras", "--n", "2", "--seeds", "2,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"tuple\":[1,4,4,4,7]}\n");

    // seed count must be 2^n
    let (code, out) = run(&["pythagoras", "--n", "2", "--seeds", "2,1,1"]);
    assert_eq!(code, 2);
    assert!(out.contains("\"code\":\"DimensionMismatch\""));

    // values beyond 64 bits stay exact
    let (code, out) = run(&[
        "pythagoras",
        "--n",
        "1",
        "--seeds",
        "10000000000,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"tuple\":[99999999999999999999,20000000000,100000000000000000001]}\n"
    );
}

#[test]
fn scalar_outputs() {
    let (code, out) = run(&["trace", "--tower", "cd:-1", "--x", r#"["3/5","4/5"]"#]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":\"6/5\"}\n");

    let (code, out) = run(&[
        "norm",
        "--tower",
        "cd:-2,cd:-3",
        "--x",
        r#"["1","1","1","1"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":\"12\"}\n");
}

#[test]
fn conj_inv_norm_one_param() {
    let (code, out) = run(&[
        "conj",
        "--tower",
        "cd:-1,cd:-1",
        "--x",
        r#"["5","-1/2","3","7/4"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":[\"5\",\"1/2\",\"-3\",\"-7/4\"]}\n");

    let (code, out) = run(&["inv", "--tower", "cd:-1", "--x", r#"["3/5","4/5"]"#]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":[\"3/5\",\"-4/5\"]}\n");

    let (code, out) = run(&["norm-one", "--tower", "cd:-1", "--s", r#"["2","1"]"#]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":[\"3/5\",\"4/5\"]}\n");

    let (code, out) = run(&[
        "param",
        "--tower",
        "cd:-2,cd:-3",
        "--s",
        r#"["1","1","1","1"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"result\":[\"-5/6\",\"1/6\",\"1/6\",\"1/6\"]}\n");
}

#[test]
fn domain_errors_exit_2_with_code_objects() {
    let cases: [(&[&str], &str); 5] = [
        (
            &["inv", "--tower", "cd:1", "--x", r#"["1","1"]"#],
            "NotInvertible",
        ),
        (
            &["witness", "--tower", "cd:-1", "--a", r#"["1","1"]"#],
            "NormNotOne",
        ),
        (
            &["mul", "--tower", "cd:-1", "--x", r#"["1"]"#, "--y", r#"["1","0"]"#],
            "DimensionMismatch",
        ),
        (
            &["norm", "--tower", "cs:2", "--x", r#"["1","0"]"#],
            "InvalidCsParameter",
        ),
        (
            &["norm", "--tower", "cd;-1", "--x", r#"["1","0"]"#],
            "ParseError",
        ),
    ];
    for (args, code_str) in cases {
        let (code, out) = run(args);
        assert_eq!(code, 2, "args {args:?}");
        let value: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(value["code"], code_str, "args {args:?}");
        assert!(value["message"].is_string());
    }
}

#[test]
fn usage_errors_exit_64() {
    let (code, _) = run(&["mul", "--tower", "cd:-1"]);
    assert_eq!(code, 64);
    let (code, _) = run(&["no-such-command"]);
    assert_eq!(code, 64);
    let (code, _) = run(&["check", "--tower", "cd:-1", "--identity", "NoSuchLaw"]);
    assert_eq!(code, 64);
    let (code, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn check_and_search_reports() {
    let (code, out) = run(&[
        "check",
        "--tower",
        "cs:-1,cs:-1",
        "--identity",
        "NormMultiplicative",
        "--trials",
        "25",
        "--seed",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"identity\":\"NormMultiplicative\",\"tower\":\"cs:-1,cs:-1\",\"trials\":25,\"seed\":3,\"outcome\":\"AllPassed\"}\n"
    );

    let (code, out) = run(&[
        "search",
        "--tower",
        "cd:-1,cd:-1",
        "--identity",
        "RightDist",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"outcome\":\"AllPassed\""));
    assert!(out.contains("\"trials\":512"));
}

#[test]
fn diff_reports() {
    let (code, out) = run(&[
        "diff",
        "--tower",
        "cd:-1,cd:-1",
        "--other",
        "cs:-1,cs:-1",
        "--trials",
        "20",
        "--seed",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"identity\":\"CompareTowers\",\"tower\":\"cd:-1,cd:-1\",\"other_tower\":\"cs:-1,cs:-1\",\"trials\":20,\"seed\":1,\"outcome\":\"AllPassed\"}\n"
    );
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let args = [
        "check",
        "--tower",
        "cd:-1,cd:-1,cd:-1,cd:-1",
        "--identity",
        "LeftAlt",
        "--trials",
        "10",
        "--seed",
        "9",
    ];
    let (code_a, out_a) = run(&args);
    let (code_b, out_b) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert!(out_a.contains("CounterexampleFound"));
    assert_eq!(out_a, out_b);
}

/// The installed binary behaves like the in-process runner.
#[test]
fn binary_round_trip() {
    let exe = env!("CARGO_BIN_EXE_doubler");
    let output = Command::new(exe)
        .args(["pythagoras", "--n", "1", "--seeds", "2,1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "{\"tuple\":[3,4,5]}\n"
    );

    let output = Command::new(exe)
        .args(["inv", "--tower", "cd:1", "--x", r#"["1","1"]"#])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8(output.stdout).unwrap().trim()).unwrap();
    assert_eq!(value["code"], "NotInvertible");
}
