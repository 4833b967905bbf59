//! End-to-end tests for the zetaforge binary: exit codes, output shape,
//! report files, and environment-variable plumbing.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .args(args)
        .output()
        .expect("spawn zetaforge")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn const_known_values() {
    let o = run(&["const", "gamma", "--digits", "10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("0.5772156649"), "{}", stdout(&o));

    let o = run(&["const", "catalan", "--digits", "6"]);
    assert_eq!(code(&o), 0);
    // G = 0.9159655941..., six significant figures
    assert!(stdout(&o).starts_with("0.915966"));
    assert!(stdout(&o).contains("Catalan"));

    let o = run(&["const", "glaisher", "--digits", "10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1.282427129"));
}

#[test]
fn const_errors() {
    assert_eq!(code(&run(&["const", "nosuch"])), 2);
    assert_eq!(code(&run(&["const", "gamma", "--digits", "0"])), 2);
    assert_eq!(code(&run(&["const", "gamma", "--digits", "16"])), 2);
}

#[test]
fn eval_digamma_and_hurwitz() {
    let o = run(&["eval", "digamma", "1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("-5.772156649"), "{}", out);
    assert!(out.contains("converged  true"));

    // zeta(0, u) = 1/2 - u
    let o = run(&["eval", "hurwitz", "0", "0.25"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2.5"), "{}", stdout(&o));
}

#[test]
fn eval_errors() {
    // domain error: loggamma needs a positive argument
    assert_eq!(code(&run(&["eval", "loggamma", "--", "-1"])), 2);
    // bad arity
    assert_eq!(code(&run(&["eval", "digamma"])), 2);
    assert_eq!(code(&run(&["eval", "hurwitz", "3"])), 2);
    // unknown function
    assert_eq!(code(&run(&["eval", "nosuch", "1"])), 2);
}

#[test]
fn check_single_identity() {
    let o = run(&["check", "E4.2.4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));

    // ids resolve case-insensitively
    let o = run(&["check", "e4.3.160b"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("residual"));

    assert_eq!(code(&run(&["check", "E0.0.0"])), 2);
}

#[test]
fn suite_finite_group_passes() {
    let o = run(&["suite", "--group", "FINITE", "--quiet"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("fail 0"), "{}", out);
    assert!(out.contains("no_converge 0"));
}

#[test]
fn suite_bad_filters() {
    assert_eq!(code(&run(&["suite", "--group", "NOSUCH"])), 2);
    assert_eq!(code(&run(&["suite", "--cost", "NOSUCH"])), 2);
}

#[test]
fn suite_report_files() {
    let dir = std::env::temp_dir();
    let json_path = dir.join("zetaforge_cli_test.json");
    let csv_path = dir.join("zetaforge_cli_test.csv");
    let o = run(&[
        "suite",
        "--group",
        "FINITE",
        "--quiet",
        "--json",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert!(json["outcomes"].as_array().unwrap().len() >= 15);
    assert!(json["policy"]["n_max"].is_number());

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("id,group,status,lhs,rhs,residual,tolerance,terms,seconds"));

    // unwritable path -> exit 4
    let o = run(&[
        "suite",
        "--group",
        "FINITE",
        "--quiet",
        "--json",
        "/nonexistent-dir/out.json",
    ]);
    assert_eq!(code(&o), 4);

    let _ = std::fs::remove_file(json_path);
    let _ = std::fs::remove_file(csv_path);
}

#[test]
fn list_output() {
    let o = run(&["list"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().count() >= 55, "{} lines", out.lines().count());
    assert!(out.contains("FINITE") && out.contains("INTEGRAL"));

    let o = run(&["list", "--group", "INTEGRAL"]);
    let sub = stdout(&o);
    assert!(sub.lines().count() < out.lines().count());
    assert!(sub.lines().all(|l| l.contains("INTEGRAL")));

    assert_eq!(code(&run(&["list", "--group", "NOSUCH"])), 2);
}

#[test]
fn text_output_stable() {
    let a = run(&["suite", "--group", "FINITE"]);
    let b = run(&["suite", "--group", "FINITE"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn nmax_env_mirrors_flag() {
    let flag = Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .args(["eval", "digamma", "0.5", "--nmax", "12"])
        .output()
        .unwrap();
    let env = Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .args(["eval", "digamma", "0.5"])
        .env("ZETAFORGE_NMAX", "12")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8_lossy(&flag.stdout),
        String::from_utf8_lossy(&env.stdout)
    );
}
