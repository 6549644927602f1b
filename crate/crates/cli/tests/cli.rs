use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tiltglue::bundled::ExampleData;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltglue"))
        .args(args)
        .output()
        .expect("run tiltglue")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn data(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn reproduce_both_parts() {
    for id in ["5-1", "5-2"] {
        let o = run(&["reproduce", id]);
        assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
        assert!(stdout(&o).ends_with("result: match\n"));
    }
}

#[test]
fn reproduce_from_a_copy_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    ExampleData::write_to(dir.path()).unwrap();
    let o = run(&[
        "reproduce",
        "5-2",
        "--data-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), stdout(&run(&["reproduce", "5-2"])));
}

#[test]
fn corrupted_universe_names_the_missing_member() {
    let dir = tempfile::tempdir().unwrap();
    ExampleData::write_to(dir.path()).unwrap();
    let manifest = dir.path().join("lambda.universe");
    let text = fs::read_to_string(&manifest).unwrap();
    let kept: Vec<&str> = text
        .lines()
        .filter(|l| !l.contains("(P(1)|P(4))"))
        .collect();
    assert_eq!(kept.len() + 1, text.lines().count());
    fs::write(&manifest, kept.join("\n")).unwrap();

    let o = run(&[
        "reproduce",
        "5-1",
        "--data-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("missing member (P(1)|P(4))"));
    assert!(stderr(&o).starts_with("error[mismatch]:"));
}

#[test]
fn verify_universe_accepts_the_bundle() {
    let o = run(&["verify-universe"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lambda: 15 members, 0 issues"));
    let one = run(&[
        "verify-universe",
        "--algebra",
        &data("lambda_dprime.alg"),
        "--universe",
        &data("lambda_dprime.universe"),
    ]);
    assert_eq!(one.status.code(), Some(0));
}

#[test]
fn verify_universe_rejects_a_duplicate() {
    let dir = tempfile::tempdir().unwrap();
    ExampleData::write_to(dir.path()).unwrap();
    let manifest = dir.path().join("lambda_dprime.universe");
    let mut text = fs::read_to_string(&manifest).unwrap();
    text.push_str("member copy lambda_dprime/p3.mod\n");
    fs::write(&manifest, text).unwrap();
    let o = run(&[
        "verify-universe",
        "--data-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("members P(3) and copy are isomorphic"));
}

#[test]
fn parse_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    fs::write(
        &bad,
        "field 101\nvertices 1 2 3\narrow a 1 2\narrow b 1 3\nrelation 1*ba = 0\n",
    )
    .unwrap();
    let o = run(&["check-algebra", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).starts_with("error[parse]:") || stderr(&o).starts_with("error[algebra]:"),
        "{}",
        stderr(&o)
    );

    let o = run(&[
        "check-algebra",
        dir.path().join("absent.alg").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(3));
}

#[test]
fn module_over_the_wrong_algebra_is_a_parse_error() {
    let o = run(&[
        "check-tilting",
        "--algebra",
        &data("lambda.alg"),
        &data("inputs/tilting_t3.mod"),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn check_algebra_reports_invariants() {
    let o = run(&["check-algebra", &data("lambda.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("vertices 1 2 3 4 5"));
    assert!(out.contains("relations 2"));
    assert!(out.contains("global dimension 2"));
}

#[test]
fn tilting_checks() {
    let o = run(&[
        "check-tilting",
        "--algebra",
        &data("lambda_dprime.alg"),
        &data("inputs/tilting_t3.mod"),
        "--n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("accepted as 2-tilting"));
    let o = run(&[
        "check-cotilting",
        "--algebra",
        &data("lambda_dprime.alg"),
        &data("inputs/cotilting_t3.mod"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    // pd S(1) = 1, so P(1)⊕S(1) is not 0-tilting
    let o = run(&[
        "check-tilting",
        "--algebra",
        &data("lambda_prime.alg"),
        &data("inputs/cotilting_t1.mod"),
        "--n",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("refuted"));
}

#[test]
fn ext_and_cotorsion() {
    let o = run(&[
        "ext",
        "--algebra",
        &data("lambda_prime.alg"),
        &data("lambda_prime/s1.mod"),
        &data("lambda_prime/s2.mod"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Ext^1(S(1), S(2)) = 1"));
    let o = run(&[
        "cotorsion",
        "--algebra",
        &data("lambda_prime.alg"),
        "--universe",
        &data("lambda_prime.universe"),
        &data("inputs/cotilting_t1.mod"),
        "--n",
        "1",
        "--cotilting",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("V = {P(1), S(1)}"));
}

#[test]
fn recollement_and_glue_commands() {
    let o = run(&["recollement"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("i^* exact no"));
    assert!(stdout(&o).contains("j_!P(4) = {(S(2)|P(4))}"));
    let o = run(&["glue-tilting"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n₂ = 2"));
    let o = run(&["glue-cotilting"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn glue_rejects_a_non_tilting_input() {
    let o = run(&[
        "glue-tilting",
        "--t1",
        &data("inputs/cotilting_t1.mod"),
        "--n1",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[not-tilting]:"));
}

#[test]
fn custom_setup_matches_the_bundle() {
    let o = run(&[
        "glue-tilting",
        "--total",
        &data("lambda.alg"),
        "--sub",
        &data("lambda_prime.alg"),
        "--quot",
        &data("lambda_dprime.alg"),
        "--a-side",
        "1,2",
        "--universe",
        &data("lambda.universe"),
        "--universe-sub",
        &data("lambda_prime.universe"),
        "--universe-quot",
        &data("lambda_dprime.universe"),
        "--t1",
        &data("inputs/tilting_t1.mod"),
        "--t3",
        &data("inputs/tilting_t3.mod"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), stdout(&run(&["glue-tilting"])));
}

#[test]
fn wrong_side_is_a_precondition_failure() {
    let o = run(&[
        "recollement",
        "--total",
        &data("lambda.alg"),
        "--sub",
        &data("lambda_dprime.alg"),
        "--quot",
        &data("lambda_prime.alg"),
        "--a-side",
        "3,4,5",
        "--universe",
        &data("lambda.universe"),
        "--universe-sub",
        &data("lambda_dprime.universe"),
        "--universe-quot",
        &data("lambda_prime.universe"),
    ]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).starts_with("error[not-triangular]:"));
}
