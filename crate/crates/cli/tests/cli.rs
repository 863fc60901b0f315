use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use aicrepair::MAX_ATOMS_ENV;
use aicrepair_cli::run_cli;
use serde_json::Value;

fn golden(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("aicrepair").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn binary(args: &[&str], env: &[(&str, &str)], stdin: &str) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_aicrepair"));
    cmd.args(args)
        .env_remove(MAX_ATOMS_ENV)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_repairs_are_versioned_and_sorted() {
    let (code, out, _) = run(&[
        "repair",
        &golden("two_deletions.aic"),
        "--class",
        "FR",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["class"], "founded-repair");
    assert_eq!(v["repairs"], serde_json::json!([["-a"], ["-b"]]));
}

#[test]
fn syntax_errors_carry_positions_and_exit_two() {
    let (code, out, err) = binary(&["repair", "-"], &[], "db: a.\naic: a -> +b.");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("-:2:6:"), "{err}");
    assert!(err.contains("`not b`"), "{err}");

    let (code, _, err) = binary(&["repair", "-"], &[], "db: a\naic: a -> -a.");
    assert_eq!(code, 2);
    assert!(err.contains("-:2:1:"), "{err}");
}

#[test]
fn unknown_class_and_missing_file_are_input_errors() {
    assert_eq!(
        run(&["repair", &golden("chain.aic"), "--class", "nope"]).0,
        2
    );
    assert_eq!(run(&["repair", "/nonexistent/file.aic"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["revise", &golden("chain.aic")]).0, 2);
}

#[test]
fn bound_exceeded_is_a_refusal() {
    let (code, out, err) = run(&["repair", &golden("chain.aic"), "--max-atoms", "2"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("3 atoms"), "{err}");
}

#[test]
fn environment_sets_the_bound() {
    let file = golden("chain.aic");
    let (code, _, err) = binary(&["repair", &file], &[(MAX_ATOMS_ENV, "2")], "");
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = binary(&["repair", &file], &[(MAX_ATOMS_ENV, "3")], "");
    assert_eq!(code, 0);
    let (code, _, _) = binary(&["repair", &file], &[(MAX_ATOMS_ENV, "many")], "");
    assert_eq!(code, 2);
    let (code, _, _) = binary(
        &["repair", &file, "--max-atoms", "3"],
        &[(MAX_ATOMS_ENV, "2")],
        "",
    );
    assert_eq!(code, 0);
}

#[test]
fn supported_revisions_refuse_disjunctive_programs() {
    let (code, _, err) = run(&[
        "revise",
        &golden("disjoint.rev"),
        "--class",
        "supported-revision",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("not normal"), "{err}");
}

#[test]
fn complementary_body_warns_on_stderr() {
    let (code, out, err) = binary(&["repair", "-"], &[], "db: a.\naic: a, not a -> -a.");
    assert_eq!(code, 0);
    assert_eq!(out, "% justified-repair: 1\n{}\n");
    assert!(err.starts_with("warning: -:2:6:"), "{err}");
}

#[test]
fn check_reads_revision_literals() {
    let (code, out, _) = run(&[
        "check",
        &golden("support.rev"),
        "--set",
        "in(a),in(b),in(c)",
        "--class",
        "supported-revision",
    ]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, _, _) = run(&[
        "check",
        &golden("support.rev"),
        "--set",
        "+a",
        "--class",
        "revision",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn cqa_reports_empty_classes() {
    let (code, out, _) = run(&[
        "cqa",
        &golden("no_founded_repair.aic"),
        "--class",
        "founded-repair",
        "--query",
        "a",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("no-repairs\n"), "{out}");
}

#[test]
fn jobs_do_not_change_output() {
    for file in ["chain.aic", "cycle_broken.aic", "preference.rev"] {
        let path = golden(file);
        let command = if file.ends_with(".rev") {
            "revise"
        } else {
            "repair"
        };
        let classes: &[&str] = if command == "repair" {
            &["WR", "FWR", "JWR", "JR_N"]
        } else {
            &["WRev", "FWRev", "JWRev", "JRev_N"]
        };
        for class in classes {
            let one = run(&[
                command, &path, "--class", class, "--format", "json", "--jobs", "1",
            ]);
            let many = run(&[
                command, &path, "--class", class, "--format", "json", "--jobs", "3",
            ]);
            assert_eq!(one, many, "{file} {class}");
        }
    }
}

#[test]
fn shift_round_trips_through_the_command_line() {
    let (code, shifted, _) = run(&["shift", &golden("support.rev"), "--by", "a,d"]);
    assert_eq!(code, 0);
    let (code, back, _) = binary(&["shift", "-", "--by", "a,d"], &[], &shifted);
    assert_eq!(code, 0);
    let original = std::fs::read_to_string(golden("support.rev")).unwrap();
    let canonical = aicrepair::parse_instance(&original).unwrap().to_text();
    assert_eq!(back, canonical);
}
