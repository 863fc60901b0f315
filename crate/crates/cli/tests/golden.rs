//! Recorded invocations over the instance files in `tests/golden`.
//!
//! Set `AICREPAIR_BLESS=1` to rewrite the recorded outputs.

use std::fs;
use std::path::{Path, PathBuf};

use aicrepair_cli::run_cli;

struct Case {
    name: String,
    code: i32,
    args: Vec<String>,
}

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cases() -> Vec<Case> {
    let text = fs::read_to_string(dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(parts.len(), 3, "malformed case line `{l}`");
            let args = parts[2]
                .split_whitespace()
                .map(|a| {
                    let p = dir().join(a);
                    if p.is_file() {
                        p.to_string_lossy().into_owned()
                    } else {
                        a.to_string()
                    }
                })
                .collect();
            Case {
                name: parts[0].to_string(),
                code: parts[1].parse().unwrap(),
                args,
            }
        })
        .collect()
}

pub fn run(args: &[String]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("aicrepair".to_string()).chain(args.iter().cloned());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn recorded_outputs_match() {
    let bless = std::env::var_os("AICREPAIR_BLESS").is_some();
    let mut failures = Vec::new();
    for case in cases() {
        let (code, out, err) = run(&case.args);
        let path = dir().join(format!("{}.out", case.name));
        if bless {
            fs::write(&path, &out).unwrap();
        }
        let want = fs::read_to_string(&path).unwrap_or_default();
        if code != case.code {
            failures.push(format!(
                "{}: exit {code}, expected {}\n{err}",
                case.name, case.code
            ));
        }
        if out != want {
            failures.push(format!(
                "{}: output differs\n--- got\n{out}--- want\n{want}",
                case.name
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
