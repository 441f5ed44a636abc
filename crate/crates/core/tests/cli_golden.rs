//! Byte-exact CLI outputs for the commands listed in `golden/cases.txt`.
//!
//! Set `PATHSET_BLESS=1` to rewrite the expected files after an
//! intentional output change, then review the diff.

mod common;

use std::fs;

use common::golden::{cases, golden_dir, run_case};

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("PATHSET_BLESS").is_some();
    let mut failures = Vec::new();
    for case in cases() {
        let (status, out, err) = run_case(&case);
        let path = golden_dir().join("expected").join(format!("{}.out", case.name));
        if bless {
            fs::write(&path, &out).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap_or_default();
        if status != case.status {
            failures.push(format!("{}: exit {status}, expected {} ({err})", case.name, case.status));
        }
        if out != expected {
            failures.push(format!("{}: output differs\n--- got\n{out}--- want\n{expected}", case.name));
        }
        if status == 2 && err.is_empty() {
            failures.push(format!("{}: no diagnostic on failure", case.name));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn outputs_are_deterministic() {
    for case in cases() {
        assert_eq!(run_case(&case), run_case(&case), "{}", case.name);
    }
}

#[test]
fn printed_graphs_parse_back() {
    for case in cases() {
        let (status, out, _) = run_case(&case);
        if status == 0 && out.starts_with("alphabet:") {
            let p = pathset::graphfile::read(&out).unwrap();
            assert_eq!(pathset::graphfile::write(&p), out, "{}", case.name);
        }
    }
}
