//! Loader for the CLI golden cases in `tests/golden/cases.txt`.

use std::fs;
use std::path::{Path, PathBuf};

use pathset::cli;

pub struct Case {
    pub name: String,
    pub status: i32,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split_whitespace();
            Case {
                name: parts.next().unwrap().to_string(),
                status: parts.next().unwrap().parse().unwrap(),
                args: parts.map(String::from).collect(),
            }
        })
        .collect()
}

pub fn run_case(case: &Case) -> (i32, String, String) {
    let dir = golden_dir();
    let args: Vec<String> = case
        .args
        .iter()
        .map(|a| {
            if a.ends_with(".pg") {
                dir.join(a).to_string_lossy().into_owned()
            } else {
                a.clone()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = cli::run(std::iter::once("pathset".to_string()).chain(args), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
