//! Helpers shared by the integration suites: run the built binary and
//! parse its CSV output.
#![allow(dead_code)] // each suite uses a different subset

use std::process::Command;

pub struct CliRun {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run_cli(args: &[&str]) -> CliRun {
    run_cli_with_env(args, &[])
}

pub fn run_cli_with_env(args: &[&str], env: &[(&str, &str)]) -> CliRun {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hallpost"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    CliRun {
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
        code: out.status.code().unwrap_or(-1),
    }
}

/// Split CSV output into (header, data rows, trailer lines), skipping the
/// `#` metadata lines. Trailer lines are non-comment lines after the data
/// that do not have the header's field count (the audit summary).
pub fn parse_csv(stdout: &str) -> (Vec<String>, Vec<Vec<String>>, Vec<String>) {
    let mut header: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    let mut trailer = Vec::new();
    for line in stdout.lines() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        let fields: Vec<String> = line.split(',').map(str::to_string).collect();
        match &header {
            None => header = Some(fields),
            Some(h) => {
                if fields.len() == h.len() {
                    rows.push(fields);
                } else {
                    trailer.push(line.to_string());
                }
            }
        }
    }
    (header.expect("header row present"), rows, trailer)
}

/// Column values parsed as f64.
pub fn column(parsed: &(Vec<String>, Vec<Vec<String>>, Vec<String>), name: &str) -> Vec<f64> {
    let idx = parsed
        .0
        .iter()
        .position(|c| c == name)
        .unwrap_or_else(|| panic!("column {name} in {:?}", parsed.0));
    parsed
        .1
        .iter()
        .map(|row| row[idx].parse::<f64>().expect("numeric cell"))
        .collect()
}
