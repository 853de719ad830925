#![allow(dead_code)]

use std::path::PathBuf;

pub const WORKSPACES: [&str; 5] = ["fork", "fork_swapped", "two_cycle", "loop_source", "loop_sink"];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

pub fn workspace_path(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.json"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI in-process.
pub fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("taumatch").chain(args.iter().copied());
    let code = taumatch::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Runs with `--workspace` pointing at a golden workspace.
pub fn run_on(ws: &str, args: &[&str]) -> Run {
    let path = workspace_path(ws);
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.push("--workspace");
    all.push(&p);
    run(&all)
}
