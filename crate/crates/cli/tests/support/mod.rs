//! Golden-file runner shared by the golden and acceptance suites.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Exit status and the stream compared against the golden file: stdout on
/// success, stderr otherwise.
pub fn run_case(args: &[String]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_expoweyl"))
        .args(args)
        .current_dir(golden_dir())
        .env_remove("EXPOWEYL_CONFIG")
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit status");
    (code, if code == 0 { out.stdout } else { out.stderr })
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|c| Case {
            name: c["name"].as_str().unwrap().to_string(),
            args: c["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect(),
            exit: c.get("exit").and_then(Value::as_i64).unwrap_or(0) as i32,
        })
        .collect()
}

/// Names of cases whose exit status or output differs from the committed files.
pub fn mismatches() -> Vec<String> {
    cases()
        .into_iter()
        .filter(|c| {
            let (code, got) = run_case(&c.args);
            let want = std::fs::read(golden_dir().join(format!("{}.out", c.name))).unwrap_or_default();
            code != c.exit || got != want
        })
        .map(|c| c.name)
        .collect()
}
