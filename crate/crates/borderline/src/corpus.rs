//! The golden corpus: a list of command lines with stored JSON expectations.
//!
//! Layout of a corpus directory: `cases.json` (an array of `{name, args}`),
//! `expected/<name>.json` and `tensors/` (the base for `@file` arguments).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use borderline_core::border::Certificate;
use borderline_core::Ideal;

use crate::args::Cli;
use crate::commands::{run, Context, Outcome, Status};
use crate::error::{usage, CliError, Result};
use crate::report::Report;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

/// What a case is expected to produce: an exit code and either a report or an error message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub exit: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Replay {
    pub case: Case,
    pub actual: Expectation,
    pub expected: Option<Expectation>,
    pub ideals: Vec<Ideal>,
    pub millis: f64,
}

impl Replay {
    pub fn matches(&self) -> bool {
        self.expected.as_ref().is_some_and(|e| same(e, &self.actual))
    }
}

fn same(a: &Expectation, b: &Expectation) -> bool {
    serde_json::to_value(a).ok() == serde_json::to_value(b).ok()
}

pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_cases(dir: &Path) -> Result<Vec<Case>> {
    let cases: Vec<Case> = serde_json::from_str(&read(&dir.join("cases.json"))?)?;
    if cases.iter().any(|c| c.args.first().map(String::as_str) == Some("corpus")) {
        return usage("the corpus cannot contain corpus runs");
    }
    Ok(cases)
}

/// Runs one case with `--json` semantics; timings are dropped.
pub fn run_case(case: &Case, ctx: &Context) -> (Expectation, Vec<Ideal>, f64) {
    let start = std::time::Instant::now();
    let argv = std::iter::once("borderline".to_string()).chain(case.args.iter().cloned());
    let (exp, ideals) = match Cli::try_parse_from(argv) {
        Err(e) => (Expectation { exit: 1, report: None, error: Some(e.kind().to_string()) }, Vec::new()),
        Ok(cli) => match run(&cli, ctx) {
            Ok(out) => {
                let Outcome { report, status, ideals, .. } = out;
                (Expectation { exit: status.exit_code(), report: Some(report.without_timings()), error: None }, ideals)
            }
            Err(e) => (Expectation { exit: 1, report: None, error: Some(e.to_string()) }, Vec::new()),
        },
    };
    (exp, ideals, start.elapsed().as_secs_f64() * 1000.0)
}

pub fn expectation_path(dir: &Path, case: &Case) -> PathBuf {
    dir.join("expected").join(format!("{}.json", case.name))
}

/// Replays every case; with `bless` the expectations are rewritten first.
pub fn replay(dir: &Path, ctx: &Context, bless: bool) -> Result<Vec<Replay>> {
    let cases = load_cases(dir)?;
    let case_ctx = Context { base_dir: dir.join("tensors"), ..ctx.clone() };
    let mut out = Vec::new();
    for case in cases {
        let (actual, ideals, millis) = run_case(&case, &case_ctx);
        let path = expectation_path(dir, &case);
        if bless {
            std::fs::create_dir_all(dir.join("expected")).map_err(|source| CliError::Io { path: dir.join("expected"), source })?;
            let text = serde_json::to_string_pretty(&actual)? + "\n";
            std::fs::write(&path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
        }
        let expected = match path.exists() {
            true => Some(serde_json::from_str::<Expectation>(&read(&path)?)?),
            false => None,
        };
        out.push(Replay { case, actual, expected, ideals, millis });
    }
    Ok(out)
}

pub fn corpus_cmd(ctx: &Context, input: BTreeMap<String, String>, dir: Option<PathBuf>, bless: bool) -> Result<Outcome> {
    let dir = dir.unwrap_or_else(default_dir);
    let runs = replay(&dir, ctx, bless)?;
    let mut certs = Vec::new();
    let mut lines = Vec::new();
    let mut mismatches = Vec::new();
    for r in &runs {
        let ok = r.matches();
        let detail = match &r.expected {
            None => "no stored expectation".to_string(),
            Some(e) if e.exit != r.actual.exit => format!("exit {} instead of {}", r.actual.exit, e.exit),
            Some(_) if !ok => "report differs".to_string(),
            Some(_) => format!("exit {}", r.actual.exit),
        };
        if !ok {
            mismatches.push(r.case.name.clone());
        }
        lines.push(format!("{} {}", if ok { "ok  " } else { "DIFF" }, r.case.name));
        certs.push(Certificate::new(&r.case.name, ok, detail));
    }
    let verdict = if mismatches.is_empty() {
        format!("{} cases match", runs.len())
    } else {
        format!("{} of {} cases differ", mismatches.len(), runs.len())
    };
    lines.insert(0, verdict.clone());
    let result = json!({"cases": runs.len(), "mismatches": mismatches});
    let report = Report::new(input, "corpus", verdict).with_certificates(&certs).with_result(result);
    let ideals = runs.into_iter().flat_map(|r| r.ideals).collect();
    let status = if mismatches.is_empty() { Status::Success } else { Status::Inconclusive };
    Ok(Outcome { report, status, text: lines, ideals })
}

pub fn expectation_value(e: &Expectation) -> Value {
    serde_json::to_value(e).expect("expectations serialize")
}
