use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

use borderline::corpus;
use borderline_core::notation::parse_polynomial;
use borderline_core::GradedRing;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_borderline"))
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn strip_timings(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("timings");
        obj.remove("millis");
        for (_, child) in obj.iter_mut() {
            *child = strip_timings(child.take());
        }
    } else if let Some(arr) = v.as_array_mut() {
        for child in arr.iter_mut() {
            *child = strip_timings(child.take());
        }
    }
    v
}

fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn hilbert_function_row() {
    let out = exec(&["hf", "--ring", "P2", "--ideal", "y0^2,y1^3,y2^4", "--range", "0..6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1 3 5 6 5 3 1");
}

#[test]
fn monomial_border_rank_value() {
    let out = exec(&["monomial-br", "x0*x1^2*x2^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("6"));
}

#[test]
fn tensor_files_resolve_from_the_working_directory() {
    let out = bin()
        .args(["wild3", "--m", "3", "--tensor", "@diag.json"])
        .current_dir(corpus::default_dir().join("tensors"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not wild"));
}

#[test]
fn exit_codes() {
    assert_eq!(exec(&["ann", "x0*z9"]).status.code(), Some(1));
    assert_eq!(exec(&["ann", "x0*x1+"]).status.code(), Some(1));
    assert_eq!(exec(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(exec(&["identifiable", "x0*x1^2*x2^3", "--r", "6"]).status.code(), Some(2));
}

#[test]
fn json_output_matches_the_schema() {
    let schema = jsonschema::JSONSchema::compile(&schema()).unwrap();
    let out = exec(&["--json", "vspbar", "x0*x1*x2"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(schema.is_valid(&v));
    assert!(v["timings"]["total_ms"].is_number());
}

#[test]
fn corpus_reports_match_the_schema() {
    let schema = jsonschema::JSONSchema::compile(&schema()).unwrap();
    let dir = corpus::default_dir().join("expected");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        if let Some(report) = v.get("report") {
            assert!(schema.is_valid(report), "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen > 50);
}

#[test]
fn corpus_replay_is_deterministic() {
    let runs: Vec<Value> = (0..2)
        .map(|_| {
            let out = exec(&["--json", "corpus"]);
            assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
            strip_timings(serde_json::from_slice(&out.stdout).unwrap())
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn thread_count_does_not_change_the_enumeration() {
    let run = |threads: &str| {
        let out = bin()
            .args(["--json", "enumerate", "--form", "x0^3*x1*x2 + x0*x1^3*x3 + x2^3*x3^2", "--base-degree", "3", "--r", "10", "--ext-filter"])
            .env("BORDERLINE_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        strip_timings(serde_json::from_slice(&out.stdout).unwrap())
    };
    assert_eq!(run("1"), run("4"));
}

fn polynomial_text() -> impl Strategy<Value = String> {
    let term = (-9i64..=9, prop::collection::vec(0u32..=3, 3)).prop_map(|(c, e)| {
        let mono: Vec<String> = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| format!("y{}^{}", i, k)).collect();
        match mono.is_empty() {
            true => format!("{}", c),
            false => format!("{}*{}", c, mono.join("*")),
        }
    });
    prop::collection::vec(term, 1..=5).prop_map(|ts| ts.join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn printing_round_trips(text in polynomial_text()) {
        let ring = GradedRing::projective(2);
        let p = parse_polynomial(&text, &ring).unwrap();
        let printed = p.to_string_with(ring.var_names());
        prop_assert_eq!(parse_polynomial(&printed, &ring).unwrap(), p);
    }
}
