use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use borderline_core::border::Certificate;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl From<&Certificate> for CertificateEntry {
    fn from(c: &Certificate) -> Self {
        CertificateEntry { name: c.name.clone(), holds: c.holds, detail: c.detail.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// The command name and every option that was given, as text.
    pub input: BTreeMap<String, String>,
    pub procedure: String,
    pub verdict: String,
    pub certificates: Vec<CertificateEntry>,
    /// Command-specific payload.
    pub result: Value,
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(input: BTreeMap<String, String>, procedure: &str, verdict: impl Into<String>) -> Report {
        Report {
            input,
            procedure: procedure.to_string(),
            verdict: verdict.into(),
            certificates: Vec::new(),
            result: Value::Null,
            timings: None,
        }
    }

    pub fn with_certificates<'a>(mut self, certs: impl IntoIterator<Item = &'a Certificate>) -> Report {
        self.certificates.extend(certs.into_iter().map(CertificateEntry::from));
        self
    }

    pub fn with_result(mut self, result: Value) -> Report {
        self.result = result;
        self
    }

    pub fn all_hold(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn without_timings(&self) -> Report {
        Report { timings: None, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn certificate_lines(certs: &[CertificateEntry]) -> Vec<String> {
    certs
        .iter()
        .map(|c| {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                format!("  {} {}", mark, c.name)
            } else {
                format!("  {} {}: {}", mark, c.name, c.detail)
            }
        })
        .collect()
}
