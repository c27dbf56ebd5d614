use std::fmt::Write;

use autfn_core::algebraverify::{CheckRecord, Status, Summary};
use serde::{Deserialize, Serialize};

/// The JSON document written by `relations`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub results: Vec<CheckRecord>,
    pub summary: Summary,
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

pub fn report_table(doc: &ReportDocument) -> String {
    let width = doc.results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    writeln!(out, "# autfn {} :: {}", doc.version, doc.command).unwrap();
    writeln!(out, "{:<6} {:<width$}  REF", "STATUS", "ID").unwrap();
    for r in &doc.results {
        writeln!(out, "{:<6} {:<width$}  {}", status_word(r.status), r.id, r.paper_ref).unwrap();
        writeln!(out, "{:<6} {:<width$}    {}", "", "", r.quote).unwrap();
        if let Some(w) = &r.witness {
            writeln!(out, "{:<6} {:<width$}    witness: {}", "", "", w).unwrap();
        }
    }
    let s = &doc.summary;
    writeln!(out, "summary: {} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped).unwrap();
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
