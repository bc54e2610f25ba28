//! JSON document and plain-text table for a list of reports.

use amalgam_core::{Status, VerificationReport};
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize)]
struct Document<'a> {
    version: u32,
    reports: &'a [VerificationReport],
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    let doc = Document {
        version: FORMAT_VERSION,
        reports,
    };
    serde_json::to_string_pretty(&doc).expect("reports serialize")
}

/// Copies of `reports` with timing zeroed, for run-to-run comparison.
pub fn without_timing(reports: &[VerificationReport]) -> Vec<VerificationReport> {
    reports
        .iter()
        .map(|r| VerificationReport {
            millis: 0,
            ..r.clone()
        })
        .collect()
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::HypothesisNotMet => "hypothesis_not_met",
        Status::TheoremBacked => "theorem_backed",
    }
}

pub fn any_failed(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

pub fn render_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<4} {:<width$} {:<18} {:>6}  instance\n", "#", "check", "status", "ms");
    for (i, r) in reports.iter().enumerate() {
        out.push_str(&format!(
            "{:<4} {:<width$} {:<18} {:>6}  {}\n",
            i + 1,
            r.check,
            status_word(r.status),
            r.millis,
            r.instance
        ));
        if let Some(c) = &r.counterexample {
            out.push_str(&format!("     counterexample: {c}\n"));
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} reports: {} pass, {} fail, {} hypothesis_not_met, {} theorem_backed\n",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::HypothesisNotMet),
        count(Status::TheoremBacked)
    ));
    out
}
