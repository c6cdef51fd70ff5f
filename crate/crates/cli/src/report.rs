//! Structured pass/fail reports with witnesses and stable citations.
//!
//! JSON serialization is deterministic for fixed inputs and seed; the
//! elapsed-time field is the only part that varies between runs.

use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub description: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub citations: Vec<&'static str>,
    pub seed: Option<u64>,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: u128,
}

/// Fixed citation table: every check cites at least one stable anchor
/// naming the identity or formula family it verifies.
pub fn citations_for(check: &str) -> Vec<&'static str> {
    match check {
        "branch.admissible" => vec!["ineq:five-case-branching"],
        "branch.multiplicity" => vec!["oracle:restricted-character", "ineq:five-case-branching"],
        "packet" => vec!["ktype:minimal-four", "param:harish-chandra-shift"],
        "hodge" => vec!["hodge:four-bidegrees", "hodge:sum-three-minus-c"],
        "hodge.ranks" => vec!["ranks:stable-two-one-one"],
        "rep.build" => vec!["irrep:weyl-dimension", "irrep:seed-annihilation"],
        "lambda-scan" => vec!["scan:first-lowering-nonzero", "cayley:weight-transport"],
        "pairing.constants" => vec!["const:factorial-abc"],
        "pairing.coeffs" => vec!["proj:alpha-quarter", "proj:beta-cubed-chain"],
        "pairing.assemble" => vec!["assemble:four-terms", "tokens:index-triples"],
        "pairing.survival" => vec!["survive:second-term", "witness:odd-shifts"],
        "local.unramified" => vec![
            "unram:series-vs-alternating",
            "antisym:six-vanishings",
            "lfactor:degree-four",
        ],
        "local.bessel" => vec!["bessel:alternating-ratio"],
        "local.tate" => vec!["tate:unramified-geometric"],
        "arch.mellin" => vec!["mellin:gamma-ratio-transform"],
        "arch.tate" => vec!["tate:arch-gamma-square"],
        "trace" => vec![
            "trace:net-pi-exponent",
            "pi:half-integer-gamma",
            "period:two-pi-i-squared",
        ],
        _ => vec!["misc:general"],
    }
}

pub struct ReportBuilder {
    check: String,
    witnesses: Vec<Witness>,
    seed: Option<u64>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str) -> Self {
        ReportBuilder {
            check: check.to_string(),
            witnesses: Vec::new(),
            seed: None,
            start: Instant::now(),
        }
    }

    pub fn seed(mut self, s: Option<u64>) -> Self {
        self.seed = s;
        self
    }

    pub fn witness(mut self, description: &str, value: impl ToString) -> Self {
        self.witnesses.push(Witness {
            description: description.to_string(),
            value: value.to_string(),
        });
        self
    }

    pub fn finish(self, status: Status) -> VerificationReport {
        let citations = citations_for(&self.check);
        VerificationReport {
            check: self.check,
            status,
            witnesses: self.witnesses,
            citations,
            seed: self.seed,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// Output format selection shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(reports: &[VerificationReport], fmt: Format) -> String {
    match fmt {
        Format::Json => {
            serde_json::to_string_pretty(reports).expect("report serialization is infallible")
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                out.push_str(&format!("[{}] {}\n", tag, r.check));
                for w in &r.witnesses {
                    out.push_str(&format!("    {} = {}\n", w.description, w.value));
                }
                out.push_str(&format!("    citations: {}\n", r.citations.join(", ")));
            }
            out
        }
        Format::Csv => {
            // tabular commands emit witnesses as rows
            let mut out = String::from("check,status,description,value\n");
            for r in reports {
                let tag = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                for w in &r.witnesses {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        r.check,
                        tag,
                        w.description.replace(',', ";"),
                        w.value.replace(',', ";")
                    ));
                }
            }
            out
        }
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}
