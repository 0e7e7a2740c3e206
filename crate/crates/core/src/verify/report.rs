//! Report types shared by every verification kind, plus CSV output.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sweep::GraphRecord;
use crate::graph::{to_graph6, Graph};
use crate::spectra::{distance_laplacian, laplacian};

/// Counterexamples kept per suite; `failures` still counts all of them.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    pub checked: usize,
    pub failures: usize,
    /// graph6 of failing graphs.
    pub counterexamples: Vec<String>,
    /// One line per counterexample: graph6, exact characteristic
    /// polynomial, and what went wrong.
    pub details: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A failing case, rendered so it can be reproduced from one line.
#[derive(Debug, Clone)]
pub(crate) struct Failure {
    graph6: String,
    detail: String,
}

impl Failure {
    pub(crate) fn of(g: &Graph, note: impl Into<String>) -> Failure {
        let graph6 = to_graph6(g);
        let poly = match distance_laplacian(g) {
            Ok(m) => format!("dl-charpoly {}", m.char_poly()),
            Err(_) => format!("l-charpoly {}", laplacian(g).char_poly()),
        };
        Failure { detail: format!("{graph6} {poly}: {}", note.into()), graph6 }
    }
}

/// Accumulates pass/fail outcomes in a fixed order.
#[derive(Debug)]
pub(crate) struct SuiteBuilder {
    result: SuiteResult,
}

impl SuiteBuilder {
    pub(crate) fn new(name: impl Into<String>) -> Self {
        SuiteBuilder {
            result: SuiteResult {
                name: name.into(),
                status: Status::Pass,
                checked: 0,
                failures: 0,
                counterexamples: Vec::new(),
                details: Vec::new(),
            },
        }
    }

    pub(crate) fn record(&mut self, outcome: Option<Failure>) {
        self.result.checked += 1;
        if let Some(f) = outcome {
            self.fail(f);
        }
    }

    /// A failure not tied to a single checked item.
    pub(crate) fn fail(&mut self, f: Failure) {
        self.result.status = Status::Fail;
        self.result.failures += 1;
        if self.result.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.result.counterexamples.push(f.graph6);
            self.result.details.push(f.detail);
        }
    }

    pub(crate) fn fail_note(&mut self, note: impl Into<String>) {
        self.result.status = Status::Fail;
        self.result.failures += 1;
        self.result.details.push(note.into());
    }

    pub(crate) fn extend(&mut self, outcomes: impl IntoIterator<Item = Option<Failure>>) {
        for o in outcomes {
            self.record(o);
        }
    }

    pub(crate) fn finish(self) -> SuiteResult {
        self.result
    }
}

/// Runs `check` over `items` in parallel and merges results in input order.
pub(crate) fn run_suite<T: Sync>(
    name: &str,
    items: &[T],
    check: impl Fn(&T) -> Option<Failure> + Sync + Send,
) -> SuiteResult {
    let outcomes: Vec<Option<Failure>> = items.par_iter().map(check).collect();
    let mut b = SuiteBuilder::new(name);
    b.extend(outcomes);
    b.finish()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub kind: String,
    pub n: usize,
    pub count: usize,
    pub class_size: usize,
    pub verdict: Verdict,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
    pub suites: Vec<SuiteResult>,
    /// Groups of graph6 codes sharing a characteristic polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cospectral_groups: Option<Vec<Vec<String>>>,
}

impl VerifyReport {
    /// Report whose verdict is decided by its suites alone.
    pub(crate) fn from_suites(kind: &str, n: usize, suites: Vec<SuiteResult>) -> VerifyReport {
        let verdict = if suites.iter().all(SuiteResult::passed) { Verdict::Match } else { Verdict::Mismatch };
        VerifyReport {
            kind: kind.to_string(),
            n,
            count: suites.iter().map(|s| s.checked).sum(),
            class_size: 0,
            verdict,
            missing: Vec::new(),
            unexpected: Vec::new(),
            suites,
            cospectral_groups: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Match && self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// One CSV row per sweep record; `in_class` marks `m(∂₁) = n - 3`.
pub fn write_records_csv<W: Write>(out: &mut W, n: usize, records: &[GraphRecord]) -> io::Result<()> {
    writeln!(out, "graph6,largest,multiplicity,diameter,p5_free,complement_components,in_class")?;
    let target = n.saturating_sub(3) as u32;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            csv_field(&r.graph6),
            r.largest,
            r.multiplicity,
            r.diameter,
            r.p5_free,
            r.complement_components,
            r.multiplicity == target
        )?;
    }
    Ok(())
}

/// graph6 may contain `,` or `"`, so such fields are quoted.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_caps_counterexamples() {
        let g = Graph::empty(2).unwrap();
        let mut b = SuiteBuilder::new("demo");
        for _ in 0..MAX_COUNTEREXAMPLES + 5 {
            b.record(Some(Failure::of(&g, "bad")));
        }
        b.record(None);
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checked, MAX_COUNTEREXAMPLES + 6);
        assert_eq!(r.failures, MAX_COUNTEREXAMPLES + 5);
        assert_eq!(r.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert!(r.details[0].starts_with("A? l-charpoly"));
    }

    #[test]
    fn report_json_shape() {
        let suite = run_suite("all-even", &[2, 4, 6], |k| (k % 2 != 0).then(|| unreachable!()));
        let report = VerifyReport::from_suites("demo", 3, vec![suite]);
        assert!(report.passed());
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["verdict"], "match");
        assert_eq!(v["suites"][0]["status"], "pass");
        assert_eq!(v["count"], 3);
        assert!(v.get("cospectral_groups").is_none());
    }

    #[test]
    fn csv_quotes_awkward_fields() {
        assert_eq!(csv_field("E?\"w"), "\"E?\"\"w\"");
        assert_eq!(csv_field("C~"), "C~");
    }
}
