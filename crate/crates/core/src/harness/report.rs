//! Verification records, the run summary and their serializations.

use std::io::Write;

use serde::Serialize;

use super::checks::{Check, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub pass: bool,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn new(check: Check, outcome: Outcome) -> Self {
        CheckResult { check, pass: outcome == Outcome::Pass, outcome }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub graph_id: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub checks: Vec<CheckResult>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: String,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub checks: Vec<Tally>,
}

impl Summary {
    pub fn new(checks: &[Check]) -> Self {
        Summary {
            checks: checks.iter().map(|c| Tally { check: c.to_string(), ..Tally::default() }).collect(),
            ..Summary::default()
        }
    }

    pub fn add(&mut self, record: &VerificationRecord) {
        self.graphs += 1;
        for (tally, result) in self.checks.iter_mut().zip(&record.checks) {
            match result.outcome {
                Outcome::Pass => tally.pass += 1,
                Outcome::Fail(_) => tally.fail += 1,
                Outcome::Skipped(_) => tally.skipped += 1,
                Outcome::Error(_) => tally.error += 1,
            }
        }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|t| t.fail + t.error).sum()
    }

    pub fn tally(&self, check: Check) -> Option<&Tally> {
        let name = check.to_string();
        self.checks.iter().find(|t| t.check == name)
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

pub fn write_json_record(out: &mut dyn Write, record: &VerificationRecord) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    out.write_all(b"\n")
}

pub fn write_json_summary(out: &mut dyn Write, summary: &Summary) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, &SummaryLine { summary })?;
    out.write_all(b"\n")
}

/// One CSV row per (graph, check).
pub struct CsvReport<W: Write> {
    writer: csv::Writer<W>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph_id: usize,
    graph6: &'a str,
    n: usize,
    m: usize,
    check: String,
    outcome: &'a str,
    detail: &'a str,
}

impl<W: Write> CsvReport<W> {
    pub fn new(out: W) -> Self {
        CsvReport { writer: csv::Writer::from_writer(out) }
    }

    pub fn write(&mut self, record: &VerificationRecord) -> csv::Result<()> {
        for r in &record.checks {
            self.writer.serialize(CsvRow {
                graph_id: record.graph_id,
                graph6: &record.graph6,
                n: record.n,
                m: record.m,
                check: r.check.to_string(),
                outcome: r.outcome.tag(),
                detail: r.outcome.detail().unwrap_or(""),
            })?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.writer.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> VerificationRecord {
        VerificationRecord {
            graph_id: 0,
            graph6: "Dhc".into(),
            n: 5,
            m: 5,
            checks: vec![
                CheckResult::new(Check::TheoremMain, Outcome::Pass),
                CheckResult::new(Check::PtBound(4), Outcome::Skipped("contains P4[0,1,2,3]".into())),
            ],
            elapsed_us: 7,
        }
    }

    #[test]
    fn json_shape() {
        let mut out = Vec::new();
        write_json_record(&mut out, &record()).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            concat!(
                r#"{"graph_id":0,"graph6":"Dhc","n":5,"m":5,"checks":["#,
                r#"{"check":"THEOREM_MAIN","pass":true,"outcome":"PASS"},"#,
                r#"{"check":"PT_BOUND(4)","pass":false,"outcome":"SKIPPED","detail":"contains P4[0,1,2,3]"}"#,
                r#"],"elapsed_us":7}"#,
                "\n"
            )
        );
    }

    #[test]
    fn summary_counts() {
        let mut s = Summary::new(&[Check::TheoremMain, Check::PtBound(4)]);
        s.add(&record());
        assert_eq!(s.graphs, 1);
        assert_eq!(s.tally(Check::TheoremMain).unwrap().pass, 1);
        assert_eq!(s.tally(Check::PtBound(4)).unwrap().skipped, 1);
        assert_eq!(s.failures(), 0);
        let mut out = Vec::new();
        write_json_summary(&mut out, &s).unwrap();
        assert!(String::from_utf8(out).unwrap().starts_with(r#"{"summary":{"graphs":1,"#));
    }

    #[test]
    fn csv_rows() {
        let mut report = CsvReport::new(Vec::new());
        report.write(&record()).unwrap();
        let bytes = report.writer.into_inner().unwrap();
        let text = String::from_utf8(bytes).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "graph_id,graph6,n,m,check,outcome,detail");
        assert_eq!(lines[1], "0,Dhc,5,5,THEOREM_MAIN,PASS,");
        assert_eq!(lines.len(), 3);
    }
}
