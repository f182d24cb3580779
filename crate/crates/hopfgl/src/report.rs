//! Structured pass/fail records shared by the validators, the verification
//! suite, and the CLI.
//!
//! One record per check. The line format is stable and byte-deterministic:
//!
//! ```text
//! check=<name> params=<k=v;k=v|-> status=<pass|fail> detail=<text|->
//! ```

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub detail: String,
}

impl Record {
    pub fn pass(check: impl Into<String>) -> Record {
        Record {
            check: check.into(),
            params: Vec::new(),
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(check: impl Into<String>, detail: impl Into<String>) -> Record {
        Record {
            check: check.into(),
            params: Vec::new(),
            passed: false,
            detail: detail.into(),
        }
    }

    /// Builds a pass or fail record from an optional discrepancy message.
    pub fn from_discrepancy(check: impl Into<String>, diff: Option<String>) -> Record {
        match diff {
            None => Record::pass(check),
            Some(d) => Record::fail(check, d),
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl fmt::Display) -> Record {
        self.params.push((key.into(), value.to_string()));
        self
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = if self.params.is_empty() {
            "-".to_string()
        } else {
            self.params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";")
        };
        let detail = if self.detail.is_empty() {
            "-"
        } else {
            &self.detail
        };
        write!(
            f,
            "check={} params={} status={} detail={}",
            self.check,
            params,
            if self.passed { "pass" } else { "fail" },
            detail
        )
    }
}

/// An ordered list of check records.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    records: Vec<Record>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&Record> {
        self.records.iter().find(|r| !r.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_line_format() {
        let r = Record::pass("fgl.unit-left")
            .with_param("law", "additive")
            .with_param("order", 8);
        assert_eq!(
            r.to_string(),
            "check=fgl.unit-left params=law=additive;order=8 status=pass detail=-"
        );
        let f = Record::fail("fgl.assoc", "u^2*v: lhs=1, rhs=0");
        assert_eq!(
            f.to_string(),
            "check=fgl.assoc params=- status=fail detail=u^2*v: lhs=1, rhs=0"
        );
    }

    #[test]
    fn report_aggregates() {
        let mut rep = Report::new();
        rep.push(Record::pass("a"));
        assert!(rep.passed());
        rep.push(Record::fail("b", "boom"));
        assert!(!rep.passed());
        assert_eq!(rep.first_failure().unwrap().check, "b");
    }
}
