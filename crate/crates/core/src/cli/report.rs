use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::PresentationReport;

/// One computed closure dimension, as printed by `close` and `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub name: String,
    pub m: usize,
    pub method: String,
    pub field: String,
    /// `None` when the computation failed; see `error`.
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    #[serde(default, rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    pub generators: usize,
    pub rank: usize,
    pub ms: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportRecord {
    pub fn from_report(name: &str, report: &PresentationReport, expected: Option<usize>) -> Self {
        let s = &report.stats;
        ReportRecord {
            name: name.to_string(),
            m: s.m,
            method: s.method.to_string(),
            field: report.field.clone(),
            dim: Some(s.dim),
            expected,
            matches: expected.map(|e| e == s.dim),
            generators: s.generators,
            rank: s.rank,
            ms: s.millis,
            error: None,
        }
    }

    pub fn failed(name: &str, m: usize, method: &str, field: &str, expected: Option<usize>, error: String) -> Self {
        ReportRecord {
            name: name.to_string(),
            m,
            method: method.to_string(),
            field: field.to_string(),
            dim: None,
            expected,
            matches: expected.map(|_| false),
            generators: 0,
            rank: 0,
            ms: 0,
            error: Some(error),
        }
    }

    /// False only for a mismatch or an error.
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.matches != Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

impl fmt::Display for ReportRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={}", self.name, self.m)?;
        match self.dim {
            Some(d) => write!(f, " dim={d}")?,
            None => write!(f, " dim=?")?,
        }
        if let Some(e) = self.expected {
            write!(f, " expected={e} {}", if self.matches == Some(true) { "ok" } else { "MISMATCH" })?;
        }
        write!(f, " [{}, {}, {} ms]", self.field, self.method, self.ms)?;
        if let Some(err) = &self.error {
            write!(f, " error: {err}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{ClosureStats, Method};

    fn report(dim: usize) -> PresentationReport {
        PresentationReport {
            field: "Q mod 101".into(),
            stats: ClosureStats { m: 2, method: Method::General, dim, generators: 3, rank: 3, millis: 7 },
        }
    }

    #[test]
    fn optional_fields_are_omitted() {
        let r = ReportRecord::from_report("a", &report(6), None);
        assert_eq!(
            r.to_json(),
            r#"{"name":"a","m":2,"method":"general","field":"Q mod 101","dim":6,"generators":3,"rank":3,"ms":7}"#
        );
        assert!(r.ok());
    }

    #[test]
    fn match_flag_follows_expected() {
        let r = ReportRecord::from_report("a", &report(6), Some(7));
        assert_eq!(r.matches, Some(false));
        assert!(!r.ok());
        assert!(r.to_json().contains(r#""expected":7,"match":false"#));
        assert!(r.to_string().contains("MISMATCH"));
        let back: ReportRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn failures_carry_the_error() {
        let r = ReportRecord::failed("a", 3, "naive", "Q", Some(5), "no".into());
        assert!(!r.ok());
        assert!(r.to_json().contains(r#""dim":null"#));
    }
}
