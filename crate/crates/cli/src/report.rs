//! Verification report: one entry per identity, sorted for reproducibility.

use std::fmt::Write as _;

use serde::Serialize;
use superfield::check::{Check, Residual};
use superfield::suites::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An informational identity that does not hold; never fails a run.
    Info,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ResidualValue {
    Terms(usize),
    MaxAbs(f64),
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub suite: String,
    pub identity: String,
    pub anchor: String,
    pub status: Status,
    pub residual: ResidualValue,
    pub residual_kind: &'static str,
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub lie: String,
    pub modes: usize,
    pub suites: Vec<String>,
    pub passed: bool,
    pub counts: Counts,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

pub fn entry(suite: Suite, c: &Check, millis: Option<u64>) -> Entry {
    let status = match (c.passed, c.informational) {
        (true, _) => Status::Pass,
        (false, true) => Status::Info,
        (false, false) => Status::Fail,
    };
    let (residual, residual_kind) = match c.residual {
        Residual::Terms(n) => (ResidualValue::Terms(n), "terms"),
        Residual::MaxAbs(x) => (ResidualValue::MaxAbs(x), "max_abs"),
    };
    Entry {
        suite: suite.name().to_string(),
        identity: c.identity.clone(),
        anchor: c.anchor.clone(),
        status,
        residual,
        residual_kind,
        millis,
    }
}

impl Report {
    /// Sorted by suite, then anchor, then identity.
    pub fn new(
        seed: u64,
        lie: String,
        modes: usize,
        suites: &[Suite],
        mut entries: Vec<Entry>,
    ) -> Self {
        let order = |s: &str| Suite::ALL.iter().position(|x| x.name() == s);
        entries.sort_by(|a, b| {
            (order(&a.suite), &a.anchor, &a.identity).cmp(&(
                order(&b.suite),
                &b.anchor,
                &b.identity,
            ))
        });
        let mut counts = Counts::default();
        for e in &entries {
            match e.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Info => counts.info += 1,
            }
        }
        let mut names: Vec<Suite> = suites.to_vec();
        names.sort();
        names.dedup();
        Report {
            seed,
            lie,
            modes,
            suites: names.iter().map(|s| s.name().to_string()).collect(),
            passed: counts.fail == 0,
            counts,
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut last = "";
        for e in &self.entries {
            if e.suite != last {
                let _ = writeln!(out, "[{}]", e.suite);
                last = &e.suite;
            }
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let r = match e.residual {
                ResidualValue::Terms(n) => format!("{n} terms"),
                ResidualValue::MaxAbs(x) => format!("{x:.3e}"),
            };
            let _ = write!(out, "  {tag}  {}  ({}; residual {r}", e.identity, e.anchor);
            if let Some(ms) = e.millis {
                let _ = write!(out, "; {ms} ms");
            }
            out.push_str(")\n");
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} informational",
            self.counts.pass, self.counts.fail, self.counts.info
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: &str, passed: bool, info: bool) -> Check {
        let mut c = Check::new(name, "a", passed, Residual::Terms(usize::from(!passed)));
        c.informational = info;
        c
    }

    #[test]
    fn sorted_and_counted() {
        let es = vec![
            entry(Suite::Bv, &c("z", true, false), None),
            entry(Suite::Algebra, &c("y", false, false), None),
            entry(Suite::Algebra, &c("x", false, true), None),
        ];
        let r = Report::new(1, "su(2)".into(), 2, &[Suite::Bv, Suite::Algebra], es);
        let ids: Vec<_> = r.entries.iter().map(|e| e.identity.as_str()).collect();
        assert_eq!(ids, ["x", "y", "z"]);
        assert!(!r.passed);
        assert_eq!((r.counts.pass, r.counts.fail, r.counts.info), (1, 1, 1));
        assert_eq!(r.suites, ["algebra", "bv"]);
        assert!(r.to_json().contains("\"millis\": null"));
    }

    #[test]
    fn empty_report_is_valid() {
        let r = Report::new(0, "u(1)".into(), 1, &[], Vec::new());
        assert!(r.passed);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 0);
    }
}
