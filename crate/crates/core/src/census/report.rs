use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::ClassificationTag;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
}

/// One failed check. `ideal` is empty for semigroup-level checks; for
/// overring checks it holds the conductor ideal `S − T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub semigroup: String,
    pub ideal: String,
    pub check_id: String,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NegativeAHit {
    pub genus: i64,
    pub semigroup: String,
    pub ideal: String,
    /// The translate of `ideal` with minimum 0.
    pub class: String,
    pub a: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub scope: String,
    pub window: u32,
    pub semigroups: u64,
    pub semigroups_per_genus: BTreeMap<i64, u64>,
    pub ideals: u64,
    pub overring_pairs: u64,
    pub checks: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
    pub classification: BTreeMap<String, u64>,
    pub case_j: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CensusReport {
    pub(crate) fn empty(scope: String, window: u32) -> Self {
        CensusReport {
            scope,
            window,
            semigroups: 0,
            semigroups_per_genus: BTreeMap::new(),
            ideals: 0,
            overring_pairs: 0,
            checks: BTreeMap::new(),
            violations: Vec::new(),
            classification: ClassificationTag::ALL
                .iter()
                .map(|t| (t.as_str().to_string(), 0))
                .collect(),
            case_j: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checks_run(&self) -> u64 {
        self.checks.values().map(|t| t.pass + t.fail).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Violations as CSV with columns
    /// `semigroup_encoding,ideal_encoding,check_id,lhs,rhs`.
    pub fn write_violations_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["semigroup_encoding", "ideal_encoding", "check_id", "lhs", "rhs"])
            .map_err(io)?;
        for v in &self.violations {
            w.write_record([
                v.semigroup.as_str(),
                v.ideal.as_str(),
                v.check_id.as_str(),
                &v.lhs.to_string(),
                &v.rhs.to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }
}
