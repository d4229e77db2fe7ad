//! Pass/fail bookkeeping shared by the verification routines.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A documented exception: the identity is not claimed at this index.
    /// `holds` records what was actually observed.
    Excluded { holds: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub expected: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub actual: BigInt,
    pub status: Status,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    crate::poly::integer_to_json(v).serialize(s)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Assumptions the results depend on, printed alongside them.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Records `expected == actual` as a plain pass/fail.
    pub fn expect(&mut self, identity: &str, n: usize, expected: impl Into<BigInt>, actual: impl Into<BigInt>) {
        let (expected, actual) = (expected.into(), actual.into());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.checks.push(Check { identity: identity.to_string(), n, expected, actual, status });
    }

    pub fn exclude(&mut self, identity: &str, n: usize, expected: impl Into<BigInt>, actual: impl Into<BigInt>) {
        let (expected, actual) = (expected.into(), actual.into());
        let holds = expected == actual;
        self.checks.push(Check { identity: identity.to_string(), n, expected, actual, status: Status::Excluded { holds } });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, identity: &str, n: usize) -> Option<&Check> {
        self.checks.iter().find(|c| c.identity == identity && c.n == n)
    }

    pub fn count(&self, identity: &str) -> usize {
        self.checks.iter().filter(|c| c.identity == identity).count()
    }
}

impl fmt::Display for Report {
    /// One summary line per identity, followed by every failure.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !names.contains(&c.identity.as_str()) {
                names.push(&c.identity);
            }
        }
        for name in names {
            let rows: Vec<&Check> = self.checks.iter().filter(|c| c.identity == name).collect();
            let failed = rows.iter().filter(|c| c.status == Status::Fail).count();
            let excluded: Vec<String> = rows
                .iter()
                .filter_map(|c| match c.status {
                    Status::Excluded { holds } => Some(format!("n={} ({})", c.n, if holds { "holds" } else { "does not hold" })),
                    _ => None,
                })
                .collect();
            let lo = rows.iter().map(|c| c.n).min().unwrap_or(0);
            let hi = rows.iter().map(|c| c.n).max().unwrap_or(0);
            let verdict = if failed == 0 { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {name} n={lo}..={hi} ({} checks", rows.len())?;
            if failed > 0 {
                write!(f, ", {failed} failed")?;
            }
            if !excluded.is_empty() {
                write!(f, ", excluded {}", excluded.join(", "))?;
            }
            writeln!(f, ")")?;
        }
        for c in self.failures() {
            writeln!(f, "  failed {} at n={}: expected {}, got {}", c.identity, c.n, c.expected, c.actual)?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}
