//! Integer sequences and their b-file form (`n value` per line).

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: index {found} does not follow {previous}")]
    Gap { line: usize, previous: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: String,
    /// Index of `values[0]`.
    pub offset: usize,
    #[serde(serialize_with = "ser_values")]
    pub values: Vec<BigInt>,
    /// Emitted as `# …` lines ahead of the data.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub comments: Vec<String>,
}

fn ser_values<S: serde::Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(crate::poly::integer_to_json))
}

impl SequenceTable {
    pub fn new(name: impl Into<String>, offset: usize, values: Vec<BigInt>) -> Self {
        SequenceTable { name: name.into(), offset, values, comments: Vec::new() }
    }

    pub fn from_u64s(name: impl Into<String>, offset: usize, values: &[u64]) -> Self {
        Self::new(name, offset, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }

    /// Last index present, if any.
    pub fn last_index(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.offset + self.values.len() - 1)
    }

    pub fn indexed(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.values.iter().enumerate().map(move |(i, v)| (self.offset + i, v))
    }

    /// Deterministic text: comment lines, then `n value\n` for each entry.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        for (n, v) in self.indexed() {
            let _ = writeln!(out, "{n} {v}");
        }
        out
    }

    /// Parses b-file text. Blank lines and `#` comments are skipped; indices
    /// must be consecutive.
    pub fn parse_bfile(name: impl Into<String>, text: &str) -> Result<Self, BFileError> {
        let mut offset = None;
        let mut values = Vec::new();
        let mut comments = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                comments.push(c.trim().to_string());
                continue;
            }
            let syntax = |message: &str| BFileError::Syntax { line: k + 1, message: message.into() };
            let mut parts = line.split_whitespace();
            let n: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| syntax("bad index"))?;
            let v: BigInt = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| syntax("bad value"))?;
            if parts.next().is_some() {
                return Err(syntax("trailing fields"));
            }
            match offset {
                None => offset = Some(n),
                Some(o) if o + values.len() != n => {
                    return Err(BFileError::Gap { line: k + 1, previous: o + values.len() - 1, found: n })
                }
                _ => {}
            }
            values.push(v);
        }
        Ok(SequenceTable { name: name.into(), offset: offset.unwrap_or(0), values, comments })
    }

    /// First index `n ≥ from` where `rule(self, n)` differs from the stored
    /// value, or `None` if the rule holds throughout.
    pub fn first_violation(&self, from: usize, rule: impl Fn(&Self, usize) -> BigInt) -> Option<usize> {
        let last = self.last_index()?;
        (from.max(self.offset)..=last).find(|&n| self.get(n) != Some(&rule(self, n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfile_round_trip() {
        let t = SequenceTable::from_u64s("c", 0, &[0, 0, 2, 4, 10]).with_comment("A052542");
        let text = t.to_bfile();
        assert_eq!(text, "# A052542\n0 0\n1 0\n2 2\n3 4\n4 10\n");
        assert_eq!(SequenceTable::parse_bfile("c", &text).unwrap(), t);
    }

    #[test]
    fn large_values_are_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let t = SequenceTable::new("x", 3, vec![big.clone()]);
        assert_eq!(t.to_bfile(), format!("3 {big}\n"));
        assert_eq!(t.get(3), Some(&big));
        assert_eq!(t.get(2), None);
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("123456789012345678901234567890"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SequenceTable::parse_bfile("x", "0 1\n2 3\n"), Err(BFileError::Gap { .. })));
        assert!(matches!(SequenceTable::parse_bfile("x", "0 q\n"), Err(BFileError::Syntax { line: 1, .. })));
    }

    #[test]
    fn recurrence_check() {
        let t = SequenceTable::from_u64s("p", 0, &[0, 1, 2, 5, 12, 29, 71]);
        let rule = |s: &SequenceTable, n: usize| s.get(n - 1).unwrap() * 2 + s.get(n - 2).unwrap();
        assert_eq!(t.first_violation(2, rule), Some(6));
    }
}
