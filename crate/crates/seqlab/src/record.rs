//! Sequences with provenance and exact per-index concavity verdicts.
//!
//! A record holds a named integer sequence starting at some offset. The
//! analyzer compares a_n^2 against a_{n-1} a_{n+1} at every interior index
//! in exact arithmetic; a sequence is log-concave where the square wins and
//! log-convex where it loses, with equality counting as both.

use num::bigint::BigUint;
use oillab_core::{CoreError, Result};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// counted off a materialized lattice
    Lattice,
    /// evaluated from a closed form
    ClosedForm,
    /// enumerated by exhaustive sweep
    BruteForce,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Lattice => "lattice",
            Provenance::ClosedForm => "closed_form",
            Provenance::BruteForce => "brute_force",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SequenceRecord {
    pub name: String,
    /// index of values[0]
    pub offset: usize,
    pub values: Vec<BigUint>,
    pub provenance: Provenance,
}

impl SequenceRecord {
    pub fn new(
        name: impl Into<String>,
        offset: usize,
        values: Vec<BigUint>,
        provenance: Provenance,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(CoreError::Empty);
        }
        Ok(SequenceRecord { name: name.into(), offset, values, provenance })
    }

    pub fn value(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }

    pub fn last_index(&self) -> usize {
        self.offset + self.values.len() - 1
    }
}

/// What a_n^2 against a_{n-1} a_{n+1} came out to. Integers always compare,
/// so the analyzer only ever emits the first three; `Neither` is reserved
/// for coefficientwise comparisons that can fail in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexVerdict {
    Concave,
    Convex,
    Both,
    Neither,
}

impl IndexVerdict {
    pub fn name(self) -> &'static str {
        match self {
            IndexVerdict::Concave => "concave",
            IndexVerdict::Convex => "convex",
            IndexVerdict::Both => "both",
            IndexVerdict::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: String,
    /// index carrying the first verdict, one past the record offset
    pub first: usize,
    pub verdicts: Vec<IndexVerdict>,
    /// run-length description, e.g. "concave at 2..=7, convex at 8..=40"
    pub summary: String,
}

impl PropertyReport {
    pub fn verdict_at(&self, n: usize) -> Option<IndexVerdict> {
        n.checked_sub(self.first).and_then(|i| self.verdicts.get(i)).copied()
    }

    pub fn indices(&self) -> impl Iterator<Item = (usize, IndexVerdict)> + '_ {
        self.verdicts.iter().enumerate().map(|(i, &v)| (self.first + i, v))
    }

    /// No index strictly concave: log-convexity holds throughout.
    pub fn weakly_convex(&self) -> bool {
        self.verdicts.iter().all(|v| matches!(v, IndexVerdict::Convex | IndexVerdict::Both))
    }

    /// No index strictly convex: log-concavity holds throughout.
    pub fn weakly_concave(&self) -> bool {
        self.verdicts.iter().all(|v| matches!(v, IndexVerdict::Concave | IndexVerdict::Both))
    }
}

fn summarize(first: usize, verdicts: &[IndexVerdict]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < verdicts.len() {
        let mut j = i;
        while j + 1 < verdicts.len() && verdicts[j + 1] == verdicts[i] {
            j += 1;
        }
        let (lo, hi) = (first + i, first + j);
        if lo == hi {
            parts.push(format!("{} at {lo}", verdicts[i].name()));
        } else {
            parts.push(format!("{} at {lo}..={hi}", verdicts[i].name()));
        }
        i = j + 1;
    }
    parts.join(", ")
}

/// Exact verdict at every index with both neighbors present. Zeros land in
/// the equality branch (0 >= 0 and 0 <= 0), so zero prefixes show up as
/// vacuous "both" entries instead of masking anything.
pub fn analyze(seq: &SequenceRecord) -> Result<PropertyReport> {
    if seq.values.len() < 3 {
        return Err(CoreError::TooShort {
            name: seq.name.clone(),
            have: seq.values.len(),
            min: 3,
        });
    }
    let verdicts: Vec<IndexVerdict> = seq
        .values
        .windows(3)
        .map(|w| match (&w[1] * &w[1]).cmp(&(&w[0] * &w[2])) {
            Ordering::Greater => IndexVerdict::Concave,
            Ordering::Less => IndexVerdict::Convex,
            Ordering::Equal => IndexVerdict::Both,
        })
        .collect();
    let first = seq.offset + 1;
    let summary = summarize(first, &verdicts);
    Ok(PropertyReport { name: seq.name.clone(), first, verdicts, summary })
}
