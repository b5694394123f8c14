//! Conjecture scanners and count cross-checks.
//!
//! Two desk-scale scans: every length-4 pattern's avoidance counts look
//! log-convex, and each column of the signless first-kind Stirling triangle
//! looks log-concave up to a single crossover and log-convex after it. The
//! cross-checker replays lattice-materialized counts against closed forms
//! and treats any disagreement as a hard error.

use crate::forms::catalan_number;
use crate::record::{analyze, IndexVerdict, PropertyReport, Provenance, SequenceRecord};
use num::bigint::BigUint;
use num::traits::One;
use oillab_core::{CoreError, Limits, Result};
use oillab_paths::{enumerate_paths, Family};
use oillab_perms::{avoidance_count, collect_perms, stirling1_threshold, BivincularPattern, Stirling1Report};
use oillab_setparts::{enumerate_rgfs, narayana_number, stirling2_number};

pub struct Av4Row {
    pub pattern: String,
    pub record: SequenceRecord,
    pub report: PropertyReport,
}

impl Av4Row {
    /// Indices where strict concavity breaks log-convexity.
    pub fn violations(&self) -> Vec<usize> {
        self.report
            .indices()
            .filter(|&(_, v)| matches!(v, IndexVerdict::Concave | IndexVerdict::Neither))
            .map(|(n, _)| n)
            .collect()
    }
}

pub struct Av4Report {
    pub n_max: usize,
    pub rows: Vec<Av4Row>,
}

impl Av4Report {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.violations().is_empty())
    }
}

/// #Av_n(sigma) for every sigma of length 4 and n = 0..=n_max, each with its
/// convexity report. Lengths below 4 cannot contain the pattern, so those
/// counts are n! without a sweep.
pub fn conjecture_av4(n_max: usize) -> Result<Av4Report> {
    if n_max < 2 {
        return Err(CoreError::TooSmall { what: "avoidance scan", have: n_max, min: 2 });
    }
    let mut rows = Vec::new();
    for p in collect_perms(4, |_| true) {
        let pattern = p.to_string();
        let pat = BivincularPattern::parse(&pattern)?;
        let mut values = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let count = match n {
                0..=3 => [1u64, 1, 2, 6][n],
                _ => avoidance_count(&pat, n)?,
            };
            values.push(BigUint::from(count));
        }
        let record = SequenceRecord::new(format!("Av({pattern})"), 0, values, Provenance::BruteForce)?;
        let report = analyze(&record)?;
        rows.push(Av4Row { pattern, record, report });
    }
    Ok(Av4Report { n_max, rows })
}

pub struct Stirling1Scan {
    pub n_max: usize,
    pub reports: Vec<Stirling1Report>,
}

impl Stirling1Scan {
    pub fn ok(&self) -> bool {
        self.reports.iter().all(|r| r.holds())
    }

    /// Candidate crossover index per column.
    pub fn thresholds(&self) -> Vec<(usize, Option<usize>)> {
        self.reports.iter().map(|r| (r.k, r.crossover)).collect()
    }
}

/// One threshold report per cycle-count column k = 1..=k_max.
pub fn conjecture_stirling1(k_max: usize, n_max: usize) -> Result<Stirling1Scan> {
    if k_max < 1 {
        return Err(CoreError::TooSmall { what: "cycle count scan", have: k_max, min: 1 });
    }
    let reports: Vec<Stirling1Report> =
        (1..=k_max).map(|k| stirling1_threshold(k, n_max)).collect::<Result<_>>()?;
    Ok(Stirling1Scan { n_max, reports })
}

pub struct CrossCheckReport {
    pub family: String,
    /// (index, agreed count)
    pub rows: Vec<(usize, BigUint)>,
}

fn expect(what: &str, n: usize, got: usize, want: &BigUint) -> Result<BigUint> {
    if BigUint::from(got) != *want {
        return Err(CoreError::Mismatch {
            what: what.to_string(),
            index: n,
            expected: want.to_string(),
            actual: got.to_string(),
        });
    }
    Ok(want.clone())
}

/// Materialized counts against closed forms, index by index. Registered
/// families: "dyck" against the Catalan formula, "rgf" against the subset
/// count recurrence (the k = 2 column gets its direct closed form), and
/// "nc" against the Narayana formula.
pub fn cross_check(
    family: &str,
    k: Option<usize>,
    n_max: usize,
    limits: &Limits,
) -> Result<CrossCheckReport> {
    let need_k = || k.ok_or(CoreError::TooSmall { what: "family parameter k", have: 0, min: 1 });
    let mut rows = Vec::new();
    match family {
        "dyck" => {
            for n in 0..=n_max {
                let got = enumerate_paths(Family::Dyck, n, limits)?.len();
                rows.push((n, expect("dyck path count", n, got, &catalan_number(n))?));
            }
        }
        "rgf" => {
            let k = need_k()?;
            for n in k..=n_max {
                let got = enumerate_rgfs(n, k, false).len();
                let want = if k == 2 {
                    // 2^(n-1) - 1, independent of the recurrence
                    (BigUint::one() << (n - 1)) - BigUint::one()
                } else {
                    stirling2_number(n, k)
                };
                rows.push((n, expect("growth word count", n, got, &want)?));
            }
        }
        "nc" => {
            let k = need_k()?;
            for n in k..=n_max {
                let got = enumerate_rgfs(n, k, true).len();
                rows.push((n, expect("noncrossing count", n, got, &narayana_number(n, k))?));
            }
        }
        other => return Err(CoreError::UnknownFamily(other.to_string())),
    }
    Ok(CrossCheckReport { family: family.to_string(), rows })
}
