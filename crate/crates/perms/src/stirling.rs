//! Columns of the Stirling cycle triangle and where they stop being
//! log-concave.

use num::BigUint;
use oillab_core::{CoreError, Result};
use std::cmp::Ordering;

/// c(n, k) for n = 0..=n_max: permutations of [n] with exactly k cycles.
/// Row recursion c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k).
pub fn stirling1_column(k: usize, n_max: usize) -> Vec<BigUint> {
    let zero = BigUint::from(0u32);
    let mut row: Vec<BigUint> = vec![zero.clone(); k + 1];
    row[0] = BigUint::from(1u32);
    let mut column = Vec::with_capacity(n_max + 1);
    column.push(row[k].clone());
    for n in 1..=n_max {
        let mut next = vec![zero.clone(); k + 1];
        for j in 0..=k.min(n) {
            let from_smaller = if j > 0 { row[j - 1].clone() } else { zero.clone() };
            next[j] = from_smaller + BigUint::from(n - 1) * &row[j];
        }
        row = next;
        column.push(row[k].clone());
    }
    column
}

/// One scan of c(n, k)^2 against c(n-1, k) c(n+1, k) for n = k..=n_max.
/// The observed shape is a strict log-concave prefix, then a strict
/// log-convex tail; `crossover` is where the tail starts and `violation`
/// is the first n breaking that shape, if any.
#[derive(Clone, Debug)]
pub struct Stirling1Report {
    pub k: usize,
    pub rows: Vec<(usize, Ordering)>,
    pub crossover: Option<usize>,
    pub violation: Option<usize>,
}

impl Stirling1Report {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn stirling1_threshold(k: usize, n_max: usize) -> Result<Stirling1Report> {
    if k < 1 {
        return Err(CoreError::TooSmall { what: "cycle count column", have: k, min: 1 });
    }
    if n_max < k + 1 {
        return Err(CoreError::TooSmall { what: "cycle number scan", have: n_max, min: k + 1 });
    }
    let column = stirling1_column(k, n_max + 1);
    let mut rows = Vec::with_capacity(n_max - k + 1);
    let mut crossover = None;
    let mut violation = None;
    for n in k..=n_max {
        let lhs = &column[n] * &column[n];
        let rhs = &column[n - 1] * &column[n + 1];
        let ord = lhs.cmp(&rhs);
        rows.push((n, ord));
        match crossover {
            None => match ord {
                Ordering::Greater => {}
                Ordering::Less => crossover = Some(n),
                Ordering::Equal => {
                    if violation.is_none() {
                        violation = Some(n);
                    }
                }
            },
            Some(_) => {
                if ord != Ordering::Less && violation.is_none() {
                    violation = Some(n);
                }
            }
        }
    }
    Ok(Stirling1Report { k, rows, crossover, violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_cycle_numbers() {
        assert_eq!(stirling1_column(2, 4), vec![big(0), big(0), big(1), big(3), big(11)]);
        assert_eq!(stirling1_column(1, 5)[5], big(24)); // (n-1)!
        assert_eq!(stirling1_column(3, 6), vec![big(0), big(0), big(0), big(1), big(6), big(35), big(225)]);
        assert_eq!(stirling1_column(0, 4), vec![big(1), big(0), big(0), big(0), big(0)]);
    }

    #[test]
    fn thresholds_for_the_first_six_columns() {
        let expected = [2usize, 3, 5, 6, 8, 10];
        for (k, want) in (1..=6).zip(expected) {
            let report = stirling1_threshold(k, 40).unwrap();
            assert_eq!(report.crossover, Some(want), "column {k}");
            assert!(report.holds(), "column {k}");
            assert!(report.violation.is_none());
            // strictly concave before, strictly convex after, never equal
            for &(n, ord) in &report.rows {
                let want_ord = if n < want { Ordering::Greater } else { Ordering::Less };
                assert_eq!(ord, want_ord, "column {k}, n {n}");
            }
        }
    }

    #[test]
    fn scan_rejects_degenerate_input() {
        assert!(matches!(stirling1_threshold(0, 10), Err(CoreError::TooSmall { .. })));
        assert!(matches!(stirling1_threshold(5, 5), Err(CoreError::TooSmall { .. })));
    }
}
