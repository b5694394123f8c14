//! Rebuilding a noncrossing word from its first occurrences and its filler
//! multiset.
//!
//! Fix positions 1 = f_1 < .. < f_k and a multiset M over {1..k} with
//! |M| = n - k. Among all words with that data, at most one is noncrossing:
//! scan the open slots left to right and drop in the largest unused value
//! that does not exceed the value of the nearest first occurrence to the
//! left. The pair is realizable at all exactly when each f_i leaves enough
//! small filler to its left, i.e. f_i - i <= m_1 + .. + m_{i-1}.

use crate::rgf::{decompose, RGF};
use oillab_core::{CoreError, Result};

fn list_string(vals: &[usize]) -> String {
    let body: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

/// Do any words decompose into these first occurrences and this filler
/// multiset? Decided by the prefix inequalities alone.
pub fn feasible_fm(firsts: &[usize], multiset: &[usize]) -> bool {
    let k = firsts.len();
    if k == 0 || firsts[0] != 1 {
        return false;
    }
    if !firsts.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if multiset.iter().any(|&v| v == 0 || v > k) {
        return false;
    }
    let mut counts = vec![0usize; k + 1];
    for &v in multiset {
        counts[v] += 1;
    }
    // slots strictly before f_i must be filled by values below i
    let mut below = 0;
    for (i, &f) in firsts.iter().enumerate().skip(1) {
        below += counts[i];
        if f - (i + 1) > below {
            return false;
        }
    }
    true
}

/// The unique noncrossing word with the given first occurrences and filler
/// multiset, by the greedy scan. The multiset may come in any order.
pub fn reconstruct_nc(firsts: &[usize], multiset: &[usize]) -> Result<RGF> {
    let k = firsts.len();
    let n = k + multiset.len();
    if k == 0 {
        return Err(CoreError::Empty);
    }
    let mut prev = 0;
    for (idx, &f) in firsts.iter().enumerate() {
        let lo = if idx == 0 { 1 } else { prev + 1 };
        if f < lo || (idx == 0 && f != 1) {
            return Err(CoreError::OutOfBounds(f.to_string(), idx + 1));
        }
        prev = f;
    }
    let mut counts = vec![0usize; k + 1];
    for (idx, &v) in multiset.iter().enumerate() {
        if v == 0 || v > k {
            return Err(CoreError::OutOfBounds(v.to_string(), idx + 1));
        }
        counts[v] += 1;
    }
    let infeasible = || CoreError::Infeasible {
        firsts: list_string(firsts),
        multiset: list_string(multiset),
    };
    // a first occurrence past the end fits no word of this length
    if firsts[k - 1] > n {
        return Err(infeasible());
    }
    let mut word = vec![0usize; n];
    for (idx, &f) in firsts.iter().enumerate() {
        word[f - 1] = idx + 1;
    }
    let mut open = 0;
    for i in 0..n {
        if word[i] != 0 {
            open = word[i];
            continue;
        }
        // largest unused filler not exceeding the last opened value
        let v = (1..=open).rev().find(|&v| counts[v] > 0).ok_or_else(infeasible)?;
        counts[v] -= 1;
        word[i] = v;
    }
    let out = RGF::new(word)?;
    debug_assert!(out.is_noncrossing());
    debug_assert_eq!(decompose(&out).firsts, firsts);
    Ok(out)
}
