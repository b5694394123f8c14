//! One-line permutations, their two inversion-table encodings, and the
//! descent / peak / pinnacle statistics read off them.

use oillab_core::{CoreError, Result};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;

fn word_string(word: &[usize]) -> String {
    if word.iter().all(|&v| v <= 9) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn table_string(values: &[usize]) -> String {
    let body: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", body.join(","))
}

/// A bijection on [n] in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// The values must be exactly 1..=n in some order.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n || seen[v - 1] {
                return Err(CoreError::NotAPermutation(word_string(&word)));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Digit string for values up to 9 ("415632"), comma-separated beyond
    /// ("10,2,1,3,4,5,6,7,8,9").
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || CoreError::NotAPermutation(s.to_string());
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_string(&self.word))
    }
}

/// iota_i counts the inversions whose larger value is i; 0 <= iota_i < i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvTable(pub Vec<usize>);

/// kappa_i counts the later positions holding a value smaller than the one
/// at position i; 0 <= kappa_i <= n-i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosInvTable(pub Vec<usize>);

impl InvTable {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if v > i {
                return Err(CoreError::OutOfBounds(v.to_string(), i + 1));
            }
        }
        Ok(InvTable(values))
    }
}

impl PosInvTable {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        for (i, &v) in values.iter().enumerate() {
            if v + i + 1 > n {
                return Err(CoreError::OutOfBounds(v.to_string(), i + 1));
            }
        }
        Ok(PosInvTable(values))
    }
}

impl fmt::Display for InvTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&table_string(&self.0))
    }
}

impl fmt::Display for PosInvTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&table_string(&self.0))
    }
}

/// Which of the two table encodings is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Iota,
    Kappa,
}

/// Both inversion tables in one pass over the inversion pairs.
pub fn encode_tables(p: &Permutation) -> (InvTable, PosInvTable) {
    let w = p.word();
    let n = w.len();
    let mut iota = vec![0usize; n];
    let mut kappa = vec![0usize; n];
    for a in 0..n {
        for b in a + 1..n {
            if w[a] > w[b] {
                iota[w[a] - 1] += 1;
                kappa[a] += 1;
            }
        }
    }
    (InvTable(iota), PosInvTable(kappa))
}

/// Rebuild the permutation from a table.
///
/// A kappa table places pi_i as the (kappa_i + 1)st smallest value not yet
/// used. An iota table grows the word from 1 upward, inserting i so that
/// exactly iota_i smaller values land after it. An entry that violates the
/// table bounds reports its (1-based) position.
pub fn decode_table(table: &[usize], kind: TableKind) -> Result<Permutation> {
    let n = table.len();
    match kind {
        TableKind::Iota => {
            let mut word: Vec<usize> = Vec::with_capacity(n);
            for i in 1..=n {
                let t = table[i - 1];
                if t >= i {
                    return Err(CoreError::OutOfBounds(t.to_string(), i));
                }
                word.insert(i - 1 - t, i);
            }
            Ok(Permutation { word })
        }
        TableKind::Kappa => {
            let mut remaining: Vec<usize> = (1..=n).collect();
            let mut word = Vec::with_capacity(n);
            for i in 1..=n {
                let t = table[i - 1];
                if t >= remaining.len() {
                    return Err(CoreError::OutOfBounds(t.to_string(), i));
                }
                word.push(remaining.remove(t));
            }
            Ok(Permutation { word })
        }
    }
}

/// Descent positions, peak positions, and peak values (pinnacles), each as
/// a sorted set.
pub fn landmark_sets(
    p: &Permutation,
) -> (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>) {
    let w = p.word();
    let des = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
    let mut pk = BTreeSet::new();
    let mut pin = BTreeSet::new();
    for j in 1..w.len().saturating_sub(1) {
        if w[j - 1] < w[j] && w[j] > w[j + 1] {
            pk.insert(j + 1);
            pin.insert(w[j]);
        }
    }
    (des, pk, pin)
}

/// Descent positions of `w` are exactly the sorted list `s`. Works on any
/// word compared by adjacent entries, so it reads descent sets off kappa
/// tables too.
pub(crate) fn des_matches(w: &[usize], s: &[usize]) -> bool {
    let mut k = 0;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            if k == s.len() || s[k] != i {
                return false;
            }
            k += 1;
        }
    }
    k == s.len()
}

/// Peak positions of `w` are exactly the sorted list `s`.
pub(crate) fn pk_matches(w: &[usize], s: &[usize]) -> bool {
    let mut k = 0;
    for j in 1..w.len().saturating_sub(1) {
        if w[j - 1] < w[j] && w[j] > w[j + 1] {
            if k == s.len() || s[k] != j + 1 {
                return false;
            }
            k += 1;
        }
    }
    k == s.len()
}

/// Pinnacle values of `w`, read left to right, are exactly `sigma`.
pub(crate) fn pin_matches(w: &[usize], sigma: &[usize]) -> bool {
    let mut k = 0;
    for j in 1..w.len().saturating_sub(1) {
        if w[j - 1] < w[j] && w[j] > w[j + 1] {
            if k == sigma.len() || sigma[k] != w[j] {
                return false;
            }
            k += 1;
        }
    }
    k == sigma.len()
}

/// Lexicographic successor in place; false once the word is the last one.
fn next_perm(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

fn block_start(n: usize, first: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(n);
    w.push(first);
    w.extend((1..=n).filter(|&v| v != first));
    w
}

/// Visit every word of S_n in lexicographic order.
pub fn for_each_perm(n: usize, mut f: impl FnMut(&[usize])) {
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        f(&w);
        if !next_perm(&mut w) {
            break;
        }
    }
}

/// Sum `f` over S_n. Work splits over the n first-symbol blocks; block sums
/// combine by addition, so the total is independent of scheduling.
pub fn sum_over_perms(n: usize, f: impl Fn(&[usize]) -> u64 + Sync) -> u64 {
    if n == 0 {
        return f(&[]);
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut w = block_start(n, first);
            let mut acc = 0u64;
            loop {
                acc += f(&w);
                if !next_perm(&mut w[1..]) {
                    break;
                }
            }
            acc
        })
        .sum()
}

/// The permutations of [n] satisfying `pred`, in lexicographic order.
pub fn collect_perms(n: usize, pred: impl Fn(&[usize]) -> bool + Sync) -> Vec<Permutation> {
    if n == 0 {
        return if pred(&[]) { vec![Permutation { word: vec![] }] } else { vec![] };
    }
    let blocks: Vec<Vec<Permutation>> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut w = block_start(n, first);
            let mut hits = Vec::new();
            loop {
                if pred(&w) {
                    hits.push(Permutation { word: w.clone() });
                }
                if !next_perm(&mut w[1..]) {
                    break;
                }
            }
            hits
        })
        .collect();
    blocks.into_iter().flatten().collect()
}
