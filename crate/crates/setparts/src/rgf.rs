//! Restricted growth words and the set partitions they encode.
//!
//! A word t_1..t_n is a restricted growth word when t_1 = 1 and every later
//! entry is at most one more than the maximum before it. Reading t_i = j as
//! "i lies in block j" matches these words with partitions of {1..n} into
//! blocks listed in standard form (each block increasing, blocks ordered by
//! their minima). The word splits into F, the positions where each value
//! first appears, and R, the remaining entries in place; F determines which
//! elements open a new block and R says where everything else goes.

use oillab_core::{CoreError, Result};

fn word_string(word: &[usize]) -> String {
    if word.iter().all(|&v| v <= 9) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        let parts: Vec<String> = word.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

/// A validated restricted growth word over 1..k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RGF {
    word: Vec<usize>,
}

impl RGF {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(CoreError::Empty);
        }
        let mut max = 0;
        for (i, &v) in word.iter().enumerate() {
            if v == 0 {
                return Err(CoreError::OutOfBounds(v.to_string(), i + 1));
            }
            if v > max + 1 {
                return Err(CoreError::InvalidRGF { position: i + 1, value: v, cap: max + 1 });
            }
            max = max.max(v);
        }
        Ok(RGF { word })
    }

    /// Accepts a digit string, or comma-separated values when entries pass 9.
    pub fn parse(s: &str) -> Result<Self> {
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',')
                .enumerate()
                .map(|(i, tok)| {
                    tok.trim().parse().map_err(|_| CoreError::OutOfBounds(tok.trim().to_string(), i + 1))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).map(|d| d as usize).ok_or(CoreError::OutOfBounds(c.to_string(), i + 1))
                })
                .collect::<Result<_>>()?
        };
        RGF::new(vals)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of distinct values, which is also the largest one.
    pub fn k(&self) -> usize {
        *self.word.iter().max().expect("words are nonempty")
    }

    /// No pair of values interleaves as i..j..i..j. Blocks of the matching
    /// partition can then be drawn as nested arcs.
    pub fn is_noncrossing(&self) -> bool {
        let k = self.k();
        for i in 1..=k {
            for j in 1..=k {
                if i == j {
                    continue;
                }
                // greedy subsequence match of i j i j
                let mut need_i = true;
                let mut seen = 0;
                for &v in &self.word {
                    if (need_i && v == i) || (!need_i && v == j) {
                        seen += 1;
                        if seen == 4 {
                            return false;
                        }
                        need_i = !need_i;
                    }
                }
            }
        }
        true
    }

    pub fn to_partition(&self) -> SetPartition {
        let mut blocks = vec![Vec::new(); self.k()];
        for (i, &v) in self.word.iter().enumerate() {
            blocks[v - 1].push(i + 1);
        }
        // values appear in first-occurrence order, so this is standard form
        SetPartition { blocks }
    }
}

impl std::fmt::Display for RGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&word_string(&self.word))
    }
}

/// A partition of {1..n} held in standard form: blocks internally increasing
/// and ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Blocks in any order and any internal order are normalized; anything
    /// that is not a partition of {1..n} is rejected.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(CoreError::Empty);
        }
        let mut blocks = blocks;
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(CoreError::NotStandardForm("a block is empty".to_string()));
            }
            b.sort_unstable();
            for &e in b.iter() {
                if e == 0 {
                    return Err(CoreError::NotStandardForm("elements must be positive".to_string()));
                }
                if e > n {
                    return Err(CoreError::NotStandardForm(format!(
                        "element {e} exceeds the ground set of {n}"
                    )));
                }
                if seen[e] {
                    return Err(CoreError::NotStandardForm(format!(
                        "element {e} appears more than once"
                    )));
                }
                seen[e] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// Accepts blocks joined by '/', each a digit string or a comma list.
    pub fn parse(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for tok in s.split('/') {
            let tok = tok.trim();
            let block: Vec<usize> = if tok.contains(',') {
                tok.split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| CoreError::NotStandardForm(format!("cannot read {:?}", t.trim())))
                    })
                    .collect::<Result<_>>()?
            } else {
                tok.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or(CoreError::NotStandardForm(format!("cannot read {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
        }
        SetPartition::new(blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn to_rgf(&self) -> RGF {
        let mut word = vec![0; self.n()];
        for (j, b) in self.blocks.iter().enumerate() {
            for &e in b {
                word[e - 1] = j + 1;
            }
        }
        debug_assert!(RGF::new(word.clone()).is_ok());
        RGF { word }
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // one format for the whole partition, digits only while they stay
        // unambiguous
        let digits = self.n() <= 9;
        let body: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let parts: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                parts.join(if digits { "" } else { "," })
            })
            .collect();
        f.write_str(&body.join("/"))
    }
}

/// The first-occurrence split of a word: `firsts` lists where each value
/// 1..k debuts, `rest` keeps the remaining entries in position order, and
/// `multiset` is `rest` sorted. A word is recovered from (firsts, rest);
/// noncrossing words are already pinned down by (firsts, multiset).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FRDecomp {
    pub firsts: Vec<usize>,
    pub rest: Vec<usize>,
    pub multiset: Vec<usize>,
}

pub fn decompose(rgf: &RGF) -> FRDecomp {
    let mut firsts = Vec::new();
    let mut rest = Vec::new();
    let mut max = 0;
    for (i, &v) in rgf.word().iter().enumerate() {
        if v > max {
            firsts.push(i + 1);
            max = v;
        } else {
            rest.push(v);
        }
    }
    let mut multiset = rest.clone();
    multiset.sort_unstable();
    FRDecomp { firsts, rest, multiset }
}

/// Inverse of `decompose`: plant value i at position firsts[i-1] and pour
/// `rest` into the remaining slots left to right. Fails when the inputs are
/// not the split of any word, e.g. a rest entry that would debut a value.
pub fn recompose(firsts: &[usize], rest: &[usize]) -> Result<RGF> {
    let k = firsts.len();
    let n = k + rest.len();
    if k == 0 {
        return Err(CoreError::Empty);
    }
    let mut prev = 0;
    for (idx, &f) in firsts.iter().enumerate() {
        let lo = if idx == 0 { 1 } else { prev + 1 };
        if f < lo || f > n {
            return Err(CoreError::OutOfBounds(f.to_string(), idx + 1));
        }
        prev = f;
    }
    if firsts[0] != 1 {
        return Err(CoreError::OutOfBounds(firsts[0].to_string(), 1));
    }
    let mut word = vec![0; n];
    for (idx, &f) in firsts.iter().enumerate() {
        word[f - 1] = idx + 1;
    }
    let mut next = rest.iter();
    let mut placed = 0;
    for (i, slot) in word.iter_mut().enumerate() {
        if *slot != 0 {
            placed += 1;
            continue;
        }
        let &v = next.next().expect("slot counts match by construction");
        // a rest entry above the values planted so far would be a debut
        if v == 0 || v > placed {
            return Err(CoreError::OutOfBounds(v.to_string(), i + 1));
        }
        *slot = v;
    }
    Ok(RGF { word })
}

/// All restricted growth words of length n with exactly k values, in
/// lexicographic order, optionally keeping only the noncrossing ones.
pub fn enumerate_rgfs(n: usize, k: usize, noncrossing: bool) -> Vec<RGF> {
    let mut out = Vec::new();
    if n == 0 || k == 0 || k > n {
        return out;
    }
    let mut word = vec![0usize; n];
    fn go(word: &mut Vec<usize>, pos: usize, max: usize, k: usize, out: &mut Vec<RGF>, nc: bool) {
        let n = word.len();
        if pos == n {
            if max == k {
                let w = RGF { word: word.clone() };
                if !nc || w.is_noncrossing() {
                    out.push(w);
                }
            }
            return;
        }
        // prune branches that can no longer reach k values
        if max + (n - pos) < k {
            return;
        }
        let top = (max + 1).min(k);
        for v in 1..=top {
            word[pos] = v;
            go(word, pos + 1, max.max(v), k, out, nc);
        }
        word[pos] = 0;
    }
    go(&mut word, 0, 0, k, &mut out, noncrossing);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_parse_and_print() {
        let w = RGF::parse("111212331").unwrap();
        assert_eq!(w.word(), &[1, 1, 1, 2, 1, 2, 3, 3, 1]);
        assert_eq!(w.to_string(), "111212331");
        assert_eq!(w.len(), 9);
        assert_eq!(w.k(), 3);
        let long = RGF::new((1..=11).collect()).unwrap();
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(RGF::parse(&long.to_string()).unwrap(), long);
    }

    #[test]
    fn growth_violations_are_rejected() {
        let err = RGF::parse("111212431").unwrap_err();
        assert_eq!(err, CoreError::InvalidRGF { position: 7, value: 4, cap: 3 });
        assert_eq!(
            RGF::parse("2").unwrap_err(),
            CoreError::InvalidRGF { position: 1, value: 2, cap: 1 }
        );
        assert!(matches!(RGF::parse("102").unwrap_err(), CoreError::OutOfBounds(..)));
        assert!(matches!(RGF::parse("1x2").unwrap_err(), CoreError::OutOfBounds(..)));
        assert_eq!(RGF::parse("").unwrap_err(), CoreError::Empty);
    }

    #[test]
    fn partitions_convert_both_ways() {
        let p = SetPartition::parse("12359/46/78").unwrap();
        assert_eq!(p.to_rgf().to_string(), "111212331");
        assert_eq!(RGF::parse("111212331").unwrap().to_partition(), p);
        assert_eq!(p.to_string(), "12359/46/78");
        assert_eq!(p.n(), 9);
        // block order and internal order both normalize
        let q = SetPartition::new(vec![vec![6, 4], vec![9, 5, 3, 2, 1], vec![7, 8]]).unwrap();
        assert_eq!(q, p);
        let r = SetPartition::parse("2,5/1,4,7,10/3,6/8,9").unwrap();
        assert_eq!(r.to_string(), "1,4,7,10/2,5/3,6/8,9");
        assert_eq!(r.to_rgf().to_partition(), r);
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        assert!(matches!(
            SetPartition::parse("12/13").unwrap_err(),
            CoreError::NotStandardForm(why) if why.contains("element 1")
        ));
        assert!(matches!(
            SetPartition::parse("13/4").unwrap_err(),
            CoreError::NotStandardForm(why) if why.contains("exceeds")
        ));
        assert!(matches!(
            SetPartition::parse("1//2").unwrap_err(),
            CoreError::NotStandardForm(why) if why.contains("empty")
        ));
        assert!(matches!(
            SetPartition::parse("1a/2").unwrap_err(),
            CoreError::NotStandardForm(why) if why.contains("cannot read")
        ));
        assert_eq!(SetPartition::new(vec![]).unwrap_err(), CoreError::Empty);
    }

    #[test]
    fn decomposition_splits_firsts_from_the_rest() {
        let w = RGF::parse("111212331").unwrap();
        let d = decompose(&w);
        assert_eq!(d.firsts, vec![1, 4, 7]);
        assert_eq!(d.rest, vec![1, 1, 1, 2, 3, 1]);
        assert_eq!(d.multiset, vec![1, 1, 1, 1, 2, 3]);
        assert_eq!(recompose(&d.firsts, &d.rest).unwrap(), w);
    }

    #[test]
    fn recompose_rejects_foreign_splits() {
        // rest entry 3 would debut a third value
        assert!(matches!(recompose(&[1, 2], &[3, 1]).unwrap_err(), CoreError::OutOfBounds(..)));
        // firsts must start at 1 and increase
        assert!(matches!(recompose(&[2, 3], &[1, 1]).unwrap_err(), CoreError::OutOfBounds(..)));
        assert!(matches!(recompose(&[1, 1], &[1, 1]).unwrap_err(), CoreError::OutOfBounds(..)));
        // first occurrence beyond the word
        assert!(matches!(recompose(&[1, 5], &[1]).unwrap_err(), CoreError::OutOfBounds(..)));
        assert_eq!(recompose(&[], &[]).unwrap_err(), CoreError::Empty);
    }

    #[test]
    fn crossings_are_detected() {
        assert!(!RGF::parse("1212").unwrap().is_noncrossing());
        assert!(!RGF::parse("111212331").unwrap().is_noncrossing());
        assert!(RGF::parse("112221331").unwrap().is_noncrossing());
        assert!(RGF::parse("1122").unwrap().is_noncrossing());
        assert!(RGF::parse("1").unwrap().is_noncrossing());
        assert!(!RGF::parse("1231231").unwrap().is_noncrossing());
    }

    #[test]
    fn enumeration_matches_the_known_small_families() {
        let words: Vec<String> = enumerate_rgfs(4, 2, false).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1112", "1121", "1122", "1211", "1212", "1221", "1222"]);
        let nc: Vec<String> = enumerate_rgfs(4, 2, true).iter().map(|w| w.to_string()).collect();
        assert_eq!(nc, vec!["1112", "1121", "1122", "1211", "1221", "1222"]);
        assert_eq!(enumerate_rgfs(5, 1, false).len(), 1);
        assert_eq!(enumerate_rgfs(5, 5, false).len(), 1);
        assert_eq!(enumerate_rgfs(0, 1, false).len(), 0);
        assert_eq!(enumerate_rgfs(3, 4, false).len(), 0);
    }
}
