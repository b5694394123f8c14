//! Bivincular pattern containment and the 213-avoider certificate.
//!
//! Pattern syntax: the letters of the pattern as digits, a bar between two
//! digits to force the matched positions adjacent, a dash after a digit v to
//! force the values matched by v and v+1 adjacent (the latter one higher).
//! "231" is classical containment, "2|31-" requires the first two matched
//! positions consecutive and the values matched by 1 and 2 consecutive.

use crate::middle::BRUTE_CAP;
use crate::perm::{collect_perms, encode_tables, sum_over_perms, Permutation};
use oillab_core::{
    oil_check, Certificate, CoreError, IdealHandle, IdealKind, Limits, OilOptions, Result,
    VectorLattice,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivincularPattern {
    word: Vec<usize>,
    /// bar in gap i forces occurrence positions i and i+1 adjacent
    pos_bars: Vec<bool>,
    /// mark on value v (index v-1) forces the values matched by v and v+1
    /// to differ by exactly one
    val_marks: Vec<bool>,
}

impl BivincularPattern {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |why: &'static str| CoreError::BadPattern(s.to_string(), why);
        let mut word: Vec<usize> = Vec::new();
        let mut bars: Vec<bool> = Vec::new();
        let mut marked: Vec<usize> = Vec::new();
        let mut bar_pending = false;
        let mut last_letter: Option<usize> = None;
        for c in s.chars() {
            match c {
                '1'..='9' => {
                    let v = c.to_digit(10).unwrap() as usize;
                    if !word.is_empty() {
                        bars.push(bar_pending);
                    }
                    bar_pending = false;
                    word.push(v);
                    last_letter = Some(v);
                }
                '|' => {
                    if last_letter.is_none() {
                        return Err(bad("bar needs a letter on each side"));
                    }
                    if bar_pending {
                        return Err(bad("doubled bar"));
                    }
                    bar_pending = true;
                }
                '-' => {
                    let v = last_letter.ok_or_else(|| bad("value mark must follow a letter"))?;
                    if bar_pending {
                        return Err(bad("value mark must follow a letter"));
                    }
                    if marked.contains(&v) {
                        return Err(bad("doubled value mark"));
                    }
                    marked.push(v);
                }
                _ => return Err(bad("unexpected character")),
            }
        }
        if bar_pending {
            return Err(bad("bar needs a letter on each side"));
        }
        let k = word.len();
        if k == 0 {
            return Err(bad("empty"));
        }
        {
            let mut seen = vec![false; k];
            for &v in &word {
                if v > k || seen[v - 1] {
                    return Err(bad("letters must form a permutation"));
                }
                seen[v - 1] = true;
            }
        }
        let mut val_marks = vec![false; k.saturating_sub(1)];
        for v in marked {
            if v == k {
                return Err(bad("value mark on the largest letter"));
            }
            val_marks[v - 1] = true;
        }
        Ok(BivincularPattern { word, pos_bars: bars, val_marks })
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

    pub fn is_classical(&self) -> bool {
        !self.pos_bars.iter().any(|&b| b) && !self.val_marks.iter().any(|&b| b)
    }
}

impl std::fmt::Display for BivincularPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, &v) in self.word.iter().enumerate() {
            write!(f, "{v}")?;
            if v < self.word.len() && self.val_marks[v - 1] {
                write!(f, "-")?;
            }
            if i + 1 < self.word.len() && self.pos_bars[i] {
                write!(f, "|")?;
            }
        }
        Ok(())
    }
}

/// Backtracking occurrence search. `chosen` holds the matched indices so
/// far; order-isomorphism, bars, and the value marks whose endpoints are
/// both placed prune each branch. Returns true to stop at the first hit.
fn search(
    w: &[usize],
    pat: &BivincularPattern,
    chosen: &mut Vec<usize>,
    val_pos: &[usize],
    hits: &mut Option<&mut Vec<Vec<usize>>>,
) -> bool {
    let t = chosen.len();
    if t == pat.word.len() {
        if let Some(out) = hits {
            out.push(chosen.iter().map(|&i| w[i]).collect());
            return false;
        }
        return true;
    }
    // rightmost start leaving room for the letters still unmatched
    let bound = w.len() - (pat.word.len() - t) + 1;
    let (lo, hi) = match chosen.last() {
        None => (0, bound),
        Some(&prev) if pat.pos_bars[t - 1] => (prev + 1, (prev + 2).min(bound)),
        Some(&prev) => (prev + 1, bound),
    };
    for idx in lo..hi {
        // relative order against everything already placed
        if !(0..t).all(|s| (pat.word[s] < pat.word[t]) == (w[chosen[s]] < w[idx])) {
            continue;
        }
        // value marks with both endpoints placed
        let v = pat.word[t];
        let mut ok = true;
        if v >= 2 && pat.val_marks[v - 2] && val_pos[v - 2] < t {
            ok = w[idx] == w[chosen[val_pos[v - 2]]] + 1;
        }
        if ok && v < pat.word.len() && pat.val_marks[v - 1] && val_pos[v] < t {
            ok = w[chosen[val_pos[v]]] == w[idx] + 1;
        }
        if !ok {
            continue;
        }
        chosen.push(idx);
        if search(w, pat, chosen, val_pos, hits) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn value_positions(pat: &BivincularPattern) -> Vec<usize> {
    let mut val_pos = vec![0usize; pat.word.len()];
    for (i, &v) in pat.word.iter().enumerate() {
        val_pos[v - 1] = i;
    }
    val_pos
}

pub(crate) fn word_contains(w: &[usize], pat: &BivincularPattern) -> bool {
    if w.len() < pat.word.len() {
        return false;
    }
    search(w, pat, &mut Vec::with_capacity(pat.word.len()), &value_positions(pat), &mut None)
}

pub fn contains_pattern(p: &Permutation, pat: &BivincularPattern) -> bool {
    word_contains(p.word(), pat)
}

/// Every occurrence, reported as the matched value subsequence, in
/// lexicographic order of matched positions.
pub fn occurrences(p: &Permutation, pat: &BivincularPattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p.len() >= pat.word.len() {
        search(
            p.word(),
            pat,
            &mut Vec::with_capacity(pat.word.len()),
            &value_positions(pat),
            &mut Some(&mut out),
        );
    }
    out
}

/// |Av_n(pat)| by brute force.
pub fn avoidance_count(pat: &BivincularPattern, n: usize) -> Result<u64> {
    if n > BRUTE_CAP {
        return Err(CoreError::SizeLimitExceeded {
            what: "sweeping permutations for an avoidance count",
            have: n,
            cap: BRUTE_CAP,
        });
    }
    Ok(sum_over_perms(n, |w| !word_contains(w, pat) as u64))
}

fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

fn guard(what: &str, have: usize, want: u64) -> Result<()> {
    if have as u64 != want {
        return Err(CoreError::CountMismatch {
            what: what.to_string(),
            have: have.to_string(),
            want: want.to_string(),
        });
    }
    Ok(())
}

/// C_n^2 <= C_{n-1} C_{n+1} as an order ideal inequality. The 213-avoiders
/// of [n+1] are exactly the permutations with weakly increasing iota table,
/// so they form a vector lattice; I = {every entry from the second on is
/// positive} and J = {last entry maximal} are upper ideals of Catalan size
/// meeting in C_{n-1} elements.
pub fn av213_certificate(n: usize, limits: &Limits) -> Result<Certificate> {
    if n < 2 {
        return Err(CoreError::TooSmall { what: "213-avoider certificate", have: n, min: 2 });
    }
    if n + 1 > BRUTE_CAP {
        return Err(CoreError::SizeLimitExceeded {
            what: "sweeping permutations for 213-avoiders",
            have: n + 1,
            cap: BRUTE_CAP,
        });
    }
    let pat = BivincularPattern::parse("213")?;
    let members = collect_perms(n + 1, |w| !word_contains(w, &pat));
    let mut elems = Vec::with_capacity(members.len());
    let mut labels = Vec::with_capacity(members.len());
    for p in &members {
        let (iota, _) = encode_tables(p);
        debug_assert!(iota.0.windows(2).all(|w| w[0] <= w[1]));
        elems.push(iota.0.iter().map(|&v| v as i32).collect::<Vec<i32>>());
        labels.push(p.to_string());
    }
    guard("213-avoider lattice size", members.len(), catalan(n + 1))?;
    let lat = VectorLattice::new(n + 1, elems, labels, limits)?;
    let fam_i = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| (1..=n).all(|i| v[i] >= 1)));
    let fam_j = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| v[n] >= n as i32));
    guard("213-avoider family |I|", fam_i.size(), catalan(n))?;
    guard("213-avoider family |J|", fam_j.size(), catalan(n))?;
    let both = fam_i.members.intersection(&fam_j.members).len();
    guard("213-avoider family |I and J|", both, catalan(n - 1))?;
    let opts = OilOptions {
        assert_distributive: false,
        lattice_name: format!("213-avoiders of [{}] in the middle order", n + 1),
        family_params: vec![("n".to_string(), n.to_string())],
    };
    oil_check(&lat, &fam_i, &fam_j, &opts, limits)
}
