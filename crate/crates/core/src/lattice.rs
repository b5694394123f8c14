//! Lattice interface and the dense table-backed implementation.

use crate::bits::IndexSet;
use crate::error::{CoreError, Result};
use crate::limits::Limits;
use crate::poset::Poset;

/// Common interface for finite lattices. Elements are dense indices.
///
/// `try_meet`/`try_join` return `None` when the underlying structure turns
/// out not to be closed (possible for vector lattices whose closure was only
/// sampled); checks treat that as a violation witness rather than panicking.
pub trait LatticeOps: Sync {
    fn len(&self) -> usize;
    fn label(&self, i: usize) -> String;
    fn leq(&self, a: usize, b: usize) -> bool;
    fn try_meet(&self, a: usize, b: usize) -> Option<usize>;
    fn try_join(&self, a: usize, b: usize) -> Option<usize>;

    fn meet(&self, a: usize, b: usize) -> usize {
        self.try_meet(a, b).expect("meet left the element set")
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.try_join(a, b).expect("join left the element set")
    }

    /// True when the construction itself guarantees distributivity
    /// (pointwise min/max closure of integer vectors, verified on build).
    fn distributive_by_construction(&self) -> bool {
        false
    }

    /// Witness `(member, missing)` that `members` is not downward closed.
    fn lower_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        let outside: Vec<usize> = members.complement().iter().collect();
        for x in members.iter() {
            for &y in &outside {
                if self.leq(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    fn upper_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        let outside: Vec<usize> = members.complement().iter().collect();
        for x in members.iter() {
            for &y in &outside {
                if self.leq(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Dense lattice: a poset plus total meet/join tables.
#[derive(Debug)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl Lattice {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        let mut b = 0;
        for i in 1..self.len() {
            b = self.meet(b, i);
        }
        b
    }

    pub fn top(&self) -> usize {
        let mut t = 0;
        for i in 1..self.len() {
            t = self.join(t, i);
        }
        t
    }

    pub(crate) fn from_parts(poset: Poset, meet: Vec<u32>, join: Vec<u32>) -> Self {
        Lattice { poset, meet, join }
    }
}

impl LatticeOps for Lattice {
    fn len(&self) -> usize {
        self.poset.len()
    }

    fn label(&self, i: usize) -> String {
        self.poset.label(i).to_string()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    fn try_meet(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.meet[a * self.len() + b] as usize)
    }

    fn try_join(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.join[a * self.len() + b] as usize)
    }

    fn lower_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        self.poset.lower_set_violation(members)
    }

    fn upper_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        self.poset.upper_set_violation(members)
    }
}

/// Compute total meet/join tables for `poset`, or report the witness pair on
/// which greatest lower / least upper bounds fail to be unique.
pub fn compute_lattice(poset: Poset, limits: &Limits) -> Result<Lattice> {
    let n = poset.len();
    if n > limits.dense_cap {
        return Err(CoreError::SizeLimitExceeded {
            what: "building meet/join tables",
            have: n,
            cap: limits.dense_cap,
        });
    }
    let heights = poset.heights();
    let max_h = heights.iter().copied().max().unwrap_or(0);
    let mut by_height: Vec<Vec<usize>> = vec![Vec::new(); max_h + 1];
    for (i, &h) in heights.iter().enumerate() {
        by_height[h].push(i);
    }
    let below = poset.below_matrix();
    let words = below.row(0).len();
    let row_counts: Vec<usize> = (0..n).map(|i| below.row_count(i)).collect();

    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    let mut tmp = vec![0u64; words];
    for a in 0..n {
        for b in a..n {
            let g = if poset.leq(a, b) {
                a
            } else if poset.leq(b, a) {
                b
            } else {
                let mut count = 0usize;
                for (w, (x, y)) in tmp.iter_mut().zip(below.row(a).iter().zip(below.row(b))) {
                    *w = x & y;
                    count += w.count_ones() as usize;
                }
                // the glb, if it exists, is the unique candidate whose down
                // set is the whole candidate set; search top height down
                let start = heights[a].min(heights[b]);
                let mut found = None;
                'levels: for level in (0..=start).rev() {
                    for &c in &by_height[level] {
                        if tmp[c / 64] >> (c % 64) & 1 == 1 {
                            found = Some(c);
                            break 'levels;
                        }
                    }
                }
                let c = match found {
                    Some(c) => c,
                    None => {
                        return Err(CoreError::NotALattice {
                            x: poset.label(a).to_string(),
                            y: poset.label(b).to_string(),
                            op: "greatest lower bound",
                        })
                    }
                };
                if row_counts[c] != count || !below.row(c).iter().zip(&tmp).all(|(x, y)| x == y) {
                    return Err(CoreError::NotALattice {
                        x: poset.label(a).to_string(),
                        y: poset.label(b).to_string(),
                        op: "greatest lower bound",
                    });
                }
                c
            };
            meet[a * n + b] = g as u32;
            meet[b * n + a] = g as u32;
        }
    }
    // joins dually, via up sets
    let above: Vec<IndexSet> = (0..n).map(|i| poset.up_set(i)).collect();
    let up_counts: Vec<usize> = above.iter().map(|s| s.len()).collect();
    for a in 0..n {
        for b in a..n {
            let g = if poset.leq(a, b) {
                b
            } else if poset.leq(b, a) {
                a
            } else {
                let cand = above[a].intersection(&above[b]);
                let count = cand.len();
                let start = heights[a].max(heights[b]);
                let mut found = None;
                'levels: for level in start..=max_h {
                    for &c in &by_height[level] {
                        if cand.contains(c) {
                            found = Some(c);
                            break 'levels;
                        }
                    }
                }
                let c = match found {
                    Some(c) => c,
                    None => {
                        return Err(CoreError::NotALattice {
                            x: poset.label(a).to_string(),
                            y: poset.label(b).to_string(),
                            op: "least upper bound",
                        })
                    }
                };
                if up_counts[c] != count || !above[c].is_subset_of(&cand) {
                    return Err(CoreError::NotALattice {
                        x: poset.label(a).to_string(),
                        y: poset.label(b).to_string(),
                        op: "least upper bound",
                    });
                }
                c
            };
            join[a * n + b] = g as u32;
            join[b * n + a] = g as u32;
        }
    }
    Ok(Lattice { poset, meet, join })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::poset_from_covers;

    fn labs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn boolean_square() {
        // 0 < x=1,y=2 < 3
        let p = poset_from_covers(labs(&["0", "x", "y", "1"]), &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap();
        let l = compute_lattice(p, &Limits::default()).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 3), 1);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
    }

    #[test]
    fn meet_fails_without_glb() {
        // two minimal elements under two maximal ones: no meet for the tops
        let p = poset_from_covers(labs(&["a", "b", "c", "d"]), &[(0, 2), (0, 3), (1, 2), (1, 3)])
            .unwrap();
        let err = compute_lattice(p, &Limits::default()).unwrap_err();
        assert!(matches!(err, CoreError::NotALattice { .. }));
    }

    #[test]
    fn diamond_m3_is_a_lattice() {
        let p = poset_from_covers(
            labs(&["0", "a", "b", "c", "1"]),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        let l = compute_lattice(p, &Limits::default()).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(2, 3), 4);
    }

    #[test]
    fn size_cap_respected() {
        let p = poset_from_covers(labs(&["a", "b"]), &[(0, 1)]).unwrap();
        let err = compute_lattice(p, &Limits::with_max_elements(1)).unwrap_err();
        assert!(matches!(err, CoreError::SizeLimitExceeded { .. }));
    }
}
