//! Finite posets with explicit cover relations and a packed order matrix.

use crate::bits::{BitMatrix, IndexSet};
use crate::error::{CoreError, Result};

/// Finite poset on indices `0..len()`. `below` stores the reflexive order
/// relation: `below.get(b, a)` iff `a <= b`. `covers` is the Hasse diagram,
/// free of transitive shortcuts.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(u32, u32)>,
    below: BitMatrix,
}

/// Build a poset from an acyclic cover list `(a, b)` meaning `a < b`.
/// Shortcut edges implied by transitivity are dropped from the stored Hasse
/// diagram; literal duplicates are rejected.
pub fn poset_from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
    let n = labels.len();
    if n == 0 {
        return Err(CoreError::Empty);
    }
    let mut seen = std::collections::HashSet::new();
    let mut adj = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in covers {
        if a >= n || b >= n {
            return Err(CoreError::CoverOutOfRange(a.max(b), n));
        }
        if a == b {
            return Err(CoreError::CycleDetected(vec![labels[a].clone(), labels[a].clone()]));
        }
        if !seen.insert((a, b)) {
            return Err(CoreError::DuplicateCover(labels[a].clone(), labels[b].clone()));
        }
        adj[a].push(b);
        indeg[b] += 1;
    }

    // Kahn's algorithm; leftovers witness a cycle.
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        topo.push(v);
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    if topo.len() != n {
        let in_cycle: Vec<usize> = (0..n).filter(|&i| indeg[i] > 0).collect();
        return Err(CoreError::CycleDetected(trace_cycle(&adj, &in_cycle, &labels)));
    }

    // Reflexive-transitive closure in topological order.
    let mut below = BitMatrix::new(n);
    for &v in &topo {
        below.set(v, v);
    }
    for &v in &topo {
        for &w in &adj[v] {
            below.or_row(w, v);
        }
    }
    let covers = hasse_from_closure(&below);
    Ok(Poset { labels, covers, below })
}

/// Build a poset from an arbitrary `leq` predicate, verifying the partial
/// order axioms and recovering the Hasse diagram.
pub fn poset_from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
    let n = labels.len();
    if n == 0 {
        return Err(CoreError::Empty);
    }
    let mut below = BitMatrix::new(n);
    for b in 0..n {
        for a in 0..n {
            if leq(a, b) {
                below.set(b, a);
            }
        }
    }
    for x in 0..n {
        if !below.get(x, x) {
            return Err(CoreError::NotAPartialOrder(format!("{} is not <= itself", labels[x])));
        }
        for y in 0..n {
            if x != y && below.get(x, y) && below.get(y, x) {
                return Err(CoreError::NotAPartialOrder(format!(
                    "{} <= {} <= {}",
                    labels[x], labels[y], labels[x]
                )));
            }
        }
    }
    for y in 0..n {
        for x in 0..n {
            // transitivity: x <= y forces below(x) a subset of below(y)
            if below.get(y, x) && !below.row_subset(x, y) {
                return Err(CoreError::NotAPartialOrder(format!(
                    "transitivity fails through {} <= {}",
                    labels[x], labels[y]
                )));
            }
        }
    }
    let covers = hasse_from_closure(&below);
    Ok(Poset { labels, covers, below })
}

fn trace_cycle(adj: &[Vec<usize>], in_cycle: &[usize], labels: &[String]) -> Vec<String> {
    // walk from any vertex stuck in the cycle region until we revisit one
    let start = in_cycle[0];
    let mut seen = vec![false; adj.len()];
    let mut path = vec![start];
    seen[start] = true;
    let mut v = start;
    loop {
        let next = adj[v]
            .iter()
            .copied()
            .find(|w| in_cycle.contains(w))
            .expect("cycle vertex with no outgoing cycle edge");
        if seen[next] {
            let pos = path.iter().position(|&p| p == next).unwrap_or(0);
            let mut cyc: Vec<String> = path[pos..].iter().map(|&p| labels[p].clone()).collect();
            cyc.push(labels[next].clone());
            return cyc;
        }
        seen[next] = true;
        path.push(next);
        v = next;
    }
}

/// Extract covers from a reflexive-transitive closure matrix.
/// For each b, the covers are the maximal elements strictly below b.
fn hasse_from_closure(below: &BitMatrix) -> Vec<(u32, u32)> {
    let n = below.n();
    // height = longest chain from a minimal element, used to scan top-down
    let heights = heights_from_closure(below);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(heights[x]), x));
    let mut covers = Vec::new();
    for b in 0..n {
        let mut covered = IndexSet::empty(n);
        covered.insert(b);
        for &a in &order {
            if a == b || !below.get(b, a) || covered.contains(a) {
                continue;
            }
            covers.push((a as u32, b as u32));
            for w in below.row_as_set(a).iter() {
                covered.insert(w);
            }
        }
    }
    covers.sort_unstable();
    covers
}

pub(crate) fn heights_from_closure(below: &BitMatrix) -> Vec<usize> {
    let n = below.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (below.row_count(x), x));
    let mut height = vec![0usize; n];
    for &b in &order {
        let mut h = 0;
        for a in below.row_as_set(b).iter() {
            if a != b {
                h = h.max(height[a] + 1);
            }
        }
        height[b] = h;
    }
    height
}

impl Poset {
    pub fn len(&self) -> usize {
        self.below.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below.get(b, a)
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    /// `{ a : a <= b }` as a packed set.
    pub fn down_set(&self, b: usize) -> IndexSet {
        self.below.row_as_set(b)
    }

    pub fn up_set(&self, a: usize) -> IndexSet {
        IndexSet::from_pred(self.len(), |b| self.leq(a, b))
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.below.row_count(x) == 1).collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        let mut has_up = vec![false; self.len()];
        for &(a, _) in &self.covers {
            has_up[a as usize] = true;
        }
        (0..self.len()).filter(|&x| !has_up[x]).collect()
    }

    /// Longest-chain height of every element, bottom elements at 0.
    pub fn heights(&self) -> Vec<usize> {
        heights_from_closure(&self.below)
    }

    /// Is `members` closed downward? Returns a witness `(kept, missing)` when not.
    pub fn lower_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        for x in members.iter() {
            if !self.below.row_subset_of_set(x, members) {
                let missing = self
                    .down_set(x)
                    .iter()
                    .find(|&y| !members.contains(y))
                    .expect("subset test said a member is missing");
                return Some((x, missing));
            }
        }
        None
    }

    pub fn upper_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        for x in members.iter() {
            for y in 0..self.len() {
                if self.leq(x, y) && !members.contains(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub(crate) fn below_matrix(&self) -> &BitMatrix {
        &self.below
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labs(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn chain_closure_and_covers() {
        let p = poset_from_covers(labs(3), &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(p.heights(), vec![0, 1, 2]);
    }

    #[test]
    fn shortcut_edges_are_reduced() {
        let p = poset_from_covers(labs(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_is_reported() {
        let err = poset_from_covers(labs(3), &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        match err {
            CoreError::CycleDetected(cyc) => {
                assert!(cyc.len() >= 3);
                assert_eq!(cyc.first(), cyc.last());
            }
            other => panic!("expected cycle, got {other}"),
        }
    }

    #[test]
    fn duplicate_cover_rejected() {
        let err = poset_from_covers(labs(2), &[(0, 1), (0, 1)]).unwrap_err();
        assert!(matches!(err, CoreError::DuplicateCover(_, _)));
    }

    #[test]
    fn relation_roundtrip_matches_covers() {
        // fence: 0 < 1 > 2 < 3
        let p = poset_from_covers(labs(4), &[(0, 1), (2, 1), (2, 3)]).unwrap();
        let q = poset_from_relation(labs(4), |a, b| p.leq(a, b)).unwrap();
        assert_eq!(p.covers(), q.covers());
        assert_eq!(p.minimals(), vec![0, 2]);
        assert_eq!(p.maximals(), vec![1, 3]);
    }

    #[test]
    fn bad_relation_rejected() {
        let err = poset_from_relation(labs(2), |_, _| true).unwrap_err();
        assert!(matches!(err, CoreError::NotAPartialOrder(_)));
    }

    #[test]
    fn lower_set_violation_witness() {
        let p = poset_from_covers(labs(3), &[(0, 1), (1, 2)]).unwrap();
        let mut s = IndexSet::empty(3);
        s.insert(2);
        let (kept, missing) = p.lower_set_violation(&s).unwrap();
        assert_eq!(kept, 2);
        assert!(missing < 2);
        s.insert(0);
        s.insert(1);
        assert!(p.lower_set_violation(&s).is_none());
    }
}
