//! Lattices of integer vectors ordered componentwise.
//!
//! A finite set of vectors that is closed under pointwise min and max is a
//! sublattice of a product of chains, hence a distributive lattice. Family
//! modules encode their elements as vectors (height profiles, part vectors,
//! inversion tables, ...) and get meets, joins, and a distributivity
//! guarantee from the closure check alone.

use crate::bits::IndexSet;
use crate::error::{CoreError, Result};
use crate::lattice::{compute_lattice, Lattice, LatticeOps};
use crate::limits::{Limits, SAMPLE_SEED};
use crate::poset::poset_from_relation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How meet/join closure was established at construction time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureEvidence {
    /// Every pair was checked; distributivity is certified.
    AllPairs,
    /// Only `pairs` sampled pairs were checked (set is above the pair cap).
    Sampled { pairs: usize },
}

#[derive(Debug)]
pub struct VectorLattice {
    dims: usize,
    flat: Vec<i32>,
    labels: Vec<String>,
    /// element indices sorted by vector (lexicographic), for lookups
    sorted: Vec<u32>,
    /// coordinate sums, for pruning pair scans
    sums: Vec<i64>,
    closure: ClosureEvidence,
}

impl VectorLattice {
    /// Build from elements in their canonical family order. Verifies min/max
    /// closure on all pairs when the set is small enough, otherwise on a
    /// deterministic sample (recorded in `closure_evidence`).
    pub fn new(
        dims: usize,
        elems: Vec<Vec<i32>>,
        labels: Vec<String>,
        limits: &Limits,
    ) -> Result<Self> {
        let n = elems.len();
        if n == 0 {
            return Err(CoreError::Empty);
        }
        if n > limits.max_elements {
            return Err(CoreError::SizeLimitExceeded {
                what: "materializing a vector lattice",
                have: n,
                cap: limits.max_elements,
            });
        }
        assert_eq!(labels.len(), n, "one label per element");
        let mut flat = Vec::with_capacity(n * dims);
        for e in &elems {
            if e.len() != dims {
                return Err(CoreError::DimMismatch(dims, e.len()));
            }
            flat.extend_from_slice(e);
        }
        let mut sorted: Vec<u32> = (0..n as u32).collect();
        sorted.sort_by(|&a, &b| flat[a as usize * dims..(a as usize + 1) * dims].cmp(&flat[b as usize * dims..(b as usize + 1) * dims]));
        for w in sorted.windows(2) {
            let (a, b) = (w[0] as usize, w[1] as usize);
            if flat[a * dims..(a + 1) * dims] == flat[b * dims..(b + 1) * dims] {
                return Err(CoreError::DuplicateElement(labels[a].clone()));
            }
        }
        let sums = (0..n)
            .map(|i| flat[i * dims..(i + 1) * dims].iter().map(|&v| v as i64).sum())
            .collect();
        let mut lat = VectorLattice { dims, flat, labels, sorted, sums, closure: ClosureEvidence::AllPairs };
        lat.closure = lat.verify_closure(limits)?;
        Ok(lat)
    }

    fn verify_closure(&self, limits: &Limits) -> Result<ClosureEvidence> {
        let n = self.len();
        let mut min_buf = vec![0i32; self.dims];
        let mut max_buf = vec![0i32; self.dims];
        let check_pair = |a: usize, b: usize, min_buf: &mut [i32], max_buf: &mut [i32]| -> Result<()> {
            let x = self.vector(a);
            let y = self.vector(b);
            for i in 0..self.dims {
                min_buf[i] = x[i].min(y[i]);
                max_buf[i] = x[i].max(y[i]);
            }
            if self.position(min_buf).is_none() {
                return Err(CoreError::ClosureViolated {
                    op: "meet",
                    x: self.labels[a].clone(),
                    y: self.labels[b].clone(),
                });
            }
            if self.position(max_buf).is_none() {
                return Err(CoreError::ClosureViolated {
                    op: "join",
                    x: self.labels[a].clone(),
                    y: self.labels[b].clone(),
                });
            }
            Ok(())
        };
        if n <= limits.full_pair_cap {
            for a in 0..n {
                for b in (a + 1)..n {
                    check_pair(a, b, &mut min_buf, &mut max_buf)?;
                }
            }
            Ok(ClosureEvidence::AllPairs)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let pairs = limits.samples;
            for _ in 0..pairs {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b {
                    check_pair(a, b, &mut min_buf, &mut max_buf)?;
                }
            }
            Ok(ClosureEvidence::Sampled { pairs })
        }
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn vector(&self, i: usize) -> &[i32] {
        &self.flat[i * self.dims..(i + 1) * self.dims]
    }

    pub fn closure_evidence(&self) -> ClosureEvidence {
        self.closure
    }

    /// Index of a vector, by binary search over the sorted view.
    pub fn position(&self, v: &[i32]) -> Option<usize> {
        debug_assert_eq!(v.len(), self.dims);
        self.sorted
            .binary_search_by(|&i| self.vector(i as usize).cmp(v))
            .ok()
            .map(|slot| self.sorted[slot] as usize)
    }

    /// Members selected by a predicate over (index, vector).
    pub fn select(&self, mut pred: impl FnMut(usize, &[i32]) -> bool) -> IndexSet {
        IndexSet::from_pred(self.len(), |i| pred(i, self.vector(i)))
    }

    /// Densify into a table-backed `Lattice` (for Hasse export, axiom
    /// sweeps, cross-checks). Bounded by `limits.dense_cap`.
    pub fn to_dense(&self, limits: &Limits) -> Result<Lattice> {
        let poset = poset_from_relation(self.labels.clone(), |a, b| self.leq(a, b))?;
        compute_lattice(poset, limits)
    }

    fn vec_leq(&self, a: usize, b: usize) -> bool {
        let x = self.vector(a);
        let y = self.vector(b);
        x.iter().zip(y).all(|(p, q)| p <= q)
    }
}

impl LatticeOps for VectorLattice {
    fn len(&self) -> usize {
        self.labels.len()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.vec_leq(a, b)
    }

    fn try_meet(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i32> = self.vector(a).iter().zip(self.vector(b)).map(|(x, y)| *x.min(y)).collect();
        self.position(&v)
    }

    fn try_join(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i32> = self.vector(a).iter().zip(self.vector(b)).map(|(x, y)| *x.max(y)).collect();
        self.position(&v)
    }

    fn distributive_by_construction(&self) -> bool {
        self.closure == ClosureEvidence::AllPairs
    }

    fn lower_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        // violation: y outside, x inside, y <= x. Scan outside elements in
        // ascending coordinate-sum order so the sum filter prunes early.
        let mut inside: Vec<usize> = members.iter().collect();
        let mut outside: Vec<usize> = members.complement().iter().collect();
        inside.sort_by_key(|&i| std::cmp::Reverse(self.sums[i]));
        outside.sort_by_key(|&i| self.sums[i]);
        for &x in &inside {
            for &y in &outside {
                if self.sums[y] > self.sums[x] {
                    break;
                }
                if self.vec_leq(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    fn upper_set_violation(&self, members: &IndexSet) -> Option<(usize, usize)> {
        let mut inside: Vec<usize> = members.iter().collect();
        let mut outside: Vec<usize> = members.complement().iter().collect();
        inside.sort_by_key(|&i| self.sums[i]);
        outside.sort_by_key(|&i| std::cmp::Reverse(self.sums[i]));
        for &x in &inside {
            for &y in &outside {
                if self.sums[y] < self.sums[x] {
                    break;
                }
                if self.vec_leq(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}
