//! P-partitions of labeled posets and their order polynomials.
//!
//! A poset on {1, .., p} carries its labeling in the element names. A
//! P-partition assigns every element a value from a finite range so that
//! values weakly increase going up the order, and strictly where the label
//! drops. The maps with a fixed range are closed under componentwise
//! min and max, so they form a distributive lattice, and capping values
//! above or below cuts out the ideals whose sizes are consecutive order
//! polynomial values. The enriched variant ranges over signed values under
//! the alternating order -1, 1, -2, 2, .. and its own equality rules.

mod tableaux;

pub use tableaux::{schur_q_poly, schur_value, shape_poset};

use num::BigUint;
use oillab_core::{
    oil_check, poset_from_covers, q_oil_check, Certificate, CoreError, IdealHandle, IdealKind,
    LatticeOps, Limits, OilOptions, Poset, QCertificate, Result, VectorLattice,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Finite poset on the ground set {1, .., p}. The element names are the
/// labels; nothing else carries labeling information.
#[derive(Clone, Debug)]
pub struct LabeledPoset {
    /// `None` exactly for the empty poset.
    poset: Option<Poset>,
}

impl LabeledPoset {
    /// Build from 1-based cover pairs `(a, b)` meaning `a` lies below `b`.
    /// Relations implied by transitivity are tolerated and dropped.
    pub fn new(p: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if p == 0 {
            if let Some(&(a, _)) = covers.first() {
                return Err(CoreError::CoverOutOfRange(a, 0));
            }
            return Ok(LabeledPoset { poset: None });
        }
        let mut zero_based = Vec::with_capacity(covers.len());
        for &(a, b) in covers {
            for e in [a, b] {
                if e == 0 || e > p {
                    return Err(CoreError::CoverOutOfRange(e, p));
                }
            }
            zero_based.push((a - 1, b - 1));
        }
        let labels = (1..=p).map(|i| i.to_string()).collect();
        let poset = poset_from_covers(labels, &zero_based)?;
        Ok(LabeledPoset { poset: Some(poset) })
    }

    pub fn len(&self) -> usize {
        self.poset.as_ref().map_or(0, |q| q.len())
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_none()
    }

    /// Hasse diagram as 1-based pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        match &self.poset {
            None => Vec::new(),
            Some(q) => q.covers().iter().map(|&(a, b)| (a as usize + 1, b as usize + 1)).collect(),
        }
    }

    /// Reflexive order test on 1-based elements.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        match &self.poset {
            None => false,
            Some(q) => (1..=q.len()).contains(&a) && (1..=q.len()).contains(&b) && q.leq(a - 1, b - 1),
        }
    }

    /// The underlying order with elements renamed 0..p-1, for diagram export.
    pub fn poset(&self) -> Option<&Poset> {
        self.poset.as_ref()
    }
}

impl fmt::Display for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.len())?;
        let covers = self.covers();
        if covers.is_empty() {
            return Ok(());
        }
        let shown: Vec<String> = covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        write!(f, " with {}", shown.join(", "))
    }
}

/// Position of a nonzero value in the alternating order -1, 1, -2, 2, ..
pub fn value_index(v: i32) -> i32 {
    debug_assert!(v != 0);
    2 * (v.abs() - 1) + i32::from(v > 0)
}

pub fn value_from_index(i: i32) -> i32 {
    let m = i / 2 + 1;
    if i % 2 == 1 {
        m
    } else {
        -m
    }
}

/// Renders a signed value, negatives in bar notation (-2 as "2̄").
pub fn value_label(v: i32) -> String {
    if v < 0 {
        format!("{}\u{304}", -v)
    } else {
        v.to_string()
    }
}

/// Depth-first sweep over all valid maps in lexicographic order of the
/// value tuple (positions under the alternating order when enriched).
/// Checking covers alone suffices: along any chain the weak inequalities
/// compose, and a label descent somewhere in the chain forces strictness.
fn walk_ppartitions(
    p: &LabeledPoset,
    n: usize,
    enriched: bool,
    emit: &mut dyn FnMut(&[i32]) -> Result<()>,
) -> Result<()> {
    let m = p.len();
    if m == 0 {
        return emit(&[]);
    }
    if n == 0 {
        return Ok(());
    }
    let top: i64 = if enriched { 2 * n as i64 - 1 } else { n as i64 };
    if top > i32::MAX as i64 {
        return Err(CoreError::SizeLimitExceeded {
            what: "spanning the value range",
            have: n,
            cap: i32::MAX as usize / 2,
        });
    }
    // earlier neighbors across covers, split by which side the later
    // element is on; assignment order equals label order, so covers into
    // a later element are weak and covers out of it are strict
    let mut below = vec![Vec::new(); m];
    let mut above = vec![Vec::new(); m];
    for (a, b) in p.covers() {
        let (a, b) = (a - 1, b - 1);
        if a < b {
            below[b].push(a);
        } else {
            above[a].push(b);
        }
    }
    let mut walk = Walk {
        below,
        above,
        lo0: if enriched { 0 } else { 1 },
        hi0: top as i32,
        enriched,
        vals: vec![0; m],
        idxs: vec![0; m],
        emit,
    };
    walk.go(0)
}

struct Walk<'a> {
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
    lo0: i32,
    hi0: i32,
    enriched: bool,
    vals: Vec<i32>,
    idxs: Vec<i32>,
    emit: &'a mut dyn FnMut(&[i32]) -> Result<()>,
}

impl Walk<'_> {
    fn go(&mut self, e: usize) -> Result<()> {
        if e == self.vals.len() {
            return (self.emit)(&self.vals);
        }
        let mut lo = self.lo0;
        let mut hi = self.hi0;
        for &q in &self.below[e] {
            // weak bound; enriched equality is only allowed on positives
            let bound = if self.enriched {
                self.idxs[q] + i32::from(self.vals[q] < 0)
            } else {
                self.vals[q]
            };
            lo = lo.max(bound);
        }
        for &q in &self.above[e] {
            // label descent; enriched equality is only allowed on negatives
            let bound = if self.enriched {
                self.idxs[q] - i32::from(self.vals[q] > 0)
            } else {
                self.vals[q] - 1
            };
            hi = hi.min(bound);
        }
        for t in lo..=hi {
            self.idxs[e] = t;
            self.vals[e] = if self.enriched { value_from_index(t) } else { t };
            self.go(e + 1)?;
        }
        Ok(())
    }
}

/// All maps with the given range, as signed value tuples indexed by element.
pub fn enumerate_p_partitions(
    p: &LabeledPoset,
    n: usize,
    enriched: bool,
    limits: &Limits,
) -> Result<Vec<Vec<i32>>> {
    let mut out: Vec<Vec<i32>> = Vec::new();
    walk_ppartitions(p, n, enriched, &mut |vals| {
        if out.len() >= limits.max_elements {
            return Err(CoreError::SizeLimitExceeded {
                what: "enumerating P-partitions",
                have: out.len() + 1,
                cap: limits.max_elements,
            });
        }
        out.push(vals.to_vec());
        Ok(())
    })?;
    Ok(out)
}

/// Number of maps with the given range. Range 0 admits exactly the empty
/// map, so the value is 1 for the empty poset and 0 otherwise.
pub fn order_poly_value(p: &LabeledPoset, n: usize, enriched: bool) -> BigUint {
    let mut count: u128 = 0;
    walk_ppartitions(p, n, enriched, &mut |_| {
        count += 1;
        Ok(())
    })
    .expect("counting allocates nothing, only a range too wide for i32 can fail");
    BigUint::from(count)
}

/// The maps with the given range as a lattice under componentwise min/max,
/// taken on value positions when enriched.
pub fn ppartition_lattice(
    p: &LabeledPoset,
    n: usize,
    enriched: bool,
    limits: &Limits,
) -> Result<VectorLattice> {
    let mut elems: Vec<Vec<i32>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    walk_ppartitions(p, n, enriched, &mut |vals| {
        if elems.len() >= limits.max_elements {
            return Err(CoreError::SizeLimitExceeded {
                what: "materializing a P-partition lattice",
                have: elems.len() + 1,
                cap: limits.max_elements,
            });
        }
        let coords = if enriched {
            vals.iter().map(|&v| value_index(v)).collect()
        } else {
            vals.to_vec()
        };
        let shown: Vec<String> = vals
            .iter()
            .map(|&v| if enriched { value_label(v) } else { v.to_string() })
            .collect();
        elems.push(coords);
        labels.push(format!("({})", shown.join(",")));
        Ok(())
    })?;
    VectorLattice::new(p.len(), elems, labels, limits)
}

fn cert_options(p: &LabeledPoset, n: usize, mode: &str, range: String) -> OilOptions {
    OilOptions {
        // closure under componentwise min/max holds at every range; the
        // test suite checks it exhaustively on small instances
        assert_distributive: true,
        lattice_name: format!("{mode} P-partition lattice on {p}, range {range}"),
        family_params: vec![
            ("poset".to_string(), p.to_string()),
            ("n".to_string(), n.to_string()),
            ("mode".to_string(), mode.to_string()),
        ],
    }
}

/// Log-concavity witness at index n, for n >= 1. On the lattice of maps
/// with range n+1, capping values at n is a lower ideal and raising the
/// floor to 2 is an upper ideal; both count the maps with range n and they
/// intersect in the maps with range n-1, shifted up. Fails with `Empty`
/// when no map fits in range n+1; the inequality is 0 >= 0 there and the
/// lattice only exists from the first nonzero count on.
pub fn op_certificate(
    p: &LabeledPoset,
    n: usize,
    enriched: bool,
    limits: &Limits,
) -> Result<Certificate> {
    let lat = ppartition_lattice(p, n + 1, enriched, limits)?;
    let cap = if enriched { 2 * n as i32 - 1 } else { n as i32 };
    let i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| v.iter().all(|&c| c <= cap)));
    let j = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| v.iter().all(|&c| c >= 2)));
    let mode = if enriched { "enriched" } else { "ordinary" };
    let range = if enriched { format!("<{}>", n + 1) } else { (n + 1).to_string() };
    oil_check(&lat, &i, &j, &cert_options(p, n, mode, range), limits)
}

/// The q-refinement of the ordinary certificate: with rank r(f) equal to
/// the sum of the values of f, which is modular coordinate by coordinate,
/// the ideal products compare coefficientwise.
pub fn op_q_certificate(p: &LabeledPoset, n: usize, limits: &Limits) -> Result<QCertificate> {
    let lat = ppartition_lattice(p, n + 1, false, limits)?;
    let r: Vec<u64> = (0..lat.len())
        .map(|e| lat.vector(e).iter().map(|&c| c as u64).sum())
        .collect();
    let i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| v.iter().all(|&c| c <= n as i32)));
    let j = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| v.iter().all(|&c| c >= 2)));
    q_oil_check(&lat, &r, &i, &j, &cert_options(p, n, "q", (n + 1).to_string()), limits)
}

/// Random order on {1, .., p}: a shuffled backbone fixes which way each
/// sampled pair runs, so the labels carry no information about the
/// structure. Deterministic in the seed.
pub fn random_labeled_poset(p: usize, density: f64, seed: u64) -> LabeledPoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if p == 0 {
        return LabeledPoset { poset: None };
    }
    let mut order: Vec<usize> = (0..p).collect();
    order.shuffle(&mut rng);
    let prob = density.clamp(0.0, 1.0);
    let mut rel = vec![vec![false; p]; p];
    for i in 0..p {
        for j in (i + 1)..p {
            if rng.gen_bool(prob) {
                rel[order[i]][order[j]] = true;
            }
        }
    }
    for k in 0..p {
        for a in 0..p {
            if rel[a][k] {
                for b in 0..p {
                    if rel[k][b] {
                        rel[a][b] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..p {
        'pair: for b in 0..p {
            if !rel[a][b] {
                continue;
            }
            for c in 0..p {
                if rel[a][c] && rel[c][b] {
                    continue 'pair;
                }
            }
            covers.push((a + 1, b + 1));
        }
    }
    LabeledPoset::new(p, &covers).expect("sampled relation is acyclic by construction")
}
