//! Lattices of lower ideals of a poset (the fundamental representation of a
//! finite distributive lattice), plus closed-form ideal counting.

use crate::error::{CoreError, Result};
use crate::lattice::Lattice;
use crate::limits::Limits;
use crate::poset::{poset_from_relation, Poset};
use num::BigUint;
use std::collections::HashMap;

fn down_masks(poset: &Poset) -> Result<Vec<u64>> {
    let n = poset.len();
    if n > 64 {
        return Err(CoreError::SizeLimitExceeded { what: "enumerating ideals (ground set)", have: n, cap: 64 });
    }
    Ok((0..n)
        .map(|b| poset.down_set(b).iter().fold(0u64, |m, a| m | 1 << a))
        .collect())
}

/// Enumerate all lower ideals of `poset` as bitmasks, in (size, mask)
/// order. Capped by `limits.max_ideals`.
pub fn enumerate_ideals(poset: &Poset, limits: &Limits) -> Result<Vec<u64>> {
    let n = poset.len();
    let down = down_masks(poset)?;
    // process elements so that all predecessors come first
    let mut topo: Vec<usize> = (0..n).collect();
    topo.sort_by_key(|&i| (poset.down_set(i).len(), i));
    let mut ideals = vec![0u64];
    for &x in &topo {
        let need = down[x] & !(1 << x);
        let mut next = Vec::with_capacity(ideals.len() * 2);
        for &m in &ideals {
            next.push(m);
            if m & need == need {
                next.push(m | 1 << x);
            }
            if next.len() > limits.max_ideals {
                return Err(CoreError::SizeLimitExceeded {
                    what: "enumerating ideals",
                    have: next.len(),
                    cap: limits.max_ideals,
                });
            }
        }
        ideals = next;
    }
    ideals.sort_by_key(|&m| (m.count_ones(), m));
    Ok(ideals)
}

fn ideal_label(poset: &Poset, mask: u64) -> String {
    let mut parts = Vec::new();
    for i in 0..poset.len() {
        if mask >> i & 1 == 1 {
            parts.push(poset.label(i).to_string());
        }
    }
    format!("{{{}}}", parts.join(","))
}

/// The lattice of lower ideals of `poset`, ordered by inclusion, with meet
/// and join realized by intersection and union. Always distributive.
/// Element i of the lattice is ideal i of `enumerate_ideals`, so callers can
/// select element families by mask.
pub fn birkhoff(poset: &Poset, limits: &Limits) -> Result<Lattice> {
    let ideals = enumerate_ideals(poset, limits)?;
    let n = ideals.len();
    if n > limits.dense_cap {
        return Err(CoreError::SizeLimitExceeded {
            what: "materializing an ideal lattice",
            have: n,
            cap: limits.dense_cap,
        });
    }
    let index: HashMap<u64, u32> = ideals.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let labels: Vec<String> = ideals.iter().map(|&m| ideal_label(poset, m)).collect();
    let order = poset_from_relation(labels, |a, b| ideals[a] & !ideals[b] == 0)?;
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let m = index[&(ideals[a] & ideals[b])];
            let j = index[&(ideals[a] | ideals[b])];
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    Ok(Lattice::from_parts(order, meet, join))
}

/// Number of lower ideals of `poset`, by the deletion recursion
/// N(P) = N(P minus the up set of x) + N(P minus the down set of x),
/// memoized on the surviving element mask. Never materializes the lattice.
pub fn count_ideals(poset: &Poset) -> Result<BigUint> {
    let n = poset.len();
    let down = down_masks(poset)?;
    let up: Vec<u64> = (0..n)
        .map(|a| poset.up_set(a).iter().fold(0u64, |m, b| m | 1 << b))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, BigUint> = HashMap::new();

    fn go(mask: u64, up: &[u64], down: &[u64], memo: &mut HashMap<u64, BigUint>) -> BigUint {
        if mask == 0 {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let x = mask.trailing_zeros() as usize;
        let without = go(mask & !up[x], up, down, memo);
        let with = go(mask & !down[x], up, down, memo);
        let total = without + with;
        memo.insert(mask, total.clone());
        total
    }

    Ok(go(full, &up, &down, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeOps;
    use crate::poset::poset_from_covers;
    use crate::verify::{check_distributive, check_lattice_axioms};

    fn labs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn chain_ideals() {
        let p = poset_from_covers(labs(&["a", "b"]), &[(0, 1)]).unwrap();
        let l = birkhoff(&p, &Limits::default()).unwrap();
        assert_eq!(l.len(), 3);
        let labels: Vec<String> = (0..3).map(|i| l.label(i)).collect();
        assert_eq!(labels, vec!["{}", "{a}", "{a,b}"]);
        assert_eq!(count_ideals(&p).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn antichain_gives_boolean_lattice() {
        let p = poset_from_covers(labs(&["x", "y", "z"]), &[]).unwrap();
        let l = birkhoff(&p, &Limits::default()).unwrap();
        assert_eq!(l.len(), 8);
        assert!(check_distributive(&l, &Limits::default()).holds());
        assert!(check_lattice_axioms(&l, &Limits::default()).ok());
        assert_eq!(count_ideals(&p).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn fence_ideal_count() {
        // v poset: a > b < c gives ideals {}, {b}, {a,b}, {b,c}, {a,b,c}
        let p = poset_from_covers(labs(&["a", "b", "c"]), &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(count_ideals(&p).unwrap(), BigUint::from(5u32));
        let l = birkhoff(&p, &Limits::default()).unwrap();
        assert_eq!(l.len(), 5);
        // meets intersect, joins unite
        let ab = (0..5).find(|&i| l.label(i) == "{a,b}").unwrap();
        let bc = (0..5).find(|&i| l.label(i) == "{b,c}").unwrap();
        assert_eq!(l.label(l.meet(ab, bc)), "{b}");
        assert_eq!(l.label(l.join(ab, bc)), "{a,b,c}");
    }

    #[test]
    fn birkhoff_always_distributive_small_random_shapes() {
        // a handful of fixed posets with varied shapes
        let shapes: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
            (5, vec![(0, 2), (1, 2), (2, 3), (2, 4)]),
            (6, vec![(0, 3), (1, 3), (1, 4), (2, 4), (3, 5)]),
        ];
        for (n, covers) in shapes {
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            let p = poset_from_covers(labels, &covers).unwrap();
            let l = birkhoff(&p, &Limits::default()).unwrap();
            assert!(check_distributive(&l, &Limits::default()).holds());
            assert_eq!(BigUint::from(l.len()), count_ideals(&p).unwrap());
        }
    }

    #[test]
    fn ideal_cap_enforced() {
        let p = poset_from_covers((0..30).map(|i| format!("e{i}")).collect(), &[]).unwrap();
        let mut limits = Limits::default();
        limits.max_ideals = 1000;
        assert!(matches!(
            enumerate_ideals(&p, &limits),
            Err(CoreError::SizeLimitExceeded { .. })
        ));
    }
}
