//! Order polynomial counts against brute force, polynomiality through
//! finite differences, and the min/max closure that makes the map sets
//! lattices.

use num::{BigInt, ToPrimitive};
use oillab_core::{check_distributive, check_lattice_axioms, check_modular, LatticeOps, Limits};
use oillab_orderpoly::{
    enumerate_p_partitions, order_poly_value, ppartition_lattice, random_labeled_poset,
    schur_q_poly, schur_value, shape_poset, value_from_index, value_index, LabeledPoset,
};
use oillab_young::Partition;

fn zoo() -> Vec<LabeledPoset> {
    vec![
        LabeledPoset::new(0, &[]).unwrap(),
        LabeledPoset::new(1, &[]).unwrap(),
        LabeledPoset::new(2, &[(1, 2)]).unwrap(),
        LabeledPoset::new(2, &[(2, 1)]).unwrap(),
        LabeledPoset::new(3, &[(2, 1), (2, 3)]).unwrap(),
        LabeledPoset::new(4, &[]).unwrap(),
        LabeledPoset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap(),
        LabeledPoset::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        LabeledPoset::new(5, &[(5, 4), (4, 3), (3, 2), (2, 1)]).unwrap(),
        random_labeled_poset(5, 0.3, 11),
        random_labeled_poset(5, 0.6, 12),
        random_labeled_poset(4, 0.5, 13),
    ]
}

/// Axiom check over every strict pair of the order, not just covers.
fn is_valid(p: &LabeledPoset, f: &[i32], enriched: bool) -> bool {
    let m = p.len();
    for x in 1..=m {
        for y in 1..=m {
            if x == y || !p.leq(x, y) {
                continue;
            }
            let (a, b) = (f[x - 1], f[y - 1]);
            if enriched {
                if value_index(a) > value_index(b)
                    || (a == b && a > 0 && x > y)
                    || (a == b && a < 0 && x < y)
                {
                    return false;
                }
            } else if a > b || (a == b && x > y) {
                return false;
            }
        }
    }
    true
}

/// Every map from m elements into the range, in lexicographic order.
fn all_maps(m: usize, n: usize, enriched: bool) -> Vec<Vec<i32>> {
    let d = if enriched { 2 * n } else { n };
    let mut out = Vec::new();
    for code in 0..d.pow(m as u32) {
        let mut f = vec![0i32; m];
        let mut c = code;
        for slot in (0..m).rev() {
            let t = (c % d) as i32;
            c /= d;
            f[slot] = if enriched { value_from_index(t) } else { t + 1 };
        }
        out.push(f);
    }
    out
}

#[test]
fn enumeration_agrees_with_filtered_brute_force() {
    let limits = Limits::default();
    for p in zoo().iter().filter(|p| p.len() <= 3) {
        for enriched in [false, true] {
            for n in 0..=3 {
                let want: Vec<Vec<i32>> = all_maps(p.len(), n, enriched)
                    .into_iter()
                    .filter(|f| is_valid(p, f, enriched))
                    .collect();
                let got = enumerate_p_partitions(p, n, enriched, &limits).unwrap();
                assert_eq!(got, want, "{p} n={n} enriched={enriched}");
                assert_eq!(order_poly_value(p, n, enriched), want.len().into());
            }
        }
    }
}

#[test]
fn finite_differences_of_high_order_vanish() {
    for p in zoo() {
        let deg = p.len();
        for enriched in [false, true] {
            let mut vals: Vec<BigInt> = (0..=deg + 3)
                .map(|n| BigInt::from(order_poly_value(&p, n, enriched)))
                .collect();
            for _ in 0..=deg {
                vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
            assert_eq!(vals.len(), 3);
            assert!(vals.iter().all(|v| v == &BigInt::from(0)), "{p} enriched={enriched}");
        }
    }
}

#[test]
fn componentwise_extremes_stay_valid() {
    let limits = Limits::default();
    for p in zoo().iter().filter(|p| (1..=4).contains(&p.len())) {
        for enriched in [false, true] {
            let n = if enriched && p.len() == 4 { 2 } else { 3 };
            let maps = enumerate_p_partitions(p, n, enriched, &limits).unwrap();
            let idx = |f: &[i32]| -> Vec<i32> {
                f.iter().map(|&v| if enriched { value_index(v) } else { v }).collect()
            };
            for a in &maps {
                for b in &maps {
                    let (ia, ib) = (idx(a), idx(b));
                    let decode = |w: Vec<i32>| -> Vec<i32> {
                        w.into_iter().map(|t| if enriched { value_from_index(t) } else { t }).collect()
                    };
                    let lo = decode(ia.iter().zip(&ib).map(|(x, y)| *x.min(y)).collect());
                    let hi = decode(ia.iter().zip(&ib).map(|(x, y)| *x.max(y)).collect());
                    assert!(is_valid(p, &lo, enriched), "{p} min of {a:?} {b:?}");
                    assert!(is_valid(p, &hi, enriched), "{p} max of {a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn vector_lattice_matches_dense_tables() {
    let limits = Limits::default();
    let vee = LabeledPoset::new(3, &[(2, 1), (2, 3)]).unwrap();
    let rnd = random_labeled_poset(4, 0.5, 13);
    for (p, n) in [(&vee, 3), (&rnd, 2)] {
        for enriched in [false, true] {
            let lat = ppartition_lattice(p, n, enriched, &limits).unwrap();
            assert!(check_distributive(&lat, &limits).holds());
            assert!(check_lattice_axioms(&lat, &limits).ok());
            let dense = lat.to_dense(&limits).unwrap();
            for a in 0..lat.len() {
                for b in 0..lat.len() {
                    assert_eq!(lat.meet(a, b), dense.meet(a, b));
                    assert_eq!(lat.join(a, b), dense.join(a, b));
                }
            }
        }
    }
}

fn partitions_up_to(total: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let top = max.min(remaining);
        for part in (1..=top).rev() {
            cur.push(part);
            out.push(cur.clone());
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut raw = vec![Vec::new()];
    rec(total, total, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|parts| Partition::new(parts).unwrap()).collect()
}

#[test]
fn tableau_counts_equal_order_polynomial_values() {
    for lam in partitions_up_to(6) {
        let p = shape_poset(&lam, false).unwrap();
        assert_eq!(p.len() as u64, lam.size());
        for n in 0..=5 {
            assert_eq!(
                schur_value(&lam, n, false).unwrap(),
                order_poly_value(&p, n, false),
                "{lam} at {n}"
            );
        }
    }
}

#[test]
fn shifted_tableau_counts_equal_enriched_values() {
    let strict = partitions_up_to(6)
        .into_iter()
        .filter(|l| l.parts().windows(2).all(|w| w[0] > w[1]));
    for lam in strict {
        let p = shape_poset(&lam, true).unwrap();
        for n in 0..=3 {
            assert_eq!(
                schur_value(&lam, n, true).unwrap(),
                order_poly_value(&p, n, true),
                "{lam} at {n}"
            );
        }
    }
}

#[test]
fn q_polynomials_specialize_to_counts_at_one() {
    for lam in partitions_up_to(5) {
        for n in 0..=4 {
            let poly = schur_q_poly(&lam, n);
            let count = schur_value(&lam, n, false).unwrap().to_u64().unwrap();
            assert_eq!(poly.eval_one(), count.into(), "{lam} at {n}");
        }
    }
}

#[test]
fn entry_sums_are_modular_ranks() {
    let limits = Limits::default();
    for parts in [vec![2, 1], vec![2, 2], vec![3]] {
        let lam = Partition::new(parts).unwrap();
        let p = shape_poset(&lam, false).unwrap();
        // columns are strict, so fillings need at least one entry per row
        let rows = lam.len();
        for n in rows..rows + 3 {
            let lat = ppartition_lattice(&p, n, false, &limits).unwrap();
            let r: Vec<u64> = (0..lat.len())
                .map(|e| lat.vector(e).iter().map(|&c| c as u64).sum())
                .collect();
            assert!(check_modular(&lat, &r).is_ok());
        }
    }
}
