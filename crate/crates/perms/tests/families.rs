//! Descent, peak, pinnacle, and avoidance families against independent
//! counting formulas.

use oillab_core::{Direction, IdealKind, Limits, Verdict};
use oillab_perms::{
    av213_certificate, avoidance_count, descent_class_certificate, factorial_certificate,
    for_each_perm, landmark_sets, middle_lattice, peak_polynomial_value, pinnacle_probe,
    BivincularPattern, Permutation, TableKind,
};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn limits() -> Limits {
    Limits::default()
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Permutations of [n] with descent set contained in T: a product of
/// binomials down the composition T cuts out of [n].
fn alpha(n: usize, t: &[usize]) -> u64 {
    let mut acc = 1u64;
    let mut used = 0;
    for &ti in t {
        acc *= binom(n - used, ti - used);
        used = ti;
    }
    acc
}

/// Inclusion-exclusion over subsets of S turns containment counts into the
/// exact-descent-set count.
fn descent_formula(n: usize, s: &[usize]) -> u64 {
    if s.last().is_some_and(|&m| m >= n) {
        return 0;
    }
    let mut total = 0i64;
    for mask in 0..(1u32 << s.len()) {
        let t: Vec<usize> = s
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
        total += sign * alpha(n, &t) as i64;
    }
    total as u64
}

fn descent_profile(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut buckets = BTreeMap::new();
    for_each_perm(n, |w| {
        let p = Permutation::new(w.to_vec()).unwrap();
        let (des, _, _) = landmark_sets(&p);
        *buckets.entry(des.into_iter().collect::<Vec<_>>()).or_insert(0u64) += 1;
    });
    buckets
}

#[test]
fn descent_counts_match_inclusion_exclusion() {
    for n in 1..=8 {
        let buckets = descent_profile(n);
        assert_eq!(buckets.values().sum::<u64>(), (1..=n as u64).product());
        for (s, &count) in &buckets {
            assert_eq!(count, descent_formula(n, s), "n {n}, S {s:?}");
        }
        // sets the profile never saw really are empty
        assert_eq!(descent_formula(n, &[n]), 0);
    }
}

#[test]
fn descent_certificates_match_the_formula() {
    for s in [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 4], vec![1, 2]] {
        let m = s.last().copied().unwrap_or(0);
        for n in m + 2..=7 {
            let cert = descent_class_certificate(&s, n, &limits()).unwrap();
            assert_eq!(cert.verdict, Verdict::Holds, "S {s:?}, n {n}");
            assert_eq!(cert.direction, Direction::ProductGeq);
            assert_eq!(cert.i_kind, IdealKind::Lower);
            assert_eq!(cert.j_kind, IdealKind::Upper);
            assert_eq!(cert.i_size, descent_formula(n, &s).into());
            assert_eq!(cert.j_size, descent_formula(n, &s).into());
            assert_eq!(cert.intersection_size, descent_formula(n - 1, &s).into());
            assert_eq!(cert.lattice_size, descent_formula(n + 1, &s).into());
        }
    }
}

#[test]
fn descent_certificates_match_the_frozen_cases() {
    // (S, n, |L|, |I| = |J|, |I and J|)
    let cases: [(&[usize], usize, u32, u32, u32); 8] = [
        (&[1], 3, 3, 2, 1),
        (&[], 2, 1, 1, 1),
        (&[2], 4, 9, 5, 2),
        (&[1, 3], 5, 35, 16, 5),
        (&[2], 5, 14, 9, 5),
        (&[1, 2], 4, 6, 3, 1),
        (&[3], 5, 19, 9, 3),
        (&[1, 4], 6, 99, 40, 11),
    ];
    for (s, n, lat, fam, both) in cases {
        let cert = descent_class_certificate(s, n, &limits()).unwrap();
        assert_eq!(cert.lattice_size, lat.into(), "S {s:?}, n {n}");
        assert_eq!(cert.i_size, fam.into());
        assert_eq!(cert.j_size, fam.into());
        assert_eq!(cert.intersection_size, both.into());
        assert_eq!(cert.verdict, Verdict::Holds);
    }
}

#[test]
fn initial_segment_descent_classes_count_binomially() {
    for n in 2..=8 {
        for k in 1..n.min(6) {
            let s: Vec<usize> = (1..=k).collect();
            assert_eq!(descent_formula(n, &s), binom(n - 1, k), "n {n}, k {k}");
        }
    }
}

#[test]
fn factorial_certificates_hold_to_five() {
    for n in 2..=5 {
        let cert = factorial_certificate(n, &limits()).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        let f = |m: usize| (1..=m as u64).product::<u64>();
        assert_eq!(cert.lhs, (f(n) * f(n)).into());
        assert_eq!(cert.rhs, (f(n - 1) * f(n + 1)).into());
    }
}

fn admissible_sets(max_pos: usize) -> Vec<Vec<usize>> {
    // subsets of {2..=max_pos} with no two consecutive
    let values: Vec<usize> = (2..=max_pos).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << values.len()) {
        let s: Vec<usize> = values
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if s.windows(2).all(|w| w[1] > w[0] + 1) {
            out.push(s);
        }
    }
    out
}

#[test]
fn peak_counts_always_divide_out() {
    for n in 1usize..=8 {
        let mut total = 0u64;
        for s in admissible_sets(n.saturating_sub(1)) {
            let (count, value) = peak_polynomial_value(&s, n).unwrap();
            assert_eq!(count, value << (n - s.len() - 1));
            total += count;
        }
        // peak sets of permutations are admissible, so the classes partition
        assert_eq!(total, (1..=n as u64).product());
    }
}

#[test]
fn pinnacle_probe_corpus() {
    let lim = limits();
    // classes that are distributive lattices
    for (sigma, n, count) in [
        (vec![3], 3, 2),
        (vec![], 2, 2),
        (vec![], 4, 8),
        (vec![4], 4, 12),
        (vec![5, 3], 5, 2),
        (vec![3, 5], 5, 2),
    ] {
        let r = pinnacle_probe(&sigma, n, &lim).unwrap();
        assert_eq!(r.count, count, "sigma {sigma:?}, n {n}");
        assert!(r.ok(), "sigma {sigma:?}, n {n}");
    }
    // lattices that are not distributive
    for (sigma, n, count) in [(vec![5], 5, 56), (vec![5], 6, 112), (vec![6], 6, 240)] {
        let r = pinnacle_probe(&sigma, n, &lim).unwrap();
        assert_eq!(r.count, count, "sigma {sigma:?}, n {n}");
        assert!(r.is_lattice && !r.is_distributive, "sigma {sigma:?}, n {n}");
    }
    // not even lattices
    for (sigma, n, count) in
        [(vec![3, 6], 6, 12), (vec![6, 3], 6, 12), (vec![4, 6], 6, 36), (vec![6, 4], 6, 36)]
    {
        let r = pinnacle_probe(&sigma, n, &lim).unwrap();
        assert_eq!(r.count, count, "sigma {sigma:?}, n {n}");
        assert!(!r.is_lattice, "sigma {sigma:?}, n {n}");
    }
}

#[test]
fn pinnacle_classes_partition_small_groups() {
    // every permutation has exactly one pinnacle word, so realized classes
    // cover n!
    for n in 1..=6 {
        let mut total = 0u64;
        let mut words: Vec<Vec<usize>> = Vec::new();
        for_each_perm(n, |w| {
            let seq: Vec<usize> = (1..n.saturating_sub(1))
                .filter(|&j| w[j - 1] < w[j] && w[j] > w[j + 1])
                .map(|j| w[j])
                .collect();
            if !words.contains(&seq) {
                words.push(seq);
            }
        });
        for sigma in words {
            total += pinnacle_probe(&sigma, n, &limits()).unwrap().count;
        }
        assert_eq!(total, (1..=n as u64).product());
    }
}

#[test]
fn the_middle_order_on_three_letters() {
    let lat = middle_lattice(3, TableKind::Iota, &limits()).unwrap();
    let dense = lat.to_dense(&limits()).unwrap();
    let poset = dense.poset();
    let mut covers: Vec<(String, String)> = poset
        .covers()
        .iter()
        .map(|&(a, b)| (poset.label(a as usize).to_string(), poset.label(b as usize).to_string()))
        .collect();
    covers.sort();
    let expected: Vec<(String, String)> =
        [("123", "132"), ("123", "213"), ("132", "231"), ("132", "312"), ("213", "231"), ("231", "321"), ("312", "321")]
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
    assert_eq!(covers, expected);
}

#[test]
fn avoidance_counts_to_nine() {
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for s in ["213", "321"] {
        let p = BivincularPattern::parse(s).unwrap();
        for n in 8..=9 {
            assert_eq!(avoidance_count(&p, n).unwrap(), catalan[n], "pattern {s}, n {n}");
        }
    }
}

#[test]
fn av213_certificates_hold_to_six() {
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429];
    for n in 2..=6 {
        let cert = av213_certificate(n, &limits()).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        assert_eq!(cert.direction, Direction::ProductLeq);
        assert_eq!(cert.i_size, catalan[n].into());
        assert_eq!(cert.intersection_size, catalan[n - 1].into());
        assert_eq!(cert.lattice_size, catalan[n + 1].into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_descent_certificates_hold(mask in 0u32..32, extra in 0usize..3) {
        let s: Vec<usize> = (1..=5).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let m = s.last().copied().unwrap_or(0);
        let n = m + 2 + extra;
        if n + 1 <= 8 {
            let cert = descent_class_certificate(&s, n, &limits()).unwrap();
            prop_assert_eq!(cert.verdict, Verdict::Holds);
        }
    }

    #[test]
    fn random_peak_classes_divide(mask in 0u32..64, extra in 1usize..=3) {
        // repair the mask into an admissible set: walk up, skip anything
        // adjacent to what was kept
        let mut s: Vec<usize> = Vec::new();
        for i in 2..=7usize {
            if mask >> (i - 2) & 1 == 1 && s.last().is_none_or(|&p| i > p + 1) {
                s.push(i);
            }
        }
        let n = (s.last().copied().unwrap_or(0) + extra).min(8);
        let (count, value) = peak_polynomial_value(&s, n).unwrap();
        prop_assert_eq!(count, value << (n - s.len() - 1));
    }
}
