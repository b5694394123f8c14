//! Conversions and counts for the growth word families.

use oillab_setparts::{
    decompose, enumerate_rgfs, feasible_fm, narayana_number, reconstruct_nc, recompose,
    stirling2_number, SetPartition, RGF,
};
use proptest::prelude::*;
use std::collections::HashMap;

fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        for i in 0..m {
            c[m] += c[i] * c[m - 1 - i];
        }
    }
    c[n]
}

fn all_words(n: usize, noncrossing: bool) -> Vec<RGF> {
    (1..=n).flat_map(|k| enumerate_rgfs(n, k, noncrossing)).collect()
}

#[test]
fn partitions_and_words_are_two_names_for_one_thing() {
    for n in 1..=8 {
        for w in all_words(n, false) {
            let p = w.to_partition();
            assert_eq!(p.to_rgf(), w);
            assert_eq!(p.n(), n);
            assert_eq!(SetPartition::parse(&p.to_string()).unwrap(), p);
            assert_eq!(RGF::parse(&w.to_string()).unwrap(), w);
            let d = decompose(&w);
            assert_eq!(recompose(&d.firsts, &d.rest).unwrap(), w);
        }
    }
}

#[test]
fn family_sizes_match_the_closed_counts() {
    for n in 1..=10 {
        for k in 1..=n {
            let words = enumerate_rgfs(n, k, false);
            assert_eq!(
                stirling2_number(n, k),
                words.len().into(),
                "RGF({n}, {k})"
            );
            let nc = enumerate_rgfs(n, k, true);
            assert_eq!(narayana_number(n, k), nc.len().into(), "NC({n}, {k})");
        }
        let total: usize = (1..=n).map(|k| enumerate_rgfs(n, k, true).len()).sum();
        assert_eq!(total as u64, catalan(n), "noncrossing total at n = {n}");
    }
}

#[test]
fn first_occurrences_and_filler_pin_down_noncrossing_words() {
    for n in 1..=8 {
        let mut seen: HashMap<(Vec<usize>, Vec<usize>), RGF> = HashMap::new();
        for w in all_words(n, true) {
            let d = decompose(&w);
            let rebuilt = reconstruct_nc(&d.firsts, &d.multiset).unwrap();
            assert_eq!(rebuilt, w);
            let prior = seen.insert((d.firsts, d.multiset), w.clone());
            assert!(prior.is_none(), "two noncrossing words share a key: {prior:?} and {w}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_words_survive_every_roundtrip(raw in prop::collection::vec(1usize..=8, 1..=9)) {
        // clamp entries into growth range, keeping plenty of variety
        let mut word = Vec::with_capacity(raw.len());
        let mut max = 0usize;
        for r in raw {
            let v = 1 + (r - 1) % (max + 1);
            max = max.max(v);
            word.push(v);
        }
        let w = RGF::new(word).unwrap();
        prop_assert_eq!(RGF::parse(&w.to_string()).unwrap(), w.clone());
        prop_assert_eq!(w.to_partition().to_rgf(), w.clone());
        let d = decompose(&w);
        prop_assert_eq!(recompose(&d.firsts, &d.rest).unwrap(), w.clone());
        prop_assert_eq!(d.firsts.len(), w.k());
        let mut sorted = d.rest.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, d.multiset);
    }

    #[test]
    fn greedy_rebuild_succeeds_exactly_on_feasible_pairs(
        gaps in prop::collection::vec(0usize..3, 0..5),
        fills in prop::collection::vec(1usize..=5, 0..7),
    ) {
        let mut firsts = vec![1usize];
        for g in gaps {
            firsts.push(firsts.last().unwrap() + 1 + g);
        }
        let k = firsts.len();
        let multiset: Vec<usize> = fills.into_iter().map(|v| 1 + (v - 1) % k).collect();
        let feasible = feasible_fm(&firsts, &multiset);
        match reconstruct_nc(&firsts, &multiset) {
            Ok(w) => {
                prop_assert!(feasible);
                prop_assert!(w.is_noncrossing());
                let d = decompose(&w);
                prop_assert_eq!(d.firsts, firsts);
                let mut sorted = multiset.clone();
                sorted.sort_unstable();
                prop_assert_eq!(d.multiset, sorted);
            }
            Err(e) => {
                prop_assert!(!feasible, "rebuild refused a feasible pair: {e}");
            }
        }
    }
}
