//! Graphviz export of Hasse diagrams.

use crate::poset::Poset;
use std::fmt::Write;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram as a dot digraph, bottom element at the bottom. Nodes of
/// equal height share a rank. Output is deterministic.
pub fn hasse_dot(poset: &Poset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
    for i in 0..poset.len() {
        writeln!(out, "  n{} [label=\"{}\"];", i, escape(poset.label(i))).unwrap();
    }
    let heights = poset.heights();
    let max_h = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_h {
        let level: Vec<usize> = (0..poset.len()).filter(|&i| heights[i] == h).collect();
        if level.is_empty() {
            continue;
        }
        write!(out, "  {{ rank=same;").unwrap();
        for i in level {
            write!(out, " n{i};").unwrap();
        }
        writeln!(out, " }}").unwrap();
    }
    for &(a, b) in poset.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
