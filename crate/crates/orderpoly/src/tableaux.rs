//! Semistandard tableaux as P-partitions of a cell poset.
//!
//! The cells of a partition shape, ordered componentwise and labeled along
//! the bottom row first, turn row-weak column-strict fillings into exactly
//! the P-partitions of the cell poset. Shifted shapes play the same role
//! for the enriched variant. The counting here enumerates fillings
//! directly, cell by cell, so it is an independent oracle for the order
//! polynomial machinery.

use crate::LabeledPoset;
use num::{BigInt, BigUint};
use oillab_core::{CoreError, QPoly, Result};
use oillab_young::Partition;
use std::collections::HashMap;

fn positive_parts(lam: &Partition) -> Vec<usize> {
    lam.parts().iter().take_while(|&&x| x > 0).map(|&x| x as usize).collect()
}

/// First column (1-based) of row i in the diagram.
fn row_start(i: usize, shifted: bool) -> usize {
    if shifted {
        i
    } else {
        1
    }
}

/// Cell poset of a shape: (i, j) lies below (i', j') when i <= i' and
/// j <= j'. Labels run along the last row first, left to right, then row by
/// row upward, which makes row covers weak and column covers strict.
/// Shifted shapes use their shifted cells and require strict parts.
pub fn shape_poset(lam: &Partition, shifted: bool) -> Result<LabeledPoset> {
    let parts = positive_parts(lam);
    if shifted {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(CoreError::NotStrict(lam.to_string()));
            }
        }
    }
    let k = parts.len();
    let mut label_of = HashMap::new();
    let mut next = 1usize;
    for i in (1..=k).rev() {
        let s = row_start(i, shifted);
        for j in s..s + parts[i - 1] {
            label_of.insert((i, j), next);
            next += 1;
        }
    }
    let mut covers = Vec::new();
    for i in 1..=k {
        let s = row_start(i, shifted);
        for j in s..s + parts[i - 1] {
            let me = label_of[&(i, j)];
            if let Some(&right) = label_of.get(&(i, j + 1)) {
                covers.push((me, right));
            }
            if let Some(&down) = label_of.get(&(i + 1, j)) {
                covers.push((me, down));
            }
        }
    }
    LabeledPoset::new(next - 1, &covers)
}

struct Fill {
    cells: Vec<(usize, usize)>,
    pos_of: HashMap<(usize, usize), usize>,
    shifted: bool,
    hi: i32,
    vals: Vec<i32>,
    count: u128,
    /// fillings bucketed by entry sum, present only for the q-polynomial
    by_sum: Option<Vec<u128>>,
}

impl Fill {
    /// Values are positions in the entry order: the entry itself for plain
    /// shapes, the alternating-order position (barred through even) for
    /// shifted ones.
    fn go(&mut self, c: usize, sum: usize) {
        if c == self.cells.len() {
            self.count += 1;
            if let Some(buckets) = &mut self.by_sum {
                buckets[sum] += 1;
            }
            return;
        }
        let (i, j) = self.cells[c];
        let mut lo = if self.shifted { 0 } else { 1 };
        if let Some(&left) = self.pos_of.get(&(i, j - 1)) {
            let u = self.vals[left];
            // rows repeat only unbarred entries when shifted, any when plain
            lo = lo.max(if self.shifted { u + i32::from(u % 2 == 0) } else { u });
        }
        if let Some(&up) = self.pos_of.get(&(i.wrapping_sub(1), j)) {
            let u = self.vals[up];
            // columns repeat only barred entries when shifted, none when plain
            lo = lo.max(if self.shifted { u + i32::from(u % 2 == 1) } else { u + 1 });
        }
        for t in lo..=self.hi {
            self.vals[c] = t;
            let entry = if self.shifted { t as usize / 2 + 1 } else { t as usize };
            self.go(c + 1, sum + entry);
        }
    }
}

fn fill_shape(lam: &Partition, n: usize, shifted: bool, want_sums: bool) -> Result<Fill> {
    let parts = positive_parts(lam);
    if shifted {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(CoreError::NotStrict(lam.to_string()));
            }
        }
    }
    let mut cells = Vec::new();
    let mut pos_of = HashMap::new();
    for i in 1..=parts.len() {
        let s = row_start(i, shifted);
        for j in s..s + parts[i - 1] {
            pos_of.insert((i, j), cells.len());
            cells.push((i, j));
        }
    }
    let mut fill = Fill {
        vals: vec![0; cells.len()],
        hi: if shifted { 2 * n as i32 - 1 } else { n as i32 },
        by_sum: want_sums.then(|| vec![0u128; n * cells.len() + 1]),
        cells,
        pos_of,
        shifted,
        count: 0,
    };
    fill.go(0, 0);
    Ok(fill)
}

/// Number of semistandard fillings of the shape with entries at most n:
/// rows weakly increase and columns strictly increase. Shifted shapes range
/// over the 2n signed entries with at most one barred m per row and at most
/// one unbarred m per column.
pub fn schur_value(lam: &Partition, n: usize, shifted: bool) -> Result<BigUint> {
    Ok(BigUint::from(fill_shape(lam, n, shifted, false)?.count))
}

/// Generating polynomial over plain fillings with entries at most n, one
/// monomial q^(sum of entries) per filling.
pub fn schur_q_poly(lam: &Partition, n: usize) -> QPoly {
    let fill = fill_shape(lam, n, false, true).expect("plain shapes never fail");
    let coeffs: Vec<BigInt> = fill
        .by_sum
        .expect("sums requested")
        .into_iter()
        .map(BigInt::from)
        .collect();
    QPoly::from_coeffs(coeffs)
}
