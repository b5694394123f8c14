//! Lattices of restricted growth words and the certificates they carry.
//!
//! Order RGF(n, k) by F(x) >= F(y) and R(x) <= R(y) componentwise, and the
//! noncrossing family NC(n, k) by F(x) >= F(y) and M(x) <= M(y) with both
//! multisets written in weakly increasing order. Encoding a word as the
//! vector (-f_1..-f_k, r_1..) or (-f_1..-f_k, m_1..) turns either order into
//! the plain componentwise order on vectors, so pointwise min and max are
//! exactly the pair constructions (max F, min R) and (min F, max R), and the
//! closure check behind `VectorLattice` is the proof that those land back in
//! the family.
//!
//! One wrinkle worth flagging: hand drawings of RGF(4, 2) tend to omit some
//! relations the componentwise definition implies, e.g. 1121 < 1211 (their
//! F parts are (1,3) and (1,2) with equal R), and 1122 < 1212. The code
//! follows the definition; the drawn diagrams are not the source of truth.

use crate::fm::reconstruct_nc;
use crate::rgf::{decompose, enumerate_rgfs, recompose, RGF};
use num::bigint::BigUint;
use num::traits::{One, Zero};
use oillab_core::{
    oil_check, Certificate, CoreError, IdealHandle, IdealKind, Limits, OilOptions, Result,
    VectorLattice,
};

/// Partitions of an n-set into k blocks, by the one-row recurrence.
pub fn stirling2_number(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] = S(m, j) for the current m
    let mut row = vec![BigUint::zero(); k + 1];
    if k == 0 {
        if n == 0 {
            row[0] = BigUint::one();
        }
        return row[0].clone();
    }
    row[0] = BigUint::one();
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            let carried = std::mem::take(&mut row[j]);
            row[j] = row[j - 1].clone() + carried * BigUint::from(j);
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Noncrossing partitions of an n-set into k blocks: C(n, k-1) C(n, k) / n.
pub fn narayana_number(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    binom(n, k - 1) * binom(n, k) / BigUint::from(n)
}

fn guard(what: &str, have: usize, want: &BigUint) -> Result<()> {
    if BigUint::from(have) != *want {
        return Err(CoreError::CountMismatch {
            what: what.to_string(),
            have: have.to_string(),
            want: want.to_string(),
        });
    }
    Ok(())
}

fn check_shape(n: usize, k: usize) -> Result<()> {
    if k < 1 {
        return Err(CoreError::TooSmall { what: "block count", have: k, min: 1 });
    }
    if n < k {
        return Err(CoreError::TooSmall { what: "ground set for k blocks", have: n, min: k });
    }
    Ok(())
}

fn family_vector(d: &crate::rgf::FRDecomp, noncrossing: bool) -> Vec<i32> {
    let tail = if noncrossing { &d.multiset } else { &d.rest };
    d.firsts
        .iter()
        .map(|&f| -(f as i32))
        .chain(tail.iter().map(|&v| v as i32))
        .collect()
}

/// Materialize RGF(n, k), or NC(n, k) when `noncrossing` is set, as a vector
/// lattice in lexicographic word order. Element counts are guarded against
/// the closed counts, and the closure check doubles as the proof that the
/// pair constructions stay inside the family.
pub fn rgf_lattice(n: usize, k: usize, noncrossing: bool, limits: &Limits) -> Result<VectorLattice> {
    check_shape(n, k)?;
    let expected = if noncrossing { narayana_number(n, k) } else { stirling2_number(n, k) };
    if expected > BigUint::from(limits.max_elements) {
        return Err(CoreError::SizeLimitExceeded {
            what: "materializing a growth word lattice",
            have: usize::try_from(&expected).unwrap_or(usize::MAX),
            cap: limits.max_elements,
        });
    }
    let words = enumerate_rgfs(n, k, noncrossing);
    let what = if noncrossing { "noncrossing family size" } else { "growth word family size" };
    guard(what, words.len(), &expected)?;
    let mut elems = Vec::with_capacity(words.len());
    let mut labels = Vec::with_capacity(words.len());
    for w in &words {
        elems.push(family_vector(&decompose(w), noncrossing));
        labels.push(w.to_string());
    }
    VectorLattice::new(n, elems, labels, limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Meet,
    Join,
}

/// Meet or join of two words of the same family, straight from the pair
/// construction: meets take (max F, min R), joins (min F, max R), with the
/// sorted multiset in place of R and a greedy rebuild on the noncrossing
/// side.
pub fn rgf_combine(rho: &RGF, sigma: &RGF, mode: CombineMode, noncrossing: bool) -> Result<RGF> {
    if rho.len() != sigma.len() {
        return Err(CoreError::DimMismatch(rho.len(), sigma.len()));
    }
    if rho.k() != sigma.k() {
        return Err(CoreError::DimMismatch(rho.k(), sigma.k()));
    }
    if noncrossing {
        for w in [rho, sigma] {
            if !w.is_noncrossing() {
                return Err(CoreError::NotComparable(w.to_string(), "the noncrossing family".to_string()));
            }
        }
    }
    let a = decompose(rho);
    let b = decompose(sigma);
    // the F part moves against the tail: meets push firsts late, joins early
    let (firsts, late): (Vec<usize>, bool) = match mode {
        CombineMode::Meet => (a.firsts.iter().zip(&b.firsts).map(|(&x, &y)| x.max(y)).collect(), false),
        CombineMode::Join => (a.firsts.iter().zip(&b.firsts).map(|(&x, &y)| x.min(y)).collect(), true),
    };
    let pick = |x: usize, y: usize| if late { x.max(y) } else { x.min(y) };
    if noncrossing {
        let m: Vec<usize> = a.multiset.iter().zip(&b.multiset).map(|(&x, &y)| pick(x, y)).collect();
        reconstruct_nc(&firsts, &m)
    } else {
        let r: Vec<usize> = a.rest.iter().zip(&b.rest).map(|(&x, &y)| pick(x, y)).collect();
        recompose(&firsts, &r)
    }
}

/// S(n,k)^2 >= S(n-1,k) S(n+1,k) as an order ideal inequality on RGF(n+1, k):
/// I keeps the words starting 11 (a lower copy of RGF(n, k), drop position 2)
/// and J the words whose final entry is k but not a debut (an upper copy,
/// drop the last position).
pub fn stirling2_certificate(n: usize, k: usize, limits: &Limits) -> Result<Certificate> {
    if n < 2 {
        return Err(CoreError::TooSmall { what: "subset count certificate", have: n, min: 2 });
    }
    check_shape(n, k)?;
    let lat = rgf_lattice(n + 1, k, false, limits)?;
    // starts 11 <=> f_2 >= 3; the one-block family starts 11 throughout
    let fam_i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| k == 1 || v[1] <= -3));
    // a non-debut final k <=> the rest part ends with k
    let fam_j = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| v[n] == k as i32));
    guard("subset count family |I|", fam_i.size(), &stirling2_number(n, k))?;
    guard("subset count family |J|", fam_j.size(), &stirling2_number(n, k))?;
    let both = fam_i.members.intersection(&fam_j.members).len();
    guard("subset count family |I and J|", both, &stirling2_number(n - 1, k))?;
    let opts = OilOptions {
        assert_distributive: false,
        lattice_name: format!("growth words RGF({}, {})", n + 1, k),
        family_params: vec![("n".to_string(), n.to_string()), ("k".to_string(), k.to_string())],
    };
    oil_check(&lat, &fam_i, &fam_j, &opts, limits)
}

/// N(n,k)^2 >= N(n-1,k) N(n+1,k) on the noncrossing family NC(n+1, k), with
/// the same lower copy I and the upper copy J = {at least one filler k}.
pub fn narayana_certificate(n: usize, k: usize, limits: &Limits) -> Result<Certificate> {
    if n < 2 {
        return Err(CoreError::TooSmall { what: "noncrossing count certificate", have: n, min: 2 });
    }
    check_shape(n, k)?;
    let lat = rgf_lattice(n + 1, k, true, limits)?;
    let fam_i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| k == 1 || v[1] <= -3));
    // m_k >= 1 <=> the sorted filler ends with k
    let fam_j = IdealHandle::new(IdealKind::Upper, lat.select(|_, v| v[n] == k as i32));
    guard("noncrossing family |I|", fam_i.size(), &narayana_number(n, k))?;
    guard("noncrossing family |J|", fam_j.size(), &narayana_number(n, k))?;
    let both = fam_i.members.intersection(&fam_j.members).len();
    guard("noncrossing family |I and J|", both, &narayana_number(n - 1, k))?;
    let opts = OilOptions {
        assert_distributive: false,
        lattice_name: format!("noncrossing words NC({}, {})", n + 1, k),
        family_params: vec![("n".to_string(), n.to_string()), ("k".to_string(), k.to_string())],
    };
    oil_check(&lat, &fam_i, &fam_j, &opts, limits)
}
