//! Distributivity and lattice-axiom checks, plus the order ideal inequality.

use crate::error::{CoreError, Result};
use crate::ideal::{IdealHandle, IdealKind};
use crate::lattice::LatticeOps;
use crate::limits::{Limits, SAMPLE_SEED};
use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckedHow {
    Exhaustive,
    Sampled { count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistributivityVerdict {
    Holds(CheckedHow),
    /// Witness triple (x, y, z) with x /\ (y \/ z) != (x /\ y) \/ (x /\ z),
    /// reported by label. Canonically the lexicographically least triple of
    /// indices when the check is exhaustive.
    Violated { x: String, y: String, z: String },
}

impl DistributivityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, DistributivityVerdict::Holds(_))
    }
}

fn triple_ok(lat: &impl LatticeOps, x: usize, y: usize, z: usize) -> bool {
    let lhs = lat.try_join(y, z).and_then(|yz| lat.try_meet(x, yz));
    let rhs = match (lat.try_meet(x, y), lat.try_meet(x, z)) {
        (Some(xy), Some(xz)) => lat.try_join(xy, xz),
        _ => None,
    };
    match (lhs, rhs) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

/// Exhaustive triple check up to `limits.full_triple_cap` elements, a
/// deterministic sampled check above it.
pub fn check_distributive(lat: &(impl LatticeOps + Sync), limits: &Limits) -> DistributivityVerdict {
    let n = lat.len();
    if n <= limits.full_triple_cap {
        let witness = (0..n)
            .into_par_iter()
            .find_map_first(|x| {
                for y in 0..n {
                    for z in y..n {
                        // the law is symmetric in y and z
                        if !triple_ok(lat, x, y, z) {
                            return Some((x, y, z));
                        }
                    }
                }
                None
            });
        match witness {
            None => DistributivityVerdict::Holds(CheckedHow::Exhaustive),
            Some((x, y, z)) => DistributivityVerdict::Violated {
                x: lat.label(x),
                y: lat.label(y),
                z: lat.label(z),
            },
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..limits.samples {
            let x = rng.gen_range(0..n);
            let y = rng.gen_range(0..n);
            let z = rng.gen_range(0..n);
            if !triple_ok(lat, x, y, z) {
                return DistributivityVerdict::Violated {
                    x: lat.label(x),
                    y: lat.label(y),
                    z: lat.label(z),
                };
            }
        }
        DistributivityVerdict::Holds(CheckedHow::Sampled { count: limits.samples })
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub pair_axioms: CheckedHow,
    pub associativity: CheckedHow,
    pub violation: Option<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Idempotence, commutativity, absorption (pair laws) and associativity
/// (triple law) for both operations. Pair laws run exhaustively up to
/// `full_pair_cap`, associativity up to `full_triple_cap`; both sample above.
pub fn check_lattice_axioms(lat: &(impl LatticeOps + Sync), limits: &Limits) -> AxiomReport {
    let n = lat.len();
    let pair = |a: usize, b: usize| -> Option<String> {
        let m = lat.try_meet(a, b);
        let j = lat.try_join(a, b);
        let (m, j) = match (m, j) {
            (Some(m), Some(j)) => (m, j),
            _ => return Some(format!("meet/join of {} and {} undefined", lat.label(a), lat.label(b))),
        };
        if a == b && (m != a || j != a) {
            return Some(format!("idempotence fails at {}", lat.label(a)));
        }
        if lat.try_meet(b, a) != Some(m) || lat.try_join(b, a) != Some(j) {
            return Some(format!("commutativity fails at ({}, {})", lat.label(a), lat.label(b)));
        }
        // absorption: a /\ (a \/ b) = a and a \/ (a /\ b) = a
        if lat.try_meet(a, j) != Some(a) || lat.try_join(a, m) != Some(a) {
            return Some(format!("absorption fails at ({}, {})", lat.label(a), lat.label(b)));
        }
        // consistency with the order
        if (lat.leq(a, b) && m != a) || (m == a && !lat.leq(a, b)) {
            return Some(format!("meet disagrees with leq at ({}, {})", lat.label(a), lat.label(b)));
        }
        None
    };
    let triple = |x: usize, y: usize, z: usize| -> Option<String> {
        let assoc_meet = lat.try_meet(x, y).and_then(|m| lat.try_meet(m, z))
            == lat.try_meet(y, z).and_then(|m| lat.try_meet(x, m));
        let assoc_join = lat.try_join(x, y).and_then(|m| lat.try_join(m, z))
            == lat.try_join(y, z).and_then(|m| lat.try_join(x, m));
        if !assoc_meet || !assoc_join {
            Some(format!(
                "associativity fails at ({}, {}, {})",
                lat.label(x),
                lat.label(y),
                lat.label(z)
            ))
        } else {
            None
        }
    };

    let mut violation = None;
    let pair_axioms = if n <= limits.full_pair_cap {
        violation = (0..n)
            .into_par_iter()
            .find_map_first(|a| (a..n).find_map(|b| pair(a, b)));
        CheckedHow::Exhaustive
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..limits.samples {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if let Some(v) = pair(a, b) {
                violation = Some(v);
                break;
            }
        }
        CheckedHow::Sampled { count: limits.samples }
    };
    if violation.is_some() {
        return AxiomReport { pair_axioms, associativity: CheckedHow::Sampled { count: 0 }, violation };
    }

    let associativity = if n <= limits.full_triple_cap {
        violation = (0..n)
            .into_par_iter()
            .find_map_first(|x| {
                for y in x..n {
                    for z in y..n {
                        if let Some(v) = triple(x, y, z) {
                            return Some(v);
                        }
                    }
                }
                None
            });
        CheckedHow::Exhaustive
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 1);
        for _ in 0..limits.samples {
            let x = rng.gen_range(0..n);
            let y = rng.gen_range(0..n);
            let z = rng.gen_range(0..n);
            if let Some(v) = triple(x, y, z) {
                violation = Some(v);
                break;
            }
        }
        CheckedHow::Sampled { count: limits.samples }
    };
    AxiomReport { pair_axioms, associativity, violation }
}

/// How the distributivity precondition of a certificate was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistributivityEvidence {
    CheckedExhaustive,
    CheckedSampled(usize),
    /// Vector lattice with fully verified min/max closure.
    ByConstruction,
    /// Caller vouched for it (documented at the call site).
    Asserted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// |I| |J| <= |I /\ J| |L| (both ideals of the same kind)
    ProductLeq,
    /// |I| |J| >= |I /\ J| |L| (one lower, one upper)
    ProductGeq,
}

impl Direction {
    pub fn from_kinds(i: IdealKind, j: IdealKind) -> Direction {
        if i == j {
            Direction::ProductLeq
        } else {
            Direction::ProductGeq
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Direction::ProductLeq => "<=",
            Direction::ProductGeq => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub lattice: String,
    pub family_params: Vec<(String, String)>,
    pub i_kind: IdealKind,
    pub i_size: BigUint,
    pub j_kind: IdealKind,
    pub j_size: BigUint,
    pub intersection_size: BigUint,
    pub lattice_size: BigUint,
    /// |I| |J| and |I /\ J| |L|
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub direction: Direction,
    pub verdict: Verdict,
    pub distributivity: DistributivityEvidence,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

#[derive(Clone, Debug, Default)]
pub struct OilOptions {
    /// Caller vouches for distributivity; skips the triple check.
    pub assert_distributive: bool,
    pub lattice_name: String,
    pub family_params: Vec<(String, String)>,
}

pub(crate) fn establish_distributivity(
    lat: &(impl LatticeOps + Sync),
    assert_flag: bool,
    limits: &Limits,
) -> Result<DistributivityEvidence> {
    if lat.distributive_by_construction() {
        return Ok(DistributivityEvidence::ByConstruction);
    }
    if assert_flag {
        return Ok(DistributivityEvidence::Asserted);
    }
    match check_distributive(lat, limits) {
        DistributivityVerdict::Holds(CheckedHow::Exhaustive) => Ok(DistributivityEvidence::CheckedExhaustive),
        DistributivityVerdict::Holds(CheckedHow::Sampled { count }) => {
            Ok(DistributivityEvidence::CheckedSampled(count))
        }
        DistributivityVerdict::Violated { x, y, z } => Err(CoreError::NotDistributive { x, y, z }),
    }
}

pub(crate) fn verify_ideal(lat: &impl LatticeOps, h: &IdealHandle) -> Result<()> {
    if h.members.capacity() != lat.len() {
        return Err(CoreError::MemberSetMismatch { have: h.members.capacity(), want: lat.len() });
    }
    let witness = match h.kind {
        IdealKind::Lower => lat.lower_set_violation(&h.members),
        IdealKind::Upper => lat.upper_set_violation(&h.members),
    };
    if let Some((member, missing)) = witness {
        return Err(CoreError::NotAnIdeal {
            kind: h.kind.name(),
            member: lat.label(member),
            witness: lat.label(missing),
        });
    }
    Ok(())
}

/// The order ideal inequality on a finite distributive lattice:
/// for ideals of the same kind |I||J| <= |I /\ J||L|, for mixed kinds >=.
/// Ideal claims are always re-verified; distributivity is re-verified unless
/// the lattice is distributive by construction or the caller asserts it.
pub fn oil_check(
    lat: &(impl LatticeOps + Sync),
    i: &IdealHandle,
    j: &IdealHandle,
    opts: &OilOptions,
    limits: &Limits,
) -> Result<Certificate> {
    verify_ideal(lat, i)?;
    verify_ideal(lat, j)?;
    let distributivity = establish_distributivity(lat, opts.assert_distributive, limits)?;

    let i_size = BigUint::from(i.size());
    let j_size = BigUint::from(j.size());
    let intersection_size = BigUint::from(i.members.intersection(&j.members).len());
    let lattice_size = BigUint::from(lat.len());
    let lhs = &i_size * &j_size;
    let rhs = &intersection_size * &lattice_size;
    let direction = Direction::from_kinds(i.kind, j.kind);
    let ok = match direction {
        Direction::ProductLeq => lhs <= rhs,
        Direction::ProductGeq => lhs >= rhs,
    };
    Ok(Certificate {
        lattice: if opts.lattice_name.is_empty() { "lattice".to_string() } else { opts.lattice_name.clone() },
        family_params: opts.family_params.clone(),
        i_kind: i.kind,
        i_size,
        j_kind: j.kind,
        j_size,
        intersection_size,
        lattice_size,
        lhs,
        rhs,
        direction,
        verdict: if ok { Verdict::Holds } else { Verdict::Violated },
        distributivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::compute_lattice;
    use crate::poset::poset_from_covers;
    use crate::vector::VectorLattice;

    fn labs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn diamond_m3() -> crate::lattice::Lattice {
        let p = poset_from_covers(
            labs(&["0", "a", "b", "c", "1"]),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        compute_lattice(p, &Limits::default()).unwrap()
    }

    fn pentagon_n5() -> crate::lattice::Lattice {
        // 0 < a < c < 1 and 0 < b < 1 with a,b and c,b incomparable
        let p = poset_from_covers(
            labs(&["0", "a", "c", "b", "1"]),
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap();
        compute_lattice(p, &Limits::default()).unwrap()
    }

    #[test]
    fn m3_and_n5_fail_distributivity() {
        let limits = Limits::default();
        assert!(!check_distributive(&diamond_m3(), &limits).holds());
        assert!(!check_distributive(&pentagon_n5(), &limits).holds());
        // but both satisfy the lattice axioms
        assert!(check_lattice_axioms(&diamond_m3(), &limits).ok());
        assert!(check_lattice_axioms(&pentagon_n5(), &limits).ok());
    }

    #[test]
    fn boolean_cube_is_distributive() {
        let elems: Vec<Vec<i32>> = (0..8).map(|m| vec![m & 1, m >> 1 & 1, m >> 2 & 1]).collect();
        let names = (0..8).map(|m| format!("{m:03b}")).collect();
        let l = VectorLattice::new(3, elems, names, &Limits::default()).unwrap();
        assert!(check_distributive(&l, &Limits::default()).holds());
        assert!(check_lattice_axioms(&l, &Limits::default()).ok());
    }

    #[test]
    fn oil_on_a_grid() {
        // 3x3 grid, I = {x <= 1} lower, J = {y >= 1} upper
        let mut elems = Vec::new();
        let mut names = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                elems.push(vec![x, y]);
                names.push(format!("({x},{y})"));
            }
        }
        let l = VectorLattice::new(2, elems, names, &Limits::default()).unwrap();
        let i = IdealHandle::from_pred(&l, IdealKind::Lower, |k| l.vector(k)[0] <= 1);
        let j = IdealHandle::from_pred(&l, IdealKind::Upper, |k| l.vector(k)[1] >= 1);
        let cert = oil_check(&l, &i, &j, &OilOptions::default(), &Limits::default()).unwrap();
        assert_eq!(cert.direction, Direction::ProductGeq);
        assert_eq!(cert.i_size, BigUint::from(6u32));
        assert_eq!(cert.j_size, BigUint::from(6u32));
        assert_eq!(cert.intersection_size, BigUint::from(4u32));
        assert!(cert.holds()); // 36 >= 36
        assert_eq!(cert.distributivity, DistributivityEvidence::ByConstruction);

        // same kind: both lower
        let j2 = IdealHandle::from_pred(&l, IdealKind::Lower, |k| l.vector(k)[1] <= 1);
        let cert2 = oil_check(&l, &i, &j2, &OilOptions::default(), &Limits::default()).unwrap();
        assert_eq!(cert2.direction, Direction::ProductLeq);
        assert!(cert2.holds()); // 6*6 <= 4*9
    }

    #[test]
    fn bogus_ideal_claims_are_rejected() {
        let elems: Vec<Vec<i32>> = (0..4).map(|i| vec![i]).collect();
        let l = VectorLattice::new(1, elems, labs(&["0", "1", "2", "3"]), &Limits::default()).unwrap();
        let bad = IdealHandle::from_pred(&l, IdealKind::Lower, |k| k >= 2);
        let good = IdealHandle::from_pred(&l, IdealKind::Lower, |k| k <= 1);
        let err = oil_check(&l, &bad, &good, &OilOptions::default(), &Limits::default()).unwrap_err();
        assert!(matches!(err, CoreError::NotAnIdeal { kind: "lower", .. }));
    }

    #[test]
    fn equality_when_both_ideals_are_everything() {
        let elems: Vec<Vec<i32>> = (0..3).map(|i| vec![i]).collect();
        let l = VectorLattice::new(1, elems, labs(&["0", "1", "2"]), &Limits::default()).unwrap();
        let i = IdealHandle::from_pred(&l, IdealKind::Lower, |_| true);
        let j = IdealHandle::from_pred(&l, IdealKind::Lower, |_| true);
        let cert = oil_check(&l, &i, &j, &OilOptions::default(), &Limits::default()).unwrap();
        assert_eq!(cert.lhs, cert.rhs);
        assert!(cert.holds());
    }
}
