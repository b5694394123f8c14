//! Order ideal handles and classification.

use crate::bits::IndexSet;
use crate::lattice::LatticeOps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Lower,
    Upper,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Lower => "lower",
            IdealKind::Upper => "upper",
        }
    }
}

/// A subset of lattice elements tagged with the ideal kind it claims to be.
/// Claims are re-verified by the checks that consume handles.
#[derive(Clone)]
pub struct IdealHandle {
    pub kind: IdealKind,
    pub members: IndexSet,
}

impl IdealHandle {
    pub fn new(kind: IdealKind, members: IndexSet) -> Self {
        IdealHandle { kind, members }
    }

    pub fn from_pred(lat: &impl LatticeOps, kind: IdealKind, pred: impl FnMut(usize) -> bool) -> Self {
        IdealHandle { kind, members: IndexSet::from_pred(lat.len(), pred) }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealClass {
    Lower,
    Upper,
    Both,
    Neither,
}

/// Classify a subset of a lattice. `Both` occurs only for the empty set and
/// the full lattice, since lattices are connected.
pub fn classify_ideal(lat: &impl LatticeOps, members: &IndexSet) -> IdealClass {
    let lower = lat.lower_set_violation(members).is_none();
    let upper = lat.upper_set_violation(members).is_none();
    match (lower, upper) {
        (true, true) => IdealClass::Both,
        (true, false) => IdealClass::Lower,
        (false, true) => IdealClass::Upper,
        (false, false) => IdealClass::Neither,
    }
}
