//! Exact verification of correlation inequalities on finite distributive
//! lattices.
//!
//! The pieces: posets from cover relations, lattices with explicit meet and
//! join tables, vector lattices (min/max-closed sets of integer tuples, the
//! form every family in this workspace takes), Birkhoff lattices of order
//! ideals, and checkers that produce machine-readable certificates for the
//! ideal-pair inequality, its FKG generalization, and its q-analogue.
//!
//! All arithmetic on counts and weights is exact (big integers, big
//! rationals, integer polynomials).

pub mod bits;
pub mod birkhoff;
pub mod dot;
pub mod error;
pub mod fkg;
pub mod ideal;
pub mod lattice;
pub mod limits;
pub mod poset;
pub mod qpoly;
pub mod vector;
pub mod verify;

pub use bits::{BitMatrix, IndexSet};
pub use birkhoff::{birkhoff, count_ideals, enumerate_ideals};
pub use dot::hasse_dot;
pub use error::{CoreError, Result};
pub use fkg::{check_log_supermodular, check_monotone, fkg_check, FkgCertificate, FkgDirection, Monotonicity, Weight};
pub use ideal::{classify_ideal, IdealClass, IdealHandle, IdealKind};
pub use lattice::{compute_lattice, Lattice, LatticeOps};
pub use limits::{Limits, SAMPLE_SEED};
pub use poset::{poset_from_covers, poset_from_relation, Poset};
pub use qpoly::{check_modular, q_ideal_sum, q_oil_check, QCertificate, QPoly};
pub use vector::{ClosureEvidence, VectorLattice};
pub use verify::{
    check_distributive, check_lattice_axioms, oil_check, AxiomReport, Certificate, CheckedHow, Direction,
    DistributivityEvidence, DistributivityVerdict, OilOptions, Verdict,
};
