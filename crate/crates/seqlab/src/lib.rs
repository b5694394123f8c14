//! Sequence registry and exact concavity analysis.
//!
//! Families elsewhere in the workspace produce integer sequences three ways:
//! counting ideals of a materialized lattice, evaluating a closed form, or
//! brute-force enumeration. This crate records them side by side, renders
//! per-index log-concavity and log-convexity verdicts in exact arithmetic,
//! scans the two open-ended conjectures (length-4 pattern avoidance and the
//! first-kind Stirling columns), and cross-checks that the different
//! provenances agree wherever they overlap.

pub mod forms;
pub mod record;
pub mod scan;

pub use forms::{asm_number, binomial, catalan_number, closed_form, parking_count};
pub use record::{analyze, IndexVerdict, PropertyReport, Provenance, SequenceRecord};
pub use scan::{
    conjecture_av4, conjecture_stirling1, cross_check, Av4Report, Av4Row, CrossCheckReport,
    Stirling1Scan,
};
