//! Permutation statistics through the componentwise order on inversion
//! tables.
//!
//! The full table set is a product of chains, so it is a distributive
//! lattice for free; descent classes and 213-avoiders are min/max-closed
//! subsets of it and inherit certificates for the products
//! d_n(S)^2 >= d_{n-1}(S) d_{n+1}(S), n!^2 <= (n-1)!(n+1)!, and
//! C_n^2 <= C_{n-1} C_{n+1}. Peak classes only admit a counting identity,
//! pinnacle classes get probed experimentally, and the Stirling cycle
//! columns get scanned for their log-concavity threshold.

pub mod middle;
pub mod pattern;
pub mod perm;
pub mod stirling;

pub use middle::{
    descent_class_certificate, factorial_certificate, middle_lattice, peak_polynomial_value,
    pinnacle_probe, PinnacleReport, BRUTE_CAP,
};
pub use pattern::{
    av213_certificate, avoidance_count, contains_pattern, occurrences, BivincularPattern,
};
pub use perm::{
    collect_perms, decode_table, encode_tables, for_each_perm, landmark_sets, sum_over_perms,
    InvTable, Permutation, PosInvTable, TableKind,
};
pub use stirling::{stirling1_column, stirling1_threshold, Stirling1Report};
