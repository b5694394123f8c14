//! Set partitions through restricted growth words.
//!
//! A word t_1..t_n with t_1 = 1 and each entry at most one past the running
//! maximum encodes a partition of {1..n} into blocks: t_i names the block of
//! i. Splitting a word into its first-occurrence positions F and the leftover
//! entries R gives two handles that move in opposite directions, and ordering
//! words by F >= and R <= componentwise makes RGF(n, k) a distributive
//! lattice. The noncrossing words (no i..j..i..j interleaving) do the same
//! with the sorted leftover multiset M in place of R, once a greedy scan
//! shows (F, M) determines the word.
//!
//! Both lattices carry order ideal certificates: a lower copy and an upper
//! copy of the one-size-down family whose intersection is the family two
//! sizes down, giving log-concavity of the Stirling set numbers S(n, k) and
//! of the Narayana numbers N(n, k) along n.

pub mod fm;
pub mod lattice;
pub mod rgf;

pub use fm::{feasible_fm, reconstruct_nc};
pub use lattice::{
    narayana_certificate, narayana_number, rgf_combine, rgf_lattice, stirling2_certificate,
    stirling2_number, CombineMode,
};
pub use rgf::{decompose, enumerate_rgfs, recompose, FRDecomp, SetPartition, RGF};
