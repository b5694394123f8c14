use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("cover relation mentions element {0}, but there are only {1} elements")]
    CoverOutOfRange(usize, usize),

    #[error("duplicate cover {0} -> {1}")]
    DuplicateCover(String, String),

    #[error("cover relations contain a cycle: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("{0} is not contained in {1}")]
    NotComparable(String, String),

    #[error("parts of {0} must be strictly decreasing")]
    NotStrict(String),

    #[error("sequence must start positive, got ({0}, {1})")]
    NotPositive(i64, i64),

    #[error("pair ({0}, {1}) is not well-indexed: need 0 < 2*{0} <= {1}")]
    NotWellIndexed(i64, i64),

    #[error("{what}: got {have}, recursion gives {want}")]
    CountMismatch { what: String, have: String, want: String },

    #[error("sequence {name:?} has {have} terms, need at least {min}")]
    TooShort { name: String, have: usize, min: usize },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("{what} disagrees at index {index}: expected {expected}, got {actual}")]
    Mismatch { what: String, index: usize, expected: String, actual: String },

    #[error("{what} needs n >= {min}, got {have}")]
    TooSmall { what: &'static str, have: usize, min: usize },

    #[error("entry {0} at position {1} is out of range")]
    OutOfBounds(String, usize),

    #[error("word {0} is not a permutation of 1..n")]
    NotAPermutation(String),

    #[error("cannot parse pattern {0:?}: {1}")]
    BadPattern(String, &'static str),

    #[error("peak set {{{set}}} is not admissible: {why}")]
    NotAdmissible { set: String, why: &'static str },

    #[error("{what}: {count} is not divisible by {divisor}")]
    DivisibilityFailed { what: &'static str, count: String, divisor: String },

    #[error("not a restricted growth word: position {position} holds {value}, but 1 + max of the prefix is {cap}")]
    InvalidRGF { position: usize, value: usize, cap: usize },

    #[error("not a partition in standard form: {0}")]
    NotStandardForm(String),

    #[error("no word has first occurrences {firsts} and filler multiset {multiset}")]
    Infeasible { firsts: String, multiset: String },

    #[error("not a lattice: {x} and {y} have no unique {op}")]
    NotALattice { x: String, y: String, op: &'static str },

    #[error("empty ground set")]
    Empty,

    #[error("size limit exceeded while {what}: {have} > {cap} (raise OILLAB_MAX_ELEMENTS or the relevant cap)")]
    SizeLimitExceeded { what: &'static str, have: usize, cap: usize },

    #[error("member set sized for {have} elements, lattice has {want}")]
    MemberSetMismatch { have: usize, want: usize },

    #[error("function table has {have} entries, lattice has {want} elements")]
    FnLenMismatch { have: usize, want: usize },

    #[error("set of vectors is not meet/join closed: {op} of {x} and {y} is missing")]
    ClosureViolated { op: &'static str, x: String, y: String },

    #[error("vector elements must share one dimension: got {0} and {1}")]
    DimMismatch(usize, usize),

    #[error("duplicate vector element {0}")]
    DuplicateElement(String),

    #[error("lattice is not distributive: witness ({x}, {y}, {z})")]
    NotDistributive { x: String, y: String, z: String },

    #[error("subset is not a {kind} ideal: {member} is in the set but {witness} shows closure fails")]
    NotAnIdeal { kind: &'static str, member: String, witness: String },

    #[error("weight must be nonnegative: mu({0}) < 0")]
    NegativeWeight(String),

    #[error("weights are not log-supermodular: witness ({x}, {y})")]
    NotLogSupermodular { x: String, y: String },

    #[error("function is neither increasing nor decreasing: witness pair ({x}, {y})")]
    NotMonotone { x: String, y: String },

    #[error("rank function is not modular: witness ({x}, {y})")]
    NotModular { x: String, y: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
