//! Size caps for lattice materialization and exhaustive checks.

/// Runtime caps. `Limits::default()` honors the `OILLAB_MAX_ELEMENTS`
/// environment variable for `max_elements`; everything else has fixed
/// defaults that the caller can override field by field.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Cap on elements of any materialized lattice. The default admits the
    /// largest family lattices the workspace targets out of the box
    /// (Catalan at semilength 14).
    pub max_elements: usize,
    /// Cap on elements of lattices with dense quadratic meet/join tables.
    pub dense_cap: usize,
    /// Cap on lower ideals enumerated by `birkhoff`.
    pub max_ideals: usize,
    /// Largest lattice for which the distributivity triple check runs
    /// exhaustively; above this the check samples triples.
    pub full_triple_cap: usize,
    /// Largest vector lattice for which meet/join closure is verified over
    /// all pairs; above this closure is verified on sampled pairs.
    pub full_pair_cap: usize,
    /// Number of sampled triples/pairs used above the exhaustive caps.
    pub samples: usize,
}

pub const DEFAULT_MAX_ELEMENTS: usize = 3_000_000;
pub const DEFAULT_DENSE_CAP: usize = 5000;

impl Default for Limits {
    fn default() -> Self {
        let max_elements = std::env::var("OILLAB_MAX_ELEMENTS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_ELEMENTS);
        Limits {
            max_elements,
            dense_cap: DEFAULT_DENSE_CAP.min(max_elements),
            max_ideals: 1_000_000,
            full_triple_cap: 5000,
            full_pair_cap: 2000,
            samples: 1_000_000,
        }
    }
}

impl Limits {
    /// Defaults with a specific element cap, ignoring the environment.
    pub fn with_max_elements(max_elements: usize) -> Self {
        Limits {
            max_elements,
            dense_cap: DEFAULT_DENSE_CAP.min(max_elements),
            ..Limits::default()
        }
    }

    /// Unbounded materialization; exhaustive checks still fall back to
    /// sampling above the usual caps. Intended for counting-heavy paths.
    pub fn unbounded() -> Self {
        Limits {
            max_elements: usize::MAX,
            dense_cap: DEFAULT_DENSE_CAP,
            max_ideals: usize::MAX,
            ..Limits::default()
        }
    }
}

/// Seed for every deterministic sampling fallback in this workspace.
/// Fixed so that repeated runs see identical verdicts.
pub const SAMPLE_SEED: u64 = 0x0111_ab5e_ed00_0001;
