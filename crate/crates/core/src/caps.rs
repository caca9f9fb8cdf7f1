//! Search caps and enumeration budgets.
//!
//! All exhaustive searches are bounded. Exceeding a bound is an error, not
//! a heuristic fallback, so results are either exact or absent.

/// Caps for exhaustive searches and budgets for lattice enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximal number of endomorphisms enumerated when searching End(M)
    /// for idempotents or non-invertible elements.
    pub end_enum_cap: u64,
    /// Maximal number of homomorphisms enumerated when searching Hom(M,N)
    /// for invertible or injective elements.
    pub hom_enum_cap: u64,
    /// Budget for subrepresentation enumeration, measured in candidate
    /// tuples (per-vertex subspace choices) inspected.
    pub subrep_budget: u64,
    /// Budget for exhaustive matrix-tuple classification, per dimension
    /// vector.
    pub matrix_enum_budget: u64,
    /// Number of random trials before the isomorphism search falls back to
    /// an exhaustive sweep or reports itself undecided.
    pub iso_trials: u32,
    /// Seed for the randomized isomorphism fallback, fixed for
    /// reproducibility.
    pub iso_seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            end_enum_cap: 1_000_000,
            hom_enum_cap: 1_000_000,
            subrep_budget: 10_000_000,
            matrix_enum_budget: 10_000_000,
            iso_trials: 256,
            iso_seed: 0x5eed_c0de,
        }
    }
}

impl Caps {
    pub fn with_subrep_budget(mut self, budget: u64) -> Self {
        self.subrep_budget = budget;
        self
    }

    pub fn with_iso_seed(mut self, seed: u64) -> Self {
        self.iso_seed = seed;
        self
    }
}
