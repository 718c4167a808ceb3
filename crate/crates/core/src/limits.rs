//! Size guards for the brute-force and enumeration routines.

use serde::{Deserialize, Serialize};

/// Configurable guards. Exceeding one is reported as [`crate::Error::Guard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of members a single orbit may reach during BFS.
    pub orbit_cap: usize,
    /// Largest `n` for brute-force class counting over `S_n`.
    pub brute_n: usize,
    /// Largest `n` for brute-force singleton counting.
    pub singleton_n: usize,
    /// Largest multiset size for orbit partitioning.
    pub multiset_total: usize,
    /// Largest multiset size for the Cartier-Foata coefficient route.
    pub cf_total: usize,
    /// Bound on `m * k` for connected-graph weights.
    pub umbral_mk: usize,
    /// Largest truncation order for the umbral pipeline.
    pub umbral_order: usize,
    /// Largest ground set for materialised linear extensions.
    pub extensions_n: usize,
    /// Largest ground set for extension counting by ideals.
    pub extension_count_n: usize,
    /// Maximum number of order ideals.
    pub ideal_cap: usize,
    /// Maximum poset size for isomorphism testing.
    pub iso_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_cap: 10_000_000,
            brute_n: 8,
            singleton_n: 9,
            multiset_total: 10,
            cf_total: 24,
            umbral_mk: 200,
            umbral_order: 40,
            extensions_n: 12,
            extension_count_n: 20,
            ideal_cap: 1 << 20,
            iso_n: 24,
        }
    }
}

impl Limits {
    /// Defaults, with the orbit cap lowered to fit `SALIENT_LIMIT_MB` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(mb) = std::env::var("SALIENT_LIMIT_MB")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.orbit_cap = limits.orbit_cap.min(orbit_cap_for_megabytes(mb));
        }
        limits
    }

    pub fn unbounded() -> Self {
        Limits {
            orbit_cap: usize::MAX,
            brute_n: usize::MAX,
            singleton_n: usize::MAX,
            multiset_total: usize::MAX,
            cf_total: usize::MAX,
            umbral_mk: usize::MAX,
            umbral_order: usize::MAX,
            extensions_n: usize::MAX,
            extension_count_n: 32,
            ideal_cap: usize::MAX,
            iso_n: usize::MAX,
        }
    }
}

// Rough per-member cost of the visited set: a boxed word plus hash-table slot.
const BYTES_PER_MEMBER: usize = 96;

pub fn orbit_cap_for_megabytes(mb: usize) -> usize {
    (mb.saturating_mul(1 << 20) / BYTES_PER_MEMBER).max(1)
}
