//! Graded posets and their flag vectors, ideal lattices of natural posets,
//! the two-wide distributive lattices `L(gamma)`, stretching and
//! proliferation, and the multiplicity-free enumerations.

mod bits;
mod canon;
mod enumerate;
mod export;
mod flag;
mod gamma;
mod graded;
mod ideals;
mod natural;
mod ops;

pub use canon::{are_isomorphic, Canonical, CanonicalForm};
pub use enumerate::{
    all_bounded_graded_posets, all_posets, block_posets, count_distributive_mf,
    distributive_mf_posets, g_blocks, generate_mf_posets, mf_posets_by_levels, natural_posets,
    MfBound, MAX_LABELED, MAX_UNLABELED,
};
pub use export::to_dot;
pub use flag::{
    alpha, beta, beta_by_descents, flag_vector, is_multiplicity_free, FlagVector, MAX_FLAG_RANK,
};
pub use gamma::{
    beta_by_recurrence, join_irreducible_poset, lattice_from_gamma, q_from_gamma, GammaWord,
};
pub use graded::GradedPoset;
pub use ideals::{extension_count, ideal_counts, ideals_lattice, linear_extensions};
pub use natural::{q_from_commuting_word, trace_poset, NaturalPoset, MAX_NATURAL};
pub use ops::{
    graded_ordinal_sum, proliferate, random_graded_poset, stretch, stretch_reduce, truncate_above,
    truncate_below,
};
