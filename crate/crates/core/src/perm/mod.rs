//! Words, descent sets, salience and the two adjacent-swap move relations.

mod moves;
pub(crate) mod rankset;
mod word;

pub(crate) use moves::is_salient_unchecked;
pub use moves::{consecutive_moves, descent_set, geq_j_moves, is_salient, sparse_subsets};
pub use rankset::RankSet;
pub use word::{multiset_words, next_permutation, permutations, Arrangements, MultisetSpec, Word};
