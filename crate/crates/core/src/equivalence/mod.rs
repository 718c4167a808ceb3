//! Equivalence classes under adjacent swaps, their canonical forms, sizes and counts.

mod counting;
mod orbit;
mod segments;

pub use counting::{
    count_classes_brute, count_orbits, count_singletons, f_inclusion_exclusion, f_j_count,
    f_j_formula, f_sequence_formula, f_series, singleton_series, CountMethod,
};
pub use orbit::{
    class_of, classes_of_sn, multiset_class_partition, partition, salient_representative,
    EquivalenceClass, Relation,
};
pub use segments::{class_size, segment_decomposition, SegmentDecomposition};
