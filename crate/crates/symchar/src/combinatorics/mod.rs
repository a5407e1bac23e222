//! Enumeration and canonical forms: partitions, multisets, multiset and set
//! partitions, border strips, multiset/set-valued tableaux, and row fillings
//! of Young diagrams.
//!
//! Everything here is a pure function over immutable values; all enumerations
//! return complete, duplicate-free lists in a deterministic order.

pub mod border_strip;
pub mod fillings;
pub mod multiset;
pub mod partition;
pub mod tableaux;

pub use border_strip::{added_border_strips, border_strips, stable_border_strips, BorderStripCertificate};
pub use fillings::{count_row_fillings, row_fillings, signed_row_filling_sum, signed_row_fillings, RowFilling};
pub use multiset::{
    multiplicity_partition, multiset_partitions, parity_multiplicities, set_partitions_of_multiset, Multiset,
    MultisetPartition, SetPartitionOfMultiset,
};
pub use partition::{partitions_of, partitions_up_to, z, Partition};
pub use tableaux::{enumerate_e_tableaux, enumerate_h_tableaux, SkewTableau};
