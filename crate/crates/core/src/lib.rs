//! M-partitions: partitions of `m` into the fewest parts such that every
//! integer `0..=m` is a sum of some of the parts.
//!
//! * [`partition`]: the canonical [`Partition`] value and linear-time checks.
//! * [`bounds`]: sharp bounds on the largest part and on truncation sums.
//! * [`generate`]: three constructions of a witness M-partition.
//! * [`enumeration`]: exhaustive enumeration and the subset-sum oracle.
//! * [`counting`]: `a_m = |Mp(m)|` by recurrence, range sums, the
//!   binary-partition sequence and its generating function.
//! * [`record`] and [`cli`]: the `mpart` command-line surface.

pub mod bounds;
pub mod cli;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod generate;
pub mod partition;
pub mod record;

pub use bounds::{
    extension_range_m1, extension_range_m12, largest_part_bounds, ExtensionRange, PartBounds,
};
pub use counting::{
    a, a_even_pairing_check, a_simple, a_upper_half_via_b, a_via_genfun, build_table, defect,
    gf_coefficients, BinarySeries, CountTable, SparseCounter,
};
pub use enumeration::{
    count_by_enumeration, enumerate, oracle_is_weak, subset_sums, EnumerationCursor,
    SumReachability,
};
pub use error::{Error, Result};
pub use generate::{generate_alg1, generate_alg2, generate_alg3};
pub use partition::{
    can_extend, is_m_partition, is_m_partition_by_power_bound, is_weak_m_partition, num_parts,
    Partition,
};
pub use record::OutputRecord;
