//! Combinatorics of irreducible modular representations of symmetric
//! groups in characteristic p: p-regular partitions and their crystal
//! structure, the Mullineux involution, exact dimension lower bounds, and
//! a brute-force Specht/Gram oracle that computes the true dimensions for
//! small n so the bounds can be verified against ground truth.

pub mod bounds;
pub mod crystal;
pub mod error;
pub mod fp;
pub mod mullineux;
pub mod oracle;
pub mod partition;
pub mod verify;

pub use bounds::{best_lower_bound, AMode, BoundEntry, BoundReport, BoundTag, ExactBound};
pub use crystal::{
    a_crystal, crystal_graph, e_tilde, epsilon, f_tilde, is_js, normal_report, restriction_factors,
    CrystalGraph, NormalNodeReport,
};
pub use error::{Error, Result};
pub use fp::MatFp;
pub use mullineux::{clear_mullineux_cache, first_row_condition, mullineux};
pub use oracle::{Oracle, OracleCaps};
pub use partition::{
    p_regular_partitions_of, partitions_of, Node, NodeKind, Partition, PrimeChar, ResidueClass,
};
pub use verify::{run_verify, BoundSelector, VerifyConfig, VerifyReport};
