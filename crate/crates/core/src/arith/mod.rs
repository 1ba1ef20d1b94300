//! Exact integer computations: r₂(n), its summatory function and Δ(x).

mod lattice;
mod r2;
mod sieve;

pub use lattice::{
    count_enumerate, count_floor_identity, count_floor_identity_direct, delta_normalized, floor_arg, sum_r2,
    sum_r2_from_table, sum_r2_with, LatticeRecord, SumMethod, MAX_X,
};
pub(crate) use r2::chi4;
pub use r2::{r2_divisor, r2_enumerate, r2_residue};
pub(crate) use sieve::fill_segment;
pub use sieve::{r2_sieve, r2_sieve_with, R2Table, SieveConfig};
