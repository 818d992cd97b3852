//! Exact integer matrix and lattice arithmetic.

mod hnf;
mod lattice;
pub(crate) mod matrix;
mod permutation;
mod pointed;
pub mod simplex;

pub use hnf::{hnf, hnf_form, is_hnf, rank, Hnf};
pub use lattice::{
    integer_kernel, kernel_with_torsion, lattice_intersection, row_lattice_equal, solve_integer,
    LatticeBasis,
};
pub use matrix::IntMatrix;
pub use permutation::Permutation;
pub use pointed::{is_pointed, Grading, Pointedness};
