//! Exact integer and rational linear algebra over lattices.
//!
//! Everything downstream (local groups, fundamental groups, covers,
//! cohomology) reduces to a handful of classical lattice computations:
//! Smith normal form, row-style Hermite normal form, integer kernels,
//! saturations, and finite quotients `L/M` of full-rank sublattices.  All
//! of it is implemented over arbitrary-precision integers; derived data
//! (coset representatives, solution vectors) uses arbitrary-precision
//! rationals.

mod lattice;
mod matrix;
mod normal;
pub mod rational;

pub use lattice::{
    coords_in_basis, kernel_basis, lattice_contains, quotient_group, saturation,
    FiniteAbelianGroup, LatticeError,
};
pub use matrix::{Int, IntegerMatrix};
pub use normal::{hnf, smith_normal_form, SmithDecomposition};
pub use rational::Rat;
