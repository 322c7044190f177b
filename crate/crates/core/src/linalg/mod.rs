//! Exact scalar fields and the linear-algebra kernels everything else is
//! built on: sparse echelon forms, rank, kernels, subspaces and quotient
//! coordinates.

mod cyclotomic;
mod field;
mod matrix;
pub mod modp;
mod rational;
mod sparse;
mod subspace;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicModulus};
pub use field::Field;
pub use matrix::Matrix;
pub use rational::{ParseRationalError, Rational};
pub use sparse::{rank, rank_of_columns, Echelon, SparseMatrix, SparseVec};
pub use subspace::{image, kernel_basis, quotient_coords, QuotientBasis, Subspace};
