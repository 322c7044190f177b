//! Hochschild and cyclic homology of finite-dimensional graded algebras.
//!
//! Chains are tensor powers over the vertex subalgebra `E`, which is
//! separable, so the `E`-relative complexes compute the same homology as
//! the ground-field ones; the absolute complexes are kept as a cross-check.
//! All computations are exact over ℚ.

mod complex;
mod happel;
mod tuples;

pub use complex::{ChainVector, CyclicBicomplex, HochschildComplex, HomologyDims, Mode, TotalComplex, DEFAULT_BUDGET};
pub use happel::{contracted_euler_check, happel_terms, EulerReport, HappelTerm, HappelTermList};

use crate::algebra::FDAlgebra;
use crate::error::Result;

/// `HH_q(A)` for `q ≤ pmax` from the normalized `E`-relative bar complex.
pub fn hh_dims_relative(alg: &FDAlgebra, pmax: usize) -> HomologyDims {
    TotalComplex::hochschild(alg, pmax, Mode::Relative, usize::MAX)
        .expect("relative complexes have no budget")
        .homology()
}

/// `HH_q(A)` from the unnormalized complex `A^{⊗(q+1)}` over the ground field.
pub fn hh_dims_absolute(alg: &FDAlgebra, pmax: usize, budget: usize) -> Result<HomologyDims> {
    Ok(TotalComplex::hochschild(alg, pmax, Mode::Absolute, budget)?.homology())
}

/// `HC_d(A)` for `d ≤ nmax` from the truncated Connes bicomplex.
pub fn hc_dims(alg: &FDAlgebra, nmax: usize, mode: Mode, budget: usize) -> Result<HomologyDims> {
    Ok(TotalComplex::cyclic(alg, nmax, mode, budget)?.homology())
}

#[cfg(test)]
mod tests;
