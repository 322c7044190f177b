//! Exact computational homological algebra for the Taft algebras Λ_n and
//! their Auslander algebras Γ.
//!
//! Finite-dimensional algebras are built from quivers with homogeneous
//! relations or as endomorphism algebras; on top of them the crate computes
//! minimal projective resolutions, Ext tables, Hochschild homology through
//! the bar complex relative to the vertex subalgebra, cyclic homology from
//! the truncated Connes bicomplex, Chern-character cycles of idempotents and
//! the Grothendieck-ring product of Λ_n.
//!
//! Conventions used throughout:
//!
//! * paths are written left to right: in the word `x.y` the arrow `x` is
//!   traversed first;
//! * algebra multiplication is composition, so a basis element `x` from
//!   vertex `s` to vertex `t` satisfies `e_t · x · e_s = x`, and the path
//!   word `x.y` is the product `y · x`;
//! * modules are left modules; `P_v = A e_v`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod homology;
pub mod ktheory;
pub mod linalg;
pub mod par;
pub mod repmod;
pub mod report;

pub use error::{Error, Result};
