//! Polynomial representations: multiaffine polynomials over subset bitmasks,
//! dense univariate polynomials, sparse multivariate polynomials, plus the
//! subset, permutation and graph helpers they are built from.

pub mod graph;
pub mod multiaffine;
pub mod perm;
pub mod sparse;
pub mod subset;
pub mod univariate;

pub use graph::Graph;
pub use multiaffine::MultiAffinePoly;
pub use perm::Permutation;
pub use sparse::SparsePoly;
pub use subset::SubsetMask;
pub use univariate::UniPoly;
