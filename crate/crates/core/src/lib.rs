//! Minor-lift polynomials, hyperbolicity cones and the inequalities that
//! connect them.
//!
//! The algebra layer is generic over [`Scalar`]: floating types for fast
//! sampling and [`BigRational`] for exact certificates. Experiment batteries
//! run in `f64`.

pub mod cones;
pub mod error;
pub mod families;
pub mod harness;
pub mod inequalities;
pub mod json;
pub mod linalg;
pub mod minorlift;
pub mod permwalk;
pub mod poly;
pub mod rayleigh;
pub mod roots;
pub mod rng;
pub mod scalar;
pub mod spectral;
pub mod symmat;

pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use poly::{Graph, MultiAffinePoly, Permutation, SparsePoly, SubsetMask, UniPoly};
pub use scalar::{Real, Scalar};
pub use symmat::{Partition, SymMatrix};

/// Multiaffine polynomial with `f64` coefficients.
pub type Poly = MultiAffinePoly<f64>;
/// Multiaffine polynomial with exact rational coefficients.
pub type ExactMultiAffine = MultiAffinePoly<BigRational>;
/// Symmetric `f64` matrix.
pub type Matrix = SymMatrix<f64>;
/// Symmetric matrix with exact rational entries.
pub type ExactMatrix = SymMatrix<BigRational>;
/// Sparse polynomial in named variables with exact rational coefficients.
pub type ExactPoly = SparsePoly<BigRational>;
