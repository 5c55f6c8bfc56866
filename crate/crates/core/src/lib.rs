//! Exact Hilbert–Mumford stability analysis for divisors of multidegree
//! `(k_1, ..., k_r)` in a product of projective spaces `P^{m_1} x ... x P^{m_r}`.
//!
//! The crate enumerates the finite fundamental set of normalised
//! one-parameter subgroups of the diagonal torus, builds the maximal
//! (semi-)destabilised monomial families, and decides torus-level
//! (semi)stability of a monomial support through the centroid criterion:
//! the support is semistable iff the centroid lies in the convex hull of its
//! projected exponents, and stable iff it lies in the interior.
//!
//! Everything is exact: integers are `BigInt`, points are `BigRational`, and
//! the polyhedral tests run on an exact simplex solver.
//!
//! ```
//! use polystab::{lattice::SpaceSignature, oneps::fundamental_set};
//!
//! let sig = SpaceSignature::new(vec![1, 1], vec![4, 4]).unwrap();
//! assert_eq!(fundamental_set(&sig, true).len(), 13);
//! ```

pub mod cli;
pub mod destab;
pub mod error;
pub mod lattice;
mod linalg;
pub mod oneps;
pub mod pipeline;
pub mod polytope;

pub use error::{Error, Result};
pub use lattice::{ExponentVector, LatticePoint, RationalPoint, SpaceSignature, WeightVector};
pub use oneps::OneParamSubgroup;
