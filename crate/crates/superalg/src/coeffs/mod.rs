//! Exact coefficient arithmetic and exact linear algebra.
//!
//! Three scalar families implement [`Scalar`]: [`Rational`] (arbitrary
//! precision), [`Fp`] (prime fields, modulus fixed at compile time) and [`Zp`]
//! (rationals whose denominator is prime to p). No floating point is used
//! anywhere in the crate.

mod linalg;
mod scalar;
mod sparse;

use thiserror::Error;

pub use linalg::{determinant, kernel, rank, solve_linear, sparse_rank, ExactMatrix, Solution, SpanBasis};
pub use scalar::{check_odd_prime, is_prime, CoefficientRing, Fp, Rational, Scalar, Zp};
pub use sparse::SparseVec;

pub(crate) use sparse::accumulate;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{value} is not {p}-local")]
    NotLocal { value: String, p: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("shape mismatch: {left:?} against {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("rows of unequal length")]
    Ragged,
}
