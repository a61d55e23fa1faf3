//! Exact-arithmetic workbench for graded superalgebras.
//!
//! The crate builds finite-rank graded superalgebras with explicit bases and
//! structure constants (Brauer tree superalgebras, wreath superproducts,
//! generalized Schur superalgebras, quiver Hecke superalgebras of type
//! A_{2l}^{(2)} and their cyclotomic quotients) together with the root-lattice
//! and partition combinatorics that label their blocks.

pub mod coeffs;
pub mod combin;
pub mod rootdata;
pub mod superkernel;
pub mod brauer;
pub mod schur;
pub mod qhs;
pub mod spinblocks;
