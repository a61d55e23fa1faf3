//! Graded superalgebra engine.
//!
//! Every algebra is a [`BasedSuperalgebra`]: a homogeneous basis with
//! bidegrees (integer degree, parity) and sparse structure constants. The
//! constructions here (tensor products, opposites, wreath superproducts,
//! regradings, truncations, supercentralizers) all obey the Koszul sign rule.

mod algebra;
mod catalog;
mod constructions;
mod forms;
mod modules;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coeffs::{accumulate, Scalar, SpanBasis, SparseVec};

pub use algebra::{AlgebraElement, BasedSuperalgebra, BiDegree};
pub use catalog::{catalog, clifford, group_algebra, hecke, olshanski, twisted_sym, CatalogKind, TwistedSigns};
pub use constructions::{
    end_algebra, opposite, regrade, signed_place_action, supercentralizer, tensor, tensor_power_mul, truncate, wreath,
    Centralizer,
};
pub use forms::{normalized_trace, product_form, trace_functionals, validate_symmetrizing, SymmetrizingReport};
pub use modules::{hom_space, regular_module, BasedSupermodule, GeneratorAction, HomSpace, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("algebra axiom violated: {0}")]
    Axiom(String),
    #[error("bad idempotent: {0}")]
    BadIdempotent(String),
    #[error("basis element {0} does not lie in a single Peirce component")]
    NotAdapted(String),
    #[error("matrix units: {0}")]
    MatrixUnits(String),
    #[error("catalog parameter: {0}")]
    Parameter(String),
    #[error("module mismatch: {0}")]
    Module(String),
    #[error("json: {0}")]
    Json(String),
}

/// Basis of the null space of a sparse system, over a field.
pub fn sparse_kernel<S: Scalar>(rows: &[SparseVec<S>], nvars: usize) -> Vec<SparseVec<S>> {
    let mut span = SpanBasis::new(false);
    for r in rows {
        span.insert(r);
    }
    let echelon: BTreeMap<usize, &SparseVec<S>> = span.rows().iter().map(|r| (r.leading().expect("nonzero").0, r)).collect();
    let mut out = Vec::new();
    for free in (0..nvars).filter(|v| !echelon.contains_key(v)) {
        let mut x: BTreeMap<usize, S> = BTreeMap::new();
        x.insert(free, S::one());
        // Back-substitute pivots in decreasing order; row p reads x_p + Σ_{k>p} r_k x_k = 0.
        for (&p, row) in echelon.range(..free).rev() {
            let mut s = S::zero();
            for (k, c) in row.iter().skip(1) {
                if let Some(xk) = x.get(&k) {
                    s = s.add(&c.mul(xk));
                }
            }
            if !s.is_zero() {
                accumulate(&mut x, p, &s.neg());
            }
        }
        out.push(SparseVec::from_map(x));
    }
    out
}

#[cfg(test)]
mod tests;
