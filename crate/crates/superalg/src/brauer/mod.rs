//! The Brauer tree superalgebra 𝖠_ℓ, its regrading A_ℓ, and the affine
//! Brauer tree superalgebra H_d(𝖠_ℓ) with normal-form arithmetic.

mod affine;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffs::{Scalar, SparseVec};
use crate::superkernel::{regrade, validate_symmetrizing, BasedSuperalgebra, BiDegree, KernelError, SymmetrizingReport};

pub use affine::{affine_graded_rank, affine_multiply, AffineBrauer, AffineElement, AffineRankReport, Monomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("ℓ must be at least 1")]
    BadEll,
    #[error("total z-degree {total} exceeds the cap {cap}")]
    CapExceeded { total: u32, cap: u32 },
    #[error("cap {cap} is too small for degree {degree}: need 4·cap > degree")]
    CapInsufficient { cap: u32, degree: i64 },
    #[error("affine algebra is defined over the standard grading only")]
    RegradedAffine,
    #[error("elements live in different affine algebras")]
    Mismatch,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Bidegrees e ↦ (0,0), u, a ↦ (2,1), c ↦ (4,0).
    Std,
    /// e^{[i]}𝖠e^{[j]} shifted by (ΠQ²)^{i−j}.
    Regraded,
}

/// Kind of a basis element of 𝖠_ℓ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    E(usize),
    C(usize),
    /// a^{[i,k]} with |i−k| = 1, lying in e^{[i]}𝖠e^{[k]}.
    A(usize, usize),
    U,
}

/// Basis layout: e^{[0..ℓ)}, c^{[0..ℓ)}, then a^{[k,k+1]}, a^{[k+1,k]} for
/// k = 0..ℓ−2, then u. Rank 4ℓ−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrauerBasis {
    pub ell: usize,
}

impl BrauerBasis {
    pub fn rank(&self) -> usize {
        4 * self.ell - 1
    }

    pub fn e(&self, j: usize) -> usize {
        j
    }

    pub fn c(&self, j: usize) -> usize {
        self.ell + j
    }

    pub fn a(&self, i: usize, k: usize) -> usize {
        assert!(i.abs_diff(k) == 1 && i.max(k) < self.ell, "no arrow a[{i},{k}]");
        2 * self.ell + 2 * i.min(k) + usize::from(i > k)
    }

    pub fn u(&self) -> usize {
        4 * self.ell - 2
    }

    pub fn kind(&self, b: usize) -> BasisKind {
        let l = self.ell;
        match b {
            _ if b < l => BasisKind::E(b),
            _ if b < 2 * l => BasisKind::C(b - l),
            _ if b == 4 * l - 2 => BasisKind::U,
            _ => {
                let k = (b - 2 * l) / 2;
                if (b - 2 * l) % 2 == 0 {
                    BasisKind::A(k, k + 1)
                } else {
                    BasisKind::A(k + 1, k)
                }
            }
        }
    }

    /// (i, k) with b ∈ e^{[i]}𝖠e^{[k]}.
    pub fn ends(&self, b: usize) -> (usize, usize) {
        match self.kind(b) {
            BasisKind::E(j) | BasisKind::C(j) => (j, j),
            BasisKind::A(i, k) => (i, k),
            BasisKind::U => (0, 0),
        }
    }

    pub fn label(&self, b: usize) -> String {
        match self.kind(b) {
            BasisKind::E(j) => format!("e[{j}]"),
            BasisKind::C(j) => format!("c[{j}]"),
            BasisKind::A(i, k) => format!("a[{i},{k}]"),
            BasisKind::U => "u".into(),
        }
    }

    pub fn std_degree(&self, b: usize) -> BiDegree {
        match self.kind(b) {
            BasisKind::E(_) => BiDegree::new(0, 0),
            BasisKind::C(_) => BiDegree::new(4, 0),
            BasisKind::A(..) | BasisKind::U => BiDegree::new(2, 1),
        }
    }

    /// Product of two basis elements: a basis element or zero.
    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        use BasisKind::*;
        let (kx, ky) = (self.kind(x), self.kind(y));
        let (lx, rx) = self.ends(x);
        let (ly, ry) = self.ends(y);
        if rx != ly {
            return None;
        }
        match (kx, ky) {
            (E(_), _) => Some(y),
            (_, E(_)) => Some(x),
            (C(_), _) | (_, C(_)) => None,
            // Length-two paths: only cycles survive, and all equal c at the base.
            _ if lx == ry => Some(self.c(lx)),
            _ => None,
        }
    }
}

/// 𝖠_ℓ or A_ℓ with its symmetrizing form t(c^{[j]}) = 1.
#[derive(Clone, Debug)]
pub struct BrauerTree<S> {
    pub ell: usize,
    pub variant: Variant,
    pub basis: BrauerBasis,
    pub algebra: BasedSuperalgebra<S>,
    pub form: Vec<S>,
}

impl<S: Scalar> BrauerTree<S> {
    pub fn idempotent(&self, j: usize) -> SparseVec<S> {
        SparseVec::unit(self.basis.e(j))
    }

    pub fn validate_form(&self) -> SymmetrizingReport {
        validate_symmetrizing(&self.algebra, &self.form)
    }
}

/// Builds 𝖠_ℓ (`Variant::Std`) or its regrading A_ℓ.
pub fn brauer_algebra<S: Scalar>(ell: usize, variant: Variant) -> Result<BrauerTree<S>, BrauerError> {
    if ell == 0 {
        return Err(BrauerError::BadEll);
    }
    let basis = BrauerBasis { ell };
    let n = basis.rank();
    let labels = (0..n).map(|b| basis.label(b)).collect();
    let degrees = (0..n).map(|b| basis.std_degree(b)).collect();
    let unit = SparseVec::from_pairs((0..ell).map(|j| (basis.e(j), S::one())));
    let std = BasedSuperalgebra::from_fn(format!("A_{ell}"), labels, degrees, unit, |x, y| {
        basis.product(x, y).map_or_else(SparseVec::zero, SparseVec::unit)
    });
    let algebra = match variant {
        Variant::Std => std,
        Variant::Regraded => {
            let es: Vec<SparseVec<S>> = (0..ell).map(|j| SparseVec::unit(basis.e(j))).collect();
            // t_j = −2j, ε_j = j: a ∈ e^{[i]}𝖠e^{[k]} moves by 2(i−k) in degree and i−k in parity.
            let shifts: Vec<(i64, u8)> = (0..ell).map(|j| (-2 * j as i64, (j % 2) as u8)).collect();
            regrade(&std, &es, &shifts)?.renamed(format!("A_{ell} regraded"))
        }
    };
    let form = (0..n).map(|b| if matches!(basis.kind(b), BasisKind::C(_)) { S::one() } else { S::zero() }).collect();
    Ok(BrauerTree { ell, variant, basis, algebra, form })
}

#[cfg(test)]
mod tests;
