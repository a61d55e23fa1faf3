//! Symmetrizing forms.

use serde::Serialize;

use crate::coeffs::{determinant, solve_linear, ExactMatrix, Scalar, Solution, SparseVec};

use super::{sparse_kernel, BasedSuperalgebra};

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizingReport {
    /// Odd basis elements with nonzero form value.
    pub odd_violations: Vec<usize>,
    /// Basis pairs (a, b) with t(ab) ≠ t(ba).
    pub asymmetric_pairs: Vec<(usize, usize)>,
    pub gram_determinant: String,
    /// Determinant is a unit of the coefficient ring.
    pub invertible: bool,
}

impl SymmetrizingReport {
    pub fn passes(&self) -> bool {
        self.odd_violations.is_empty() && self.asymmetric_pairs.is_empty() && self.invertible
    }
}

fn apply<S: Scalar>(t: &[S], x: &SparseVec<S>) -> S {
    x.iter().fold(S::zero(), |acc, (i, c)| acc.add(&c.mul(&t[i])))
}

/// Checks t(A_odd) = 0, t(ab) = t(ba) on basis pairs, and that the Gram
/// matrix t(ab) has unit determinant.
pub fn validate_symmetrizing<S: Scalar>(a: &BasedSuperalgebra<S>, t: &[S]) -> SymmetrizingReport {
    let n = a.rank();
    let odd_violations = (0..n).filter(|&i| a.parity(i) == 1 && !t[i].is_zero()).collect();
    let mut gram = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, a.mul_basis_ref(i, j).map_or_else(S::zero, |v| apply(t, v)));
        }
    }
    let mut asymmetric_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if gram.get(i, j) != gram.get(j, i) {
                asymmetric_pairs.push((i, j));
            }
        }
    }
    let det = determinant(&gram).expect("square");
    SymmetrizingReport { odd_violations, asymmetric_pairs, gram_determinant: det.to_string(), invertible: det.is_unit() }
}

/// The form a ⊗ b ↦ t_A(a) t_B(b) on a tensor product.
pub fn product_form<S: Scalar>(ta: &[S], tb: &[S]) -> Vec<S> {
    ta.iter().flat_map(|x| tb.iter().map(move |y| x.mul(y))).collect()
}

/// Basis of the even trace functionals: t(A_odd) = 0 and t(ab) = t(ba).
pub fn trace_functionals<S: Scalar>(a: &BasedSuperalgebra<S>) -> Vec<Vec<S>> {
    let n = a.rank();
    let mut rows: Vec<SparseVec<S>> = (0..n).filter(|&i| a.parity(i) == 1).map(SparseVec::unit).collect();
    for i in 0..n {
        for j in i + 1..n {
            let c = a.mul_basis(i, j).sub(&a.mul_basis(j, i));
            if !c.is_zero() {
                rows.push(c);
            }
        }
    }
    sparse_kernel(&rows, n).into_iter().map(|v| v.to_dense(n)).collect()
}

/// The trace functional with t(1) = 1 that vanishes on as many basis
/// elements as possible, taken greedily in basis order. `None` when every
/// trace functional kills the unit.
pub fn normalized_trace<S: Scalar>(a: &BasedSuperalgebra<S>) -> Option<Vec<S>> {
    let traces = trace_functionals(a);
    let m = traces.len();
    let value = |x: &SparseVec<S>| -> Vec<S> {
        (0..m).map(|k| x.iter().fold(S::zero(), |acc, (i, c)| acc.add(&c.mul(&traces[k][i])))).collect()
    };
    let mut rows = vec![value(a.unit())];
    let mut rhs = vec![S::one()];
    let solve = |rows: &[Vec<S>], rhs: &[S]| -> Option<Vec<S>> {
        let mat = ExactMatrix::from_rows(rows.to_vec()).ok()?;
        let b = ExactMatrix::from_rows(rhs.iter().map(|x| vec![x.clone()]).collect()).ok()?;
        match solve_linear(&mat, &b).ok()? {
            Solution::Consistent { particular, .. } => Some((0..m).map(|k| particular.get(k, 0).clone()).collect()),
            _ => None,
        }
    };
    let mut lambda = solve(&rows, &rhs)?;
    for b in 0..a.rank() {
        rows.push(value(&SparseVec::unit(b)));
        rhs.push(S::zero());
        match solve(&rows, &rhs) {
            Some(l) => lambda = l,
            None => {
                rows.pop();
                rhs.pop();
            }
        }
    }
    Some((0..a.rank()).map(|i| (0..m).fold(S::zero(), |acc, k| acc.add(&lambda[k].mul(&traces[k][i])))).collect())
}
