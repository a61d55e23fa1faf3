//! Superblocks of the twisted group algebra 𝒯_n over F_p, cut out by the
//! generalized eigenspaces of the squared spin Jucys–Murphy elements.
//!
//! With p^k ≥ n!, the power (m_r²)^{p^k} is the semisimple part of m_r², so
//! Lagrange interpolation at the values i(i+1)/2 gives the spectral
//! idempotents exactly, as elements of 𝒯_n.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::coeffs::{CoefficientRing, Scalar, SpanBasis, SparseVec};
use crate::combin::{factorial, pstrict, Permutation};
use crate::rootdata::{QPlusElement, RootSystem};
use crate::superkernel::{twisted_sym, BasedSuperalgebra};

/// n ≤ 6.
pub const SPIN_GUARD: usize = 6;

#[derive(Debug, Error)]
pub enum SpinError {
    #[error("n = {0} outside 1..={SPIN_GUARD}")]
    Guard(usize),
    #[error("coefficients must form a prime field F_p with p odd, got {0}")]
    Ring(CoefficientRing),
    #[error("m_{r}² has an eigenvalue outside {{i(i+1)/2}}")]
    Eigenvalue { r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinBlock {
    pub theta: QPlusElement,
    /// Rank of the block ideal e_θ𝒯_n.
    pub rank: usize,
    /// Words 𝒊 ∈ I^θ with e(𝒊) ≠ 0.
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinBlockReport<S> {
    pub n: usize,
    pub p: u64,
    pub blocks: Vec<SpinBlock>,
    /// Σ e(𝒊) = 1 and e(𝒊)e(𝒋) = δ_{𝒊,𝒋}e(𝒊).
    pub complete: bool,
    pub orthogonal: bool,
    /// Every e_θ commutes with t_1,…,t_{n−1}.
    pub central: bool,
    /// Nonzero block labels equal the contents of the p-strict partitions of n.
    pub matches_contents: bool,
    #[serde(skip)]
    pub idempotents: BTreeMap<Vec<usize>, SparseVec<S>>,
}

impl<S> SpinBlockReport<S> {
    pub fn total_rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }
}

fn t<S: Scalar>(n: usize, r: usize) -> SparseVec<S> {
    let idx = Permutation::all(n).iter().position(|g| *g == Permutation::s(r, n)).expect("s_r is a permutation");
    SparseVec::unit(idx)
}

/// m_1 = 0, m_{r+1} = −t_r m_r t_r + t_r.
pub fn jm_elements<S: Scalar>(alg: &BasedSuperalgebra<S>, n: usize) -> Vec<SparseVec<S>> {
    let mut m = vec![SparseVec::zero()];
    for r in 1..n {
        let tr = t::<S>(n, r);
        let conj = alg.mul(&alg.mul(&tr, &m[r - 1]), &tr);
        m.push(tr.sub(&conj));
    }
    m
}

fn power<S: Scalar>(alg: &BasedSuperalgebra<S>, x: &SparseVec<S>, mut e: u64) -> SparseVec<S> {
    let mut acc = alg.unit().clone();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = alg.mul(&acc, &base);
        }
        base = alg.mul(&base, &base);
        e >>= 1;
    }
    acc
}

pub fn block_decomposition<S: Scalar>(n: usize) -> Result<SpinBlockReport<S>, SpinError> {
    if n == 0 || n > SPIN_GUARD {
        return Err(SpinError::Guard(n));
    }
    let ring = S::ring();
    let p = match ring {
        CoefficientRing::PrimeField(p) if p % 2 == 1 => p,
        other => return Err(SpinError::Ring(other)),
    };
    let ell = ((p - 1) / 2) as usize;
    let roots = RootSystem::new(ell).expect("ℓ ≥ 1");
    let (alg, _) = twisted_sym::<S>(n);
    let one = alg.unit().clone();
    let values: Vec<S> = (0..=ell).map(|i| S::from_i64((i * (i + 1) / 2) as i64)).collect();
    for a in 0..values.len() {
        for b in 0..a {
            assert!(values[a] != values[b], "i(i+1)/2 must be distinct in F_p");
        }
    }
    let jm = jm_elements(&alg, n);
    let mut k_pow = p;
    while (k_pow as u128) < factorial(n) {
        k_pow *= p;
    }
    // Spectral projectors of each m_r².
    let mut projectors: Vec<Vec<SparseVec<S>>> = Vec::new();
    for (r, m) in jm.iter().enumerate() {
        let sq = alg.mul(m, m);
        let semi = power(&alg, &sq, k_pow);
        let shifted: Vec<SparseVec<S>> = values.iter().map(|c| semi.sub(&one.scale(c))).collect();
        if !shifted.iter().fold(one.clone(), |acc, x| alg.mul(&acc, x)).is_zero() {
            return Err(SpinError::Eigenvalue { r: r + 1 });
        }
        let mut proj = Vec::new();
        for (i, ci) in values.iter().enumerate() {
            let mut e = one.clone();
            for (j, cj) in values.iter().enumerate() {
                if i != j {
                    let inv = ci.sub(cj).inv().expect("distinct values");
                    e = alg.mul(&e, &shifted[j].scale(&inv));
                }
            }
            proj.push(e);
        }
        projectors.push(proj);
    }
    let mut idems: BTreeMap<Vec<usize>, SparseVec<S>> = BTreeMap::from([(Vec::new(), one.clone())]);
    for proj in &projectors {
        let mut next = BTreeMap::new();
        for (word, e) in &idems {
            for (i, pi) in proj.iter().enumerate() {
                let f = alg.mul(e, pi);
                if !f.is_zero() {
                    let mut w = word.clone();
                    w.push(i);
                    next.insert(w, f);
                }
            }
        }
        idems = next;
    }
    let sum = idems.values().fold(SparseVec::zero(), |acc, e| acc.add(e));
    let complete = sum == one;
    let orthogonal = idems.iter().all(|(a, e)| idems.iter().all(|(b, f)| alg.mul(e, f) == if a == b { e.clone() } else { SparseVec::zero() }));
    let mut grouped: BTreeMap<QPlusElement, (SparseVec<S>, Vec<Vec<usize>>)> = BTreeMap::new();
    for (word, e) in &idems {
        let entry = grouped.entry(roots.wt(word)).or_insert_with(|| (SparseVec::zero(), Vec::new()));
        entry.0 = entry.0.add(e);
        entry.1.push(word.clone());
    }
    let gens: Vec<SparseVec<S>> = (1..n).map(|r| t::<S>(n, r)).collect();
    let central = grouped.values().all(|(e, _)| gens.iter().all(|g| alg.mul(e, g) == alg.mul(g, e)));
    let blocks: Vec<SpinBlock> = grouped
        .into_iter()
        .map(|(theta, (e, words))| {
            let mut span = SpanBasis::new(false);
            for b in 0..alg.rank() {
                span.insert(&alg.mul(&e, &SparseVec::unit(b)));
            }
            SpinBlock { theta, rank: span.rank(), words }
        })
        .collect();
    let expected: BTreeSet<QPlusElement> = pstrict(n, p).iter().map(|l| roots.content(l).expect("p-strict")).collect();
    let found: BTreeSet<QPlusElement> = blocks.iter().map(|b| b.theta.clone()).collect();
    Ok(SpinBlockReport { n, p, blocks, complete, orthogonal, central, matches_contents: expected == found, idempotents: idems })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Fp;

    #[test]
    fn jucys_murphy_elements() {
        let (alg, _) = twisted_sym::<Fp<3>>(3);
        let m = jm_elements(&alg, 3);
        assert!(m[0].is_zero());
        assert_eq!(m[1], t(3, 1));
        assert_eq!(alg.mul(&m[1], &m[1]), *alg.unit());
        let (s2, s3) = (alg.mul(&m[1], &m[1]), alg.mul(&m[2], &m[2]));
        assert_eq!(alg.mul(&s2, &s3), alg.mul(&s3, &s2));
        for x in &m[1..] {
            assert_eq!(alg.element_degree(x).map(|d| d.parity), Some(1));
        }
    }

    #[test]
    fn small_blocks() {
        let r = block_decomposition::<Fp<3>>(1).unwrap();
        assert_eq!(r.blocks, vec![SpinBlock { theta: vec![1, 0], rank: 1, words: vec![vec![0]] }]);
        for n in 1..=4 {
            let r = block_decomposition::<Fp<3>>(n).unwrap();
            assert!(r.complete && r.orthogonal && r.central && r.matches_contents, "n={n}");
            assert_eq!(r.total_rank() as u128, factorial(n));
        }
        for n in 1..=4 {
            let r = block_decomposition::<Fp<5>>(n).unwrap();
            assert!(r.complete && r.orthogonal && r.central && r.matches_contents, "n={n}");
            assert_eq!(r.total_rank() as u128, factorial(n));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(block_decomposition::<Fp<3>>(7), Err(SpinError::Guard(7))));
        assert!(matches!(block_decomposition::<crate::coeffs::Rational>(2), Err(SpinError::Ring(_))));
    }
}

#[cfg(test)]
mod long_tests {
    use super::*;
    use crate::coeffs::Fp;

    #[test]
    fn five_points_mod_three() {
        let r = block_decomposition::<Fp<3>>(5).unwrap();
        assert!(r.complete && r.orthogonal && r.central && r.matches_contents);
        assert_eq!(r.total_rank(), 120);
    }

    #[test]
    #[ignore = "n = 6 takes about half a minute in debug builds"]
    fn six_points() {
        let r = block_decomposition::<Fp<3>>(6).unwrap();
        assert!(r.complete && r.orthogonal && r.central && r.matches_contents);
        assert_eq!(r.total_rank(), 720);
        let r = block_decomposition::<Fp<5>>(6).unwrap();
        assert!(r.complete && r.orthogonal && r.central && r.matches_contents);
        assert_eq!(r.total_rank(), 720);
    }
}
