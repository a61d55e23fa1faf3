//! The ambient superalgebra M_n(𝖠_ℓ)^{⊗d} on pure tensors of matrix entries.

use std::collections::HashMap;

use crate::brauer::{BasisKind, BrauerBasis};
use crate::coeffs::{Scalar, SparseVec};
use crate::combin::Permutation;
use crate::superkernel::{signed_place_action, sparse_kernel, BiDegree};

use super::{SchurError, AMBIENT_LIMIT};

/// Factors are the entries ξ^b_{r,s}, encoded as (b·n + r)·n + s with 0-based
/// r and s; words of d factors are encoded in base n²(4ℓ−1).
#[derive(Clone, Debug)]
pub struct Ambient {
    pub n: usize,
    pub d: usize,
    pub basis: BrauerBasis,
    /// Position of each factor in the canonical (b-label, r, s) order.
    key: Vec<usize>,
}

impl Ambient {
    pub fn new(n: usize, d: usize, ell: usize) -> Result<Self, SchurError> {
        if n == 0 || d == 0 || ell == 0 {
            return Err(SchurError::BadSize);
        }
        let basis = BrauerBasis { ell };
        let base = (basis.rank() * n * n) as u128;
        let rank = base.checked_pow(d as u32).unwrap_or(u128::MAX);
        if rank > AMBIENT_LIMIT {
            return Err(SchurError::TooLarge { rank, limit: AMBIENT_LIMIT });
        }
        let mut amb = Ambient { n, d, basis, key: Vec::new() };
        let mut order: Vec<usize> = (0..amb.factors()).collect();
        order.sort_by_key(|&f| {
            let (b, r, s) = amb.split(f);
            (basis.label(b), r, s)
        });
        amb.key = vec![0; order.len()];
        for (pos, &f) in order.iter().enumerate() {
            amb.key[f] = pos;
        }
        Ok(amb)
    }

    /// Number of matrix entries n²(4ℓ−1).
    pub fn factors(&self) -> usize {
        self.basis.rank() * self.n * self.n
    }

    pub fn rank(&self) -> usize {
        self.factors().pow(self.d as u32)
    }

    pub fn factor(&self, b: usize, r: usize, s: usize) -> usize {
        (b * self.n + r) * self.n + s
    }

    /// (b, r, s) of a factor, with r and s 0-based.
    pub fn split(&self, f: usize) -> (usize, usize, usize) {
        (f / (self.n * self.n), (f / self.n) % self.n, f % self.n)
    }

    pub fn is_odd(&self, f: usize) -> bool {
        self.basis.std_degree(self.split(f).0).parity == 1
    }

    pub fn is_c(&self, f: usize) -> bool {
        matches!(self.basis.kind(self.split(f).0), BasisKind::C(_))
    }

    /// Factors sorted canonically.
    pub fn canonical_factors(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.factors()).collect();
        order.sort_by_key(|&f| self.key[f]);
        order
    }

    pub fn factor_label(&self, f: usize) -> String {
        let (b, r, s) = self.split(f);
        format!("{}_{},{}", self.basis.label(b), r + 1, s + 1)
    }

    /// Label "b_1…b_d|r_1…r_d|s_1…s_d" of a word.
    pub fn word_label(&self, w: &[usize]) -> String {
        let parts: Vec<(usize, usize, usize)> = w.iter().map(|&f| self.split(f)).collect();
        let bs: Vec<String> = parts.iter().map(|p| self.basis.label(p.0)).collect();
        let rs: Vec<String> = parts.iter().map(|p| (p.1 + 1).to_string()).collect();
        let ss: Vec<String> = parts.iter().map(|p| (p.2 + 1).to_string()).collect();
        format!("{}|{}|{}", bs.join(" "), rs.join(" "), ss.join(" "))
    }

    pub fn word_degree(&self, w: &[usize]) -> BiDegree {
        w.iter().fold(BiDegree::ZERO, |acc, &f| acc.add(self.basis.std_degree(self.split(f).0)))
    }

    pub fn encode(&self, w: &[usize]) -> usize {
        let base = self.factors();
        w.iter().fold(0, |acc, &x| acc * base + x)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let base = self.factors();
        let mut w = vec![0; self.d];
        for k in (0..self.d).rev() {
            w[k] = idx % base;
            idx /= base;
        }
        w
    }

    /// Signed place action ^g w.
    pub fn act(&self, g: &Permutation, w: &[usize]) -> (bool, Vec<usize>) {
        signed_place_action(g, w, |&f| self.is_odd(f))
    }

    /// ^g w = ± (canonical word), for the g that sorts `w` stably.
    pub fn sort_word(&self, w: &[usize]) -> (bool, Vec<usize>) {
        let mut order: Vec<usize> = (0..w.len()).collect();
        order.sort_by_key(|&k| self.key[w[k]]);
        let mut g = vec![0; w.len()];
        for (pos, &k) in order.iter().enumerate() {
            g[k] = pos;
        }
        self.act(&Permutation(g), w)
    }

    /// Distinct signed images of `w` under 𝔖_d, with the sign of their
    /// coefficient in the orbit sum normalized at `w`.
    pub fn orbit(&self, w: &[usize]) -> Vec<(bool, Vec<usize>)> {
        let mut seen: HashMap<Vec<usize>, bool> = HashMap::new();
        let mut out = Vec::new();
        for g in Permutation::all(self.d) {
            let (neg, y) = self.act(&g, w);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), neg);
                out.push((neg, y));
            }
        }
        out
    }

    fn factor_mul(&self, f: usize, g: usize) -> Option<usize> {
        let (a, r, s) = self.split(f);
        let (b, t, u) = self.split(g);
        if s != t {
            return None;
        }
        self.basis.product(a, b).map(|ab| self.factor(ab, r, u))
    }

    /// Product of pure tensors with the Koszul sign, as (negated?, word).
    pub fn word_mul(&self, x: &[usize], y: &[usize]) -> Option<(bool, Vec<usize>)> {
        let mut w = Vec::with_capacity(x.len());
        for (&f, &g) in x.iter().zip(y) {
            w.push(self.factor_mul(f, g)?);
        }
        let mut neg = false;
        for i in 0..x.len() {
            if self.is_odd(x[i]) {
                neg ^= y[..i].iter().filter(|&&g| self.is_odd(g)).count() % 2 == 1;
            }
        }
        Some((neg, w))
    }

    pub fn mul<S: Scalar>(&self, x: &SparseVec<S>, y: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = std::collections::BTreeMap::new();
        for (i, c) in x.iter() {
            let wi = self.decode(i);
            for (j, e) in y.iter() {
                if let Some((neg, w)) = self.word_mul(&wi, &self.decode(j)) {
                    crate::coeffs::accumulate(&mut acc, self.encode(&w), &c.mul(e).mul(&S::signed(neg)));
                }
            }
        }
        SparseVec::from_map(acc)
    }

    /// The factors ξ^{e_j}_{r,r} summing to the identity of M_n(𝖠_ℓ).
    pub fn matrix_unit_one(&self) -> Vec<usize> {
        (0..self.n).flat_map(|r| (0..self.basis.ell).map(move |j| self.factor(self.basis.e(j), r, r))).collect()
    }

    /// 1^{⊗d}.
    pub fn unit<S: Scalar>(&self) -> SparseVec<S> {
        let one = self.matrix_unit_one();
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..self.d {
            words = words.iter().flat_map(|w| one.iter().map(move |&f| [w.as_slice(), &[f]].concat())).collect();
        }
        SparseVec::from_pairs(words.iter().map(|w| (self.encode(w), S::one())))
    }

    /// Fixed by every elementary transposition under the signed action.
    pub fn is_invariant<S: Scalar>(&self, x: &SparseVec<S>) -> bool {
        (1..self.d).all(|r| {
            let g = Permutation::s(r, self.d);
            let moved = SparseVec::from_pairs(x.iter().map(|(i, c)| {
                let (neg, w) = self.act(&g, &self.decode(i));
                (self.encode(&w), c.mul(&S::signed(neg)))
            }));
            moved == *x
        })
    }

    /// Rank of the space of 𝔖_d-invariants, by solving ^{s_r}v = v.
    pub fn invariant_rank<S: Scalar>(&self) -> usize {
        let mut rows = Vec::new();
        for r in 1..self.d {
            let g = Permutation::s(r, self.d);
            for i in 0..self.rank() {
                let (neg, w) = self.act(&g, &self.decode(i));
                let j = self.encode(&w);
                // Coefficient of word j in ^{s_r}v minus that in v.
                let row = SparseVec::from_pairs([(i, S::signed(neg)), (j, S::one().neg())]);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
        sparse_kernel(&rows, self.rank()).len()
    }
}
