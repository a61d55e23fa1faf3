//! H_d(𝖠_ℓ) in the normal form z^n · b_1⋯b_d · w.
//!
//! Left multiplication by a permutation is performed one simple reflection
//! at a time: s_r is pushed through the z's with the straightening relation
//! and through 𝖠-words with the signed place action.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::coeffs::{accumulate, Scalar, SpanBasis, SparseVec};
use crate::combin::{binomial, factorial, Permutation};
use crate::superkernel::tensor_power_mul;

use super::{brauer_algebra, BrauerError, BrauerTree, Variant};

/// z_1^{n_1}⋯z_d^{n_d} · b^{(1)}_1⋯b^{(d)}_d · w.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub z: Vec<u32>,
    pub b: Vec<usize>,
    pub w: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement<S> {
    pub d: usize,
    pub cap: u32,
    pub terms: BTreeMap<Monomial, S>,
    /// Set when monomials above the cap were discarded.
    pub truncated: bool,
}

impl<S: Scalar> AffineElement<S> {
    pub fn zero(d: usize, cap: u32) -> Self {
        AffineElement { d, cap, terms: BTreeMap::new(), truncated: false }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            accumulate(&mut out.terms, m.clone(), c);
        }
        out.truncated |= o.truncated;
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.d, self.cap);
        for (m, x) in &self.terms {
            accumulate(&mut out.terms, m.clone(), &x.mul(c));
        }
        out.truncated = self.truncated;
        out
    }

    /// Drops every monomial with a nonzero z-exponent: the image in W_d(𝖠_ℓ).
    pub fn z_free_part(&self) -> Self {
        let mut out = self.clone();
        out.terms.retain(|m, _| m.z.iter().all(|&n| n == 0));
        out
    }
}

/// H_d(𝖠_ℓ) with a cap on the total z-degree n_1+⋯+n_d of monomials.
#[derive(Clone, Debug)]
pub struct AffineBrauer<S> {
    pub tree: BrauerTree<S>,
    pub d: usize,
    pub cap: u32,
}

type Term<S> = (S, Vec<u32>, Vec<usize>, Permutation);

impl<S: Scalar> AffineBrauer<S> {
    pub fn new(ell: usize, d: usize, cap: u32) -> Result<Self, BrauerError> {
        Self::over(brauer_algebra(ell, Variant::Std)?, d, cap)
    }

    pub fn over(tree: BrauerTree<S>, d: usize, cap: u32) -> Result<Self, BrauerError> {
        if tree.variant != Variant::Std {
            return Err(BrauerError::RegradedAffine);
        }
        Ok(AffineBrauer { tree, d, cap })
    }

    fn odd(&self, b: usize) -> bool {
        self.tree.algebra.parity(b) == 1
    }

    pub fn monomial(&self, m: Monomial, c: S) -> AffineElement<S> {
        let mut e = AffineElement::zero(self.d, self.cap);
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    /// The unit Σ_𝒊 e^𝒊.
    pub fn one(&self) -> AffineElement<S> {
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..self.d {
            words = words.into_iter().flat_map(|w| (0..self.tree.ell).map(move |j| [w.clone(), vec![j]].concat())).collect();
        }
        let mut e = AffineElement::zero(self.d, self.cap);
        for w in words {
            let b = w.iter().map(|&j| self.tree.basis.e(j)).collect();
            e.terms.insert(Monomial { z: vec![0; self.d], b, w: Permutation::identity(self.d) }, S::one());
        }
        e
    }

    /// The pure tensor b^{(1)}⊗⋯⊗b^{(d)} ∈ 𝖠_ℓ^{⊗d}.
    pub fn word(&self, b: &[usize]) -> AffineElement<S> {
        self.monomial(Monomial { z: vec![0; self.d], b: b.to_vec(), w: Permutation::identity(self.d) }, S::one())
    }

    /// Inserts x ∈ 𝖠_ℓ in slot t (1-based), identity elsewhere.
    pub fn slot(&self, t: usize, x: usize) -> AffineElement<S> {
        let mut out = AffineElement::zero(self.d, self.cap);
        for (m, c) in self.one().terms {
            let mut b = m.b.clone();
            let Some(p) = self.tree.basis.product(b[t - 1], x) else { continue };
            b[t - 1] = p;
            accumulate(&mut out.terms, Monomial { b, ..m }, &c);
        }
        out
    }

    /// z_t (1-based).
    pub fn z(&self, t: usize) -> AffineElement<S> {
        let mut out = AffineElement::zero(self.d, self.cap);
        for (mut m, c) in self.one().terms {
            m.z[t - 1] += 1;
            out.terms.insert(m, c);
        }
        out
    }

    pub fn perm(&self, w: &Permutation) -> AffineElement<S> {
        let mut out = AffineElement::zero(self.d, self.cap);
        for (mut m, c) in self.one().terms {
            m.w = w.clone();
            out.terms.insert(m, c);
        }
        out
    }

    /// Correction (s_r z_t − z_{s_r(t)} s_r)e^𝒊 as z-free pure tensors.
    fn correction(&self, r: usize, t: usize, i: &[usize]) -> Vec<(S, Vec<usize>)> {
        if t != r && t != r + 1 {
            return Vec::new();
        }
        let basis = &self.tree.basis;
        let (ir, is) = (i[r - 1], i[r]);
        let base: Vec<usize> = i.iter().map(|&j| basis.e(j)).collect();
        let with = |x: usize, y: usize| {
            let mut w = base.clone();
            w[r - 1] = x;
            w[r] = y;
            w
        };
        let mut out = Vec::new();
        if ir == is {
            let sgn = S::signed(t == r + 1);
            out.push((sgn.clone(), with(basis.c(ir), basis.e(ir))));
            out.push((sgn, with(basis.e(ir), basis.c(ir))));
            if ir == 0 {
                out.push((S::one(), with(basis.u(), basis.u())));
            }
        } else if ir.abs_diff(is) == 1 {
            out.push((S::one(), with(basis.a(is, ir), basis.a(ir, is))));
        }
        out
    }

    /// Sign of moving z^m leftwards past the pure tensor b.
    fn z_past(&self, b: &[usize], m: &[u32]) -> bool {
        b.iter().zip(m).filter(|(&x, &n)| self.odd(x) && n % 2 == 1).count() % 2 == 1
    }

    /// s_r · z^m b as normal-form terms z^{m'} b' v with v ∈ {1, s_r}.
    fn simple_times(&self, r: usize, m: &[u32], b: &[usize]) -> Vec<Term<S>> {
        let d = self.d;
        let a = &self.tree.algebra;
        let left: Vec<usize> = b.iter().map(|&x| self.tree.basis.ends(x).0).collect();
        let mut out = Vec::new();
        let mut prefix = vec![0u32; d];
        let mut rest = m.to_vec();
        let sr = Permutation::s(r, d);
        for t in 1..=d {
            while rest[t - 1] > 0 {
                rest[t - 1] -= 1;
                // prefix · R_t · rest · b, with R_t z-free.
                for (c, word) in self.correction(r, t, &left) {
                    let sign = S::signed(self.z_past(&word, &rest));
                    for (c2, prod) in tensor_power_mul(a, &word, b) {
                        let z: Vec<u32> = prefix.iter().zip(&rest).map(|(x, y)| x + y).collect();
                        out.push((c.mul(&sign).mul(&c2), z, prod, Permutation::identity(d)));
                    }
                }
                prefix[sr.0[t - 1]] += 1;
            }
        }
        let (neg, moved) = crate::superkernel::signed_place_action(&sr, b, |x| self.odd(*x));
        out.push((S::signed(neg), prefix, moved, sr));
        out
    }

    /// w · z^m b in normal form.
    fn perm_times(&self, w: &Permutation, m: &[u32], b: &[usize]) -> Vec<Term<S>> {
        let mut terms: Vec<Term<S>> = vec![(S::one(), m.to_vec(), b.to_vec(), Permutation::identity(self.d))];
        for &r in w.reduced_word().iter().rev() {
            let mut next = Vec::new();
            for (c, m, b, v) in terms {
                for (c2, m2, b2, v2) in self.simple_times(r, &m, &b) {
                    next.push((c.mul(&c2), m2, b2, v2.compose(&v)));
                }
            }
            terms = next;
        }
        terms
    }

    /// Product in normal form; monomials above the cap are an error unless
    /// `truncate` is set, in which case they are dropped and flagged.
    pub fn multiply(&self, x: &AffineElement<S>, y: &AffineElement<S>, truncate: bool) -> Result<AffineElement<S>, BrauerError> {
        if x.d != self.d || y.d != self.d {
            return Err(BrauerError::Mismatch);
        }
        let a = &self.tree.algebra;
        let mut out = AffineElement::zero(self.d, self.cap);
        out.truncated = x.truncated || y.truncated;
        let mut cache: HashMap<(Permutation, Vec<u32>, Vec<usize>), Vec<Term<S>>> = HashMap::new();
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                let key = (mx.w.clone(), my.z.clone(), my.b.clone());
                let moved = cache.entry(key).or_insert_with(|| self.perm_times(&mx.w, &my.z, &my.b));
                for (c, m2, b2, v) in moved.iter() {
                    let sign = S::signed(self.z_past(&mx.b, m2));
                    let z: Vec<u32> = mx.z.iter().zip(m2).map(|(p, q)| p + q).collect();
                    let w = v.compose(&my.w);
                    let coef = cx.mul(cy).mul(c).mul(&sign);
                    for (c3, b3) in tensor_power_mul(a, &mx.b, b2) {
                        let total: u32 = z.iter().sum();
                        if total > self.cap {
                            if truncate {
                                out.truncated = true;
                                continue;
                            }
                            return Err(BrauerError::CapExceeded { total, cap: self.cap });
                        }
                        accumulate(&mut out.terms, Monomial { z: z.clone(), b: b3, w: w.clone() }, &coef.mul(&c3));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        4 * m.z.iter().map(|&n| n as i64).sum::<i64>() + m.b.iter().map(|&x| self.tree.algebra.degree(x).deg).sum::<i64>()
    }

    /// Basis monomials of degree `deg` and the rank of the span of all
    /// w · z^n b of that degree after reduction to normal form.
    pub fn graded_rank(&self, deg: i64) -> Result<AffineRankReport, BrauerError> {
        if 4 * self.cap as i64 <= deg {
            return Err(BrauerError::CapInsufficient { cap: self.cap, degree: deg });
        }
        let d = self.d;
        let rank_a = self.tree.basis.rank();
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..d {
            words = words.into_iter().flat_map(|w| (0..rank_a).map(move |x| [w.clone(), vec![x]].concat())).collect();
        }
        let perms = Permutation::all(d);
        let mut monomials: u128 = 0;
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut span = SpanBasis::new(false);
        for b in &words {
            let db: i64 = b.iter().map(|&x| self.tree.algebra.degree(x).deg).sum();
            if db > deg || (deg - db) % 4 != 0 {
                continue;
            }
            let k = ((deg - db) / 4) as u32;
            monomials += binomial(k as usize + d - 1, d - 1) * factorial(d);
            for z in exponent_vectors(d, k) {
                let y = self.monomial(Monomial { z: z.clone(), b: b.clone(), w: Permutation::identity(d) }, S::one());
                for w in &perms {
                    let prod = self.multiply(&self.perm(w), &y, false)?;
                    let v = SparseVec::from_pairs(prod.terms.into_iter().map(|(m, c)| {
                        let n = index.len();
                        (*index.entry(m).or_insert(n), c)
                    }));
                    span.insert(&v);
                }
            }
        }
        Ok(AffineRankReport { ell: self.tree.ell, d, degree: deg, monomials: monomials as usize, span_rank: span.rank() })
    }
}

/// Vectors in ℕ^d with sum k.
fn exponent_vectors(d: usize, k: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in exponent_vectors(d - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineRankReport {
    pub ell: usize,
    pub d: usize,
    pub degree: i64,
    /// Number of basis monomials z^n b w of this degree.
    pub monomials: usize,
    /// Rank of the span of all w · z^n b of this degree.
    pub span_rank: usize,
}

impl AffineRankReport {
    pub fn agrees(&self) -> bool {
        self.monomials == self.span_rank
    }
}

/// Product in H_d(𝖠_ℓ) of two elements of the same algebra.
pub fn affine_multiply<S: Scalar>(
    h: &AffineBrauer<S>,
    x: &AffineElement<S>,
    y: &AffineElement<S>,
    truncate: bool,
) -> Result<AffineElement<S>, BrauerError> {
    h.multiply(x, y, truncate)
}

/// Graded rank of H_d(𝖠_ℓ) in degree `deg`, checked against the span.
pub fn affine_graded_rank<S: Scalar>(ell: usize, d: usize, deg: i64, cap: u32) -> Result<AffineRankReport, BrauerError> {
    AffineBrauer::<S>::new(ell, d, cap)?.graded_rank(deg)
}
