//! Quiver Hecke superalgebras R_θ of type A_{2ℓ}^{(2)} in the normal form
//! ψ_w y_1^{k_1}⋯y_n^{k_n} 1_𝒊, and their level-one cyclotomic quotients.
//!
//! Products are computed by left multiplication with generators. The element
//! ψ_w uses the lexicographically least reduced word of w, so the suffix of a
//! normal-form word is again a normal-form word. Rewriting a reduced word into
//! the chosen one moves the least left descent to the front with distant
//! commutations and braid moves; every correction term is shorter, which
//! makes the recursion well founded.

mod cyclotomic;
mod relations;
#[cfg(test)]
mod tests;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::coeffs::{Scalar, SparseVec, SpanBasis};
use crate::combin::Permutation;
use crate::rootdata::{RootError, RootSystem};
use crate::superkernel::BiDegree;

pub use relations::{RelationInstance, RELATION_NAMES};
pub use cyclotomic::{cyclotomic_close, matrix_block_check, BlockCheck, CyclotomicResult, DegreeRank, CLOSE_HEIGHT_GUARD, CLOSE_RANK_GUARD};

/// Default bound on the total y-degree of products.
pub const DEFAULT_Y_CAP: u32 = 32;

#[derive(Debug, Error)]
pub enum QhsError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("total y-degree {got} exceeds the cap {cap}")]
    YCap { got: u32, cap: u32 },
    #[error("degree {degree} needs y-cap {need}, have {cap}")]
    CapInsufficient { degree: i64, need: u32, cap: u32 },
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("no stabilized quotient for {0:?}")]
    NotStabilized(Vec<usize>),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// ψ_w y^k 1_𝒊.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub w: Permutation,
    pub k: Vec<u32>,
    pub idem: Vec<usize>,
}

impl Monomial {
    pub fn y_total(&self) -> u32 {
        self.k.iter().sum()
    }

    /// Idempotent on the left, w·𝒊.
    pub fn left_idem(&self) -> Vec<usize> {
        self.w.act(&self.idem)
    }

    pub fn label(&self) -> String {
        let mut s = String::new();
        let word = self.w.reduced_word();
        if !word.is_empty() {
            let parts: Vec<String> = word.iter().map(|r| r.to_string()).collect();
            s.push_str(&format!("psi[{}] ", parts.join(",")));
        }
        for (t, &e) in self.k.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&format!("y{} ", t + 1)),
                _ => s.push_str(&format!("y{}^{} ", t + 1, e)),
            }
        }
        let idem: Vec<String> = self.idem.iter().map(|i| i.to_string()).collect();
        s.push_str(&format!("1_{}", idem.join("")));
        s
    }
}

/// Polynomial Σ c·u^a v^b in two supercommuting variables, as (c, a, b).
pub type Poly = Vec<(i64, u32, u32)>;

type Terms<S> = BTreeMap<Monomial, S>;

#[derive(Clone, Debug, PartialEq)]
pub struct QhsElement<S> {
    pub terms: Terms<S>,
}

impl<S: Scalar> QhsElement<S> {
    pub fn zero() -> Self {
        QhsElement { terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        QhsElement { terms: BTreeMap::from([(m, S::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        add_into(&mut t, &o.terms, &S::one());
        QhsElement { terms: t }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        add_into(&mut t, &o.terms, &S::one().neg());
        QhsElement { terms: t }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut t = BTreeMap::new();
        add_into(&mut t, &self.terms, c);
        QhsElement { terms: t }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn add_term<S: Scalar>(t: &mut Terms<S>, m: Monomial, c: S) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&m) {
        Some(x) => {
            let s = x.add(&c);
            if s.is_zero() {
                t.remove(&m);
            } else {
                *x = s;
            }
        }
        None => {
            t.insert(m, c);
        }
    }
}

fn add_into<S: Scalar>(t: &mut Terms<S>, o: &Terms<S>, c: &S) {
    for (m, x) in o {
        add_term(t, m.clone(), x.mul(c));
    }
}

fn negate_if<S: Scalar>(t: Terms<S>, neg: bool) -> Terms<S> {
    if !neg {
        return t;
    }
    t.into_iter().map(|(m, c)| (m, c.neg())).collect()
}

/// Vertex 0 is the only odd vertex.
fn odd(i: usize) -> bool {
    i == 0
}

fn least_left_descent(w: &Permutation) -> Option<usize> {
    (1..w.degree()).find(|&r| w.has_left_descent(r))
}

type Key = (usize, Permutation, Vec<usize>);

#[derive(Default)]
struct Memo<S> {
    y: HashMap<Key, Terms<S>>,
    psi: HashMap<Key, Terms<S>>,
    lead: HashMap<Key, Terms<S>>,
}

/// The presentation of R_θ together with a cache of generator actions.
pub struct Qhs<S> {
    pub ell: usize,
    pub theta: Vec<usize>,
    pub n: usize,
    pub roots: RootSystem,
    /// I^θ in lexicographic order.
    pub words: Vec<Vec<usize>>,
    pub y_cap: u32,
    memo: RefCell<Memo<S>>,
}

impl<S: Scalar> Qhs<S> {
    pub fn new(ell: usize, theta: &[usize], y_cap: u32) -> Result<Self, QhsError> {
        let roots = RootSystem::new(ell)?;
        let words = roots.words_of(theta)?;
        Ok(Qhs { ell, theta: theta.to_vec(), n: RootSystem::height(theta), roots, words, y_cap, memo: RefCell::new(Memo { y: HashMap::new(), psi: HashMap::new(), lead: HashMap::new() }) })
    }

    pub fn q_poly(&self, i: usize, j: usize) -> Poly {
        if i == j {
            return Vec::new();
        }
        if i.abs_diff(j) > 1 {
            return vec![(1, 0, 0)];
        }
        let sign = j as i64 - i as i64;
        let (lo, hi) = (i.min(j), i.max(j));
        let p = if lo == 0 {
            if self.ell == 1 {
                4
            } else {
                2
            }
        } else if hi == self.ell {
            2
        } else {
            1
        };
        // The power sits on the variable of the lower vertex, so that
        // Q_{i,j}(u,v) = Q_{j,i}(v,u) and Q is homogeneous.
        if i < j {
            vec![(sign, p, 0), (-sign, 0, 1)]
        } else {
            vec![(sign, 1, 0), (-sign, 0, p)]
        }
    }

    pub fn b_poly(&self, i: usize, j: usize, k: usize) -> Poly {
        if i != k {
            return Vec::new();
        }
        if i == j + 1 {
            return vec![(-1, 0, 0)];
        }
        if i + 1 != j {
            return Vec::new();
        }
        if i == 0 && self.ell == 1 {
            // (u²+v²)(v−u), with v² even so that v²u = uv².
            vec![(1, 2, 1), (-1, 3, 0), (1, 0, 3), (-1, 1, 2)]
        } else if i == 0 {
            vec![(1, 0, 1), (-1, 1, 0)]
        } else if i + 1 == self.ell {
            vec![(1, 1, 0), (1, 0, 1)]
        } else {
            vec![(1, 0, 0)]
        }
    }

    pub fn y_degree(&self, i: usize) -> i64 {
        self.roots.gram[i][i]
    }

    /// Bidegree of ψ_w 1_𝒊 along the chosen reduced word.
    pub fn psi_bidegree(&self, w: &Permutation, idem: &[usize]) -> BiDegree {
        let mut j = idem.to_vec();
        let mut deg = 0i64;
        let mut par = 0u8;
        for &r in w.reduced_word().iter().rev() {
            deg -= self.roots.gram[j[r - 1]][j[r]];
            par ^= u8::from(odd(j[r - 1]) && odd(j[r]));
            j.swap(r - 1, r);
        }
        BiDegree { deg, parity: par }
    }

    pub fn bidegree(&self, m: &Monomial) -> BiDegree {
        let mut d = self.psi_bidegree(&m.w, &m.idem);
        for (s, &e) in m.k.iter().enumerate() {
            d.deg += e as i64 * self.y_degree(m.idem[s]);
            if odd(m.idem[s]) {
                d.parity ^= (e % 2) as u8;
            }
        }
        d
    }

    /// The common bidegree of the terms, if homogeneous.
    pub fn element_bidegree(&self, x: &QhsElement<S>) -> Option<BiDegree> {
        let mut it = x.terms.keys().map(|m| self.bidegree(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn mono(&self, w: Permutation, idem: &[usize]) -> Monomial {
        Monomial { w, k: vec![0; self.n], idem: idem.to_vec() }
    }

    fn check_word(&self, idem: &[usize]) -> Result<(), QhsError> {
        if self.words.binary_search(&idem.to_vec()).is_err() {
            return Err(QhsError::BadIndex(format!("{idem:?} is not a word of {:?}", self.theta)));
        }
        Ok(())
    }

    pub fn idempotent(&self, idem: &[usize]) -> Result<QhsElement<S>, QhsError> {
        self.check_word(idem)?;
        Ok(QhsElement::monomial(self.mono(Permutation::identity(self.n), idem)))
    }

    pub fn one(&self) -> QhsElement<S> {
        let mut t = BTreeMap::new();
        for w in &self.words {
            add_term(&mut t, self.mono(Permutation::identity(self.n), w), S::one());
        }
        QhsElement { terms: t }
    }

    /// y_s 1_𝒊, with s 1-based.
    pub fn y(&self, s: usize, idem: &[usize]) -> Result<QhsElement<S>, QhsError> {
        self.check_word(idem)?;
        if s == 0 || s > self.n {
            return Err(QhsError::BadIndex(format!("y_{s}")));
        }
        let mut m = self.mono(Permutation::identity(self.n), idem);
        m.k[s - 1] = 1;
        Ok(QhsElement::monomial(m))
    }

    /// ψ_r 1_𝒊, with r 1-based.
    pub fn psi(&self, r: usize, idem: &[usize]) -> Result<QhsElement<S>, QhsError> {
        self.check_word(idem)?;
        if r == 0 || r >= self.n {
            return Err(QhsError::BadIndex(format!("ψ_{r}")));
        }
        Ok(QhsElement::monomial(self.mono(Permutation::s(r, self.n), idem)))
    }

    /// Σ_𝒊 y_s 1_𝒊.
    pub fn y_all(&self, s: usize) -> Result<QhsElement<S>, QhsError> {
        self.words.iter().try_fold(QhsElement::zero(), |acc, w| Ok(acc.add(&self.y(s, w)?)))
    }

    /// Σ_𝒊 ψ_r 1_𝒊.
    pub fn psi_all(&self, r: usize) -> Result<QhsElement<S>, QhsError> {
        self.words.iter().try_fold(QhsElement::zero(), |acc, w| Ok(acc.add(&self.psi(r, w)?)))
    }

    /// (y^a 1_𝒊)(y^b 1_𝒊) = ± y^{a+b} 1_𝒊; true when the sign is negative.
    fn merge_sign(idem: &[usize], a: &[u32], b: &[u32]) -> bool {
        let mut neg = false;
        for t in 0..idem.len() {
            if b[t] % 2 == 1 && odd(idem[t]) {
                for s in t + 1..idem.len() {
                    if a[s] % 2 == 1 && odd(idem[s]) {
                        neg = !neg;
                    }
                }
            }
        }
        neg
    }

    /// x · y^k on the right.
    fn times_y(x: &Terms<S>, k: &[u32]) -> Terms<S> {
        if k.iter().all(|&e| e == 0) {
            return x.clone();
        }
        let mut out = BTreeMap::new();
        for (m, c) in x {
            let neg = Self::merge_sign(&m.idem, &m.k, k);
            let mut m2 = m.clone();
            for (a, b) in m2.k.iter_mut().zip(k) {
                *a += b;
            }
            add_term(&mut out, m2, if neg { c.neg() } else { c.clone() });
        }
        out
    }

    fn single(&self, w: Permutation, idem: &[usize]) -> Terms<S> {
        BTreeMap::from([(self.mono(w, idem), S::one())])
    }

    /// y_s ψ_w 1_𝒊.
    fn y_on(&self, s: usize, w: &Permutation, idem: &[usize]) -> Terms<S> {
        let key = (s, w.clone(), idem.to_vec());
        if let Some(t) = self.memo.borrow().y.get(&key) {
            return t.clone();
        }
        let out = match least_left_descent(w) {
            None => {
                let mut m = self.mono(w.clone(), idem);
                m.k[s - 1] = 1;
                BTreeMap::from([(m, S::one())])
            }
            Some(r) => {
                let rest = w.left_mul_s(r);
                let j = rest.act(idem);
                let eps = odd(j[r - 1]) && odd(j[r]);
                let same = j[r - 1] == j[r];
                if s != r && s != r + 1 {
                    let inner = self.y_on(s, &rest, idem);
                    negate_if(self.psi_terms(r, &inner), eps && odd(j[s - 1]))
                } else if s == r + 1 {
                    let mut out = negate_if(self.psi_terms(r, &self.y_on(r, &rest, idem)), eps);
                    if same {
                        add_term(&mut out, self.mono(rest, idem), S::one());
                    }
                    out
                } else {
                    let mut out = self.psi_terms(r, &self.y_on(r + 1, &rest, idem));
                    if same {
                        add_term(&mut out, self.mono(rest, idem), S::one().neg());
                    }
                    negate_if(out, eps)
                }
            }
        };
        self.memo.borrow_mut().y.insert(key, out.clone());
        out
    }

    /// ψ_r ψ_w 1_𝒊.
    fn psi_on(&self, r: usize, w: &Permutation, idem: &[usize]) -> Terms<S> {
        if !w.has_left_descent(r) {
            return self.lead(r, w, idem);
        }
        let key = (r, w.clone(), idem.to_vec());
        if let Some(t) = self.memo.borrow().psi.get(&key) {
            return t.clone();
        }
        // c·ψ_w = ψ_rψ_{w'} − L, so ψ_rψ_w = c(Q·ψ_{w'} − ψ_r L).
        let w1 = w.left_mul_s(r);
        let (c, lower) = self.split_lead(self.lead(r, &w1, idem), w, idem);
        let j = w1.act(idem);
        let q = self.q_poly(j[r - 1], j[r]);
        let mut out = self.apply_poly(&q, r, r + 1, &self.single(w1, idem));
        add_into(&mut out, &self.psi_terms(r, &lower), &S::one().neg());
        let out = negate_if(out, c);
        self.memo.borrow_mut().psi.insert(key, out.clone());
        out
    }

    /// Separates ±ψ_w 1_𝒊 from the shorter terms; true when the sign is negative.
    fn split_lead(&self, mut t: Terms<S>, w: &Permutation, idem: &[usize]) -> (bool, Terms<S>) {
        let c = t.remove(&self.mono(w.clone(), idem)).expect("rewriting keeps the leading word");
        debug_assert!(c.is_one() || c.neg().is_one());
        (!c.is_one(), t)
    }

    /// ψ_r ψ_x 1_𝒊 when ℓ(s_r x) > ℓ(x).
    fn lead(&self, r: usize, x: &Permutation, idem: &[usize]) -> Terms<S> {
        let v = x.left_mul_s(r);
        let a = least_left_descent(&v).expect("v is not the identity");
        if a == r {
            return self.single(v, idem);
        }
        let key = (r, x.clone(), idem.to_vec());
        if let Some(t) = self.memo.borrow().lead.get(&key) {
            return t.clone();
        }
        let out = if a.abs_diff(r) > 1 {
            // ψ_rψ_a = ±ψ_aψ_r, and ψ_x = ψ_aψ_y.
            let y = x.left_mul_s(a);
            let j = y.act(idem);
            let neg = odd(j[r - 1]) && odd(j[r]) && odd(j[a - 1]) && odd(j[a]);
            negate_if(self.psi_terms(a, &self.lead(r, &y, idem)), neg)
        } else {
            // a = r−1 and ψ_x = ψ_aψ_y with ψ_y = ±(ψ_rψ_z − L); then braid.
            let y = x.left_mul_s(a);
            let z = y.left_mul_s(r);
            let (c, lower) = self.split_lead(self.lead(r, &z, idem), &y, idem);
            let mut out = self.psi_terms(a, &self.psi_terms(r, &self.lead(a, &z, idem)));
            let j = z.act(idem);
            let b = self.b_poly(j[a - 1], j[a], j[a + 1]);
            add_into(&mut out, &self.apply_poly(&b, a, a + 2, &self.single(z, idem)), &S::one());
            add_into(&mut out, &self.psi_terms(r, &self.psi_terms(a, &lower)), &S::one().neg());
            negate_if(out, c)
        };
        self.memo.borrow_mut().lead.insert(key, out.clone());
        out
    }

    fn psi_terms(&self, r: usize, x: &Terms<S>) -> Terms<S> {
        let mut out = BTreeMap::new();
        for (m, c) in x {
            add_into(&mut out, &Self::times_y(&self.psi_on(r, &m.w, &m.idem), &m.k), c);
        }
        out
    }

    fn y_terms(&self, s: usize, x: &Terms<S>) -> Terms<S> {
        let mut out = BTreeMap::new();
        for (m, c) in x {
            add_into(&mut out, &Self::times_y(&self.y_on(s, &m.w, &m.idem), &m.k), c);
        }
        out
    }

    /// P(y_a, y_b)·x.
    fn apply_poly(&self, p: &Poly, va: usize, vb: usize, x: &Terms<S>) -> Terms<S> {
        let mut out = BTreeMap::new();
        for &(c, ea, eb) in p {
            let mut cur = x.clone();
            for _ in 0..eb {
                cur = self.y_terms(vb, &cur);
            }
            for _ in 0..ea {
                cur = self.y_terms(va, &cur);
            }
            add_into(&mut out, &cur, &S::from_i64(c));
        }
        out
    }

    fn check_cap(&self, t: &Terms<S>) -> Result<(), QhsError> {
        match t.keys().map(Monomial::y_total).max() {
            Some(got) if got > self.y_cap => Err(QhsError::YCap { got, cap: self.y_cap }),
            _ => Ok(()),
        }
    }

    /// Normal form of x·y.
    pub fn multiply(&self, x: &QhsElement<S>, y: &QhsElement<S>) -> Result<QhsElement<S>, QhsError> {
        let mut acc = BTreeMap::new();
        for (mx, cx) in &x.terms {
            let word = mx.w.reduced_word();
            for (my, cy) in &y.terms {
                if mx.idem != my.left_idem() {
                    continue;
                }
                let mut cur = BTreeMap::from([(my.clone(), cy.clone())]);
                for s in (1..=self.n).rev() {
                    for _ in 0..mx.k[s - 1] {
                        cur = self.y_terms(s, &cur);
                    }
                }
                for &r in word.iter().rev() {
                    cur = self.psi_terms(r, &cur);
                }
                add_into(&mut acc, &cur, cx);
            }
        }
        self.check_cap(&acc)?;
        Ok(QhsElement { terms: acc })
    }

    /// Left action ψ_r·x.
    pub fn left_psi(&self, r: usize, x: &QhsElement<S>) -> QhsElement<S> {
        QhsElement { terms: self.psi_terms(r, &x.terms) }
    }

    /// Left action y_s·x.
    pub fn left_y(&self, s: usize, x: &QhsElement<S>) -> QhsElement<S> {
        QhsElement { terms: self.y_terms(s, &x.terms) }
    }

    /// Normal form of y^k ψ_w 1_𝒊.
    pub fn y_psi(&self, k: &[u32], w: &Permutation, idem: &[usize]) -> QhsElement<S> {
        let mut cur = self.single(w.clone(), idem);
        for s in (1..=self.n).rev() {
            for _ in 0..k[s - 1] {
                cur = self.y_terms(s, &cur);
            }
        }
        QhsElement { terms: cur }
    }

    /// Smallest degree of a monomial, attained by some ψ_w 1_𝒊.
    pub fn min_degree(&self) -> i64 {
        let perms = Permutation::all(self.n);
        self.words.iter().flat_map(|i| perms.iter().map(move |w| (w, i))).map(|(w, i)| self.psi_bidegree(w, i).deg).min().unwrap_or(0)
    }

    /// Exponent vectors with Σ k_s·(α_{i_s}|α_{i_s}) = target.
    fn exponents(&self, idem: &[usize], target: i64) -> Vec<Vec<u32>> {
        fn rec(ds: &[i64], pos: usize, rem: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos == ds.len() {
                if rem == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0;
            while e as i64 * ds[pos] <= rem {
                cur[pos] = e;
                rec(ds, pos + 1, rem - e as i64 * ds[pos], cur, out);
                e += 1;
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        if target < 0 {
            return out;
        }
        let ds: Vec<i64> = idem.iter().map(|&i| self.y_degree(i)).collect();
        rec(&ds, 0, target, &mut vec![0; self.n], &mut out);
        out
    }

    /// Normal-form monomials of degree m, sorted.
    pub fn monomials_of_degree(&self, m: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        for w in Permutation::all(self.n) {
            for i in &self.words {
                let d0 = self.psi_bidegree(&w, i).deg;
                for k in self.exponents(i, m - d0) {
                    out.push(Monomial { w: w.clone(), k, idem: i.clone() });
                }
            }
        }
        out.sort();
        out
    }

    /// Largest total y-degree among monomials of degree m.
    pub fn cap_needed(&self, m: i64) -> u32 {
        let dmin = (0..=self.ell).filter(|&i| self.theta[i] > 0).map(|i| self.y_degree(i)).min().unwrap_or(1);
        let top = m - self.min_degree();
        if top < 0 {
            0
        } else {
            (top / dmin) as u32
        }
    }

    /// Rank of R_θ^m by counting normal forms, against the rank of the
    /// reduced products y^k·ψ_w 1_𝒊 of that degree.
    pub fn graded_dim(&self, m: i64) -> Result<GradedDim, QhsError> {
        let need = self.cap_needed(m);
        if need > self.y_cap {
            return Err(QhsError::CapInsufficient { degree: m, need, cap: self.y_cap });
        }
        let basis = self.monomials_of_degree(m);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(a, b)| (b, a)).collect();
        let mut span = SpanBasis::<S>::new(false);
        let mut stray = false;
        let mut alt = 0;
        for w in Permutation::all(self.n) {
            for i in &self.words {
                let left = w.act(i);
                for k in self.exponents(&left, m - self.psi_bidegree(&w, i).deg) {
                    alt += 1;
                    let x = self.y_psi(&k, &w, i);
                    let mut pairs = Vec::with_capacity(x.len());
                    for (m2, c) in &x.terms {
                        match index.get(m2) {
                            Some(&p) => pairs.push((p, c.clone())),
                            None => stray = true,
                        }
                    }
                    span.insert(&SparseVec::from_pairs(pairs));
                }
            }
        }
        Ok(GradedDim { degree: m, count: basis.len(), alternative: alt, rank: span.rank(), homogeneous: !stray })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDim {
    pub degree: i64,
    pub count: usize,
    /// Number of products y^k ψ_w 1_𝒊 of degree m.
    pub alternative: usize,
    pub rank: usize,
    /// Every reduced product stayed inside degree m.
    pub homogeneous: bool,
}

impl GradedDim {
    pub fn agrees(&self) -> bool {
        self.homogeneous && self.count == self.rank && self.alternative == self.count
    }
}
