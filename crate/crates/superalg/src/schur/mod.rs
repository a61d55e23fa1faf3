//! Generalized Schur superalgebras S^{𝖠_ℓ}(n,d) = (M_n(𝖠_ℓ)^{⊗d})^{𝔖_d} and
//! their integral forms T^{𝖠_ℓ}(n,d), tensor space and permutation modules.
//!
//! A basis element ξ is the signed 𝔖_d-orbit sum of a pure tensor in the
//! ambient algebra M_n(𝖠_ℓ)^{⊗d}, normalized to coefficient 1 at the
//! lexicographically least member of the orbit. Products are taken in the
//! ambient algebra and read off at orbit representatives.

mod ambient;
mod tensor;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::brauer::BrauerError;
use crate::coeffs::{Rational, Scalar, SpanBasis, SparseVec};
use crate::combin::{binomial, compositions, factorial, multicompositions, JMultiComposition};
use crate::superkernel::{BasedSuperalgebra, BiDegree, KernelError};

pub use ambient::Ambient;
pub use tensor::{perm_module, perm_module_rank, tensor_space, PermutationModule, Summand, TensorSpace, WreathGenerator};

/// Largest ambient rank (n²(4ℓ−1))^d accepted by the constructors.
pub const AMBIENT_LIMIT: u128 = 10_000_000;
/// Largest tensor-space rank (n(4ℓ−1))^d accepted by [`tensor_space`].
pub const TENSOR_LIMIT: u128 = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("n, d and ℓ must be positive")]
    BadSize,
    #[error("rank {rank} exceeds the limit {limit}")]
    TooLarge { rank: u128, limit: u128 },
    #[error("structure constant {0} is not integral over the coefficient ring")]
    NonIntegral(String),
    #[error("element is not invariant under the signed 𝔖_d-action")]
    NotInvariant,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// S^{𝖠_ℓ}(n,d) on the ξ basis.
#[derive(Clone, Debug)]
pub struct SchurAlgebra<S> {
    pub ambient: Ambient,
    /// Orbit representatives, as words of ambient factors in canonical order.
    pub triples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// Each basis element as (negated?, word) terms of its orbit sum.
    orbits: Vec<Vec<(bool, Vec<usize>)>>,
    pub algebra: BasedSuperalgebra<S>,
}

/// Enumerates Tri^{𝖡_ℓ}(n,d)/𝔖_d as weakly increasing words in canonical
/// order, strictly increasing across odd factors.
fn orbit_representatives(amb: &Ambient) -> Vec<Vec<usize>> {
    let order = amb.canonical_factors();
    let mut out = Vec::new();
    fn rec(amb: &Ambient, order: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == amb.d {
            out.push(cur.clone());
            return;
        }
        for k in start..order.len() {
            cur.push(order[k]);
            let next = if amb.is_odd(order[k]) { k + 1 } else { k };
            rec(amb, order, next, cur, out);
            cur.pop();
        }
    }
    rec(amb, &order, 0, &mut Vec::new(), &mut out);
    out
}

/// Builds S^{𝖠_ℓ}(n,d).
pub fn schur_s<S: Scalar>(n: usize, d: usize, ell: usize) -> Result<SchurAlgebra<S>, SchurError> {
    let ambient = Ambient::new(n, d, ell)?;
    let triples = orbit_representatives(&ambient);
    let index: HashMap<Vec<usize>, usize> = triples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let orbits: Vec<Vec<(bool, Vec<usize>)>> = triples.iter().map(|t| ambient.orbit(t)).collect();
    let labels = triples.iter().map(|t| ambient.word_label(t)).collect();
    let degrees = triples.iter().map(|t| ambient.word_degree(t)).collect();
    let unit = read_representatives(&index, &ambient.unit::<S>(), &ambient);
    let algebra = BasedSuperalgebra::from_fn(format!("S^A_{ell}({n},{d})"), labels, degrees, unit, |i, j| {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (nx, x) in &orbits[i] {
            for (ny, y) in &orbits[j] {
                let Some((neg, w)) = ambient.word_mul(x, y) else { continue };
                if let Some(&k) = index.get(&w) {
                    crate::coeffs::accumulate(&mut acc, k, &S::signed(neg ^ nx ^ ny));
                }
            }
        }
        SparseVec::from_map(acc)
    });
    Ok(SchurAlgebra { ambient, triples, index, orbits, algebra })
}

/// Coefficients of an invariant ambient element at the orbit representatives.
fn read_representatives<S: Scalar>(index: &HashMap<Vec<usize>, usize>, x: &SparseVec<S>, amb: &Ambient) -> SparseVec<S> {
    SparseVec::from_pairs(x.iter().filter_map(|(w, c)| index.get(&amb.decode(w)).map(|&k| (k, c.clone()))))
}

impl<S: Scalar> SchurAlgebra<S> {
    pub fn rank(&self) -> usize {
        self.triples.len()
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// ξ_k expanded in the ambient algebra.
    pub fn expand(&self, k: usize) -> SparseVec<S> {
        SparseVec::from_pairs(self.orbits[k].iter().map(|(neg, w)| (self.ambient.encode(w), S::signed(*neg))))
    }

    /// An S-element expanded in the ambient algebra.
    pub fn expand_element(&self, x: &SparseVec<S>) -> SparseVec<S> {
        x.iter().fold(SparseVec::zero(), |acc, (k, c)| acc.add_scaled(&self.expand(k), c))
    }

    /// Rewrites an ambient element in the ξ basis, checking invariance.
    pub fn compress(&self, x: &SparseVec<S>) -> Result<SparseVec<S>, SchurError> {
        let y = read_representatives(&self.index, x, &self.ambient);
        if self.expand_element(&y) != *x {
            return Err(SchurError::NotInvariant);
        }
        Ok(y)
    }

    /// ξ^{w}: the orbit sum normalized to coefficient 1 at the word `w`,
    /// zero when an odd factor repeats.
    pub fn xi_word(&self, w: &[usize]) -> SparseVec<S> {
        let (neg, canon) = self.ambient.sort_word(w);
        match self.index.get(&canon) {
            Some(&k) => SparseVec::single(k, S::signed(neg)),
            None => SparseVec::zero(),
        }
    }

    /// [𝒃,𝒓,𝒔]^!_c: product of factorials of the multiplicities of the
    /// c^{[j]}-factors.
    pub fn c_factorial(&self, k: usize) -> u128 {
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for &f in &self.triples[k] {
            if self.ambient.is_c(f) {
                *mult.entry(f).or_default() += 1;
            }
        }
        mult.values().map(|&m| factorial(m)).product()
    }

    /// ξ_𝝀 for 𝝀 ∈ Λ^J(n,d).
    pub fn xi_lambda(&self, lambda: &JMultiComposition) -> Result<SparseVec<S>, SchurError> {
        let amb = &self.ambient;
        check_multicomposition(lambda, amb.basis.ell, amb.n, amb.d)?;
        let mut w = Vec::with_capacity(amb.d);
        for r in 0..amb.n {
            for (j, part) in lambda.iter().enumerate() {
                w.extend(std::iter::repeat(amb.factor(amb.basis.e(j), r, r)).take(part[r]));
            }
        }
        Ok(self.xi_word(&w))
    }

    /// 𝚒_{r,s}(x) = Σ_c 1^{⊗c} ⊗ ξ^x_{r,s} ⊗ 1^{⊗(d−c−1)}, with 1 ≤ r, s ≤ n
    /// and x an element of 𝖠_ℓ in its basis.
    pub fn i_rs(&self, r: usize, s: usize, x: &SparseVec<S>) -> Result<SparseVec<S>, SchurError> {
        let amb = &self.ambient;
        if r == 0 || s == 0 || r > amb.n || s > amb.n {
            return Err(SchurError::Malformed(format!("row or column out of range: ({r},{s})")));
        }
        let one = amb.matrix_unit_one();
        let mut total = SparseVec::zero();
        for c in 0..amb.d {
            for (b, xb) in x.iter() {
                let mid = amb.factor(b, r - 1, s - 1);
                let mut terms: Vec<Vec<usize>> = vec![Vec::new()];
                for k in 0..amb.d {
                    let choices: Vec<usize> = if k == c { vec![mid] } else { one.clone() };
                    terms = terms.iter().flat_map(|t| choices.iter().map(move |&f| [t.as_slice(), &[f]].concat())).collect();
                }
                let part = SparseVec::from_pairs(terms.iter().map(|t| (amb.encode(t), xb.clone())));
                total = total.add(&part);
            }
        }
        self.compress(&total)
    }

    /// 𝚒^𝝀(x) = ξ^{x·e{𝝀}}_{1 2^{h_1}⋯n^{h_{n−1}}, same} for 𝝀 ∈ Λ^J(n−1,d−1).
    pub fn i_la(&self, lambda: &JMultiComposition, x: &SparseVec<S>) -> Result<SparseVec<S>, SchurError> {
        let amb = &self.ambient;
        if amb.n < 2 && amb.d > 1 {
            return Err(SchurError::Malformed("𝚒^𝝀 needs n ≥ 2 when d ≥ 2".into()));
        }
        check_multicomposition(lambda, amb.basis.ell, amb.n - 1, amb.d - 1)?;
        let mut rest = Vec::with_capacity(amb.d - 1);
        for r in 0..amb.n - 1 {
            for (j, part) in lambda.iter().enumerate() {
                rest.extend(std::iter::repeat(amb.factor(amb.basis.e(j), r + 1, r + 1)).take(part[r]));
            }
        }
        let mut out = SparseVec::zero();
        for (b, xb) in x.iter() {
            let mut w = vec![amb.factor(b, 0, 0)];
            w.extend_from_slice(&rest);
            out = out.add_scaled(&self.xi_word(&w), xb);
        }
        Ok(out)
    }

    /// ξ^{𝒂}_{𝒓,𝒔} for factors 𝒂 taken from a set of homogeneous elements of
    /// 𝖠_ℓ: the signed sum over distinct rearrangements of the symbolic
    /// triple, expanded multilinearly. Rows and columns are 1-based.
    pub fn xi_symbolic(&self, factors: &[(SparseVec<S>, usize, usize)]) -> Result<SparseVec<S>, SchurError> {
        let amb = &self.ambient;
        if factors.len() != amb.d {
            return Err(SchurError::Malformed(format!("expected {} factors", amb.d)));
        }
        let mut odd = Vec::with_capacity(amb.d);
        for (a, r, s) in factors {
            if *r == 0 || *s == 0 || *r > amb.n || *s > amb.n {
                return Err(SchurError::Malformed("row or column out of range".into()));
            }
            let parities: Vec<u8> = a.iter().map(|(b, _)| amb.basis.std_degree(b).parity).collect();
            if parities.windows(2).any(|p| p[0] != p[1]) || a.is_zero() {
                return Err(SchurError::Malformed("factors must be nonzero and homogeneous".into()));
            }
            odd.push(parities[0] == 1);
        }
        // Symbolic ids: equal factors share an id.
        let mut ids = Vec::with_capacity(amb.d);
        for (k, f) in factors.iter().enumerate() {
            ids.push(factors[..k].iter().position(|g| g == f).unwrap_or(k));
        }
        let mut seen: HashMap<Vec<usize>, bool> = HashMap::new();
        for g in crate::combin::Permutation::all(amb.d) {
            let tagged: Vec<(usize, bool)> = ids.iter().copied().zip(odd.iter().copied()).collect();
            let (neg, moved) = crate::superkernel::signed_place_action(&g, &tagged, |t| t.1);
            let key: Vec<usize> = moved.iter().map(|t| t.0).collect();
            if let Some(prev) = seen.get(&key) {
                if *prev != neg {
                    return Ok(SparseVec::zero());
                }
            } else {
                seen.insert(key, neg);
            }
        }
        let mut total = SparseVec::zero();
        for (key, neg) in seen {
            let mut terms: Vec<(S, Vec<usize>)> = vec![(S::signed(neg), Vec::new())];
            for &id in &key {
                let (a, r, s) = &factors[id];
                terms = terms
                    .iter()
                    .flat_map(|(c, t)| {
                        a.iter().map(move |(b, ab)| (c.mul(ab), [t.as_slice(), &[amb.factor(b, r - 1, s - 1)]].concat()))
                    })
                    .collect();
            }
            total = total.add(&SparseVec::from_pairs(terms.into_iter().map(|(c, t)| (amb.encode(&t), c))));
        }
        self.compress(&total)
    }
}

fn check_multicomposition(lambda: &JMultiComposition, ell: usize, n: usize, d: usize) -> Result<(), SchurError> {
    if lambda.len() != ell || lambda.iter().any(|c| c.len() != n) {
        return Err(SchurError::Malformed(format!("expected {ell} compositions of length {n}")));
    }
    if lambda.iter().flatten().sum::<usize>() != d {
        return Err(SchurError::Malformed(format!("multicomposition does not have size {d}")));
    }
    Ok(())
}

/// T^{𝖠_ℓ}(n,d) on the η basis η = [𝒃,𝒓,𝒔]^!_c ξ, over any ring in which
/// its structure constants are integral.
#[derive(Clone, Debug)]
pub struct SchurT<S> {
    /// S over ℚ, sharing the triple indexing.
    pub schur: SchurAlgebra<Rational>,
    /// η_k = scale[k]·ξ_k.
    pub scale: Vec<u128>,
    pub algebra: BasedSuperalgebra<S>,
}

/// Builds T^{𝖠_ℓ}(n,d) by rescaling the structure constants of S over ℚ.
pub fn schur_t<S: Scalar>(n: usize, d: usize, ell: usize) -> Result<SchurT<S>, SchurError> {
    let schur = schur_s::<Rational>(n, d, ell)?;
    let scale: Vec<u128> = (0..schur.rank()).map(|k| schur.c_factorial(k)).collect();
    let q = |k: usize| integer(scale[k]);
    let mut table: HashMap<(usize, usize), SparseVec<S>> = HashMap::new();
    for (&(i, j), v) in schur.algebra.nonzero_products() {
        let mut terms = Vec::with_capacity(v.len());
        for (k, c) in v.iter() {
            let eta = c.mul(&q(i)).mul(&q(j)).mul(&q(k).inv().expect("nonzero"));
            let s = S::from_rational(&eta).ok_or_else(|| SchurError::NonIntegral(eta.to_string()))?;
            terms.push((k, s));
        }
        table.insert((i, j), SparseVec::from_pairs(terms));
    }
    let unit = to_eta::<S>(schur.algebra.unit(), &scale)?;
    let a = &schur.algebra;
    let algebra = BasedSuperalgebra::from_fn(
        format!("T^A_{ell}({n},{d})"),
        a.labels().to_vec(),
        a.degrees().to_vec(),
        unit,
        |i, j| table.get(&(i, j)).cloned().unwrap_or_else(SparseVec::zero),
    );
    Ok(SchurT { schur, scale, algebra })
}

fn integer(n: u128) -> Rational {
    Rational(num::BigRational::from_integer(n.into()))
}

/// ξ-coordinates over ℚ to η-coordinates over `S`.
fn to_eta<S: Scalar>(x: &SparseVec<Rational>, scale: &[u128]) -> Result<SparseVec<S>, SchurError> {
    let mut out = Vec::with_capacity(x.len());
    for (k, c) in x.iter() {
        let v = c.mul(&integer(scale[k]).inv().expect("nonzero"));
        out.push((k, S::from_rational(&v).ok_or_else(|| SchurError::NonIntegral(v.to_string()))?));
    }
    Ok(SparseVec::from_pairs(out))
}

impl<S: Scalar> SchurT<S> {
    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    /// An element of S over ℚ (ξ-coordinates) in η-coordinates over `S`;
    /// fails unless it lies in T over the ring.
    pub fn from_xi(&self, x: &SparseVec<Rational>) -> Result<SparseVec<S>, SchurError> {
        to_eta(x, &self.scale)
    }

    /// Ranks of the homogeneous components, by bidegree.
    pub fn graded_ranks(&self) -> BTreeMap<BiDegree, usize> {
        graded_ranks(&self.algebra)
    }
}

pub fn graded_ranks<S: Scalar>(a: &BasedSuperalgebra<S>) -> BTreeMap<BiDegree, usize> {
    let mut out = BTreeMap::new();
    for &deg in a.degrees() {
        *out.entry(deg).or_insert(0) += 1;
    }
    out
}

/// Outcome of a span closure inside a based superalgebra.
#[derive(Clone, Debug)]
pub struct GenerationReport {
    /// Bidegree ↦ (rank generated, rank of the ambient algebra).
    pub ranks: BTreeMap<BiDegree, (usize, usize)>,
    pub equal: bool,
}

/// The subalgebra generated by `seeds` (split into homogeneous parts),
/// computed by closing the span under right multiplication by the seeds.
pub fn generated_subalgebra<S: Scalar>(a: &BasedSuperalgebra<S>, seeds: &[SparseVec<S>]) -> GenerationReport {
    let mut gens = Vec::new();
    for s in seeds {
        let degs: std::collections::BTreeSet<BiDegree> = s.iter().map(|(k, _)| a.degree(k)).collect();
        gens.extend(degs.into_iter().map(|d| a.homogeneous_part(s, d)));
    }
    let mut spans: BTreeMap<BiDegree, SpanBasis<S>> = BTreeMap::new();
    let mut queue: Vec<SparseVec<S>> = Vec::new();
    let push = |v: SparseVec<S>, spans: &mut BTreeMap<BiDegree, SpanBasis<S>>, queue: &mut Vec<SparseVec<S>>| {
        if let Some(deg) = a.element_degree(&v) {
            if spans.entry(deg).or_insert_with(|| SpanBasis::new(false)).insert(&v) {
                queue.push(v);
            }
        }
    };
    for part in a.degrees().iter().copied().collect::<std::collections::BTreeSet<_>>() {
        let u = a.homogeneous_part(a.unit(), part);
        if !u.is_zero() {
            push(u, &mut spans, &mut queue);
        }
    }
    for g in &gens {
        push(g.clone(), &mut spans, &mut queue);
    }
    while let Some(v) = queue.pop() {
        for g in &gens {
            let p = a.mul(&v, g);
            if !p.is_zero() {
                push(p, &mut spans, &mut queue);
            }
        }
    }
    let full = graded_ranks(a);
    let ranks: BTreeMap<BiDegree, (usize, usize)> =
        full.iter().map(|(d, &r)| (*d, (spans.get(d).map_or(0, |s| s.rank()), r))).collect();
    let equal = ranks.values().all(|(g, f)| g == f);
    GenerationReport { ranks, equal }
}

/// Rank of T^0 ≅ S^J(n,d): Σ_{d_0+⋯+d_{ℓ−1}=d} Π_j binom(n²+d_j−1, d_j).
pub fn degree_zero_dims(n: usize, d: usize, ell: usize) -> u128 {
    if ell == 0 {
        return 0;
    }
    compositions(ell, d).iter().map(|ds| ds.iter().map(|&dj| binomial(n * n + dj - 1, dj)).product::<u128>()).sum()
}

/// Λ^J(n,d), the index set of the idempotents ξ_𝝀.
pub fn lambda_j(n: usize, d: usize, ell: usize) -> Vec<JMultiComposition> {
    multicompositions(ell, n, d)
}

#[cfg(test)]
mod tests;
