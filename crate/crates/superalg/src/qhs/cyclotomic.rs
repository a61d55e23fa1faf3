//! Level-one cyclotomic quotients H_θ = R_θ/I with I generated by y_1 and the
//! 1_𝒊 with i_1 ≠ 0.
//!
//! The y's supercommute and preserve idempotents, so I is spanned by the
//! products ψ_u·c with c either a monomial whose left idempotent 𝒍 has
//! l_1 ≠ 0, or y_1 times a monomial. Every I^m is therefore computed exactly
//! from finitely many products; only the choice of degree window is a
//! heuristic. Idempotents with first letter ≠ 0 vanish on both sides, so only
//! the corner ⊕ 1_𝒂 R 1_𝒃 with a_1 = b_1 = 0 is tracked.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::coeffs::{Scalar, SparseVec, SpanBasis};
use crate::combin::Permutation;
use crate::rootdata::{flatten, RootSystem};
use crate::superkernel::{BasedSuperalgebra, BiDegree};

use super::{Monomial, Qhs, QhsElement, QhsError};

/// ht(θ) ≤ 5.
pub const CLOSE_HEIGHT_GUARD: usize = 5;
/// ℓ ≤ 2.
pub const CLOSE_RANK_GUARD: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub degree: i64,
    /// Rank of the corner of R_θ^m.
    pub rank_r: usize,
    pub rank_ideal: usize,
    pub rank_h: usize,
}

#[derive(Clone, Debug)]
pub struct CyclotomicResult<S> {
    pub ell: usize,
    pub theta: Vec<usize>,
    pub min_degree: i64,
    pub max_degree: i64,
    pub window: usize,
    pub ranks: Vec<DegreeRank>,
    /// H^m = 0 on the window at the top, and at the bottom unless the window
    /// reaches the lowest degree of R_θ.
    pub stabilized: bool,
    /// H^0 ≠ 0, which for a unital algebra is equivalent to H_θ ≠ 0.
    pub nonzero: bool,
    /// Rank of 1_𝒂 H 1_𝒃 over the computed degrees, keyed by (𝒂, 𝒃).
    pub blocks: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
    /// Monomials whose images form a basis of H over the computed degrees.
    pub representatives: Vec<Monomial>,
    pub algebra: Option<BasedSuperalgebra<S>>,
}

impl<S> CyclotomicResult<S> {
    pub fn total_rank(&self) -> usize {
        self.ranks.iter().map(|r| r.rank_h).sum()
    }
}

struct Component<S> {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: SpanBasis<S>,
}

fn in_corner(m: &Monomial) -> bool {
    m.idem.first() == Some(&0) && m.left_idem().first() == Some(&0)
}

/// Maximal degree of a generator plus four.
pub fn default_window(roots: &RootSystem) -> usize {
    let g = &roots.gram;
    let top = (0..g.len()).flat_map(|i| (0..g.len()).map(move |j| if i == j { g[i][i] } else { -g[i][j] })).max().unwrap_or(0);
    top as usize + 4
}

struct Closer<'a, S> {
    q: &'a Qhs<S>,
    perms: Vec<Permutation>,
    /// Monomials of a degree with right idempotent in the corner, by left idempotent.
    by_left: HashMap<i64, HashMap<Vec<usize>, Vec<Monomial>>>,
}

impl<S: Scalar> Closer<'_, S> {
    fn with_left(&mut self, p: i64, l: &[usize]) -> Vec<Monomial> {
        let q = self.q;
        let groups = self.by_left.entry(p).or_insert_with(|| {
            let mut g: HashMap<Vec<usize>, Vec<Monomial>> = HashMap::new();
            for m in q.monomials_of_degree(p) {
                if m.idem[0] == 0 {
                    g.entry(m.left_idem()).or_default().push(m);
                }
            }
            g
        });
        groups.get(l).cloned().unwrap_or_default()
    }

    fn component(&mut self, m: i64) -> Result<Component<S>, QhsError> {
        let q = self.q;
        let basis: Vec<Monomial> = q.monomials_of_degree(m).into_iter().filter(in_corner).collect();
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(a, b)| (b.clone(), a)).collect();
        let mut ideal = SpanBasis::new(false);
        let y1 = q.y_degree(0);
        'outer: for u in self.perms.clone() {
            for l in &q.words {
                if u.act(l)[0] != 0 {
                    continue;
                }
                let mut left = Monomial { w: u.clone(), k: vec![0; q.n], idem: l.clone() };
                let mut p = m - q.psi_bidegree(&u, l).deg;
                if l[0] == 0 {
                    left.k[0] = 1;
                    p -= y1;
                }
                let left = QhsElement::monomial(left);
                for c in self.with_left(p, l) {
                    if ideal.rank() == basis.len() {
                        break 'outer;
                    }
                    let prod = q.multiply(&left, &QhsElement::monomial(c))?;
                    let v = SparseVec::from_pairs(prod.terms.iter().map(|(x, s)| (index[x], s.clone())));
                    ideal.insert(&v);
                }
            }
        }
        Ok(Component { basis, index, ideal })
    }
}

/// Ranks of H_θ^m for −max_degree ≤ m ≤ max_degree, with the based algebra
/// assembled on coset representatives when the window shows stabilization.
pub fn cyclotomic_close<S: Scalar>(ell: usize, theta: &[usize], max_degree: i64, window: Option<usize>) -> Result<CyclotomicResult<S>, QhsError> {
    if ell > CLOSE_RANK_GUARD {
        return Err(QhsError::Guard(format!("ℓ = {ell} > {CLOSE_RANK_GUARD}")));
    }
    let n = RootSystem::height(theta);
    if n > CLOSE_HEIGHT_GUARD {
        return Err(QhsError::Guard(format!("ht(θ) = {n} > {CLOSE_HEIGHT_GUARD}")));
    }
    let q = Qhs::<S>::new(ell, theta, u32::MAX)?;
    let window = window.unwrap_or_else(|| default_window(&q.roots));
    let perms = Permutation::all(n);
    let corner_min = q
        .words
        .iter()
        .filter(|i| i.first().map_or(true, |&x| x == 0))
        .flat_map(|i| perms.iter().filter(move |w| w.act(i).first().map_or(true, |&x| x == 0)).map(move |w| (w, i)))
        .map(|(w, i)| q.psi_bidegree(w, i).deg)
        .min();
    let Some(corner_min) = corner_min else {
        // Every idempotent has first letter ≠ 0, so H_θ = 0.
        return Ok(CyclotomicResult { ell, theta: theta.to_vec(), min_degree: 0, max_degree, window, ranks: Vec::new(), stabilized: true, nonzero: false, blocks: BTreeMap::new(), representatives: Vec::new(), algebra: None });
    };
    let lo = corner_min.max(-max_degree);
    let mut closer = Closer { q: &q, perms, by_left: HashMap::new() };
    let mut comps: BTreeMap<i64, Component<S>> = BTreeMap::new();
    let mut ranks = Vec::new();
    for m in lo..=max_degree {
        let c = if n == 0 {
            let basis = q.monomials_of_degree(m);
            let index = basis.iter().enumerate().map(|(a, b)| (b.clone(), a)).collect();
            Component { basis, index, ideal: SpanBasis::new(false) }
        } else {
            closer.component(m)?
        };
        ranks.push(DegreeRank { degree: m, rank_r: c.basis.len(), rank_ideal: c.ideal.rank(), rank_h: c.basis.len() - c.ideal.rank() });
        comps.insert(m, c);
    }
    let zero_at = |m: i64| ranks.iter().find(|r| r.degree == m).map_or(true, |r| r.rank_h == 0);
    let span = (max_degree - lo + 1) as usize;
    let top = span >= window && (0..window as i64).all(|t| zero_at(max_degree - t));
    let bottom = lo == corner_min || (span >= window && (0..window as i64).all(|t| zero_at(lo + t)));
    let stabilized = top && bottom;
    let nonzero = !zero_at(0) && lo <= 0;

    let mut reps: Vec<(i64, usize)> = Vec::new();
    let mut blocks: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for (&m, c) in &comps {
        let pivots: std::collections::HashSet<usize> = c.ideal.pivots().collect();
        for (a, b) in c.basis.iter().enumerate() {
            if !pivots.contains(&a) {
                reps.push((m, a));
                *blocks.entry((b.left_idem(), b.idem.clone())).or_default() += 1;
            }
        }
    }
    let representatives: Vec<Monomial> = reps.iter().map(|&(m, a)| comps[&m].basis[a].clone()).collect();
    let algebra = stabilized.then(|| assemble(&q, &comps, &reps, &representatives)).transpose()?;
    Ok(CyclotomicResult { ell, theta: theta.to_vec(), min_degree: lo, max_degree, window, ranks, stabilized, nonzero, blocks, representatives, algebra })
}

fn assemble<S: Scalar>(q: &Qhs<S>, comps: &BTreeMap<i64, Component<S>>, reps: &[(i64, usize)], monos: &[Monomial]) -> Result<BasedSuperalgebra<S>, QhsError> {
    let rep_of: HashMap<(i64, usize), usize> = reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    // Image in H of a homogeneous element of R of degree m.
    let project = |m: i64, x: &QhsElement<S>| -> SparseVec<S> {
        let Some(c) = comps.get(&m) else { return SparseVec::zero() };
        let v = SparseVec::from_pairs(x.terms.iter().filter_map(|(mono, s)| c.index.get(mono).map(|&a| (a, s.clone()))));
        let r = c.ideal.reduce(&v);
        SparseVec::from_pairs(r.iter().map(|(a, s)| (rep_of[&(m, a)], s.clone())))
    };
    let mut products = HashMap::new();
    for (x, &(mx, _)) in reps.iter().enumerate() {
        for (y, &(my, _)) in reps.iter().enumerate() {
            let p = q.multiply(&QhsElement::monomial(monos[x].clone()), &QhsElement::monomial(monos[y].clone()))?;
            if !p.is_zero() {
                let v = project(mx + my, &p);
                if !v.is_zero() {
                    products.insert((x, y), v);
                }
            }
        }
    }
    let corner_one = QhsElement {
        terms: q.words.iter().filter(|i| i.first().map_or(true, |&x| x == 0)).map(|i| (Monomial { w: Permutation::identity(q.n), k: vec![0; q.n], idem: i.clone() }, S::one())).collect(),
    };
    let unit = project(0, &corner_one);
    let labels = monos.iter().map(Monomial::label).collect();
    let degrees: Vec<BiDegree> = monos.iter().map(|m| q.bidegree(m)).collect();
    let name = format!("H_{:?}", q.theta);
    Ok(BasedSuperalgebra::from_fn(name, labels, degrees, unit, |x, y| products.get(&(x, y)).cloned().unwrap_or_else(SparseVec::zero)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCheck {
    pub rho: Vec<usize>,
    pub idem: Vec<usize>,
    pub corner_rank: usize,
    pub column_rank: usize,
    pub total_rank: usize,
    pub corner_is_one: bool,
    pub square_law: bool,
}

/// For a nucleus ρ whose word 𝒊_ρ has no repeated letters in a row:
/// rank 1_{𝒊_ρ}H_ρ1_{𝒊_ρ} = 1 and rank H_ρ = (rank H_ρ1_{𝒊_ρ})².
pub fn matrix_block_check<S: Scalar>(ell: usize, rho: &[usize], max_degree: i64, window: Option<usize>) -> Result<BlockCheck, QhsError> {
    let roots = RootSystem::new(ell)?;
    let (_, word) = roots
        .nuclei(RootSystem::height(rho))
        .into_iter()
        .find(|(r, _)| r == rho)
        .ok_or_else(|| QhsError::Unsupported(format!("{rho:?} is not a nucleus")))?;
    let div = roots.i_rho(rho, &word)?;
    if div.iter().any(|&(_, a)| a > 1) {
        return Err(QhsError::Unsupported(format!("𝒊_ρ = {div:?} has divided powers")));
    }
    let idem = flatten(&div);
    if idem.is_empty() {
        return Ok(BlockCheck { rho: rho.to_vec(), idem, corner_rank: 1, column_rank: 1, total_rank: 1, corner_is_one: true, square_law: true });
    }
    let res = cyclotomic_close::<S>(ell, rho, max_degree, window)?;
    if !res.stabilized {
        return Err(QhsError::NotStabilized(rho.to_vec()));
    }
    let corner_rank = res.blocks.get(&(idem.clone(), idem.clone())).copied().unwrap_or(0);
    let column_rank = res.blocks.iter().filter(|((_, b), _)| *b == idem).map(|(_, r)| r).sum();
    let total_rank = res.total_rank();
    Ok(BlockCheck { rho: rho.to_vec(), idem, corner_rank, column_rank, total_rank, corner_is_one: corner_rank == 1, square_law: total_rank == column_rank * column_rank })
}
