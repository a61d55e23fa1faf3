//! Sign-rule constructions: tensor products, super-opposites, wreath
//! superproducts, regrading, idempotent truncation, Peirce endomorphism
//! algebras and supercentralizers of matrix subalgebras.

use crate::coeffs::{Scalar, SpanBasis, SparseVec};
use crate::combin::Permutation;

use super::{sparse_kernel, BasedSuperalgebra, BiDegree, KernelError};

fn sign<S: Scalar>(negative: bool) -> S {
    S::signed(negative)
}

/// A ⊗ B with (a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa'⊗bb'. Basis index i·rank B + j.
pub fn tensor<S: Scalar>(a: &BasedSuperalgebra<S>, b: &BasedSuperalgebra<S>) -> BasedSuperalgebra<S> {
    let nb = b.rank();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for i in 0..a.rank() {
        for j in 0..nb {
            labels.push(format!("{}⊗{}", a.label(i), b.label(j)));
            degrees.push(a.degree(i).add(b.degree(j)));
        }
    }
    let pair = |x: &SparseVec<S>, y: &SparseVec<S>| -> SparseVec<S> {
        SparseVec::from_pairs(x.iter().flat_map(|(i, c)| y.iter().map(move |(j, d)| (i * nb + j, c.mul(d)))))
    };
    let unit = pair(a.unit(), b.unit());
    BasedSuperalgebra::from_fn(format!("({})⊗({})", a.name, b.name), labels, degrees, unit, |x, y| {
        let (i, j) = (x / nb, x % nb);
        let (k, l) = (y / nb, y % nb);
        let s = b.parity(j) & a.parity(k) == 1;
        pair(&a.mul_basis(i, k), &b.mul_basis(j, l)).scale(&sign(s))
    })
}

/// A^sop with a*b = (−1)^{|a||b|} ba.
pub fn opposite<S: Scalar>(a: &BasedSuperalgebra<S>) -> BasedSuperalgebra<S> {
    BasedSuperalgebra::from_fn(
        format!("({})^sop", a.name),
        a.labels().to_vec(),
        a.degrees().to_vec(),
        a.unit().clone(),
        |i, j| a.mul_basis(j, i).scale(&sign(a.parity(i) & a.parity(j) == 1)),
    )
}

/// Signed place permutation ^g(v_1⊗⋯⊗v_d) = ± v_{g⁻¹(1)}⊗⋯⊗v_{g⁻¹(d)}; the sign
/// counts pairs of odd factors whose relative order g reverses.
pub fn signed_place_action<T: Clone>(g: &Permutation, v: &[T], odd: impl Fn(&T) -> bool) -> (bool, Vec<T>) {
    let d = v.len();
    let mut neg = false;
    for a in 0..d {
        if !odd(&v[a]) {
            continue;
        }
        for b in a + 1..d {
            if g.0[a] > g.0[b] && odd(&v[b]) {
                neg = !neg;
            }
        }
    }
    (neg, g.act(v))
}

/// Product of pure tensors in A^{⊗d}: Koszul sign times the factorwise products,
/// returned as (coefficient, factor indices) terms.
pub fn tensor_power_mul<S: Scalar>(a: &BasedSuperalgebra<S>, x: &[usize], y: &[usize]) -> Vec<(S, Vec<usize>)> {
    let mut neg = false;
    for i in 0..x.len() {
        if a.parity(x[i]) == 0 {
            continue;
        }
        for j in 0..i {
            if a.parity(y[j]) == 1 {
                neg = !neg;
            }
        }
    }
    let mut terms: Vec<(S, Vec<usize>)> = vec![(sign(neg), Vec::with_capacity(x.len()))];
    for k in 0..x.len() {
        let Some(p) = a.mul_basis_ref(x[k], y[k]) else { return Vec::new() };
        let mut next = Vec::with_capacity(terms.len() * p.len());
        for (c, w) in &terms {
            for (idx, e) in p.iter() {
                let mut w2 = w.clone();
                w2.push(idx);
                next.push((c.mul(e), w2));
            }
        }
        terms = next;
    }
    terms
}

pub(crate) fn encode(word: &[usize], base: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * base + x)
}

pub(crate) fn decode(mut idx: usize, base: usize, d: usize) -> Vec<usize> {
    let mut w = vec![0; d];
    for k in (0..d).rev() {
        w[k] = idx % base;
        idx /= base;
    }
    w
}

/// W_d(A) = A^{⊗d} ⊗ k𝔖_d with w·x = (^w x)·w. Basis index
/// encode(b_1…b_d)·d! + (index of w in lexicographic order).
pub fn wreath<S: Scalar>(a: &BasedSuperalgebra<S>, d: usize) -> BasedSuperalgebra<S> {
    let perms = Permutation::all(d);
    let pidx: std::collections::HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let np = perms.len();
    let r = a.rank();
    let total = r.pow(d as u32) * np;
    let mut labels = Vec::with_capacity(total);
    let mut degrees = Vec::with_capacity(total);
    for t in 0..r.pow(d as u32) {
        let w = decode(t, r, d);
        let deg = w.iter().fold(BiDegree::ZERO, |acc, &b| acc.add(a.degree(b)));
        let word_label: Vec<&str> = w.iter().map(|&b| a.label(b)).collect();
        for p in &perms {
            labels.push(format!("{}|{:?}", word_label.join("⊗"), p.one_line()));
            degrees.push(deg);
        }
    }
    // Unit: 1^{⊗d} ⊗ identity.
    let mut unit_terms: Vec<(S, Vec<usize>)> = vec![(S::one(), Vec::new())];
    for _ in 0..d {
        let mut next = Vec::new();
        for (c, w) in &unit_terms {
            for (i, e) in a.unit().iter() {
                let mut w2 = w.clone();
                w2.push(i);
                next.push((c.mul(e), w2));
            }
        }
        unit_terms = next;
    }
    let id = pidx[&Permutation::identity(d)];
    let unit = SparseVec::from_pairs(unit_terms.into_iter().map(|(c, w)| (encode(&w, r) * np + id, c)));
    BasedSuperalgebra::from_fn(format!("W_{d}({})", a.name), labels, degrees, unit, |i, j| {
        let (x, g) = (decode(i / np, r, d), &perms[i % np]);
        let (y, h) = (decode(j / np, r, d), &perms[j % np]);
        let (neg, gy) = signed_place_action(g, &y, |b| a.parity(*b) == 1);
        let gh = pidx[&g.compose(h)];
        let s: S = sign(neg);
        SparseVec::from_pairs(
            tensor_power_mul(a, &x, &gy).into_iter().map(|(c, w)| (encode(&w, r) * np + gh, c.mul(&s))),
        )
    })
}

fn check_idempotents<S: Scalar>(a: &BasedSuperalgebra<S>, es: &[SparseVec<S>], complete: bool) -> Result<(), KernelError> {
    for (r, e) in es.iter().enumerate() {
        if !e.is_zero() && a.element_degree(e) != Some(BiDegree::ZERO) {
            return Err(KernelError::BadIdempotent(format!("e_{r} is not of bidegree (0,0)")));
        }
        if a.mul(e, e) != *e {
            return Err(KernelError::BadIdempotent(format!("e_{r} is not idempotent")));
        }
    }
    if complete {
        for (r, e) in es.iter().enumerate() {
            for (s, f) in es.iter().enumerate() {
                if r != s && !a.mul(e, f).is_zero() {
                    return Err(KernelError::BadIdempotent(format!("e_{r} e_{s} ≠ 0")));
                }
            }
        }
        let sum = es.iter().fold(SparseVec::zero(), |acc, e| acc.add(e));
        if sum != *a.unit() {
            return Err(KernelError::BadIdempotent("idempotents do not sum to 1".into()));
        }
    }
    Ok(())
}

/// Regrading along orthogonal idempotents: a ∈ e_s A e_r is shifted by
/// (t_r − t_s, ε_r − ε_s). Every basis element must lie in one Peirce component.
pub fn regrade<S: Scalar>(
    a: &BasedSuperalgebra<S>,
    es: &[SparseVec<S>],
    shifts: &[(i64, u8)],
) -> Result<BasedSuperalgebra<S>, KernelError> {
    if es.len() != shifts.len() {
        return Err(KernelError::BadIdempotent("one shift per idempotent".into()));
    }
    check_idempotents(a, es, true)?;
    let mut degrees = Vec::with_capacity(a.rank());
    for b in 0..a.rank() {
        let bv = SparseVec::unit(b);
        let mut found = None;
        'outer: for (s, es_) in es.iter().enumerate() {
            let left = a.mul(es_, &bv);
            if left.is_zero() {
                continue;
            }
            for (r, er) in es.iter().enumerate() {
                if a.mul(&left, er) == bv {
                    found = Some((s, r));
                    break 'outer;
                }
            }
        }
        let (s, r) = found.ok_or_else(|| KernelError::NotAdapted(a.label(b).to_string()))?;
        let shift = BiDegree::new(shifts[r].0 - shifts[s].0, shifts[r].1 ^ shifts[s].1);
        degrees.push(a.degree(b).add(shift));
    }
    Ok(a.with_degrees(degrees).renamed(format!("regraded({})", a.name)))
}

/// Basis of the subspace spanned by `vectors`, with a coordinate oracle.
pub(crate) struct SubspaceBasis<S> {
    pub basis: Vec<SparseVec<S>>,
    pub sources: Vec<usize>,
    span: SpanBasis<S>,
    slot: std::collections::HashMap<usize, usize>,
}

impl<S: Scalar> SubspaceBasis<S> {
    pub fn new(vectors: impl IntoIterator<Item = (usize, SparseVec<S>)>) -> Self {
        let mut span = SpanBasis::new(true);
        let mut basis = Vec::new();
        let mut sources = Vec::new();
        let mut slot = std::collections::HashMap::new();
        let mut gen = 0;
        for (src, v) in vectors {
            if span.insert(&v) {
                slot.insert(gen, basis.len());
                basis.push(v);
                sources.push(src);
            }
            gen += 1;
        }
        SubspaceBasis { basis, sources, span, slot }
    }

    pub fn coords(&self, v: &SparseVec<S>) -> Option<SparseVec<S>> {
        self.span.coords(v).map(|c| c.map_indices(|g| self.slot[&g]))
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }
}

/// eAe with unit e.
pub fn truncate<S: Scalar>(a: &BasedSuperalgebra<S>, e: &SparseVec<S>) -> Result<BasedSuperalgebra<S>, KernelError> {
    check_idempotents(a, std::slice::from_ref(e), false)?;
    let sub = SubspaceBasis::new((0..a.rank()).map(|b| (b, a.mul(&a.mul(e, &SparseVec::unit(b)), e))).filter(|(_, v)| !v.is_zero()));
    let labels = sub
        .basis
        .iter()
        .zip(&sub.sources)
        .map(|(v, &b)| if *v == SparseVec::unit(b) { a.label(b).to_string() } else { format!("e·{}·e", a.label(b)) })
        .collect();
    let degrees = sub.sources.iter().map(|&b| a.degree(b)).collect();
    let unit = sub.coords(e).ok_or_else(|| KernelError::BadIdempotent("e not in eAe".into()))?;
    Ok(BasedSuperalgebra::from_fn(format!("e({})e", a.name), labels, degrees, unit, |i, j| {
        sub.coords(&a.mul(&sub.basis[i], &sub.basis[j])).expect("eAe is closed")
    }))
}

/// ⊕_{i,j} e_i A e_j with the multiplication of A; basis labels (i,j,x).
pub fn end_algebra<S: Scalar>(a: &BasedSuperalgebra<S>, es: &[SparseVec<S>]) -> Result<BasedSuperalgebra<S>, KernelError> {
    check_idempotents(a, es, false)?;
    let n = es.len();
    let mut blocks: Vec<Vec<SubspaceBasis<S>>> = Vec::new();
    for ei in es {
        let mut row = Vec::new();
        for ej in es {
            row.push(SubspaceBasis::new(
                (0..a.rank()).map(|b| (b, a.mul(&a.mul(ei, &SparseVec::unit(b)), ej))).filter(|(_, v)| !v.is_zero()),
            ));
        }
        blocks.push(row);
    }
    let mut index = Vec::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut offset = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            offset[i][j] = index.len();
            for (k, &src) in blocks[i][j].sources.iter().enumerate() {
                index.push((i, j, k));
                labels.push(format!("[{},{}]{}", i + 1, j + 1, a.label(src)));
                degrees.push(a.degree(src));
            }
        }
    }
    let mut unit = SparseVec::zero();
    for i in 0..n {
        let c = blocks[i][i].coords(&es[i]).ok_or_else(|| KernelError::BadIdempotent("e_i ∉ e_iAe_i".into()))?;
        unit = unit.add(&c.map_indices(|k| offset[i][i] + k));
    }
    Ok(BasedSuperalgebra::from_fn(format!("End({})", a.name), labels, degrees, unit, |x, y| {
        let (i, j, k) = index[x];
        let (j2, l, m) = index[y];
        if j != j2 {
            return SparseVec::zero();
        }
        let prod = a.mul(&blocks[i][j].basis[k], &blocks[j][l].basis[m]);
        blocks[i][l].coords(&prod).expect("Peirce component closed").map_indices(|t| offset[i][l] + t)
    }))
}

/// Result of [`supercentralizer`].
#[derive(Clone, Debug)]
pub struct Centralizer<S> {
    pub algebra: BasedSuperalgebra<S>,
    /// Basis of Z_A(B) expressed in the basis of A.
    pub basis_in_a: Vec<SparseVec<S>>,
    /// Whether B ⊗ Z_A(B) → A, E_{ij}⊗z ↦ E_{ij}z, is bijective.
    pub factorization_ok: bool,
}

/// Supercentralizer Z_A(B) of the subalgebra spanned by matrix units E_{ij}.
pub fn supercentralizer<S: Scalar>(a: &BasedSuperalgebra<S>, units: &[Vec<SparseVec<S>>]) -> Result<Centralizer<S>, KernelError> {
    let m = units.len();
    if units.iter().any(|r| r.len() != m) {
        return Err(KernelError::MatrixUnits("matrix units must form a square array".into()));
    }
    let mut degs = Vec::new();
    for (i, row) in units.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let d = a.element_degree(e).ok_or_else(|| KernelError::MatrixUnits(format!("E_{i}{j} not homogeneous")))?;
            degs.push((i, j, d));
            for (k, row2) in units.iter().enumerate() {
                for (l, f) in row2.iter().enumerate() {
                    let want = if j == k { units[i][l].clone() } else { SparseVec::zero() };
                    if a.mul(e, f) != want {
                        return Err(KernelError::MatrixUnits(format!("E_{i}{j}E_{k}{l} wrong")));
                    }
                }
            }
        }
    }
    let sum = (0..m).fold(SparseVec::zero(), |acc, i| acc.add(&units[i][i]));
    if sum != *a.unit() {
        return Err(KernelError::MatrixUnits("B is not unital in A".into()));
    }
    let mut bidegrees: Vec<BiDegree> = a.degrees().to_vec();
    bidegrees.sort();
    bidegrees.dedup();
    let mut zbasis = Vec::new();
    for bd in bidegrees {
        let vars = a.indices_of_degree(bd);
        let mut rows: std::collections::BTreeMap<(usize, usize), Vec<(usize, S)>> = std::collections::BTreeMap::new();
        for (u, (ei, &(_, _, d))) in units.iter().flatten().zip(&degs).enumerate() {
            let neg = bd.parity & d.parity == 1;
            for (v, &b) in vars.iter().enumerate() {
                let bv = SparseVec::unit(b);
                let diff = a.mul(ei, &bv).sub(&a.mul(&bv, ei).scale(&sign(neg)));
                for (k, c) in diff.iter() {
                    rows.entry((u, k)).or_default().push((v, c.clone()));
                }
            }
        }
        let eqs: Vec<SparseVec<S>> = rows.into_values().map(SparseVec::from_pairs).collect();
        for kv in sparse_kernel(&eqs, vars.len()) {
            zbasis.push(kv.map_indices(|v| vars[v]));
        }
    }
    let sub = SubspaceBasis::new(zbasis.iter().cloned().enumerate());
    let labels = (0..sub.len()).map(|i| format!("z{i}")).collect();
    let degrees = sub.basis.iter().map(|v| a.element_degree(v).expect("homogeneous")).collect();
    let unit = sub.coords(a.unit()).ok_or_else(|| KernelError::MatrixUnits("1 ∉ Z".into()))?;
    let algebra = BasedSuperalgebra::from_fn(format!("Z({})", a.name), labels, degrees, unit, |i, j| {
        sub.coords(&a.mul(&sub.basis[i], &sub.basis[j])).expect("centralizer is closed")
    });
    let mut span = SpanBasis::new(false);
    for e in units.iter().flatten() {
        for z in &sub.basis {
            span.insert(&a.mul(e, z));
        }
    }
    let factorization_ok = span.rank() == a.rank() && m * m * sub.len() == a.rank();
    Ok(Centralizer { algebra, basis_in_a: sub.basis.clone(), factorization_ok })
}
