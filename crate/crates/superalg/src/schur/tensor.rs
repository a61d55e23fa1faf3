//! Tensor space V_n^{⊗d} and the permutation modules M_{λ,𝒊} as right
//! W_d(𝖠_ℓ)-supermodules.

use std::collections::HashMap;

use crate::brauer::BrauerBasis;
use crate::coeffs::{sparse_rank, Scalar, SparseVec};
use crate::combin::{blocks_of, coset_reps, gamma_embed, multinomial, ColoredComposition, JMultiComposition, Permutation};
use crate::superkernel::{hom_space, signed_place_action, BasedSupermodule, BiDegree, GeneratorAction, Side};

use super::{lambda_j, Ambient, SchurAlgebra, SchurError, TENSOR_LIMIT};

/// Generators of W_d(𝖠_ℓ): b ⊗ 1^{⊗(d−1)} for basis elements b, and the
/// elementary transpositions s_r (1 ≤ r < d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WreathGenerator {
    Slot(usize),
    Swap(usize),
}

impl WreathGenerator {
    pub fn all(basis: &BrauerBasis, d: usize) -> Vec<Self> {
        (0..basis.rank()).map(WreathGenerator::Slot).chain((1..d).map(WreathGenerator::Swap)).collect()
    }

    pub fn degree(&self, basis: &BrauerBasis) -> BiDegree {
        match self {
            WreathGenerator::Slot(b) => basis.std_degree(*b),
            WreathGenerator::Swap(_) => BiDegree::ZERO,
        }
    }

    /// The generator in the basis of `wreath(𝖠_ℓ, d)`.
    pub fn element<S: Scalar>(&self, basis: &BrauerBasis, d: usize) -> SparseVec<S> {
        let perms = Permutation::all(d);
        let np = perms.len();
        let (first, perm): (Vec<usize>, Permutation) = match self {
            WreathGenerator::Slot(b) => (vec![*b], Permutation::identity(d)),
            WreathGenerator::Swap(r) => ((0..basis.ell).map(|j| basis.e(j)).collect(), Permutation::s(*r, d)),
        };
        let pidx = perms.iter().position(|p| *p == perm).expect("permutation of degree d");
        let mut words: Vec<Vec<usize>> = first.iter().map(|&b| vec![b]).collect();
        for _ in 1..d {
            words = words.iter().flat_map(|w| (0..basis.ell).map(move |j| [w.as_slice(), &[basis.e(j)]].concat())).collect();
        }
        let base = basis.rank();
        SparseVec::from_pairs(words.iter().map(|w| (w.iter().fold(0, |acc, &x| acc * base + x) * np + pidx, S::one())))
    }
}

fn wreath_owner(ell: usize, d: usize) -> String {
    format!("W_{d}(A_{ell})")
}

fn supermodule<S: Scalar>(
    basis: &BrauerBasis,
    d: usize,
    labels: Vec<String>,
    degrees: Vec<BiDegree>,
    act: impl Fn(&WreathGenerator, usize) -> Option<(bool, usize)>,
) -> BasedSupermodule<S> {
    let actions = WreathGenerator::all(basis, d)
        .iter()
        .map(|g| GeneratorAction {
            element: g.element(basis, d),
            degree: g.degree(basis),
            images: (0..labels.len()).map(|v| act(g, v).map_or_else(SparseVec::zero, |(neg, w)| SparseVec::single(w, S::signed(neg)))).collect(),
        })
        .collect();
    BasedSupermodule { owner: wreath_owner(basis.ell, d), side: Side::Right, labels, degrees, actions }
}

/// V_n^{⊗d} with V_n = 𝖠_ℓ^{⊕n}. A factor (r, b) is the column vector with b
/// in row r, encoded r·(4ℓ−1) + b with r 0-based.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    pub basis: BrauerBasis,
}

/// Builds V_n^{⊗d}, refusing ranks above [`TENSOR_LIMIT`].
pub fn tensor_space(n: usize, d: usize, ell: usize) -> Result<TensorSpace, SchurError> {
    if n == 0 || d == 0 || ell == 0 {
        return Err(SchurError::BadSize);
    }
    let basis = BrauerBasis { ell };
    let rank = ((n * basis.rank()) as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if rank > TENSOR_LIMIT {
        return Err(SchurError::TooLarge { rank, limit: TENSOR_LIMIT });
    }
    Ok(TensorSpace { n, d, basis })
}

/// One summand ξ_𝝀V^{⊗d} ≅ M_𝝀: `images[m]` is the image of the m-th basis
/// vector of M_𝝀, a signed basis word of V^{⊗d}.
#[derive(Clone, Debug)]
pub struct Summand {
    pub lambda: JMultiComposition,
    pub module: PermutationModule,
    pub images: Vec<(bool, usize)>,
    /// The map is a module homomorphism, injective, lands in ξ_𝝀V^{⊗d}, and
    /// rank ξ_𝝀V^{⊗d} = rank M_𝝀.
    pub isomorphism: bool,
}

impl TensorSpace {
    fn base(&self) -> usize {
        self.n * self.basis.rank()
    }

    pub fn rank(&self) -> usize {
        self.base().pow(self.d as u32)
    }

    fn parity(&self, v: usize) -> bool {
        self.basis.std_degree(v % self.basis.rank()).parity == 1
    }

    pub fn encode(&self, w: &[usize]) -> usize {
        let base = self.base();
        w.iter().fold(0, |acc, &x| acc * base + x)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let base = self.base();
        let mut w = vec![0; self.d];
        for k in (0..self.d).rev() {
            w[k] = idx % base;
            idx /= base;
        }
        w
    }

    pub fn label(&self, idx: usize) -> String {
        let parts: Vec<String> = self
            .decode(idx)
            .iter()
            .map(|&v| format!("{}@{}", self.basis.label(v % self.basis.rank()), v / self.basis.rank() + 1))
            .collect();
        parts.join("⊗")
    }

    /// v·g on a basis word; v·(b⊗1⋯1) carries the sign (−1)^{|b|Σ_{i>1}|v_i|}
    /// and v·s_r = ^{s_r}v.
    pub fn act(&self, g: &WreathGenerator, idx: usize) -> Option<(bool, usize)> {
        let mut w = self.decode(idx);
        let br = self.basis.rank();
        match *g {
            WreathGenerator::Slot(b) => {
                let (row, x) = (w[0] / br, w[0] % br);
                let y = self.basis.product(x, b)?;
                let odd_b = self.basis.std_degree(b).parity == 1;
                let neg = odd_b && w[1..].iter().filter(|&&v| self.parity(v)).count() % 2 == 1;
                w[0] = row * br + y;
                Some((neg, self.encode(&w)))
            }
            WreathGenerator::Swap(r) => {
                let (neg, moved) = signed_place_action(&Permutation::s(r, self.d), &w, |&v| self.parity(v));
                Some((neg, self.encode(&moved)))
            }
        }
    }

    pub fn supermodule<S: Scalar>(&self) -> BasedSupermodule<S> {
        let labels = (0..self.rank()).map(|i| self.label(i)).collect();
        let degrees = (0..self.rank())
            .map(|i| self.decode(i).iter().fold(BiDegree::ZERO, |acc, &v| acc.add(self.basis.std_degree(v % self.basis.rank()))))
            .collect();
        supermodule(&self.basis, self.d, labels, degrees, |g, v| self.act(g, v))
    }

    /// Left action of an element of M_n(𝖠_ℓ)^{⊗d} (in the encoding of
    /// `amb`) on a vector, with the Koszul sign (−1)^{Σ_{i>j}|X_i||v_j|}.
    pub fn left_apply<S: Scalar>(&self, amb: &Ambient, x: &SparseVec<S>, v: &SparseVec<S>) -> SparseVec<S> {
        let br = self.basis.rank();
        let mut acc = std::collections::BTreeMap::new();
        for (i, c) in x.iter() {
            let xw = amb.decode(i);
            'words: for (j, e) in v.iter() {
                let vw = self.decode(j);
                let mut out = Vec::with_capacity(self.d);
                let mut neg = false;
                for k in 0..self.d {
                    let (a, r, s) = amb.split(xw[k]);
                    let (t, b) = (vw[k] / br, vw[k] % br);
                    if s != t {
                        continue 'words;
                    }
                    let Some(ab) = self.basis.product(a, b) else { continue 'words };
                    out.push(r * br + ab);
                    if amb.is_odd(xw[k]) {
                        neg ^= vw[..k].iter().filter(|&&u| self.parity(u)).count() % 2 == 1;
                    }
                }
                crate::coeffs::accumulate(&mut acc, self.encode(&out), &c.mul(e).mul(&S::signed(neg)));
            }
        }
        SparseVec::from_map(acc)
    }

    /// v_𝝀 = ⊗_r ⊗_j v_{r,j}^{⊗λ^{(j)}_r}.
    pub fn v_lambda(&self, lambda: &JMultiComposition) -> Result<usize, SchurError> {
        let br = self.basis.rank();
        if lambda.len() != self.basis.ell || lambda.iter().any(|c| c.len() != self.n) || lambda.iter().flatten().sum::<usize>() != self.d {
            return Err(SchurError::Malformed("not an element of Λ^J(n,d)".into()));
        }
        let mut w = Vec::with_capacity(self.d);
        for r in 0..self.n {
            for (j, part) in lambda.iter().enumerate() {
                w.extend(std::iter::repeat(r * br + self.basis.e(j)).take(part[r]));
            }
        }
        Ok(self.encode(&w))
    }

    /// Rank of End_{W_d(𝖠_ℓ)}(V^{⊗d}) from the homomorphism solver.
    pub fn endomorphism_rank<S: Scalar>(&self) -> Result<usize, SchurError> {
        let m = self.supermodule::<S>();
        Ok(hom_space(&m, &m)?.iter().map(|h| h.dim()).sum())
    }

    /// The decomposition V^{⊗d} = ⊕_𝝀 ξ_𝝀V^{⊗d} with the maps M_𝝀 → ξ_𝝀V^{⊗d},
    /// m_𝝀·X ↦ v_𝝀·X.
    pub fn decompose(&self) -> Result<Vec<Summand>, SchurError> {
        let amb = Ambient::new(self.n, self.d, self.basis.ell)?;
        let br = self.basis.rank();
        let gens = WreathGenerator::all(&self.basis, self.d);
        let mut out = Vec::new();
        for lambda in lambda_j(self.n, self.d, self.basis.ell) {
            let module = PermutationModule::new(&gamma_embed(&lambda, self.n), self.basis.ell)?;
            let rows: Vec<usize> = self.decode(self.v_lambda(&lambda)?).iter().map(|&v| v / br).collect();
            let images: Vec<(bool, usize)> = (0..module.rank())
                .map(|m| {
                    let (b, w) = module.basis_element(m);
                    let vb: Vec<usize> = rows.iter().zip(b).map(|(&r, &x)| r * br + x).collect();
                    let (neg, moved) = signed_place_action(&w.inverse(), &vb, |&v| self.parity(v));
                    (neg, self.encode(&moved))
                })
                .collect();
            let hom = (0..module.rank()).all(|m| {
                gens.iter().all(|g| {
                    let lhs = module.act(g, m).map(|(n1, m2)| (n1 ^ images[m2].0, images[m2].1));
                    let rhs = self.act(g, images[m].1).map(|(n1, v)| (n1 ^ images[m].0, v));
                    lhs == rhs
                })
            });
            let mut targets: Vec<usize> = images.iter().map(|x| x.1).collect();
            targets.sort_unstable();
            targets.dedup();
            let injective = targets.len() == images.len();
            // ξ_𝝀 as an orbit sum of e{𝝀} with rows r{𝝀}.
            let e_word: Vec<usize> =
                self.decode(self.v_lambda(&lambda)?).iter().map(|&v| amb.factor(v % br, v / br, v / br)).collect();
            let xi: SparseVec<crate::coeffs::Rational> =
                SparseVec::from_pairs(amb.orbit(&e_word).into_iter().map(|(neg, w)| (amb.encode(&w), crate::coeffs::Rational::signed(neg))));
            let inside = images.iter().all(|&(_, v)| self.left_apply(&amb, &xi, &SparseVec::unit(v)) == SparseVec::unit(v));
            let image_rank =
                sparse_rank(&(0..self.rank()).map(|v| self.left_apply(&amb, &xi, &SparseVec::unit(v))).collect::<Vec<_>>());
            let isomorphism = hom && injective && inside && image_rank == module.rank();
            out.push(Summand { lambda, module, images, isomorphism });
        }
        Ok(out)
    }

    /// Every ξ acts on V^{⊗d} by a W_d(𝖠_ℓ)-endomorphism, and the action is
    /// multiplicative on pairs (ξ_i, ξ_j) with deg ξ_j ≤ 2.
    pub fn check_schur_action<S: Scalar>(&self, schur: &SchurAlgebra<S>) -> bool {
        let amb = &schur.ambient;
        let rank = self.rank();
        let act_all = |x: &SparseVec<S>| -> Vec<SparseVec<S>> {
            let ax = schur.expand_element(x);
            (0..rank).map(|v| self.left_apply(amb, &ax, &SparseVec::unit(v))).collect()
        };
        let gens = WreathGenerator::all(&self.basis, self.d);
        let apply_right = |g: &WreathGenerator, x: &SparseVec<S>| -> SparseVec<S> {
            SparseVec::from_pairs(x.iter().filter_map(|(v, c)| self.act(g, v).map(|(neg, w)| (w, c.mul(&S::signed(neg))))))
        };
        let apply_mat = |m: &[SparseVec<S>], x: &SparseVec<S>| -> SparseVec<S> {
            x.iter().fold(SparseVec::zero(), |acc, (v, c)| acc.add_scaled(&m[v], c))
        };
        let mats: Vec<Vec<SparseVec<S>>> = (0..schur.rank()).map(|k| act_all(&SparseVec::unit(k))).collect();
        for m in &mats {
            for v in 0..rank {
                for g in &gens {
                    let e = SparseVec::unit(v);
                    if apply_mat(m, &apply_right(g, &e)) != apply_right(g, &m[v]) {
                        return false;
                    }
                }
            }
        }
        let small: Vec<usize> = (0..schur.rank()).filter(|&k| schur.algebra.degree(k).deg <= 2).collect();
        for i in 0..schur.rank() {
            for &j in &small {
                let prod = act_all(&schur.algebra.mul_basis(i, j));
                if (0..rank).any(|v| prod[v] != apply_mat(&mats[i], &mats[j][v])) {
                    return false;
                }
            }
        }
        true
    }
}

/// M_{λ,𝒊} = k ⊗_{W_{λ,𝒊}} e^{λ,𝒊}W_d(𝖠_ℓ) with basis m·(b ⊗ w): b a word
/// with b_k ∈ e^{[color of k]}𝖠_ℓ and w a minimal representative of 𝔖_λ\𝔖_d.
#[derive(Clone, Debug)]
pub struct PermutationModule {
    pub shape: ColoredComposition,
    pub basis: BrauerBasis,
    pub d: usize,
    pub words: Vec<Vec<usize>>,
    pub reps: Vec<Permutation>,
    blocks: Vec<usize>,
    word_index: HashMap<Vec<usize>, usize>,
    rep_index: HashMap<Permutation, usize>,
}

/// Builds M_{λ,𝒊}.
pub fn perm_module(shape: &ColoredComposition, ell: usize) -> Result<PermutationModule, SchurError> {
    PermutationModule::new(shape, ell)
}

/// multinomial(d; λ)·4^{d−|λ,𝒊|_{ℓ−1}}·3^{|λ,𝒊|_{ℓ−1}}.
pub fn perm_module_rank(shape: &ColoredComposition, ell: usize) -> u128 {
    let d = shape.size();
    let k = shape.color_weight(ell - 1);
    multinomial(&shape.lambda) * 4u128.pow((d - k) as u32) * 3u128.pow(k as u32)
}

impl PermutationModule {
    pub fn new(shape: &ColoredComposition, ell: usize) -> Result<Self, SchurError> {
        if ell == 0 {
            return Err(SchurError::BadSize);
        }
        if shape.lambda.len() != shape.colors.len() || shape.colors.iter().any(|&c| c >= ell) {
            return Err(SchurError::Malformed(format!("{shape:?} is not a colored composition for ℓ = {ell}")));
        }
        let basis = BrauerBasis { ell };
        let d = shape.size();
        let blocks = blocks_of(&shape.lambda);
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        for &blk in &blocks {
            let color = shape.colors[blk];
            let allowed: Vec<usize> = (0..basis.rank()).filter(|&b| basis.ends(b).0 == color).collect();
            words = words.iter().flat_map(|w| allowed.iter().map(move |&b| [w.as_slice(), &[b]].concat())).collect();
        }
        let reps = coset_reps(&shape.lambda);
        let word_index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let rep_index = reps.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(PermutationModule { shape: shape.clone(), basis, d, words, reps, blocks, word_index, rep_index })
    }

    pub fn rank(&self) -> usize {
        self.words.len() * self.reps.len()
    }

    pub fn basis_element(&self, m: usize) -> (&[usize], &Permutation) {
        (&self.words[m / self.reps.len()], &self.reps[m % self.reps.len()])
    }

    fn index(&self, b: &[usize], w: &Permutation) -> usize {
        self.word_index[b] * self.reps.len() + self.rep_index[w]
    }

    /// The generator m_{λ,𝒊} = m·(e^{λ,𝒊} ⊗ 1).
    pub fn generator(&self) -> usize {
        let e: Vec<usize> = self.blocks.iter().map(|&blk| self.basis.e(self.shape.colors[blk])).collect();
        self.index(&e, &Permutation::identity(self.d))
    }

    /// h = g∘w with g ∈ 𝔖_λ and w the minimal representative of 𝔖_λh.
    fn split_coset(&self, h: &Permutation) -> (Permutation, Permutation) {
        let hinv = h.inverse();
        let mut w = vec![0; self.d];
        let nblocks = self.shape.lambda.len();
        for blk in 0..nblocks {
            let values: Vec<usize> = (0..self.d).filter(|&v| self.blocks[v] == blk).collect();
            let mut positions: Vec<usize> = values.iter().map(|&v| hinv.0[v]).collect();
            positions.sort_unstable();
            for (&p, &v) in positions.iter().zip(&values) {
                w[p] = v;
            }
        }
        let w = Permutation(w);
        (h.compose(&w.inverse()), w)
    }

    /// m·(b ⊗ w)·g on basis elements.
    pub fn act(&self, g: &WreathGenerator, m: usize) -> Option<(bool, usize)> {
        let (b, w) = self.basis_element(m);
        match *g {
            WreathGenerator::Slot(x) => {
                // (b ⊗ w)(x_1 ⊗ 1) = b·^w(x_1) ⊗ w, with x landing in position w(1).
                let p = w.0[0];
                let y = self.basis.product(b[p], x)?;
                let odd = |c: &usize| self.basis.std_degree(*c).parity == 1;
                let neg = odd(&x) && b[p + 1..].iter().filter(|c| odd(c)).count() % 2 == 1;
                let mut nb = b.to_vec();
                nb[p] = y;
                Some((neg, self.index(&nb, w)))
            }
            WreathGenerator::Swap(r) => {
                // b ⊗ g w' = σ (1 ⊗ g)(y ⊗ w') with σy = ^{g⁻¹}b, and m(1 ⊗ g) = m.
                let (g, w2) = self.split_coset(&w.right_mul_s(r));
                let (neg, y) = signed_place_action(&g.inverse(), b, |c| self.basis.std_degree(*c).parity == 1);
                Some((neg, self.index(&y, &w2)))
            }
        }
    }

    pub fn supermodule<S: Scalar>(&self) -> BasedSupermodule<S> {
        let labels = (0..self.rank())
            .map(|m| {
                let (b, w) = self.basis_element(m);
                let bl: Vec<String> = b.iter().map(|&x| self.basis.label(x)).collect();
                format!("{}|{:?}", bl.join(" "), w.one_line())
            })
            .collect();
        let degrees = (0..self.rank())
            .map(|m| self.basis_element(m).0.iter().fold(BiDegree::ZERO, |acc, &x| acc.add(self.basis.std_degree(x))))
            .collect();
        supermodule(&self.basis, self.d, labels, degrees, |g, m| self.act(g, m))
    }
}
