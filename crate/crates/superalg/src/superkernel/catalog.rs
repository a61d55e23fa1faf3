//! Catalog algebras: Clifford superalgebras, twisted group algebras of the
//! symmetric group, Iwahori–Hecke algebras, Olshanski superalgebras and
//! plain symmetric group algebras, each with its symmetrizing form.
//!
//! Basis elements indexed by permutations use the lexicographically least
//! reduced word, so t_w and T_g are products of generators along that word.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::coeffs::{Scalar, SparseVec};
use crate::combin::Permutation;

use super::{normalized_trace, BasedSuperalgebra, BiDegree, KernelError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogKind<S> {
    Clifford(usize),
    TwistedSym(usize),
    Hecke(usize, S),
    Olshanski(usize, S),
    GroupAlgebra(usize),
}

/// Builds a catalog algebra together with its symmetrizing form.
pub fn catalog<S: Scalar>(kind: CatalogKind<S>) -> Result<(BasedSuperalgebra<S>, Vec<S>), KernelError> {
    Ok(match kind {
        CatalogKind::Clifford(n) => clifford(n),
        CatalogKind::TwistedSym(n) => twisted_sym(n),
        CatalogKind::Hecke(n, q) => hecke(n, &q)?,
        CatalogKind::Olshanski(n, q) => olshanski(n, &q)?,
        CatalogKind::GroupAlgebra(n) => group_algebra(n),
    })
}

fn indicator<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    (0..n).map(|k| if k == i { S::one() } else { S::zero() }).collect()
}

fn word_label(prefix: &str, word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|r| format!("{prefix}{r}")).collect::<Vec<_>>().join("")
    }
}

fn eps_label(eps: usize, n: usize) -> String {
    (1..=n).filter(|s| eps >> (s - 1) & 1 == 1).map(|s| format!("c{s}")).collect::<Vec<_>>().join("")
}

/// c^ε c_s = (−1)^{#{i>s : ε_i=1}} c^{ε+e_s}.
fn clifford_right(eps: usize, s: usize) -> (bool, usize) {
    let neg = (eps >> s).count_ones() % 2 == 1;
    (neg, eps ^ (1 << (s - 1)))
}

/// c_s c^κ = (−1)^{#{i<s : κ_i=1}} c^{κ+e_s}.
fn clifford_left(s: usize, kappa: usize) -> (bool, usize) {
    let neg = (kappa & ((1 << (s - 1)) - 1)).count_ones() % 2 == 1;
    (neg, kappa ^ (1 << (s - 1)))
}

/// Clifford superalgebra 𝒞_n on odd c_1,…,c_n; basis c^ε, ε ∈ {0,1}^n as bit masks.
pub fn clifford<S: Scalar>(n: usize) -> (BasedSuperalgebra<S>, Vec<S>) {
    let size = 1usize << n;
    let labels = (0..size).map(|e| if e == 0 { "1".into() } else { eps_label(e, n) }).collect();
    let degrees = (0..size).map(|e| BiDegree::new(0, (e.count_ones() % 2) as u8)).collect();
    let words: Vec<Vec<usize>> = (0..size).map(|e| (0..n).filter(|s| e >> s & 1 == 1).collect()).collect();
    let alg = BasedSuperalgebra::from_right_generators(format!("C_{n}"), labels, degrees, 0, &words, |b, g| {
        let (neg, e) = clifford_right(b, g + 1);
        SparseVec::single(e, S::signed(neg))
    });
    (alg, indicator(size, 0))
}

/// Signs relating reduced words in the twisted group algebra, where braid
/// moves carry +1 and distant commutations carry −1.
#[derive(Debug, Default)]
pub struct TwistedSigns {
    cache: HashMap<(Vec<usize>, Vec<usize>), bool>,
}

impl TwistedSigns {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether t_{from} = −t_{to} for two reduced words of one permutation.
    pub fn relative_sign(&mut self, from: &[usize], to: &[usize]) -> bool {
        if let Some(&s) = self.cache.get(&(from.to_vec(), to.to_vec())) {
            return s;
        }
        let s = braid_bfs(from, to, true).expect("reduced words of one permutation are braid-connected");
        self.cache.insert((from.to_vec(), to.to_vec()), s);
        s
    }
}

/// Breadth-first search through braid and commutation moves; returns the
/// accumulated sign, with commutations negative when `commute_neg`.
pub(crate) fn braid_bfs(from: &[usize], to: &[usize], commute_neg: bool) -> Option<bool> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::from([(from.to_vec(), false)]);
    seen.insert(from.to_vec());
    while let Some((w, neg)) = queue.pop_front() {
        if w == to {
            return Some(neg);
        }
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a.abs_diff(b) > 1 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back((v, neg ^ commute_neg));
                }
            } else if a.abs_diff(b) == 1 && i + 2 < w.len() && w[i + 2] == a {
                let mut v = w.clone();
                v[i] = b;
                v[i + 1] = a;
                v[i + 2] = b;
                if seen.insert(v.clone()) {
                    queue.push_back((v, neg));
                }
            }
        }
    }
    None
}

fn perm_index(perms: &[Permutation]) -> HashMap<Permutation, usize> {
    perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
}

/// Twisted group algebra 𝒯_n: odd t_1,…,t_{n−1}, t_r² = 1, distant t's
/// anticommute, (t_r t_{r+1})³ = 1. Basis t_w over 𝔖_n.
pub fn twisted_sym<S: Scalar>(n: usize) -> (BasedSuperalgebra<S>, Vec<S>) {
    let perms = Permutation::all(n);
    let idx = perm_index(&perms);
    let words: Vec<Vec<usize>> = perms.iter().map(|p| p.reduced_word()).collect();
    let labels = words.iter().map(|w| word_label("t", w)).collect();
    let degrees = perms.iter().map(|p| BiDegree::new(0, (p.length() % 2) as u8)).collect();
    let gen_words: Vec<Vec<usize>> = words.iter().map(|w| w.iter().map(|r| r - 1).collect()).collect();
    let signs = std::cell::RefCell::new(TwistedSigns::new());
    let id = idx[&Permutation::identity(n)];
    let alg = BasedSuperalgebra::from_right_generators(format!("T_{n}"), labels, degrees, id, &gen_words, |b, g| {
        let r = g + 1;
        let w = &perms[b];
        let mut signs = signs.borrow_mut();
        if !w.has_right_descent(r) {
            let target = w.right_mul_s(r);
            let mut word = words[b].clone();
            word.push(r);
            let neg = signs.relative_sign(&word, &words[idx[&target]]);
            SparseVec::single(idx[&target], S::signed(neg))
        } else {
            // t_w = ± t_{w s_r} t_r, so t_w t_r = ± t_{w s_r}.
            let shorter = w.right_mul_s(r);
            let mut word = words[idx[&shorter]].clone();
            word.push(r);
            let neg = signs.relative_sign(&word, &words[b]);
            SparseVec::single(idx[&shorter], S::signed(neg))
        }
    });
    (alg, indicator(perms.len(), id))
}

fn check_q<S: Scalar>(q: &S) -> Result<S, KernelError> {
    let qinv = q.inv().ok_or_else(|| KernelError::Parameter("q must be invertible".into()))?;
    if q.mul(q).is_one() {
        return Err(KernelError::Parameter("q² = 1".into()));
    }
    Ok(q.sub(&qinv))
}

/// T_g T_r in ℋ_n(q) with ξ = q − q⁻¹.
fn hecke_right<S: Scalar>(g: &Permutation, r: usize, xi: &S, idx: &HashMap<Permutation, usize>) -> Vec<(S, usize)> {
    let gs = idx[&g.right_mul_s(r)];
    if g.has_right_descent(r) {
        vec![(xi.clone(), idx[g]), (S::one(), gs)]
    } else {
        vec![(S::one(), gs)]
    }
}

/// Iwahori–Hecke algebra ℋ_n(q): T_r² = ξT_r + 1, braid relations. Purely even.
pub fn hecke<S: Scalar>(n: usize, q: &S) -> Result<(BasedSuperalgebra<S>, Vec<S>), KernelError> {
    let xi = check_q(q)?;
    let perms = Permutation::all(n);
    let idx = perm_index(&perms);
    let words: Vec<Vec<usize>> = perms.iter().map(|p| p.reduced_word()).collect();
    let labels = words.iter().map(|w| word_label("T", w)).collect();
    let degrees = vec![BiDegree::ZERO; perms.len()];
    let gen_words: Vec<Vec<usize>> = words.iter().map(|w| w.iter().map(|r| r - 1).collect()).collect();
    let id = idx[&Permutation::identity(n)];
    let alg = BasedSuperalgebra::from_right_generators(format!("H_{n}(q={q})"), labels, degrees, id, &gen_words, |b, g| {
        SparseVec::from_pairs(hecke_right(&perms[b], g + 1, &xi, &idx).into_iter().map(|(c, i)| (i, c)))
    });
    Ok((alg, indicator(perms.len(), id)))
}

/// Olshanski superalgebra 𝒴_n(q): even T_r, odd c_s with the Hecke and
/// Clifford relations and T_r c_r = c_{r+1} T_r, T_r c_s = c_s T_r otherwise.
/// Basis T_g c^ε with index (index of g)·2^n + ε. The returned form is the
/// trace functional of [`normalized_trace`].
pub fn olshanski<S: Scalar>(n: usize, q: &S) -> Result<(BasedSuperalgebra<S>, Vec<S>), KernelError> {
    let xi = check_q(q)?;
    let perms = Permutation::all(n);
    let idx = perm_index(&perms);
    let words: Vec<Vec<usize>> = perms.iter().map(|p| p.reduced_word()).collect();
    let size = 1usize << n;
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut gen_words = Vec::new();
    let ngen_t = n.saturating_sub(1);
    for (pi, w) in words.iter().enumerate() {
        for eps in 0..size {
            let t = if w.is_empty() { String::new() } else { word_label("T", w) };
            let c = eps_label(eps, n);
            labels.push(if t.is_empty() && c.is_empty() { "1".to_string() } else { format!("{t}{c}") });
            degrees.push(BiDegree::new(0, (eps.count_ones() % 2) as u8));
            let mut gw: Vec<usize> = w.iter().map(|r| r - 1).collect();
            gw.extend((1..=n).filter(|s| eps >> (s - 1) & 1 == 1).map(|s| ngen_t + s - 1));
            gen_words.push(gw);
            debug_assert_eq!(labels.len(), pi * size + eps + 1);
        }
    }
    let id = idx[&Permutation::identity(n)] * size;
    let alg = BasedSuperalgebra::from_right_generators(format!("Y_{n}(q={q})"), labels, degrees, id, &gen_words, |b, g| {
        let (pi, eps) = (b / size, b % size);
        if g >= ngen_t {
            let s = g - ngen_t + 1;
            let (neg, e) = clifford_right(eps, s);
            return SparseVec::single(pi * size + e, S::signed(neg));
        }
        let r = g + 1;
        // c^ε T_r = Σ coef · T_r^{has_t} c^κ, moving c's leftwards past T_r one at a time.
        let mut terms: Vec<(S, bool, usize)> = vec![(S::one(), true, 0)];
        for s in (1..=n).rev().filter(|s| eps >> (s - 1) & 1 == 1) {
            let mut next = Vec::new();
            for (c, has_t, kappa) in terms {
                let mut push = |coef: S, t: bool, s2: usize| {
                    let (neg, k2) = clifford_left(s2, kappa);
                    next.push((coef.mul(&S::signed(neg)), t, k2));
                };
                if !has_t {
                    push(c, false, s);
                } else if s == r + 1 {
                    push(c, true, r);
                } else if s == r {
                    push(c.clone(), true, r + 1);
                    push(c.mul(&xi).neg(), false, r + 1);
                    push(c.mul(&xi), false, r);
                } else {
                    push(c, true, s);
                }
            }
            terms = next;
        }
        let mut out = Vec::new();
        for (c, has_t, kappa) in terms {
            if has_t {
                for (h, gi) in hecke_right(&perms[pi], r, &xi, &idx) {
                    out.push((gi * size + kappa, c.mul(&h)));
                }
            } else {
                out.push((pi * size + kappa, c));
            }
        }
        SparseVec::from_pairs(out)
    });
    // δ_{g,1}δ_{ε,0} is not a trace once n ≥ 2 (t(c_1·T_1c_2) = −ξ but
    // t(T_1c_2·c_1) = 0), so the form is computed from the trace space.
    let t = normalized_trace(&alg).unwrap_or_else(|| indicator(perms.len() * size, id));
    Ok((alg, t))
}

/// Group algebra k𝔖_d, purely even; basis in lexicographic order of one-line notation.
pub fn group_algebra<S: Scalar>(d: usize) -> (BasedSuperalgebra<S>, Vec<S>) {
    let perms = Permutation::all(d);
    let idx = perm_index(&perms);
    let labels = perms.iter().map(|p| format!("{:?}", p.one_line())).collect();
    let id = idx[&Permutation::identity(d)];
    let alg = BasedSuperalgebra::from_fn(format!("kS_{d}"), labels, vec![BiDegree::ZERO; perms.len()], SparseVec::unit(id), |i, j| {
        SparseVec::unit(idx[&perms[i].compose(&perms[j])])
    });
    (alg, indicator(perms.len(), id))
}
