//! Compositions, partitions, multicompositions, colored compositions,
//! symmetric-group utilities, Kostka numbers and p-bar combinatorics.
//!
//! Enumeration order is graded reverse-lexicographic: within a fixed size,
//! tuples are listed in decreasing lexicographic order, e.g. `Λ(2,2)` is
//! `(2,0), (1,1), (0,2)` and `𝒫(3)` is `(3), (2,1), (1,1,1)`. Products of
//! tuples (multicompositions, colored compositions) vary the last factor
//! fastest. This order is frozen: golden files depend on it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinError {
    #[error("partition {0:?} is not {1}-strict")]
    NotPStrict(Vec<usize>, u64),
    #[error("malformed input: {0}")]
    Malformed(String),
}

/// Finite composition; the canonical form has no trailing zeros.
pub type Composition = Vec<usize>;
/// Weakly decreasing composition.
pub type Partition = Vec<usize>;
/// An ℓ-tuple of compositions indexed by colors 0..ℓ.
pub type JMultiComposition = Vec<Composition>;

/// Composition together with a color for each part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredComposition {
    pub lambda: Composition,
    pub colors: Vec<usize>,
}

impl ColoredComposition {
    /// Sum of the parts carrying color `j`.
    pub fn color_weight(&self, j: usize) -> usize {
        self.lambda.iter().zip(&self.colors).filter(|(_, &c)| c == j).map(|(x, _)| x).sum()
    }
    pub fn size(&self) -> usize {
        self.lambda.iter().sum()
    }
}

pub fn trim(mut c: Composition) -> Composition {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn is_partition(c: &[usize]) -> bool {
    c.windows(2).all(|w| w[0] >= w[1])
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

pub fn multinomial(parts: &[usize]) -> u128 {
    let mut total = 0;
    let mut r = 1u128;
    for &p in parts {
        total += p;
        r *= binomial(total, p);
    }
    r
}

/// Λ(n,d): n-tuples of nonnegative integers summing to d.
pub fn compositions(n: usize, d: usize) -> Vec<Composition> {
    fn rec(n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n == 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=d).rev() {
            cur.push(x);
            rec(n - 1, d - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// 𝒫(d), each partition without trailing zeros.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn rec(d: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if d == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=d.min(max)).rev() {
            cur.push(x);
            rec(d - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Λ_+(n,d): partitions of d with at most n parts, padded to length n.
pub fn partitions_bounded(n: usize, d: usize) -> Vec<Composition> {
    compositions(n, d).into_iter().filter(|c| is_partition(c)).collect()
}

fn product_of<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for x in f {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Splits `d` into `ell` ordered summands, then applies `f` to each summand.
fn distribute<T: Clone>(ell: usize, d: usize, f: impl Fn(usize) -> Vec<T>) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for sizes in compositions(ell, d) {
        let factors: Vec<Vec<T>> = sizes.iter().map(|&s| f(s)).collect();
        out.extend(product_of(&factors));
    }
    out
}

/// 𝒫^J(d): ℓ-multipartitions of d.
pub fn multipartitions(ell: usize, d: usize) -> Vec<Vec<Partition>> {
    distribute(ell, d, partitions)
}

/// Λ^J(n,d): ℓ-tuples of compositions in Λ(n,·) of total weight d.
pub fn multicompositions(ell: usize, n: usize, d: usize) -> Vec<JMultiComposition> {
    distribute(ell, d, |s| compositions(n, s))
}

/// All words of length `n` over `0..ell`, lexicographically.
pub fn words(ell: usize, n: usize) -> Vec<Vec<usize>> {
    product_of(&vec![(0..ell).collect::<Vec<_>>(); n])
}

/// Λ^col(n,d).
pub fn colored_compositions(ell: usize, n: usize, d: usize) -> Vec<ColoredComposition> {
    let mut out = Vec::new();
    for lambda in compositions(n, d) {
        for colors in words(ell, n) {
            out.push(ColoredComposition { lambda: lambda.clone(), colors });
        }
    }
    out
}

/// 𝒞(d): compositions of d with no zero parts before the last nonzero part,
/// listed in canonical (trimmed) form.
pub fn essential_compositions(d: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for n in 0..=d {
        out.extend(compositions(n, d).into_iter().filter(|c| c.iter().all(|&x| x > 0)));
    }
    out
}

/// 𝒞^col(d): colored compositions with essential underlying composition.
pub fn essential_colored(ell: usize, d: usize) -> Vec<ColoredComposition> {
    let mut out = Vec::new();
    for lambda in essential_compositions(d) {
        for colors in words(ell, lambda.len()) {
            out.push(ColoredComposition { lambda: lambda.clone(), colors });
        }
    }
    out
}

/// The bijection Λ^J(n,d) → Λ(nℓ,d) interleaving the components.
pub fn alpha_bijection(lambda: &JMultiComposition, n: usize) -> Composition {
    let mut out = Vec::with_capacity(n * lambda.len());
    for r in 0..n {
        for comp in lambda {
            out.push(comp.get(r).copied().unwrap_or(0));
        }
    }
    out
}

pub fn alpha_inverse(c: &[usize], ell: usize) -> Result<JMultiComposition, CombinError> {
    if ell == 0 || c.len() % ell != 0 {
        return Err(CombinError::Malformed(format!("length {} not divisible by {ell}", c.len())));
    }
    let n = c.len() / ell;
    Ok((0..ell).map(|j| (0..n).map(|r| c[r * ell + j]).collect()).collect())
}

/// The injection Λ^J(n,d) → Λ^col(nℓ,d), λ ↦ (α(λ), (01⋯(ℓ−1))^n).
pub fn gamma_embed(lambda: &JMultiComposition, n: usize) -> ColoredComposition {
    let ell = lambda.len();
    ColoredComposition { lambda: alpha_bijection(lambda, n), colors: (0..n * ell).map(|k| k % ell).collect() }
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`, by
/// adding one horizontal strip per letter and backtracking.
pub fn kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let lambda = trim(lambda.to_vec());
    if !is_partition(&lambda) || lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return 0;
    }
    fn strips(lambda: &[usize], cur: &[usize], k: usize, mu: &[usize]) -> u64 {
        if k == mu.len() {
            return u64::from(cur == lambda);
        }
        let mut total = 0;
        let mut next = cur.to_vec();
        fill(lambda, cur, &mut next, 0, mu[k], &mut |nv| total += strips(lambda, nv, k + 1, mu));
        total
    }
    // Choose new row lengths row by row: cur[i] <= new[i] <= min(lambda[i], cur[i-1]).
    fn fill(lambda: &[usize], cur: &[usize], next: &mut Vec<usize>, row: usize, left: usize, f: &mut dyn FnMut(&[usize])) {
        if row == lambda.len() {
            if left == 0 {
                f(next);
            }
            return;
        }
        let lo = cur[row];
        let hi = if row == 0 { lambda[0] } else { lambda[row].min(cur[row - 1]) };
        for v in lo..=hi.max(lo) {
            if v - lo > left || v > hi {
                break;
            }
            next[row] = v;
            fill(lambda, cur, next, row + 1, left - (v - lo), f);
        }
        next[row] = cur[row];
    }
    strips(&lambda, &vec![0; lambda.len()], 0, mu)
}

/// Kostka number of multipartitions: product over components.
pub fn kostka_multi(lambda: &[Partition], mu: &[Composition]) -> u64 {
    if lambda.len() != mu.len() {
        return 0;
    }
    lambda.iter().zip(mu).map(|(l, m)| kostka(l, m)).product()
}

/// Permutation of {1,…,d} stored in 0-based one-line notation: `w.0[i] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// Elementary transposition s_r = (r, r+1), with 1 ≤ r < d.
    pub fn s(r: usize, d: usize) -> Self {
        let mut p = Self::identity(d);
        p.0.swap(r - 1, r);
        p
    }

    pub fn from_one_line(v: &[usize]) -> Result<Self, CombinError> {
        let d = v.len();
        let mut seen = vec![false; d];
        for &x in v {
            if x == 0 || x > d || seen[x - 1] {
                return Err(CombinError::Malformed(format!("{v:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(v.iter().map(|x| x - 1).collect()))
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn longest(d: usize) -> Self {
        Permutation((0..d).rev().collect())
    }

    /// Whether ℓ(s_r w) < ℓ(w), i.e. w⁻¹(r) > w⁻¹(r+1).
    pub fn has_left_descent(&self, r: usize) -> bool {
        let inv = self.inverse();
        inv.0[r - 1] > inv.0[r]
    }

    /// Whether ℓ(w s_r) < ℓ(w), i.e. w(r) > w(r+1).
    pub fn has_right_descent(&self, r: usize) -> bool {
        self.0[r - 1] > self.0[r]
    }

    /// `s_r ∘ self`.
    pub fn left_mul_s(&self, r: usize) -> Self {
        Permutation(self.0.iter().map(|&x| if x == r - 1 { r } else if x == r { r - 1 } else { x }).collect())
    }

    /// `self ∘ s_r`.
    pub fn right_mul_s(&self, r: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(r - 1, r);
        Permutation(v)
    }

    /// Lexicographically least reduced word (r_1,…,r_l) with w = s_{r_1}⋯s_{r_l}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let d = w.degree();
        while !w.is_identity() {
            let r = (1..d).find(|&r| w.has_left_descent(r)).expect("non-identity has a descent");
            word.push(r);
            w = w.left_mul_s(r);
        }
        word
    }

    /// s_{r_1}⋯s_{r_l}.
    pub fn from_word(word: &[usize], d: usize) -> Self {
        let mut w = Self::identity(d);
        for &r in word {
            w = w.right_mul_s(r);
        }
        w
    }

    /// Place permutation action g·(s_1,…,s_d) = (s_{g⁻¹(1)},…,s_{g⁻¹(d)}).
    pub fn act<T: Clone>(&self, s: &[T]) -> Vec<T> {
        let inv = self.inverse();
        inv.0.iter().map(|&k| s[k].clone()).collect()
    }

    /// All permutations of {1,…,d} in lexicographic order of one-line notation.
    pub fn all(d: usize) -> Vec<Self> {
        fn rec(d: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == d {
                out.push(Permutation(cur.clone()));
                return;
            }
            for x in 0..d {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(d, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), &mut vec![false; d], &mut out);
        out
    }
}

/// Block index of each position for the parabolic subgroup 𝔖_λ.
pub fn blocks_of(lambda: &[usize]) -> Vec<usize> {
    lambda.iter().enumerate().flat_map(|(b, &x)| std::iter::repeat(b).take(x)).collect()
}

/// Minimal-length representatives w of the right cosets 𝔖_λ w in 𝔖_d.
pub fn coset_reps(lambda: &[usize]) -> Vec<Permutation> {
    let d: usize = lambda.iter().sum();
    let blocks = blocks_of(lambda);
    Permutation::all(d)
        .into_iter()
        .filter(|w| {
            let inv = w.inverse();
            (0..d.saturating_sub(1)).all(|i| blocks[i] != blocks[i + 1] || inv.0[i] < inv.0[i + 1])
        })
        .collect()
}

pub fn is_pstrict(lambda: &[usize], p: u64) -> bool {
    let p = p as usize;
    is_partition(lambda)
        && lambda.windows(2).all(|w| w[0] != w[1] || w[0] == 0 || w[0] % p == 0)
}

/// p-strict partitions of n.
pub fn pstrict(n: usize, p: u64) -> Vec<Partition> {
    partitions(n).into_iter().filter(|l| is_pstrict(l, p)).collect()
}

fn normalize(mut v: Vec<usize>) -> Partition {
    v.retain(|&x| x > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// All partitions reachable from `lambda` by removing one p-bar.
pub fn bar_removals(lambda: &[usize], p: u64) -> Vec<Partition> {
    let pp = p as usize;
    let mut out = Vec::new();
    for (i, &x) in lambda.iter().enumerate() {
        if x >= pp {
            let mut v = lambda.to_vec();
            v[i] = x - pp;
            let v = normalize(v);
            if is_pstrict(&v, p) && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            if lambda[i] != lambda[j] && lambda[i] + lambda[j] == pp {
                let v: Vec<usize> =
                    lambda.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, &x)| x).collect();
                let v = normalize(v);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn check_pstrict(lambda: &[usize], p: u64) -> Result<(), CombinError> {
    if is_pstrict(lambda, p) {
        Ok(())
    } else {
        Err(CombinError::NotPStrict(lambda.to_vec(), p))
    }
}

/// The p-bar core, obtained by removing p-bars until none remain.
pub fn bar_core(lambda: &[usize], p: u64) -> Result<Partition, CombinError> {
    check_pstrict(lambda, p)?;
    let mut cur = normalize(lambda.to_vec());
    while let Some(next) = bar_removals(&cur, p).into_iter().next() {
        cur = next;
    }
    Ok(cur)
}

/// Number of p-bars removed on the way to the bar core.
pub fn bar_weight(lambda: &[usize], p: u64) -> Result<usize, CombinError> {
    let core = bar_core(lambda, p)?;
    Ok((lambda.iter().sum::<usize>() - core.iter().sum::<usize>()) / p as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(multicompositions(2, 1, 1).len(), 2);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(essential_compositions(3).len(), 4);
        assert_eq!(partitions_bounded(2, 4), vec![vec![4, 0], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn alpha_and_gamma() {
        assert_eq!(alpha_bijection(&vec![vec![1], vec![1]], 1), vec![1, 1]);
        assert_eq!(alpha_bijection(&vec![vec![2, 0], vec![0, 1]], 2), vec![2, 0, 0, 1]);
        assert_eq!(alpha_bijection(&vec![vec![3, 1]], 2), vec![3, 1]);
        let g = gamma_embed(&vec![vec![1], vec![0]], 1);
        assert_eq!(g, ColoredComposition { lambda: vec![1, 0], colors: vec![0, 1] });
        assert!(gamma_embed(&vec![vec![2, 1]], 2).colors.iter().all(|&c| c == 0));
        let all = multicompositions(2, 2, 3);
        let images: std::collections::HashSet<_> = all.iter().map(|l| gamma_embed(l, 2)).collect();
        assert_eq!(images.len(), all.len());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&[2, 1], &[2, 1]), 1);
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[1, 1], &[2]), 0);
        assert_eq!(kostka(&[3, 2], &[2, 2, 1]), 2);
        assert_eq!(kostka(&[2], &[1, 1]), 1);
        assert_eq!(kostka(&[2, 1], &[1, 1]), 0);
    }

    #[test]
    fn coset_rep_examples() {
        assert_eq!(coset_reps(&[3]), vec![Permutation::identity(3)]);
        assert_eq!(coset_reps(&[1, 1]).len(), 2);
        let reps = coset_reps(&[2, 1]);
        let mut lens: Vec<usize> = reps.iter().map(|w| w.length()).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 2]);
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(Permutation::from_word(&w.reduced_word(), 3), w);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
        let s1 = Permutation::s(1, 3);
        assert_eq!(s1.act(&['a', 'b', 'c']), vec!['b', 'a', 'c']);
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_core(&[3], 3).unwrap(), Vec::<usize>::new());
        assert_eq!(bar_weight(&[3], 3).unwrap(), 1);
        assert_eq!(bar_core(&[2], 3).unwrap(), vec![2]);
        assert_eq!(bar_weight(&[2, 1], 3).unwrap(), 1);
        assert_eq!(bar_weight(&[3, 3], 3).unwrap(), 2);
        assert_eq!(bar_core(&[4], 3).unwrap(), vec![1]);
        assert!(bar_core(&[1, 1], 3).is_err());
        assert_eq!(pstrict(3, 3), vec![vec![3], vec![2, 1]]);
    }
}
