//! Root-lattice data of type A_{2ℓ}^{(2)}: invariant form, words, nuclei and
//! masses, the RoCK predicate, divided power words and residue contents.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combin::{self, factorial, multinomial, CombinError, ColoredComposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("ℓ must be positive")]
    BadRank,
    #[error("element has {got} coefficients, expected {want}")]
    WrongLength { got: usize, want: usize },
    #[error("height {0} exceeds the enumeration guard {1}")]
    Guard(usize, usize),
    #[error("word {0:?} is not reduced for this weight")]
    NonReduced(Vec<usize>),
    #[error("word produces {got:?}, not {want:?}")]
    Mismatch { got: Vec<usize>, want: Vec<usize> },
    #[error("color {0} outside 0..{1}")]
    BadColor(usize, usize),
    #[error(transparent)]
    Combin(#[from] CombinError),
}

/// Height guard for word enumeration.
pub const WORD_GUARD: usize = 12;

/// Nonnegative combination Σ m_i α_i, stored as (m_0,…,m_ℓ).
pub type QPlusElement = Vec<usize>;

/// Sequence of (letter, multiplicity) pairs.
pub type DividedPowerWord = Vec<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockLabel {
    pub rho: QPlusElement,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub ell: usize,
    pub gram: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(ell: usize) -> Result<Self, RootError> {
        if ell == 0 {
            return Err(RootError::BadRank);
        }
        let n = ell + 1;
        let mut gram = vec![vec![0i64; n]; n];
        if ell == 1 {
            gram = vec![vec![2, -4], vec![-4, 8]];
        } else {
            for i in 0..n {
                gram[i][i] = if i == 0 { 2 } else if i == ell { 8 } else { 4 };
            }
            for i in 0..ell {
                let off = if i + 1 == ell { -4 } else { -2 };
                gram[i][i + 1] = off;
                gram[i + 1][i] = off;
            }
        }
        Ok(RootSystem { ell, gram })
    }

    pub fn rank(&self) -> usize {
        self.ell + 1
    }

    /// p = 2ℓ+1.
    pub fn p(&self) -> u64 {
        2 * self.ell as u64 + 1
    }

    fn check(&self, theta: &[usize]) -> Result<(), RootError> {
        if theta.len() != self.rank() {
            return Err(RootError::WrongLength { got: theta.len(), want: self.rank() });
        }
        Ok(())
    }

    pub fn simple(&self, i: usize) -> QPlusElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    /// δ = Σ_{i<ℓ} 2α_i + α_ℓ.
    pub fn delta(&self) -> QPlusElement {
        (0..self.rank()).map(|i| if i < self.ell { 2 } else { 1 }).collect()
    }

    pub fn height(theta: &[usize]) -> usize {
        theta.iter().sum()
    }

    /// (θ|α_i) for a signed combination θ.
    fn pair_simple(&self, theta: &[i64], i: usize) -> i64 {
        theta.iter().zip(&self.gram).map(|(m, row)| m * row[i]).sum()
    }

    /// (θ|η).
    pub fn pairing(&self, theta: &[usize], eta: &[usize]) -> i64 {
        let t: Vec<i64> = theta.iter().map(|&x| x as i64).collect();
        (0..self.rank()).map(|i| eta[i] as i64 * self.pair_simple(&t, i)).sum()
    }

    fn copair_signed(&self, theta: &[i64], i: usize) -> i64 {
        2 * self.pair_simple(theta, i) / self.gram[i][i]
    }

    /// (θ|α_i^∨) = 2(θ|α_i)/(α_i|α_i).
    pub fn copairing(&self, theta: &[usize], i: usize) -> i64 {
        let t: Vec<i64> = theta.iter().map(|&x| x as i64).collect();
        self.copair_signed(&t, i)
    }

    /// (Λ_0|α_i^∨) = δ_{i,0}.
    pub fn lambda0_copairing(i: usize) -> i64 {
        i64::from(i == 0)
    }

    /// (Λ_0 − θ | α_i^∨).
    pub fn weight_copairing(&self, theta: &[usize], i: usize) -> i64 {
        Self::lambda0_copairing(i) - self.copairing(theta, i)
    }

    pub fn wt(&self, word: &[usize]) -> QPlusElement {
        let mut v = vec![0; self.rank()];
        for &i in word {
            v[i] += 1;
        }
        v
    }

    /// All words with content θ, lexicographically ordered.
    pub fn words_of(&self, theta: &[usize]) -> Result<Vec<Vec<usize>>, RootError> {
        self.check(theta)?;
        let h = Self::height(theta);
        if h > WORD_GUARD {
            return Err(RootError::Guard(h, WORD_GUARD));
        }
        fn rec(rem: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
                return;
            }
            for i in 0..rem.len() {
                if rem[i] > 0 {
                    rem[i] -= 1;
                    cur.push(i);
                    rec(rem, cur, out);
                    cur.pop();
                    rem[i] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut theta.to_vec(), &mut Vec::new(), &mut out);
        debug_assert_eq!(out.len() as u128, multinomial(theta));
        Ok(out)
    }

    /// Nuclei Λ_0 − wΛ_0 of height ≤ `max_height`, with a shortest word
    /// (i_1,…,i_t), meaning w = r_{i_t}⋯r_{i_1}, reaching each.
    pub fn nuclei(&self, max_height: usize) -> Vec<(QPlusElement, Vec<usize>)> {
        let start = vec![0usize; self.rank()];
        let mut seen: HashMap<QPlusElement, Vec<usize>> = HashMap::new();
        seen.insert(start.clone(), Vec::new());
        let mut order = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(th) = queue.pop_front() {
            for i in 0..self.rank() {
                let a = self.weight_copairing(&th, i);
                if a <= 0 {
                    continue;
                }
                let mut next = th.clone();
                next[i] += a as usize;
                if Self::height(&next) > max_height || seen.contains_key(&next) {
                    continue;
                }
                let mut word = seen[&th].clone();
                word.push(i);
                seen.insert(next.clone(), word);
                order.push(next.clone());
                queue.push_back(next);
            }
        }
        order.into_iter().map(|r| {
            let w = seen[&r].clone();
            (r, w)
        }).collect()
    }

    /// The unique (ρ, d) with θ = ρ + dδ and ρ a nucleus, or `None` if θ ∉ 𝒲.
    pub fn nucleus_mass(&self, theta: &[usize]) -> Result<Option<BlockLabel>, RootError> {
        self.check(theta)?;
        let delta = self.delta();
        for (rho, _) in self.nuclei(Self::height(theta)) {
            if rho.iter().zip(theta).any(|(r, t)| r > t) {
                continue;
            }
            let diff: Vec<usize> = theta.iter().zip(&rho).map(|(t, r)| t - r).collect();
            let d = diff[self.ell];
            if diff.iter().zip(&delta).all(|(x, dl)| *x == d * dl) {
                return Ok(Some(BlockLabel { rho, d }));
            }
        }
        Ok(None)
    }

    /// (θ|α_0^∨) ≥ 2d and (θ|α_i^∨) ≥ d−1 for i ≥ 1; false off 𝒲.
    pub fn is_rock(&self, theta: &[usize]) -> Result<bool, RootError> {
        let Some(label) = self.nucleus_mass(theta)? else { return Ok(false) };
        let d = label.d as i64;
        Ok(self.copairing(theta, 0) >= 2 * d && (1..self.rank()).all(|i| self.copairing(theta, i) >= d - 1))
    }

    /// Smallest-height RoCK θ of mass d among nuclei up to `max_height`.
    pub fn smallest_rock(&self, d: usize, max_height: usize) -> Option<QPlusElement> {
        let delta = self.delta();
        self.nuclei(max_height).into_iter().find_map(|(rho, _)| {
            let theta: Vec<usize> = rho.iter().zip(&delta).map(|(r, x)| r + d * x).collect();
            self.is_rock(&theta).ok()?.then_some(theta)
        })
    }

    /// 𝒊_ρ = i_1^{(a_1)}⋯i_t^{(a_t)} for w = r_{i_t}⋯r_{i_1}, with
    /// a_k = (r_{i_{k−1}}⋯r_{i_1}Λ_0 | α_{i_k}^∨).
    pub fn i_rho(&self, rho: &[usize], word: &[usize]) -> Result<DividedPowerWord, RootError> {
        self.check(rho)?;
        let mut th = vec![0usize; self.rank()];
        let mut out = Vec::new();
        for &i in word {
            if i >= self.rank() {
                return Err(RootError::BadColor(i, self.rank()));
            }
            let a = self.weight_copairing(&th, i);
            if a <= 0 {
                return Err(RootError::NonReduced(word.to_vec()));
            }
            th[i] += a as usize;
            out.push((i, a as usize));
        }
        if th != rho {
            return Err(RootError::Mismatch { got: th, want: rho.to_vec() });
        }
        let dist = self.nuclei(Self::height(rho)).into_iter().find(|(r, _)| r == rho).map(|(_, w)| w.len());
        if dist != Some(word.len()) {
            return Err(RootError::NonReduced(word.to_vec()));
        }
        Ok(out)
    }

    /// Gelfand–Graev word 𝒍^{m,j}.
    pub fn gg_word_single(&self, m: usize, j: usize) -> Result<DividedPowerWord, RootError> {
        let ell = self.ell;
        if j >= ell {
            return Err(RootError::BadColor(j, ell));
        }
        let mut w = vec![(ell, m)];
        for k in (j + 1..ell).rev() {
            w.push((k, 2 * m));
        }
        for k in (1..=j).rev() {
            w.push((k, m));
        }
        w.push((0, 2 * m));
        for k in 1..=j {
            w.push((k, m));
        }
        Ok(w.into_iter().filter(|(_, a)| *a > 0).collect())
    }

    /// 𝒍^{μ,𝒋} = 𝒍^{μ_1,j_1}⋯𝒍^{μ_n,j_n}.
    pub fn gg_word(&self, cc: &ColoredComposition) -> Result<DividedPowerWord, RootError> {
        let mut out = Vec::new();
        for (&m, &j) in cc.lambda.iter().zip(&cc.colors) {
            out.extend(self.gg_word_single(m, j)?);
        }
        Ok(out)
    }

    /// 𝒍^{m,j}! = ((2m)!)^{ℓ−j}(m!)^{2j+1}.
    pub fn gg_factorial(&self, m: usize, j: usize) -> u128 {
        factorial(2 * m).pow((self.ell - j) as u32) * factorial(m).pow(2 * j as u32 + 1)
    }

    /// Residue of column `c` (1-based): min(x, 2ℓ−x) with x = (c−1) mod p.
    pub fn residue(&self, c: usize) -> usize {
        let x = (c - 1) % self.p() as usize;
        x.min(2 * self.ell - x)
    }

    /// Residue content Σ_{boxes} α_{res(column)} of a p-strict partition.
    pub fn content(&self, lambda: &[usize]) -> Result<QPlusElement, RootError> {
        if !combin::is_pstrict(lambda, self.p()) {
            return Err(CombinError::NotPStrict(lambda.to_vec(), self.p()).into());
        }
        let mut v = vec![0; self.rank()];
        for &row in lambda {
            for c in 1..=row {
                v[self.residue(c)] += 1;
            }
        }
        Ok(v)
    }
}

/// 𝒊! = m_1!⋯m_r!.
pub fn word_factorial(w: &DividedPowerWord) -> u128 {
    w.iter().map(|&(_, m)| factorial(m)).product()
}

/// The ordinary word i_1^{m_1}⋯i_r^{m_r}.
pub fn flatten(w: &DividedPowerWord) -> Vec<usize> {
    w.iter().flat_map(|&(i, m)| std::iter::repeat(i).take(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_entries() {
        let r = RootSystem::new(2).unwrap();
        assert_eq!(r.gram, vec![vec![2, -2, 0], vec![-2, 4, -4], vec![0, -4, 8]]);
        assert_eq!(r.pairing(&r.simple(0), &r.simple(0)), 2);
        assert_eq!(r.copairing(&r.simple(1), 2), -1);
        assert_eq!(RootSystem::new(1).unwrap().gram, vec![vec![2, -4], vec![-4, 8]]);
    }

    #[test]
    fn null_root() {
        for ell in 1..=4 {
            let r = RootSystem::new(ell).unwrap();
            for i in 0..=ell {
                assert_eq!(r.pairing(&r.delta(), &r.simple(i)), 0);
                assert_eq!(r.copairing(&r.delta(), i), 0);
            }
        }
    }

    #[test]
    fn words_examples() {
        let r = RootSystem::new(1).unwrap();
        assert_eq!(r.words_of(&[1, 0]).unwrap(), vec![vec![0]]);
        assert_eq!(r.words_of(&[1, 1]).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(r.words_of(&[2, 1]).unwrap().len(), 3);
        assert!(r.words_of(&[13, 0]).is_err());
    }

    #[test]
    fn nucleus_examples() {
        let r = RootSystem::new(1).unwrap();
        assert_eq!(r.nucleus_mass(&[0, 0]).unwrap(), Some(BlockLabel { rho: vec![0, 0], d: 0 }));
        assert_eq!(r.nucleus_mass(&[0, 1]).unwrap(), None);
        assert_eq!(r.nucleus_mass(&[2, 1]).unwrap(), Some(BlockLabel { rho: vec![0, 0], d: 1 }));
        assert!(!r.is_rock(&[2, 1]).unwrap());
        assert!(r.is_rock(&[1, 0]).unwrap());
    }

    #[test]
    fn no_rock_of_positive_mass_for_ell_one() {
        // For ℓ = 1, (θ|α_1^∨) = −(θ|α_0^∨)/2, so the two inequalities
        // cannot hold together once d ≥ 1.
        let r = RootSystem::new(1).unwrap();
        for m0 in 0..12 {
            for m1 in 0..6 {
                assert_eq!(2 * r.copairing(&[m0, m1], 1), -r.copairing(&[m0, m1], 0));
            }
        }
        for d in 1..=3 {
            assert_eq!(r.smallest_rock(d, 16), None);
        }
        let r2 = RootSystem::new(2).unwrap();
        assert_eq!(r2.smallest_rock(0, 4), Some(vec![0, 0, 0]));
    }

    #[test]
    fn i_rho_examples() {
        for ell in 1..=2 {
            let r = RootSystem::new(ell).unwrap();
            let mut rho = vec![0; ell + 1];
            rho[0] = 1;
            assert_eq!(r.i_rho(&rho, &[0]).unwrap(), vec![(0, 1)]);
            rho[1] = 1;
            assert_eq!(r.i_rho(&rho, &[0, 1]).unwrap(), vec![(0, 1), (1, 1)]);
            assert_eq!(r.i_rho(&vec![0; ell + 1], &[]).unwrap(), vec![]);
            assert!(r.i_rho(&vec![0; ell + 1], &[1]).is_err());
        }
    }

    #[test]
    fn gg_examples() {
        let r = RootSystem::new(2).unwrap();
        let w = r.gg_word_single(1, 0).unwrap();
        assert_eq!(w, vec![(2, 1), (1, 2), (0, 2)]);
        assert_eq!(flatten(&w), vec![2, 1, 1, 0, 0]);
        assert_eq!(r.wt(&flatten(&w)), r.delta());
        let r1 = RootSystem::new(1).unwrap();
        assert_eq!(r1.gg_factorial(2, 0), 48);
        assert_eq!(word_factorial(&r1.gg_word_single(2, 0).unwrap()), 48);
        for ell in 1..=3 {
            let r = RootSystem::new(ell).unwrap();
            for j in 0..ell {
                assert_eq!(r.gg_factorial(1, j), 1 << (ell - j));
                let w = r.gg_word_single(2, j).unwrap();
                assert_eq!(word_factorial(&w), r.gg_factorial(2, j));
                assert_eq!(r.wt(&flatten(&w)), r.delta().iter().map(|x| 2 * x).collect::<Vec<_>>());
            }
        }
        assert!(r.gg_word_single(1, 2).is_err());
    }

    #[test]
    fn content_examples() {
        let r = RootSystem::new(1).unwrap();
        assert_eq!(r.content(&[]).unwrap(), vec![0, 0]);
        assert_eq!(r.content(&[1]).unwrap(), vec![1, 0]);
        assert_eq!(r.content(&[3]).unwrap(), r.delta());
        assert!(r.content(&[1, 1]).is_err());
    }
}
