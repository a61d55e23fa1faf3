//! Sparse vectors indexed by `usize`, kept sorted with no explicit zeros.

use std::collections::BTreeMap;

use super::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<S> {
    entries: Vec<(usize, S)>,
}

impl<S: Scalar> Default for SparseVec<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> SparseVec<S> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, S::one())] }
    }

    pub fn single(i: usize, c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Builds from arbitrary (index, coefficient) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, S)>>(pairs: I) -> Self {
        let mut m: BTreeMap<usize, S> = BTreeMap::new();
        for (i, c) in pairs {
            accumulate(&mut m, i, &c);
        }
        Self::from_map(m)
    }

    pub fn from_map(m: BTreeMap<usize, S>) -> Self {
        SparseVec { entries: m.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[S]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<S> {
        let mut v = vec![S::zero(); n];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, S)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> S {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &S)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, x)| (*i, x.mul(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x.neg())).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &S) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0);
            let ib = other.entries.get(b).map(|e| e.0);
            match (ia, ib) {
                (Some(x), Some(y)) if x == y => {
                    let v = self.entries[a].1.add(&other.entries[b].1.mul(c));
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (_, Some(y)) => {
                    let v = other.entries[b].1.mul(c);
                    if !v.is_zero() {
                        out.push((y, v));
                    }
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &S::one().neg())
    }

    pub fn map_indices<F: Fn(usize) -> usize>(&self, f: F) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn dot(&self, other: &Self) -> S {
        let mut acc = S::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, j) = (self.entries[a].0, other.entries[b].0);
            if i == j {
                acc = acc.add(&self.entries[a].1.mul(&other.entries[b].1));
                a += 1;
                b += 1;
            } else if i < j {
                a += 1;
            } else {
                b += 1;
            }
        }
        acc
    }
}

pub(crate) fn accumulate<K: Ord, S: Scalar>(m: &mut BTreeMap<K, S>, k: K, c: &S) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().add(c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = SparseVec::from_pairs(vec![(0, q(1)), (3, q(2))]);
        let b = a.neg();
        assert!(a.add(&b).is_zero());
        assert_eq!(a.add_scaled(&a, &q(2)).get(3), q(6));
    }

    #[test]
    fn from_pairs_merges() {
        let v = SparseVec::from_pairs(vec![(2, q(1)), (1, q(1)), (2, q(-1))]);
        assert_eq!(v.entries(), &[(1, q(1))]);
    }
}
