//! Based graded superalgebras: a homogeneous basis with bidegrees and sparse
//! structure constants.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coeffs::{Scalar, SparseVec};

use super::KernelError;

/// (degree, parity) of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiDegree {
    pub deg: i64,
    pub parity: u8,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { deg: 0, parity: 0 };

    pub fn new(deg: i64, parity: u8) -> Self {
        BiDegree { deg, parity: parity & 1 }
    }

    pub fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.deg + o.deg, self.parity ^ o.parity)
    }

    pub fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.deg - o.deg, self.parity ^ o.parity)
    }

    pub fn is_odd(self) -> bool {
        self.parity == 1
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.deg, self.parity)
    }
}

/// Elements are sparse coefficient vectors over the owner's basis.
pub type AlgebraElement<S> = SparseVec<S>;

/// Finite-rank graded superalgebra with a homogeneous basis.
#[derive(Clone, Debug)]
pub struct BasedSuperalgebra<S> {
    pub name: String,
    labels: Vec<String>,
    degrees: Vec<BiDegree>,
    table: HashMap<(usize, usize), SparseVec<S>>,
    unit: SparseVec<S>,
}

impl<S: Scalar> BasedSuperalgebra<S> {
    /// Tabulates `mul(i, j)` for every pair of basis indices.
    pub fn from_fn<F>(name: impl Into<String>, labels: Vec<String>, degrees: Vec<BiDegree>, unit: SparseVec<S>, mul: F) -> Self
    where
        F: Fn(usize, usize) -> SparseVec<S>,
    {
        assert_eq!(labels.len(), degrees.len());
        let n = labels.len();
        let mut table = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                let v = mul(i, j);
                if !v.is_zero() {
                    table.insert((i, j), v);
                }
            }
        }
        BasedSuperalgebra { name: name.into(), labels, degrees, table, unit }
    }

    /// Builds the table from right multiplication by generators: basis
    /// element `j` must equal the product of the generators in `words[j]`.
    pub fn from_right_generators<F>(
        name: impl Into<String>,
        labels: Vec<String>,
        degrees: Vec<BiDegree>,
        unit_index: usize,
        words: &[Vec<usize>],
        right_gen: F,
    ) -> Self
    where
        F: Fn(usize, usize) -> SparseVec<S>,
    {
        let n = labels.len();
        let mut cache: HashMap<(usize, usize), SparseVec<S>> = HashMap::new();
        let mut rg = |b: usize, g: usize| -> SparseVec<S> { cache.entry((b, g)).or_insert_with(|| right_gen(b, g)).clone() };
        let mut table = HashMap::new();
        for i in 0..n {
            for (j, word) in words.iter().enumerate() {
                let mut cur = SparseVec::unit(i);
                for &g in word {
                    let mut next = SparseVec::zero();
                    for (b, c) in cur.iter() {
                        next = next.add_scaled(&rg(b, g), c);
                    }
                    cur = next;
                    if cur.is_zero() {
                        break;
                    }
                }
                if !cur.is_zero() {
                    table.insert((i, j), cur);
                }
            }
        }
        BasedSuperalgebra { name: name.into(), labels, degrees, table, unit: SparseVec::unit(unit_index) }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis element by label; panics on unknown labels.
    pub fn basis(&self, label: &str) -> SparseVec<S> {
        SparseVec::unit(self.index_of(label).unwrap_or_else(|| panic!("no basis element {label}")))
    }

    pub fn degrees(&self) -> &[BiDegree] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> BiDegree {
        self.degrees[i]
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.degrees[i].parity
    }

    pub fn unit(&self) -> &SparseVec<S> {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec<S> {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn mul_basis_ref(&self, i: usize, j: usize) -> Option<&SparseVec<S>> {
        self.table.get(&(i, j))
    }

    pub fn nonzero_products(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec<S>)> {
        self.table.iter()
    }

    pub fn mul(&self, x: &SparseVec<S>, y: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some(p) = self.table.get(&(i, j)) {
                    acc = acc.add_scaled(p, &a.mul(b));
                }
            }
        }
        acc
    }

    pub fn mul_all(&self, xs: &[&SparseVec<S>]) -> SparseVec<S> {
        xs.iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn element_degree(&self, x: &SparseVec<S>) -> Option<BiDegree> {
        let mut it = x.iter().map(|(i, _)| self.degrees[i]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_part(&self, x: &SparseVec<S>, d: BiDegree) -> SparseVec<S> {
        SparseVec::from_pairs(x.iter().filter(|(i, _)| self.degrees[*i] == d).map(|(i, c)| (i, c.clone())))
    }

    /// Basis indices of the given bidegree.
    pub fn indices_of_degree(&self, d: BiDegree) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// First basis triple violating associativity, if any.
    pub fn check_associativity(&self) -> Option<(usize, usize, usize)> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), &self.mul_basis(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First structure constant violating bidegree additivity, if any.
    pub fn check_bidegrees(&self) -> Option<(usize, usize, usize)> {
        for (&(i, j), v) in &self.table {
            let d = self.degrees[i].add(self.degrees[j]);
            if let Some((k, _)) = v.iter().find(|(k, _)| self.degrees[*k] != d) {
                return Some((i, j, k));
            }
        }
        None
    }

    pub fn check_unit(&self) -> bool {
        (0..self.rank()).all(|i| {
            let e = SparseVec::unit(i);
            self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
        })
    }

    /// Associativity, bidegree additivity and unit axioms.
    pub fn validate(&self) -> Result<(), KernelError> {
        if !self.check_unit() {
            return Err(KernelError::Axiom(format!("{}: unit fails", self.name)));
        }
        if let Some(t) = self.check_bidegrees() {
            return Err(KernelError::Axiom(format!("{}: bidegree fails at {t:?}", self.name)));
        }
        if let Some(t) = self.check_associativity() {
            return Err(KernelError::Axiom(format!("{}: associativity fails at {t:?}", self.name)));
        }
        Ok(())
    }

    /// Same algebra with relabelled name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same structure constants with new bidegrees.
    pub(crate) fn with_degrees(&self, degrees: Vec<BiDegree>) -> Self {
        BasedSuperalgebra { degrees, ..self.clone() }
    }

    /// Applies a ring homomorphism to all structure constants.
    pub fn map_scalars<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> BasedSuperalgebra<T> {
        let conv = |v: &SparseVec<S>| SparseVec::from_pairs(v.iter().map(|(i, c)| (i, f(c))));
        BasedSuperalgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            degrees: self.degrees.clone(),
            table: self.table.iter().map(|(k, v)| (*k, conv(v))).filter(|(_, v)| !v.is_zero()).collect(),
            unit: conv(&self.unit),
        }
    }

    /// JSON document: basis with bidegrees, unit, and sorted nonzero products.
    pub fn to_json(&self) -> Value {
        let vec_json = |v: &SparseVec<S>| -> Value {
            Value::Array(v.iter().map(|(i, c)| json!([i, c.to_string()])).collect())
        };
        let mut keys: Vec<&(usize, usize)> = self.table.keys().collect();
        keys.sort();
        json!({
            "schema": "superalg.algebra/1",
            "name": self.name,
            "ring": S::ring().to_string(),
            "rank": self.rank(),
            "basis": self.labels.iter().zip(&self.degrees).map(|(l, d)| json!({
                "label": l, "degree": d.deg, "parity": d.parity
            })).collect::<Vec<_>>(),
            "unit": vec_json(&self.unit),
            "products": keys.iter().map(|k| json!([k.0, k.1, vec_json(&self.table[k])])).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`to_json`](Self::to_json) for scalars that parse from rationals.
    pub fn from_json(v: &Value) -> Result<Self, KernelError> {
        let bad = |m: &str| KernelError::Json(m.to_string());
        let parse_scalar = |s: &Value| -> Result<S, KernelError> {
            let s = s.as_str().ok_or_else(|| bad("scalar must be a string"))?;
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n.parse::<i64>(), d.parse::<i64>()),
                None => (s.parse::<i64>(), Ok(1)),
            };
            let (n, d) = (n.map_err(|_| bad(s))?, d.map_err(|_| bad(s))?);
            S::from_rational(&crate::coeffs::Rational::new(n, d)).ok_or_else(|| bad(s))
        };
        let parse_vec = |v: &Value| -> Result<SparseVec<S>, KernelError> {
            let arr = v.as_array().ok_or_else(|| bad("vector must be an array"))?;
            let mut pairs = Vec::new();
            for e in arr {
                let i = e[0].as_u64().ok_or_else(|| bad("index"))? as usize;
                pairs.push((i, parse_scalar(&e[1])?));
            }
            Ok(SparseVec::from_pairs(pairs))
        };
        let basis = v["basis"].as_array().ok_or_else(|| bad("basis"))?;
        let labels = basis.iter().map(|b| b["label"].as_str().unwrap_or_default().to_string()).collect();
        let degrees = basis
            .iter()
            .map(|b| BiDegree::new(b["degree"].as_i64().unwrap_or(0), b["parity"].as_u64().unwrap_or(0) as u8))
            .collect();
        let mut table = HashMap::new();
        for p in v["products"].as_array().ok_or_else(|| bad("products"))? {
            let i = p[0].as_u64().ok_or_else(|| bad("product index"))? as usize;
            let j = p[1].as_u64().ok_or_else(|| bad("product index"))? as usize;
            table.insert((i, j), parse_vec(&p[2])?);
        }
        Ok(BasedSuperalgebra {
            name: v["name"].as_str().unwrap_or_default().to_string(),
            labels,
            degrees,
            table,
            unit: parse_vec(&v["unit"])?,
        })
    }

    /// Equality of bases, bidegrees, unit and structure constants.
    pub fn same_structure(&self, o: &Self) -> bool {
        self.labels == o.labels && self.degrees == o.degrees && self.unit == o.unit && self.table == o.table
    }
}
