//! Exact dense matrices, elimination, and incremental sparse echelon bases.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Zero};

use super::sparse::accumulate;
use super::{CoefficientRing, LinAlgError, Rational, Scalar, SparseVec};

/// Dense row-major matrix over an exact ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LinAlgError::Ragged);
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, LinAlgError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Result<Self, LinAlgError> {
        if self.cols != o.rows {
            return Err(LinAlgError::Shape { left: (self.rows, self.cols), right: (o.rows, o.cols) });
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m.get(i, j).add(&a.mul(o.get(k, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> ExactMatrix<T> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn to_rational(&self) -> Option<ExactMatrix<Rational>> {
        let data: Option<Vec<Rational>> = self.data.iter().map(|x| x.to_rational()).collect();
        Some(ExactMatrix { rows: self.rows, cols: self.cols, data: data? })
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<S> {
    /// `particular` solves `M x = rhs`; `kernel` is a basis of the null space of `M`.
    Consistent { particular: ExactMatrix<S>, kernel: Vec<Vec<S>> },
    Inconsistent,
    /// Over a local ring: solvable over the rationals, but not with p-local entries.
    NonLocal { particular: ExactMatrix<Rational>, kernel: Vec<Vec<S>> },
}

/// Reduced row echelon form over a field. Returns the pivot columns.
fn rref_field<S: Scalar>(m: &mut ExactMatrix<S>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(pr * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m.get(r, c).inv().expect("elimination needs a field");
        for j in c..m.cols {
            let v = m.get(r, j).mul(&inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in c..m.cols {
                let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn clear_row_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Fraction-free (Bareiss) elimination on an integer matrix. Returns the rank and,
/// for square input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    let mut full = true;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            full = false;
            continue;
        };
        if pr != r {
            a.swap(pr, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows && full { sign * prev } else { BigInt::zero() };
    (r, det)
}

/// Rank over the fraction field of the coefficient ring.
pub fn rank<S: Scalar>(m: &ExactMatrix<S>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match m.to_rational() {
        Some(q) => {
            let ints = (0..q.rows).map(|i| clear_row_denominators(q.row(i))).collect();
            bareiss(ints, q.cols).0
        }
        None => {
            let mut c = m.clone();
            rref_field(&mut c).len()
        }
    }
}

/// Determinant of a square matrix; `None` for non-square input or when the value
/// does not lie in the ring (cannot happen for determinants, kept for uniformity).
pub fn determinant<S: Scalar>(m: &ExactMatrix<S>) -> Option<S> {
    if m.rows != m.cols {
        return None;
    }
    if m.rows == 0 {
        return Some(S::one());
    }
    match m.to_rational() {
        Some(q) => {
            let mut scale = BigInt::one();
            let ints: Vec<Vec<BigInt>> = (0..q.rows)
                .map(|i| {
                    let row = q.row(i);
                    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                    scale *= &l;
                    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
                })
                .collect();
            let (_, det) = bareiss(ints, q.cols);
            S::from_rational(&Rational(BigRational::new(det, scale)))
        }
        None => {
            let mut c = m.clone();
            let n = c.rows;
            let mut det = S::one();
            for col in 0..n {
                let Some(pr) = (col..n).find(|&i| !c.get(i, col).is_zero()) else { return Some(S::zero()) };
                if pr != col {
                    for j in 0..n {
                        c.data.swap(pr * n + j, col * n + j);
                    }
                    det = det.neg();
                }
                let piv = c.get(col, col).clone();
                det = det.mul(&piv);
                let inv = piv.inv()?;
                for i in col + 1..n {
                    let f = c.get(i, col).mul(&inv);
                    if f.is_zero() {
                        continue;
                    }
                    for j in col..n {
                        let v = c.get(i, j).sub(&f.mul(c.get(col, j)));
                        c.set(i, j, v);
                    }
                }
            }
            Some(det)
        }
    }
}

fn solve_field<S: Scalar>(m: &ExactMatrix<S>, rhs: &ExactMatrix<S>) -> Option<(ExactMatrix<S>, Vec<Vec<S>>)> {
    let (n, k) = (m.cols, rhs.cols);
    let mut aug = ExactMatrix::zeros(m.rows, n + k);
    for i in 0..m.rows {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        for j in 0..k {
            aug.set(i, n + j, rhs.get(i, j).clone());
        }
    }
    let pivots = rref_field(&mut aug);
    if pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut part = ExactMatrix::zeros(n, k);
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..k {
            part.set(c, j, aug.get(r, n + j).clone());
        }
    }
    let mut kernel = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![S::zero(); n];
        v[f] = S::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = aug.get(r, f).neg();
        }
        kernel.push(v);
    }
    Some((part, kernel))
}

/// Solves `M X = rhs`, returning a particular solution and a kernel basis of `M`.
///
/// Over a local ring the system is solved over the rationals; kernel vectors are
/// rescaled to be p-local and a non-local particular solution is flagged.
pub fn solve_linear<S: Scalar>(m: &ExactMatrix<S>, rhs: &ExactMatrix<S>) -> Result<Solution<S>, LinAlgError> {
    if m.rows != rhs.rows {
        return Err(LinAlgError::Shape { left: (m.rows, m.cols), right: (rhs.rows, rhs.cols) });
    }
    if let CoefficientRing::Local(_) = S::ring() {
        let mq = m.to_rational().expect("local scalars lift");
        let rq = rhs.to_rational().expect("local scalars lift");
        let Some((part, kernel)) = solve_field(&mq, &rq) else { return Ok(Solution::Inconsistent) };
        let kernel: Vec<Vec<S>> = kernel
            .into_iter()
            .map(|v| {
                let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let lq = Rational(BigRational::from_integer(l));
                v.iter().map(|x| S::from_rational(&x.mul(&lq)).expect("integral")).collect()
            })
            .collect();
        let conv: Option<Vec<S>> = part.data.iter().map(S::from_rational).collect();
        return Ok(match conv {
            Some(data) => Solution::Consistent {
                particular: ExactMatrix { rows: part.rows, cols: part.cols, data },
                kernel,
            },
            None => Solution::NonLocal { particular: part, kernel },
        });
    }
    Ok(match solve_field(m, rhs) {
        Some((particular, kernel)) => Solution::Consistent { particular, kernel },
        None => Solution::Inconsistent,
    })
}

/// Null space basis of `M` over the fraction field.
pub fn kernel<S: Scalar>(m: &ExactMatrix<S>) -> Vec<Vec<S>> {
    match solve_linear(m, &ExactMatrix::zeros(m.rows, 0)) {
        Ok(Solution::Consistent { kernel, .. }) | Ok(Solution::NonLocal { kernel, .. }) => kernel,
        _ => unreachable!("homogeneous systems are consistent"),
    }
}

/// Incrementally built echelon basis of a subspace of a sparse coordinate space.
///
/// Scalars must form a field. When built with `tracking`, each echelon row
/// remembers its expression in the inserted generators so that membership
/// queries can return coordinates.
#[derive(Clone, Debug)]
pub struct SpanBasis<S> {
    rows: Vec<SparseVec<S>>,
    combos: Vec<SparseVec<S>>,
    pivot_of: HashMap<usize, usize>,
    generators: usize,
    tracking: bool,
}

impl<S: Scalar> Default for SpanBasis<S> {
    fn default() -> Self {
        Self::new(false)
    }
}

impl<S: Scalar> SpanBasis<S> {
    pub fn new(tracking: bool) -> Self {
        SpanBasis { rows: Vec::new(), combos: Vec::new(), pivot_of: HashMap::new(), generators: 0, tracking }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0)
    }

    fn reduce_map(&self, v: &mut BTreeMap<usize, S>, used: &mut BTreeMap<usize, S>) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(k, _)| self.pivot_of.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let r = self.pivot_of[&k];
            let negc = c.neg();
            for (i, x) in self.rows[r].iter() {
                accumulate(v, i, &x.mul(&negc));
            }
            if self.tracking {
                for (i, x) in self.combos[r].iter() {
                    accumulate(used, i, &x.mul(&c));
                }
            }
            cursor = k + 1;
        }
    }

    /// Residual of `v` after reduction by the current rows.
    pub fn reduce(&self, v: &SparseVec<S>) -> SparseVec<S> {
        let mut m: BTreeMap<usize, S> = v.iter().map(|(i, c)| (i, c.clone())).collect();
        let mut used = BTreeMap::new();
        self.reduce_map(&mut m, &mut used);
        SparseVec::from_map(m)
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a generator; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<S>) -> bool {
        let mut m: BTreeMap<usize, S> = v.iter().map(|(i, c)| (i, c.clone())).collect();
        let mut used = BTreeMap::new();
        self.reduce_map(&mut m, &mut used);
        let idx = self.generators;
        self.generators += 1;
        if m.is_empty() {
            return false;
        }
        let res = SparseVec::from_map(m);
        let (lead, lc) = res.leading().map(|(i, c)| (i, c.clone())).expect("nonzero");
        let inv = lc.inv().expect("span bases need a field");
        let row = res.scale(&inv);
        if self.tracking {
            let combo = SparseVec::unit(idx).sub(&SparseVec::from_map(used)).scale(&inv);
            self.combos.push(combo);
        }
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Coefficients of `v` in the inserted generators, if `v` lies in the span.
    pub fn coords(&self, v: &SparseVec<S>) -> Option<SparseVec<S>> {
        assert!(self.tracking, "coordinates need a tracking span");
        let mut m: BTreeMap<usize, S> = v.iter().map(|(i, c)| (i, c.clone())).collect();
        let mut used = BTreeMap::new();
        self.reduce_map(&mut m, &mut used);
        if m.is_empty() {
            Some(SparseVec::from_map(used))
        } else {
            None
        }
    }
}

/// Rank of a family of sparse vectors over a field.
pub fn sparse_rank<S: Scalar>(vs: &[SparseVec<S>]) -> usize {
    let mut b = SpanBasis::new(false);
    for v in vs {
        b.insert(v);
    }
    b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Fp;

    type Q = Rational;
    type F3 = Fp<3>;

    #[test]
    fn identity_solves_to_rhs() {
        let i = ExactMatrix::<Q>::identity(3);
        let rhs = ExactMatrix::<Q>::from_i64(&[vec![1], vec![-2], vec![5]]).unwrap();
        match solve_linear(&i, &rhs).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, rhs);
                assert!(kernel.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_one_by_one_is_inconsistent() {
        let z = ExactMatrix::<Q>::zeros(1, 1);
        let rhs = ExactMatrix::<Q>::from_i64(&[vec![1]]).unwrap();
        assert_eq!(solve_linear(&z, &rhs).unwrap(), Solution::Inconsistent);
    }

    #[test]
    fn shape_mismatch_errors() {
        let z = ExactMatrix::<Q>::zeros(2, 2);
        let rhs = ExactMatrix::<Q>::zeros(3, 1);
        assert!(solve_linear(&z, &rhs).is_err());
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&ExactMatrix::<Q>::zeros(3, 4)), 0);
        assert_eq!(rank(&ExactMatrix::<F3>::identity(5)), 5);
        let m = ExactMatrix::<F3>::from_i64(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(rank(&m), 1);
        let m = ExactMatrix::<Q>::from_i64(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn determinant_fraction_free() {
        let m = ExactMatrix::<Q>::from_rows(vec![
            vec![Q::new(1, 2), Q::new(1, 3)],
            vec![Q::new(1, 4), Q::new(1, 5)],
        ])
        .unwrap();
        assert_eq!(determinant(&m), Some(Q::new(1, 10).sub(&Q::new(1, 12))));
        let m = ExactMatrix::<F3>::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&m), Some(F3::new(-1)));
    }

    #[test]
    fn local_flags_nonlocal_solutions() {
        use crate::coeffs::Zp;
        let m = ExactMatrix::<Zp<3>>::from_i64(&[vec![3]]).unwrap();
        let rhs = ExactMatrix::<Zp<3>>::from_i64(&[vec![1]]).unwrap();
        assert!(matches!(solve_linear(&m, &rhs).unwrap(), Solution::NonLocal { .. }));
        let m = ExactMatrix::<Zp<3>>::from_i64(&[vec![2]]).unwrap();
        assert!(matches!(solve_linear(&m, &rhs).unwrap(), Solution::Consistent { .. }));
    }

    #[test]
    fn span_coordinates() {
        let mut b = SpanBasis::<Q>::new(true);
        let v0 = SparseVec::from_pairs(vec![(0, Q::from_i64(1)), (1, Q::from_i64(1))]);
        let v1 = SparseVec::from_pairs(vec![(1, Q::from_i64(2)), (2, Q::from_i64(1))]);
        assert!(b.insert(&v0));
        assert!(b.insert(&v1));
        assert!(!b.insert(&v0.add(&v1)));
        let w = v0.scale(&Q::from_i64(3)).sub(&v1);
        let c = b.coords(&w).unwrap();
        assert_eq!(c.get(0), Q::from_i64(3));
        assert_eq!(c.get(1), Q::from_i64(-1));
        assert!(b.coords(&SparseVec::unit(3)).is_none());
    }
}
