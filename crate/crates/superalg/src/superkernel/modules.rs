//! Based graded supermodules and homomorphism spaces.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::coeffs::{accumulate, Scalar, SparseVec};

use super::{sparse_kernel, BasedSuperalgebra, BiDegree, KernelError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Action of one homogeneous algebra element: `images[v]` is a·v (left) or v·a (right).
#[derive(Clone, Debug)]
pub struct GeneratorAction<S> {
    pub element: SparseVec<S>,
    pub degree: BiDegree,
    pub images: Vec<SparseVec<S>>,
}

/// A module given by a homogeneous basis and the actions of a generating set
/// of the owner algebra.
#[derive(Clone, Debug)]
pub struct BasedSupermodule<S> {
    pub owner: String,
    pub side: Side,
    pub labels: Vec<String>,
    pub degrees: Vec<BiDegree>,
    pub actions: Vec<GeneratorAction<S>>,
}

impl<S: Scalar> BasedSupermodule<S> {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Each generator shifts bidegrees by its own bidegree.
    pub fn check_bidegrees(&self) -> bool {
        self.actions.iter().all(|g| {
            g.images.iter().enumerate().all(|(v, img)| img.iter().all(|(k, _)| self.degrees[k] == self.degrees[v].add(g.degree)))
        })
    }

    /// Checks compatibility with products: acting by a then b agrees with the
    /// action of the product whenever that product is itself a generator.
    pub fn check_products(&self, alg: &BasedSuperalgebra<S>) -> bool {
        let by_elem: HashMap<&SparseVec<S>, usize> = self.actions.iter().enumerate().map(|(i, g)| (&g.element, i)).collect();
        for a in &self.actions {
            for b in &self.actions {
                let prod = match self.side {
                    Side::Left => alg.mul(&a.element, &b.element),
                    Side::Right => alg.mul(&b.element, &a.element),
                };
                let Some(&pi) = by_elem.get(&prod) else { continue };
                for v in 0..self.rank() {
                    let twice = self.act(b, &self.act(a, &SparseVec::unit(v)));
                    let once = self.act(&self.actions[pi], &SparseVec::unit(v));
                    if twice != once {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Applies a generator action to a module element.
    pub fn act(&self, g: &GeneratorAction<S>, x: &SparseVec<S>) -> SparseVec<S> {
        let mut out = SparseVec::zero();
        for (v, c) in x.iter() {
            out = out.add_scaled(&g.images[v], c);
        }
        out
    }
}

/// The algebra acting on itself by left or right multiplication by `generators`.
pub fn regular_module<S: Scalar>(
    a: &BasedSuperalgebra<S>,
    side: Side,
    generators: &[SparseVec<S>],
) -> Result<BasedSupermodule<S>, KernelError> {
    let mut actions = Vec::new();
    for g in generators {
        let degree = a.element_degree(g).ok_or_else(|| KernelError::Module("generator not homogeneous".into()))?;
        let images = (0..a.rank())
            .map(|v| {
                let bv = SparseVec::unit(v);
                match side {
                    Side::Left => a.mul(g, &bv),
                    Side::Right => a.mul(&bv, g),
                }
            })
            .collect();
        actions.push(GeneratorAction { element: g.clone(), degree, images });
    }
    Ok(BasedSupermodule { owner: a.name.clone(), side, labels: a.labels().to_vec(), degrees: a.degrees().to_vec(), actions })
}

/// Homogeneous homomorphisms of one bidegree; each map lists the images of
/// the basis vectors of the source.
#[derive(Clone, Debug)]
pub struct HomSpace<S> {
    pub degree: BiDegree,
    pub maps: Vec<Vec<SparseVec<S>>>,
}

impl<S> HomSpace<S> {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

/// All homogeneous module homomorphisms M → N, one [`HomSpace`] per
/// occurring bidegree. Left modules use f(av) = (−1)^{|f||a|} a f(v), right
/// modules f(va) = f(v) a.
pub fn hom_space<S: Scalar>(m: &BasedSupermodule<S>, n: &BasedSupermodule<S>) -> Result<Vec<HomSpace<S>>, KernelError> {
    if m.owner != n.owner || m.side != n.side || m.actions.len() != n.actions.len() {
        return Err(KernelError::Module("modules over different algebras or generator sets".into()));
    }
    if m.actions.iter().zip(&n.actions).any(|(a, b)| a.element != b.element) {
        return Err(KernelError::Module("generator lists differ".into()));
    }
    let shifts: BTreeSet<BiDegree> =
        m.degrees.iter().flat_map(|dm| n.degrees.iter().map(move |dn| dn.sub(*dm))).collect();
    let mut out = Vec::new();
    for shift in shifts {
        let h = hom_of_degree(m, n, shift);
        if h.dim() > 0 {
            out.push(h);
        }
    }
    Ok(out)
}

fn hom_of_degree<S: Scalar>(m: &BasedSupermodule<S>, n: &BasedSupermodule<S>, shift: BiDegree) -> HomSpace<S> {
    // Unknown X_{ij}: coefficient of n_j in f(m_i), only where degrees match.
    let mut var: HashMap<(usize, usize), usize> = HashMap::new();
    let mut vars = Vec::new();
    let mut targets: Vec<Vec<usize>> = vec![Vec::new(); m.rank()];
    for i in 0..m.rank() {
        for j in 0..n.rank() {
            if n.degrees[j] == m.degrees[i].add(shift) {
                var.insert((i, j), vars.len());
                vars.push((i, j));
                targets[i].push(j);
            }
        }
    }
    let mut rows = Vec::new();
    for (ga, gb) in m.actions.iter().zip(&n.actions) {
        let sign = S::signed(m.side == Side::Left && shift.is_odd() && ga.degree.is_odd());
        for i in 0..m.rank() {
            // f(g·m_i) − sign·g·f(m_i), collected per output basis vector j.
            let mut eqs: BTreeMap<usize, BTreeMap<usize, S>> = BTreeMap::new();
            for (k, c) in ga.images[i].iter() {
                for &j in &targets[k] {
                    accumulate(eqs.entry(j).or_default(), var[&(k, j)], c);
                }
            }
            for &l in &targets[i] {
                for (j, c) in gb.images[l].iter() {
                    accumulate(eqs.entry(j).or_default(), var[&(i, l)], &c.mul(&sign).neg());
                }
            }
            rows.extend(eqs.into_values().map(SparseVec::from_map).filter(|r| !r.is_zero()));
        }
    }
    let maps = sparse_kernel(&rows, vars.len())
        .into_iter()
        .map(|sol| {
            let mut images: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); m.rank()];
            for (v, c) in sol.iter() {
                let (i, j) = vars[v];
                accumulate(&mut images[i], j, c);
            }
            images.into_iter().map(SparseVec::from_map).collect()
        })
        .collect();
    HomSpace { degree: shift, maps }
}
