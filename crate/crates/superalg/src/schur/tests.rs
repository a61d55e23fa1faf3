use super::*;
use crate::brauer::{brauer_algebra, BrauerBasis, Variant};
use crate::coeffs::{Fp, Zp};
use crate::combin::{colored_compositions, ColoredComposition};
use crate::superkernel::BasedSupermodule;

type Q = Rational;

fn unit_vec(b: usize) -> SparseVec<Q> {
    SparseVec::unit(b)
}

#[test]
fn one_by_one_degree_one_is_brauer_tree() {
    for ell in 1..=3 {
        let s = schur_s::<Q>(1, 1, ell).unwrap();
        assert_eq!(s.rank(), 4 * ell - 1);
        let a = brauer_algebra::<Q>(ell, Variant::Std).unwrap();
        let to_s = |b: usize| s.index_of(&[s.ambient.factor(b, 0, 0)]).unwrap();
        for x in 0..a.algebra.rank() {
            for y in 0..a.algebra.rank() {
                assert_eq!(s.algebra.mul_basis(to_s(x), to_s(y)), a.algebra.mul_basis(x, y).map_indices(to_s));
            }
        }
    }
}

#[test]
fn rank_counts_agree_with_invariants() {
    for (n, d, ell, expected) in [(1, 2, 1, 5), (2, 2, 1, 0), (1, 3, 1, 0)] {
        let s = schur_s::<Q>(n, d, ell).unwrap();
        if expected > 0 {
            assert_eq!(s.rank(), expected);
        }
        assert_eq!(s.rank(), s.ambient.invariant_rank::<Q>());
        s.algebra.validate().unwrap();
    }
}

#[test]
fn orbit_sums_are_invariant() {
    for (n, d, ell) in [(2, 2, 1), (1, 3, 1), (1, 2, 2)] {
        let s = schur_s::<Q>(n, d, ell).unwrap();
        for k in 0..s.rank() {
            assert!(s.ambient.is_invariant(&s.expand(k)), "ξ_{k} at ({n},{d},{ell})");
        }
    }
}

#[test]
fn products_match_ambient_products() {
    let s = schur_s::<Q>(2, 2, 1).unwrap();
    for i in (0..s.rank()).step_by(3) {
        for j in (0..s.rank()).step_by(2) {
            let amb = s.ambient.mul(&s.expand(i), &s.expand(j));
            assert_eq!(s.compress(&amb).unwrap(), s.algebra.mul_basis(i, j));
        }
    }
}

#[test]
fn xi_lambda_decompose_the_unit() {
    let s = schur_s::<Q>(2, 2, 2).unwrap();
    let idems: Vec<SparseVec<Q>> = lambda_j(2, 2, 2).iter().map(|l| s.xi_lambda(l).unwrap()).collect();
    let sum = idems.iter().fold(SparseVec::zero(), |acc, e| acc.add(e));
    assert_eq!(&sum, s.algebra.unit());
    for (i, e) in idems.iter().enumerate() {
        for (j, f) in idems.iter().enumerate() {
            let p = s.algebra.mul(e, f);
            assert_eq!(p, if i == j { e.clone() } else { SparseVec::zero() });
        }
    }
}

#[test]
fn eta_rescaling() {
    let t = schur_t::<Q>(1, 2, 1).unwrap();
    let s = &t.schur;
    let c = s.ambient.factor(BrauerBasis { ell: 1 }.c(0), 0, 0);
    let k = s.index_of(&[c, c]).unwrap();
    assert_eq!(t.scale[k], 2);
    assert_eq!(t.scale.iter().filter(|&&x| x != 1).count(), 1);
    t.algebra.validate().unwrap();
    for k in 0..t.rank() {
        if t.algebra.degree(k).deg <= 3 {
            assert_eq!(t.scale[k], 1);
        }
    }
}

#[test]
fn t_base_change_matches_reduction() {
    let tz = schur_t::<Zp<3>>(1, 3, 1).unwrap();
    let tf = schur_t::<Fp<3>>(1, 3, 1).unwrap();
    assert!(tz.algebra.map_scalars(|x| x.reduce()).same_structure(&tf.algebra));
    tf.algebra.validate().unwrap();
    // S over F_3 is a different algebra from T over F_3 once a c repeats thrice.
    assert!(tz.scale.iter().any(|&x| x == 6));
}

#[test]
fn permutation_module_ranks() {
    let m = perm_module(&ColoredComposition { lambda: vec![2], colors: vec![0] }, 1).unwrap();
    assert_eq!(m.rank(), 9);
    let m = perm_module(&ColoredComposition { lambda: vec![1, 1], colors: vec![0, 0] }, 2).unwrap();
    assert_eq!(m.rank(), 32);
    for ell in 1..=2 {
        for n in 1..=2 {
            for d in 1..=3 {
                for shape in colored_compositions(ell, n, d) {
                    let m = perm_module(&shape, ell).unwrap();
                    assert_eq!(m.rank() as u128, perm_module_rank(&shape, ell), "{shape:?}");
                }
            }
        }
    }
}

/// Applies generators in order to a basis vector of a right module.
fn apply(m: &BasedSupermodule<Q>, gens: &[usize], v: usize) -> SparseVec<Q> {
    gens.iter().fold(SparseVec::unit(v), |x, &g| m.act(&m.actions[g], &x))
}

/// The defining relations of W_d(𝖠_ℓ) on the generators b ⊗ 1 and s_r.
fn wreath_relations_hold(m: &BasedSupermodule<Q>, basis: &BrauerBasis, d: usize) -> bool {
    let br = basis.rank();
    let swap = |r: usize| br + r - 1;
    for v in 0..m.rank() {
        let x = SparseVec::unit(v);
        for r in 1..d {
            if apply(m, &[swap(r), swap(r)], v) != x {
                return false;
            }
            if r + 1 < d && apply(m, &[swap(r), swap(r + 1), swap(r)], v) != apply(m, &[swap(r + 1), swap(r), swap(r + 1)], v) {
                return false;
            }
            for b in 0..br {
                if r >= 2 && apply(m, &[b, swap(r)], v) != apply(m, &[swap(r), b], v) {
                    return false;
                }
            }
        }
        for a in 0..br {
            for b in 0..br {
                let ab = basis.product(a, b).map_or_else(SparseVec::zero, |p| apply(m, &[p], v));
                if apply(m, &[a, b], v) != ab {
                    return false;
                }
                if d >= 2 {
                    // a in slot 1 and b in slot 2 supercommute.
                    let lhs = apply(m, &[a, swap(1), b, swap(1)], v);
                    let rhs = apply(m, &[swap(1), b, swap(1), a], v);
                    let odd = basis.std_degree(a).parity & basis.std_degree(b).parity == 1;
                    if lhs != if odd { rhs.neg() } else { rhs } {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn permutation_modules_satisfy_wreath_relations() {
    for (lambda, colors, ell) in [(vec![2], vec![0], 1), (vec![1, 1], vec![0, 1], 2), (vec![2, 1], vec![1, 0], 2), (vec![1, 2], vec![0, 0], 1)] {
        let pm = perm_module(&ColoredComposition { lambda, colors }, ell).unwrap();
        let m = pm.supermodule::<Q>();
        assert!(m.check_bidegrees());
        assert!(wreath_relations_hold(&m, &pm.basis, pm.d));
        // m·w = m for w ∈ 𝔖_λ.
        let g = pm.generator();
        for (r, _) in pm.shape.lambda.iter().enumerate().filter(|(_, &x)| x >= 2) {
            let pos = pm.shape.lambda[..r].iter().sum::<usize>() + 1;
            assert_eq!(pm.act(&WreathGenerator::Swap(pos), g), Some((false, g)));
        }
    }
}

#[test]
fn tensor_space_relations_and_decomposition() {
    for (n, d, ell) in [(1, 2, 1), (2, 2, 1), (1, 2, 2)] {
        let v = tensor_space(n, d, ell).unwrap();
        let m = v.supermodule::<Q>();
        assert!(m.check_bidegrees());
        assert!(wreath_relations_hold(&m, &v.basis, d));
        let parts = v.decompose().unwrap();
        assert_eq!(parts.iter().map(|p| p.module.rank()).sum::<usize>(), v.rank());
        assert!(parts.iter().all(|p| p.isomorphism), "({n},{d},{ell})");
    }
    assert!(tensor_space(3, 4, 2).is_err());
}

#[test]
fn endomorphisms_of_tensor_space() {
    let v = tensor_space(1, 2, 1).unwrap();
    assert_eq!(v.endomorphism_rank::<Q>().unwrap(), 5);
    let s = schur_s::<Q>(1, 2, 1).unwrap();
    assert!(v.check_schur_action(&s));
    let s = schur_s::<Q>(2, 2, 1).unwrap();
    assert!(tensor_space(2, 2, 1).unwrap().check_schur_action(&s));
}

#[test]
fn special_elements() {
    let s = schur_s::<Q>(2, 2, 1).unwrap();
    let basis = BrauerBasis { ell: 1 };
    let u = unit_vec(basis.u());
    // Σ_{h(𝝀)=(1)} 𝚒^𝝀(u) = ξ^{u·1}_{12,12}.
    let lhs = lambda_j(1, 1, 1).iter().fold(SparseVec::zero(), |acc, l| acc.add(&s.i_la(l, &u).unwrap()));
    let one = SparseVec::from_pairs([(basis.e(0), Q::one())]);
    let rhs = s.xi_symbolic(&[(u.clone(), 1, 1), (one, 2, 2)]).unwrap();
    assert_eq!(lhs, rhs);
    // 𝚒_{r,s} lands in S and 𝚒_{1,1}(1) is the unit's diagonal part.
    for b in 0..basis.rank() {
        assert!(s.i_rs(1, 2, &unit_vec(b)).is_ok());
    }
    let i11 = s.i_rs(1, 1, &unit_vec(basis.e(0))).unwrap();
    assert_eq!(s.algebra.element_degree(&i11), Some(BiDegree::ZERO));
}

#[test]
fn i_la_is_multiplicative() {
    for ell in 1..=2 {
        let s = schur_s::<Q>(2, 2, ell).unwrap();
        let basis = BrauerBasis { ell };
        for lambda in lambda_j(1, 1, ell) {
            for x in 0..basis.rank() {
                for y in 0..basis.rank() {
                    let xy = basis.product(x, y).map_or_else(SparseVec::zero, unit_vec);
                    let lhs = s.algebra.mul(&s.i_la(&lambda, &unit_vec(x)).unwrap(), &s.i_la(&lambda, &unit_vec(y)).unwrap());
                    assert_eq!(lhs, s.i_la(&lambda, &xy).unwrap());
                }
            }
        }
    }
}

#[test]
fn generation_by_degree_zero_and_special_elements() {
    let t = schur_t::<Q>(2, 2, 1).unwrap();
    let s = &t.schur;
    let zero: Vec<SparseVec<Q>> = s.algebra.indices_of_degree(BiDegree::ZERO).into_iter().map(SparseVec::unit).collect();
    let mut seeds = zero.clone();
    for b in 0..(BrauerBasis { ell: 1 }).rank() {
        seeds.push(t.from_xi(&s.i_rs(1, 1, &unit_vec(b)).unwrap()).unwrap());
    }
    assert!(generated_subalgebra(&t.algebra, &seeds).equal);
    let only_zero = generated_subalgebra(&t.algebra, &zero);
    assert!(!only_zero.equal);
    assert!(only_zero.ranks.iter().all(|(d, (g, _))| d.deg == 0 || *g == 0));
}

#[test]
fn degree_zero_dimensions() {
    for n in 1..=3 {
        for d in 1..=3 {
            assert_eq!(degree_zero_dims(n, d, 1), binomial(n * n + d - 1, d));
        }
    }
    assert_eq!(degree_zero_dims(1, 2, 2), 3);
    let s = schur_s::<Q>(2, 2, 2).unwrap();
    assert_eq!(s.algebra.indices_of_degree(BiDegree::ZERO).len() as u128, degree_zero_dims(2, 2, 2));
}

#[test]
fn guard_rails() {
    assert!(matches!(schur_s::<Q>(3, 5, 2), Err(SchurError::TooLarge { .. })));
    assert!(matches!(schur_s::<Q>(0, 1, 1), Err(SchurError::BadSize)));
}
