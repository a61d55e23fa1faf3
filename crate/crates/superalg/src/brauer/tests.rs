use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coeffs::{Fp, Rational};
use crate::combin::Permutation;
use crate::superkernel::{truncate, wreath};

type Q = Rational;

#[test]
fn ell_one_basis() {
    let t = brauer_algebra::<Q>(1, Variant::Std).unwrap();
    assert_eq!(t.algebra.labels(), ["e[0]", "c[0]", "u"]);
    let u = t.algebra.basis("u");
    assert_eq!(t.algebra.mul(&u, &u), t.algebra.basis("c[0]"));
    t.algebra.validate().unwrap();
}

#[test]
fn ranks_and_relations() {
    for ell in 1..=5 {
        let t = brauer_algebra::<Q>(ell, Variant::Std).unwrap();
        assert_eq!(t.algebra.rank(), 4 * ell - 1);
        t.algebra.validate().unwrap();
        for j in 0..ell {
            let row = t.algebra.mul(&t.idempotent(j), &crate::coeffs::SparseVec::from_pairs((0..t.algebra.rank()).map(|b| (b, Q::one()))));
            assert_eq!(row.len(), if j == ell - 1 { 3 } else { 4 }, "ell={ell} j={j}");
        }
        let a = &t.algebra;
        if ell >= 2 {
            let u = a.basis("u");
            assert_eq!(a.mul(&u, &u), a.mul(&a.basis("a[0,1]"), &a.basis("a[1,0]")));
            for i in 1..ell {
                let c = a.basis(&format!("c[{i}]"));
                assert_eq!(a.mul(&a.basis(&format!("a[{i},{}]", i - 1)), &a.basis(&format!("a[{},{i}]", i - 1))), c);
                if i + 1 < ell {
                    assert_eq!(a.mul(&a.basis(&format!("a[{i},{}]", i + 1)), &a.basis(&format!("a[{},{i}]", i + 1))), c);
                }
            }
        }
        if ell >= 3 {
            assert!(a.mul(&a.basis("a[0,1]"), &a.basis("a[1,2]")).is_zero());
        }
    }
}

#[test]
fn forms_are_symmetrizing() {
    for ell in 1..=4 {
        assert!(brauer_algebra::<Q>(ell, Variant::Std).unwrap().validate_form().passes());
        assert!(brauer_algebra::<Fp<3>>(ell, Variant::Std).unwrap().validate_form().passes());
        assert!(brauer_algebra::<Fp<5>>(ell, Variant::Std).unwrap().validate_form().passes());
        assert!(brauer_algebra::<Q>(ell, Variant::Regraded).unwrap().validate_form().passes());
    }
}

#[test]
fn regraded_bidegrees() {
    let t = brauer_algebra::<Q>(3, Variant::Regraded).unwrap();
    let a = &t.algebra;
    t.algebra.validate().unwrap();
    for j in 0..2 {
        assert_eq!(a.degree(a.index_of(&format!("a[{j},{}]", j + 1)).unwrap()), BiDegree::new(0, 0));
        assert_eq!(a.degree(a.index_of(&format!("a[{},{j}]", j + 1)).unwrap()), BiDegree::new(4, 0));
    }
    assert_eq!(a.degree(a.index_of("u").unwrap()), BiDegree::new(2, 1));
    assert_eq!(a.degree(a.index_of("c[2]").unwrap()), BiDegree::new(4, 0));
}

#[test]
fn truncation_and_wreath_ranks() {
    // Vertex 0 also carries u, so the last vertex has rank 2 only for ℓ ≥ 2.
    for ell in 1..=4 {
        let t = brauer_algebra::<Q>(ell, Variant::Std).unwrap();
        assert_eq!(truncate(&t.algebra, &t.idempotent(ell - 1)).unwrap().rank(), if ell == 1 { 3 } else { 2 });
    }
    let t = brauer_algebra::<Q>(1, Variant::Std).unwrap();
    assert_eq!(wreath(&t.algebra, 2).rank(), 18);
}

fn h(ell: usize, d: usize, cap: u32) -> AffineBrauer<Q> {
    AffineBrauer::new(ell, d, cap).unwrap()
}

#[test]
fn z_anticommutes_with_odd() {
    let h = h(1, 1, 3);
    let u = h.slot(1, h.tree.basis.u());
    let z = h.z(1);
    let uz = h.multiply(&u, &z, false).unwrap();
    let zu = h.multiply(&z, &u, false).unwrap();
    assert_eq!(uz, zu.scale(&Q::from_i64(-1)));
    let c = h.slot(1, h.tree.basis.c(0));
    assert_eq!(h.multiply(&c, &z, false).unwrap(), h.multiply(&z, &c, false).unwrap());
}

#[test]
fn straightening_relation() {
    for ell in 1..=3 {
        let h = h(ell, 2, 3);
        let s1 = h.perm(&Permutation::s(1, 2));
        let basis = h.tree.basis;
        for i in 0..ell {
            for k in 0..ell {
                let ei = h.word(&[basis.e(i), basis.e(k)]);
                let lhs = h.multiply(&h.multiply(&h.multiply(&s1, &h.z(1), false).unwrap(), &ei, false).unwrap(), &h.one(), false).unwrap();
                let rhs = h.multiply(&h.multiply(&h.z(2), &s1, false).unwrap(), &ei, false).unwrap();
                let diff = lhs.add(&rhs.scale(&Q::from_i64(-1)));
                let expected = if i == k {
                    let mut x = h.word(&[basis.c(i), basis.e(i)]).add(&h.word(&[basis.e(i), basis.c(i)]));
                    if i == 0 {
                        x = x.add(&h.word(&[basis.u(), basis.u()]));
                    }
                    x
                } else if i.abs_diff(k) == 1 {
                    h.word(&[basis.a(k, i), basis.a(i, k)])
                } else {
                    AffineElement::zero(2, 3)
                };
                assert_eq!(diff.terms, expected.terms, "ell={ell} i=({i},{k})");
            }
        }
    }
}

#[test]
fn simple_reflections_square_to_one() {
    let h = h(2, 3, 4);
    for r in 1..=2 {
        let s = h.perm(&Permutation::s(r, 3));
        let ss = h.multiply(&s, &s, false).unwrap();
        assert_eq!(ss.terms, h.one().terms);
        for t in 1..=3 {
            let z = h.z(t);
            let lhs = h.multiply(&ss, &z, false).unwrap();
            assert_eq!(lhs.terms, z.terms);
        }
    }
    // Braid relation on z_1.
    let (s1, s2) = (h.perm(&Permutation::s(1, 3)), h.perm(&Permutation::s(2, 3)));
    let z = h.z(1);
    let l = [&s1, &s2, &s1, &z].iter().skip(1).fold(s1.clone(), |acc, x| h.multiply(&acc, x, false).unwrap());
    let r = [&s2, &s1, &s2, &z].iter().skip(1).fold(s2.clone(), |acc, x| h.multiply(&acc, x, false).unwrap());
    assert_eq!(l.terms, r.terms);
}

#[test]
fn z_free_products_match_wreath() {
    let h = h(1, 2, 2);
    let w = wreath(&h.tree.algebra, 2);
    let perms = Permutation::all(2);
    let r = h.tree.basis.rank();
    let elem = |i: usize| {
        let (code, p) = (i / 2, &perms[i % 2]);
        let b = vec![code / r, code % r];
        h.monomial(Monomial { z: vec![0, 0], b, w: p.clone() }, Q::one())
    };
    for i in 0..w.rank() {
        for j in 0..w.rank() {
            let prod = h.multiply(&elem(i), &elem(j), false).unwrap();
            let mut expected = AffineElement::zero(2, 2);
            for (k, c) in w.mul_basis(i, j).iter() {
                expected = expected.add(&elem(k).scale(c));
            }
            assert_eq!(prod.terms, expected.terms);
        }
    }
}

#[test]
fn graded_ranks_small() {
    for ell in 1..=3 {
        for d in 1..=2 {
            let rep = affine_graded_rank::<Q>(ell, d, 0, 1).unwrap();
            assert_eq!(rep.monomials, ell.pow(d as u32) * crate::combin::factorial(d) as usize);
            assert!(rep.agrees());
        }
    }
    assert_eq!(affine_graded_rank::<Q>(1, 1, 2, 1).unwrap().monomials, 1);
    assert_eq!(affine_graded_rank::<Q>(1, 1, 4, 2).unwrap().monomials, 2);
    for m in 0..=8 {
        let rep = affine_graded_rank::<Q>(1, 2, m, 3).unwrap();
        assert!(rep.agrees(), "{rep:?}");
    }
    assert!(matches!(affine_graded_rank::<Q>(1, 1, 8, 2), Err(BrauerError::CapInsufficient { .. })));
}

#[test]
fn cap_is_enforced() {
    let h = h(1, 1, 1);
    let z = h.z(1);
    assert!(matches!(h.multiply(&z, &z, false), Err(BrauerError::CapExceeded { .. })));
    let t = h.multiply(&z, &z, true).unwrap();
    assert!(t.truncated && t.is_zero());
}

fn random_element(h: &AffineBrauer<Q>, rng: &mut ChaCha8Rng) -> AffineElement<Q> {
    let mut x = AffineElement::zero(h.d, h.cap);
    let perms = Permutation::all(h.d);
    for _ in 0..rng.gen_range(1..=2) {
        let m = Monomial {
            z: {
                let mut z = vec![0; h.d];
                if rng.gen_bool(0.6) {
                    z[rng.gen_range(0..h.d)] = 1;
                }
                z
            },
            b: (0..h.d).map(|_| rng.gen_range(0..h.tree.basis.rank())).collect(),
            w: perms[rng.gen_range(0..perms.len())].clone(),
        };
        x = x.add(&h.monomial(m, Q::from_i64(rng.gen_range(-3..=3))));
    }
    x
}

#[test]
fn associativity_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ell in 1..=2 {
        let h = h(ell, 2, 3);
        for _ in 0..250 {
            let (x, y, z) = (random_element(&h, &mut rng), random_element(&h, &mut rng), random_element(&h, &mut rng));
            let xy = h.multiply(&x, &y, false).unwrap();
            let l = h.multiply(&xy, &z, false).unwrap_or_else(|e| panic!("{e} {xy:?} {z:?}"));
            let yz = h.multiply(&y, &z, false).unwrap();
            let r = h.multiply(&x, &yz, false).unwrap_or_else(|e| panic!("{e}\nx={x:?}\nyz={yz:?}\ny={y:?}\nz={z:?}"));
            assert_eq!(l.terms, r.terms);
        }
    }
}

#[test]
fn regraded_affine_rejected() {
    let t = brauer_algebra::<Q>(2, Variant::Regraded).unwrap();
    assert!(matches!(AffineBrauer::over(t, 2, 2), Err(BrauerError::RegradedAffine)));
}
