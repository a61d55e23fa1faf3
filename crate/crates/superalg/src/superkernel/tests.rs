use super::*;
use crate::coeffs::{Fp, Rational};

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn word_product<S: Scalar>(a: &BasedSuperalgebra<S>, labels: &[&str]) -> SparseVec<S> {
    labels.iter().fold(a.unit().clone(), |acc, l| a.mul(&acc, &a.basis(l)))
}

#[test]
fn clifford_basics() {
    let (c3, t) = clifford::<Q>(3);
    assert_eq!(c3.rank(), 8);
    c3.validate().unwrap();
    assert!(validate_symmetrizing(&c3, &t).passes());
    let c1c2 = word_product(&c3, &["c1", "c2"]);
    let c2c1 = word_product(&c3, &["c2", "c1"]);
    assert_eq!(c1c2, c2c1.neg());
    assert_eq!(word_product(&c3, &["c2", "c2"]), c3.unit().clone());
}

#[test]
fn clifford_tensor_square_is_c2() {
    let (c1, _) = clifford::<Q>(1);
    let (c2, _) = clifford::<Q>(2);
    let t = tensor(&c1, &c1);
    t.validate().unwrap();
    assert_eq!(t.rank(), c2.rank());
    // Basis 1⊗1, 1⊗c, c⊗1, c⊗c; c⊗1 ↦ c1 and 1⊗c ↦ c2 identifies the tables
    // after swapping the middle two indices.
    let swap = |i: usize| [0, 2, 1, 3][i];
    let relabelled = BasedSuperalgebra::from_fn("C1xC1", c2.labels().to_vec(), c2.degrees().to_vec(), c2.unit().clone(), |i, j| {
        t.mul_basis(swap(i), swap(j)).map_indices(swap)
    });
    assert!(relabelled.same_structure(&c2));
}

#[test]
fn opposite_is_involutive() {
    let (c2, _) = clifford::<Q>(2);
    let (t3, _) = twisted_sym::<Q>(3);
    for a in [c2, t3] {
        let o = opposite(&a);
        o.validate().unwrap();
        assert!(opposite(&o).same_structure(&a));
    }
    let (c1, _) = clifford::<Q>(1);
    assert!(c1.is_commutative());
}

#[test]
fn twisted_sym_relations() {
    let (t3, form) = twisted_sym::<Q>(3);
    assert_eq!(t3.rank(), 6);
    t3.validate().unwrap();
    assert!(validate_symmetrizing(&t3, &form).passes());
    let cube = word_product(&t3, &["t1", "t2", "t1", "t2", "t1", "t2"]);
    assert_eq!(cube, t3.unit().clone());
    assert_eq!(word_product(&t3, &["t1", "t1"]), t3.unit().clone());
    let (t4, form4) = twisted_sym::<Q>(4);
    t4.validate().unwrap();
    assert!(validate_symmetrizing(&t4, &form4).passes());
    assert_eq!(word_product(&t4, &["t1", "t3"]), word_product(&t4, &["t3", "t1"]).neg());
}

#[test]
fn hecke_quadratic_relation() {
    let (h2, form) = hecke::<Q>(2, &q(2)).unwrap();
    let t1 = h2.basis("T1");
    let xi = q(2).sub(&Q::new(1, 2));
    assert_eq!(h2.mul(&t1, &t1), t1.scale(&xi).add(h2.unit()));
    assert!(validate_symmetrizing(&h2, &form).passes());
    let (h3, form3) = hecke::<Q>(3, &q(3)).unwrap();
    h3.validate().unwrap();
    assert!(validate_symmetrizing(&h3, &form3).passes());
    assert_eq!(word_product(&h3, &["T1", "T2", "T1"]), word_product(&h3, &["T2", "T1", "T2"]));
    assert!(hecke::<Q>(2, &q(-1)).is_err());
    assert!(hecke::<Fp<5>>(2, &Fp::new(4)).is_err());
}

#[test]
fn olshanski_relations() {
    let (y1, form1) = olshanski::<Q>(1, &q(2)).unwrap();
    assert_eq!(y1.rank(), 2);
    assert_eq!(y1.mul(&y1.basis("c1"), &y1.basis("c1")), *y1.unit());
    y1.validate().unwrap();
    assert!(validate_symmetrizing(&y1, &form1).passes());
    let (y2, form) = olshanski::<Q>(2, &q(2)).unwrap();
    assert_eq!(y2.rank(), 8);
    y2.validate().unwrap();
    assert!(validate_symmetrizing(&y2, &form).passes());
    let t1 = y2.basis("T1");
    let (c1, c2) = (y2.basis("c1"), y2.basis("c2"));
    assert_eq!(y2.mul(&t1, &c1), y2.mul(&c2, &t1));
    // The naive form δ_{g,1}δ_{ε,0} is not symmetric.
    let delta: Vec<Q> = (0..8).map(|i| if i == 0 { q(1) } else { q(0) }).collect();
    assert!(!validate_symmetrizing(&y2, &delta).asymmetric_pairs.is_empty());
    assert_eq!(trace_functionals(&y2).len(), 1);
    let (y3, form3) = olshanski::<Fp<5>>(3, &Fp::new(2)).unwrap();
    y3.validate().unwrap();
    assert!(validate_symmetrizing(&y3, &form3).passes());
    let (t2, c3, c1) = (y3.basis("T2"), y3.basis("c3"), y3.basis("c1"));
    assert_eq!(y3.mul(&t2, &c1), y3.mul(&c1, &t2));
    assert_eq!(y3.mul(&t2, &y3.basis("c2")), y3.mul(&c3, &t2));
}

#[test]
fn group_algebra_and_catalog() {
    let (g3, t) = catalog::<Q>(CatalogKind::GroupAlgebra(3)).unwrap();
    assert_eq!(g3.rank(), 6);
    g3.validate().unwrap();
    assert!(validate_symmetrizing(&g3, &t).passes());
    assert!(!g3.is_commutative());
}

#[test]
fn wreath_of_clifford() {
    let (c1, _) = clifford::<Q>(1);
    let w = wreath(&c1, 2);
    assert_eq!(w.rank(), 8);
    w.validate().unwrap();
    let (c1f, _) = clifford::<Fp<3>>(1);
    let w3 = wreath(&c1f, 3);
    assert_eq!(w3.rank(), 48);
    assert!(w3.check_associativity().is_none());
}

#[test]
fn signed_place_action_counts_odd_inversions() {
    let g = crate::combin::Permutation::from_one_line(&[2, 1]).unwrap();
    let (neg, v) = signed_place_action(&g, &[1u8, 1u8], |x: &u8| *x == 1);
    assert!(neg);
    assert_eq!(v, vec![1, 1]);
    let (neg, _) = signed_place_action(&g, &[1u8, 0u8], |x: &u8| *x == 1);
    assert!(!neg);
}

#[test]
fn truncation_and_end_algebra() {
    let (g2, _) = group_algebra::<Q>(2);
    let half = Q::new(1, 2);
    let e_plus = g2.unit().add(&g2.basis("[2, 1]")).scale(&half);
    let e_minus = g2.unit().sub(&g2.basis("[2, 1]")).scale(&half);
    let tr = truncate(&g2, &e_plus).unwrap();
    assert_eq!(tr.rank(), 1);
    let end = end_algebra(&g2, &[e_plus.clone(), e_minus.clone()]).unwrap();
    assert_eq!(end.rank(), 2);
    end.validate().unwrap();
    assert!(truncate(&g2, &g2.basis("[2, 1]")).is_err());
}

#[test]
fn regrade_with_zero_shift_is_identity() {
    let (c2, _) = clifford::<Q>(2);
    let r = regrade(&c2, &[c2.unit().clone()], &[(0, 0)]).unwrap();
    assert!(r.same_structure(&c2));
}

#[test]
fn supercentralizer_of_matrix_superalgebra() {
    // M_2(C_1) as C_1 ⊗ End(k²) with matrix units E_ij.
    let (c1, _) = clifford::<Q>(1);
    let labels = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
    let m2 = BasedSuperalgebra::from_fn("M2", labels, vec![BiDegree::ZERO; 4], SparseVec::from_pairs([(0, q(1)), (3, q(1))]), |a, b| {
        let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
        if j == k {
            SparseVec::unit(i * 2 + l)
        } else {
            SparseVec::zero()
        }
    });
    let a = tensor(&c1, &m2);
    a.validate().unwrap();
    let units: Vec<Vec<SparseVec<Q>>> =
        (0..2).map(|i| (0..2).map(|j| SparseVec::unit(i * 2 + j)).collect()).collect();
    let cz = supercentralizer(&a, &units).unwrap();
    assert_eq!(cz.algebra.rank(), 2);
    assert!(cz.factorization_ok);
    assert!(!cz.algebra.is_commutative() || cz.algebra.rank() == 2);
}

#[test]
fn json_round_trip() {
    let (y2, _) = olshanski::<Q>(2, &q(3)).unwrap();
    let back = BasedSuperalgebra::<Q>::from_json(&y2.to_json()).unwrap();
    assert!(back.same_structure(&y2));
}

#[test]
fn hom_space_of_regular_module() {
    // End of the right regular module of C_1 is C_1 acting on the left.
    let (c1, _) = clifford::<Q>(1);
    let gens = vec![c1.basis("c1")];
    let m = regular_module(&c1, Side::Right, &gens).unwrap();
    assert!(m.check_bidegrees());
    let homs = hom_space(&m, &m).unwrap();
    let total: usize = homs.iter().map(|h| h.dim()).sum();
    assert_eq!(total, 2);
    let (t3, _) = twisted_sym::<Q>(3);
    let gens: Vec<_> = ["t1", "t2"].iter().map(|l| t3.basis(l)).collect();
    let m = regular_module(&t3, Side::Left, &gens).unwrap();
    let total: usize = hom_space(&m, &m).unwrap().iter().map(|h| h.dim()).sum();
    assert_eq!(total, 6);
}

#[test]
fn sparse_kernel_matches_dense() {
    let rows = vec![
        SparseVec::from_pairs([(0, q(1)), (2, q(-1))]),
        SparseVec::from_pairs([(1, q(2)), (2, q(-2))]),
    ];
    let k = sparse_kernel(&rows, 3);
    assert_eq!(k.len(), 1);
    for r in &rows {
        assert!(r.dot(&k[0]).is_zero());
    }
}

