use proptest::prelude::*;

use superalg::brauer::{brauer_algebra, Variant};
use superalg::coeffs::{determinant, rank, ExactMatrix, Fp, Rational, Scalar, SparseVec};
use superalg::combin::{
    alpha_bijection, alpha_inverse, bar_core, bar_weight, factorial, kostka, multinomial, partitions, pstrict,
    Permutation,
};
use superalg::qhs::{Qhs, DEFAULT_Y_CAP};
use superalg::rootdata::RootSystem;
use superalg::superkernel::{clifford, twisted_sym, BasedSuperalgebra};

type F7 = Fp<7>;

fn fp() -> impl Strategy<Value = F7> {
    (-20i64..20).prop_map(F7::from_i64)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..8).prop_map(|(n, d)| Rational::new(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..4, cols), rows)
}

fn permutation(d: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=d).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn element<S: Scalar>(alg: &BasedSuperalgebra<S>, coeffs: &[i64]) -> SparseVec<S> {
    SparseVec::from_pairs(coeffs.iter().enumerate().take(alg.rank()).map(|(i, &c)| (i, S::from_i64(c))))
}

fn check_associative<S: Scalar>(alg: &BasedSuperalgebra<S>, a: &[i64], b: &[i64], c: &[i64]) -> Result<(), TestCaseError> {
    let (x, y, z) = (element(alg, a), element(alg, b), element(alg, c));
    prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    prop_assert_eq!(alg.mul(alg.unit(), &x), x.clone());
    prop_assert_eq!(alg.mul(&x, alg.unit()), x);
    Ok(())
}

fn coeff_vec() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..3, 24)
}

proptest! {
    #[test]
    fn prime_field_axioms(a in fp(), b in fp(), c in fp()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        match a.inv() {
            Some(i) => prop_assert!(a.mul(&i).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), Rational::zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix(4, 5)) {
        let q = ExactMatrix::<Rational>::from_i64(&m).unwrap();
        prop_assert_eq!(rank(&q), rank(&q.transpose()));
        prop_assert!(rank(&q) <= 4);
        let f = q.map(|x| Fp::<5>::from_rational(x).unwrap());
        prop_assert!(rank(&f) <= rank(&q));
    }

    #[test]
    fn determinant_detects_full_rank(m in matrix(4, 4), n in matrix(4, 4)) {
        let a = ExactMatrix::<Rational>::from_i64(&m).unwrap();
        let b = ExactMatrix::<Rational>::from_i64(&n).unwrap();
        let da = determinant(&a).unwrap();
        prop_assert_eq!(da.is_zero(), rank(&a) < 4);
        let db = determinant(&b).unwrap();
        prop_assert_eq!(determinant(&a.mul(&b).unwrap()).unwrap(), da.mul(&db));
    }

    #[test]
    fn permutation_words(w in permutation(5), v in permutation(5)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(&word, 5), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.sign(), if w.length() % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(w.compose(&v).sign(), w.sign() * v.sign());
    }

    #[test]
    fn alpha_round_trip(comps in prop::collection::vec(prop::collection::vec(0usize..4, 3), 1..4)) {
        let ell = comps.len();
        let flat = alpha_bijection(&comps, 3);
        prop_assert_eq!(flat.len(), 3 * ell);
        prop_assert_eq!(flat.iter().sum::<usize>(), comps.iter().flatten().sum::<usize>());
        prop_assert_eq!(alpha_inverse(&flat, ell).unwrap(), comps);
    }

    #[test]
    fn nucleus_plus_deltas(ell in 1usize..4, pick in 0usize..64, d in 0usize..4) {
        let roots = RootSystem::new(ell).unwrap();
        let nuclei = roots.nuclei(6);
        let (rho, _) = &nuclei[pick % nuclei.len()];
        let delta = roots.delta();
        let theta: Vec<usize> = rho.iter().zip(&delta).map(|(r, x)| r + d * x).collect();
        let label = roots.nucleus_mass(&theta).unwrap().expect("ρ + dδ lies in 𝒲");
        prop_assert_eq!(&label.rho, rho);
        prop_assert_eq!(label.d, d);
    }

    #[test]
    fn contents_are_labelled_by_bar_cores(n in 1usize..10, pick in 0usize..200, p in prop::sample::select(vec![3u64, 5, 7])) {
        let all = pstrict(n, p);
        let lambda = &all[pick % all.len()];
        let roots = RootSystem::new(((p - 1) / 2) as usize).unwrap();
        let label = roots.nucleus_mass(&roots.content(lambda).unwrap()).unwrap().expect("content lies in 𝒲");
        let core = bar_core(lambda, p).unwrap();
        prop_assert_eq!(label.rho, roots.content(&core).unwrap());
        prop_assert_eq!(label.d, bar_weight(lambda, p).unwrap());
    }

    #[test]
    fn kostka_counts_words(mu in prop::collection::vec(0usize..3, 1..4)) {
        let d: usize = mu.iter().sum();
        let ones = vec![1; d];
        let total: u128 = partitions(d).iter().map(|l| kostka(l, &ones) as u128 * kostka(l, &mu) as u128).sum();
        prop_assert_eq!(total, factorial(d) / mu.iter().map(|&m| factorial(m)).product::<u128>());
        prop_assert_eq!(total, multinomial(&mu));
    }

    #[test]
    fn brauer_tree_is_associative(ell in 1usize..4, regraded in any::<bool>(), a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        let variant = if regraded { Variant::Regraded } else { Variant::Std };
        let t = brauer_algebra::<Rational>(ell, variant).unwrap();
        check_associative(&t.algebra, &a, &b, &c)?;
    }

    #[test]
    fn clifford_and_twisted_are_associative(n in 1usize..4, a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        check_associative(&clifford::<F7>(n).0, &a, &b, &c)?;
        check_associative(&twisted_sym::<F7>(n).0, &a, &b, &c)?;
    }

    #[test]
    fn products_respect_degree(ell in 1usize..4, i in 0usize..16, j in 0usize..16) {
        let alg = brauer_algebra::<Rational>(ell, Variant::Std).unwrap().algebra;
        let (i, j) = (i % alg.rank(), j % alg.rank());
        let prod = alg.mul(&SparseVec::unit(i), &SparseVec::unit(j));
        if let Some(deg) = alg.element_degree(&prod) {
            let (di, dj) = (alg.degree(i), alg.degree(j));
            prop_assert_eq!(deg.deg, di.deg + dj.deg);
            prop_assert_eq!(deg.parity, (di.parity + dj.parity) % 2);
        }
    }

    #[test]
    fn qhs_defining_relations(ell in 1usize..3, theta in prop::collection::vec(0usize..3, 3), picks in (0usize..100, 0usize..100, 1usize..4, 1usize..5)) {
        let theta = &theta[..ell + 1];
        prop_assume!(theta.iter().sum::<usize>() >= 1 && theta.iter().sum::<usize>() <= 4);
        let q = Qhs::<F7>::new(ell, theta, DEFAULT_Y_CAP).unwrap();
        let (a, b, r, s) = picks;
        let (idem, other) = (&q.words[a % q.words.len()], &q.words[b % q.words.len()]);
        let r = if q.n < 2 { 1 } else { 1 + (r - 1) % (q.n - 1) };
        let s = 1 + (s - 1) % q.n;
        for rel in q.relations(idem, other, r, s).unwrap() {
            prop_assert!(rel.holds(), "{} at θ={:?}, 𝒊={:?}, r={}, s={}", rel.name, theta, idem, r, s);
        }
    }
}
