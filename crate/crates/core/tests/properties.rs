//! Property tests for the module invariants.

use hklat::disc::discriminant_group;
use hklat::eichler::{random_eu_element, transvection};
use hklat::frame::{pair, FrameExt, LatVec};
use hklat::isometry::reflection;
use hklat::kummer::lattices::{geometric_lattice, kum_lattice};
use hklat::kummer::{abelian_frame, bfield, d_n, iota_extend, kummer_frame, sign_equivalence_action, theta_tilde, KummerFrame};
use hklat::lattice::span_sublattice;
use hklat::rational::{frac, int, Rational};
use hklat::spinor::{product_of_reflections, reflection_factorization, reflection_factorization_from, spinor_norm_of_factors, SpinorField};
use hklat::verify::sampling::{abelian_isometry, kum_split};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn n_strategy() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![3i64, 4, 5, 8, 12])
}

fn vec_in(k: &KummerFrame, coeffs: &[i64], basis: &[LatVec], den: i64) -> LatVec {
    basis
        .iter()
        .zip(coeffs)
        .fold(k.zero(), |acc, (b, &c)| &acc + &b.scale(&frac(c, den)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bfield_is_additive_isometry(n in n_strategy(), a in prop::collection::vec(-4i64..=4, 7), b in prop::collection::vec(-4i64..=4, 7), den in 1i64..=6) {
        let k = kummer_frame(n).unwrap();
        let l = vec_in(&k, &a, &k.h2_basis(), den);
        let m = vec_in(&k, &b, &k.h2_basis(), 1);
        let bl = bfield(&l).unwrap();
        let bm = bfield(&m).unwrap();
        prop_assert_eq!(bl.compose(&bm).unwrap(), bfield(&(&l + &m)).unwrap());
        prop_assert!(bl.compose(&bfield(&-&l).unwrap()).unwrap().is_identity());
        prop_assert_eq!(bl.det(), 1);
    }

    #[test]
    fn integral_bfields_preserve_kum_lattice(n in n_strategy(), a in prop::collection::vec(-3i64..=3, 7)) {
        let k = kummer_frame(n).unwrap();
        let l = vec_in(&k, &a, &k.h2_basis(), 1);
        prop_assert!(bfield(&l).unwrap().preserves(&kum_lattice(&k)));
    }

    #[test]
    fn transvection_is_additive_and_unipotent(a in prop::collection::vec(-4i64..=4, 7), b in prop::collection::vec(-4i64..=4, 7)) {
        let k = kummer_frame(3).unwrap();
        let e = -k.beta();
        let la = vec_in(&k, &a, &k.lambda_x_prime_basis(), 1);
        let lb = vec_in(&k, &b, &k.lambda_x_prime_basis(), 1);
        let ta = transvection(&e, &la).unwrap();
        let tb = transvection(&e, &lb).unwrap();
        prop_assert_eq!(ta.compose(&tb).unwrap(), transvection(&e, &(&la + &lb)).unwrap());
        prop_assert_eq!(ta.det(), 1);
        prop_assert_eq!(ta.apply(&e).unwrap(), e);
    }

    #[test]
    fn reflection_factorization_recomposes(seed in any::<u64>(), len in 0usize..6) {
        let k = kummer_frame(4).unwrap();
        let split = kum_split(&k);
        let (_, g) = random_eu_element(&split, len, seed, 2).unwrap();
        let g = g.compose(&sign_equivalence_action(&k)).unwrap();
        let vs = reflection_factorization(&g);
        prop_assert!(vs.len() <= 18);
        prop_assert!(product_of_reflections(k.frame(), &vs).same_matrix(&g));
        // A second factorization from a permuted seed has the same spinor norms.
        let mut seed_basis: Vec<LatVec> = (0..9).map(|i| k.frame().unit(i)).collect();
        seed_basis.reverse();
        let ws = reflection_factorization_from(&g, &seed_basis);
        prop_assert!(product_of_reflections(k.frame(), &ws).same_matrix(&g));
        for field in [SpinorField::Real, SpinorField::Rational] {
            prop_assert_eq!(spinor_norm_of_factors(&vs, field), spinor_norm_of_factors(&ws, field));
        }
    }

    #[test]
    fn eu_elements_preserve_both_lattices(seed in any::<u64>(), len in 0usize..5, n in n_strategy()) {
        let k = kummer_frame(n).unwrap();
        let split = kum_split(&k);
        let (_, g) = random_eu_element(&split, len, seed, 3).unwrap();
        prop_assert!(g.preserves(&kum_lattice(&k)));
        prop_assert!(g.preserves(&geometric_lattice(&k)));
    }

    #[test]
    fn random_eu_element_is_deterministic(seed in any::<u64>(), len in 0usize..5) {
        let k = kummer_frame(3).unwrap();
        let split = kum_split(&k);
        let (w1, g1) = random_eu_element(&split, len, seed, 3).unwrap();
        let (w2, g2) = random_eu_element(&split, len, seed, 3).unwrap();
        prop_assert_eq!(w1, w2);
        prop_assert_eq!(&g1, &g2);
        if len == 0 {
            prop_assert!(g1.is_identity());
        }
    }

    #[test]
    fn iota_and_dn_are_homomorphisms(seed in any::<u64>(), n in n_strategy()) {
        let k = kummer_frame(n).unwrap();
        let a = abelian_frame();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = abelian_isometry(&mut rng, &a, 3, 2);
        let h = abelian_isometry(&mut rng, &a, 3, 2);
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(iota_extend(&k, &gh).unwrap(), iota_extend(&k, &g).unwrap().compose(&iota_extend(&k, &h).unwrap()).unwrap());
        prop_assert_eq!(iota_extend(&k, &g).unwrap().apply(&k.delta()).unwrap(), k.delta());
        prop_assert_eq!(d_n(&k, &gh).unwrap(), d_n(&k, &g).unwrap().compose(&d_n(&k, &h).unwrap()).unwrap());
        // ι(g) θ̃ = θ̃ g on the abelian basis.
        for i in 0..8 {
            let w = a.frame().unit(i);
            let lhs = iota_extend(&k, &g).unwrap().apply(&theta_tilde(&k, &w).unwrap()).unwrap();
            let rhs = theta_tilde(&k, &g.apply(&w).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let s = sign_equivalence_action(&k);
        let dg = d_n(&k, &g).unwrap();
        prop_assert_eq!(s.compose(&dg).unwrap(), dg.compose(&s).unwrap());
        prop_assert!(s.compose(&s).unwrap().is_identity());
    }

    #[test]
    fn discriminant_order_is_abs_det(diag in prop::collection::vec(1i64..=12, 1..4), off in -3i64..=3) {
        // U ⊕ ⟨-2d_1⟩ ⊕ ... with one extra off-diagonal coupling to the hyperbolic plane.
        let dim = 2 + diag.len();
        let mut rows = vec![vec![0i64; dim]; dim];
        rows[0][1] = 1;
        rows[1][0] = 1;
        for (i, d) in diag.iter().enumerate() {
            rows[2 + i][2 + i] = -2 * d;
        }
        rows[1][2] = off;
        rows[2][1] = off;
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let gram = hklat::matrix::Matrix::from_i64_rows(&refs);
        let labels = (0..dim).map(|i| format!("x{i}")).collect();
        let fr = hklat::frame::AmbientFrame::new("P", labels, gram.clone()).unwrap();
        let l = hklat::lattice::QuadLattice::standard(&fr);
        let d = discriminant_group(&l).unwrap();
        let det = gram.det();
        prop_assert_eq!(Rational::from_integer(d.order()), num_traits::Signed::abs(&det));
        for (g, q) in d.generators().iter().zip(d.qvalues()) {
            prop_assert_eq!(q, &d.q(g));
            prop_assert!(*q >= Rational::zero() && *q < int(2));
        }
    }

    #[test]
    fn span_is_order_independent(a in prop::collection::vec(-5i64..=5, 9), b in prop::collection::vec(-5i64..=5, 9)) {
        let k = kummer_frame(3).unwrap();
        let basis: Vec<LatVec> = (0..9).map(|i| k.frame().unit(i)).collect();
        let u = vec_in(&k, &a, &basis, 1);
        let v = vec_in(&k, &b, &basis, 1);
        prop_assume!(!u.is_zero() || !v.is_zero());
        let s1 = span_sublattice(k.frame(), &[u.clone(), v.clone()]).unwrap();
        let s2 = span_sublattice(k.frame(), &[&v + &u, u.clone()]).unwrap();
        prop_assert!(s1.same_as(&s2));
        prop_assert_eq!(s1.hnf(), s1.canonical().hnf());
    }

    #[test]
    fn reflections_are_involutions(a in prop::collection::vec(-4i64..=4, 9)) {
        let k = kummer_frame(5).unwrap();
        let basis: Vec<LatVec> = (0..9).map(|i| k.frame().unit(i)).collect();
        let v = vec_in(&k, &a, &basis, 1);
        prop_assume!(!v.square().is_zero());
        let s = reflection(&v).unwrap();
        prop_assert!(s.compose(&s).unwrap().is_identity());
        prop_assert_eq!(s.apply(&v).unwrap(), -&v);
        prop_assert_eq!(pair(&s.apply(&k.e(1)).unwrap(), &s.apply(&k.e(2)).unwrap()).unwrap(), int(1));
    }

    #[test]
    fn rank_constraint_matches_formula(n in 3i64..=7, a in -4i64..=4) {
        let fact: i64 = (1..n).product();
        let rank = Rational::new((fact * a.pow((n - 1) as u32)).into(), n.into());
        prop_assert!(hklat::kummer::rank_constraint_check(n, &rank));
        prop_assert!(!hklat::kummer::rank_constraint_check(n, &(rank + frac(1, 2 * n))));
    }

    #[test]
    fn yoshioka_pairing_is_mukai(m in prop::sample::select(vec![1i64, 2, 3, 6]), r in -20i64..=20, d in -20i64..=20, a in -20i64..=20) {
        let mv = hklat::kummer::yoshioka_matrix(r, d, a, m).unwrap();
        prop_assert_eq!(hklat::kummer::yoshioka_pairing(&mv, &mv).unwrap(), 2 * m * d * d - 2 * r * a);
    }
}
