use dashu_int::IBig;
use dashu_ratio::RBig;
use proptest::prelude::*;

use qproj::bundles::{
    block_weight, ker_el_combinatorial, ln_conditions_filter, ln_shape_enumeration,
};
use qproj::cocycle::{twisted_coboundary_check, ToyAlgebra};
use qproj::coordring::{
    graded_dim, normal_order, partitions_under, rewrite_outcomes, tensor_factorize,
    tensor_factorize_with, QMonomial,
};
use qproj::dolbeault::{cp1_euler_characteristic, HalfInt};
use qproj::gtrep::{build_irrep, weight_exponent, HighestWeight};
use qproj::qarith::{q_binomial, q_int, q_multinomial, Precision, QLaurent, QParam, QScalar};

fn rat(n: i64, d: i64) -> RBig {
    RBig::from_parts_signed(IBig::from(n), IBig::from(d))
}

fn qparam() -> impl Strategy<Value = QParam> {
    (2i64..40).prop_flat_map(|d| (1..d).prop_map(move |n| QParam::new(n, d).unwrap()))
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn small_weight() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=3).prop_flat_map(|ell| prop::collection::vec(0u32..=2, ell))
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn q_int_palindromic_and_odd(z in -40i64..40) {
        prop_assert!(q_int(z).is_palindromic());
        prop_assert_eq!(q_int(-z), q_int(z) * QLaurent::constant(-1));
    }

    #[test]
    fn q_binomial_symmetric_and_palindromic(n in 0i64..14, m in 0i64..14) {
        prop_assume!(m <= n);
        let b = q_binomial(n, m).unwrap();
        prop_assert!(b.is_palindromic());
        prop_assert_eq!(&b, &q_binomial(n, n - m).unwrap());
    }

    #[test]
    fn multinomial_of_two_parts_is_shifted_binomial(a in 0u32..7, b in 0u32..7) {
        let n = (a + b) as i64;
        let expected = q_binomial(n, a as i64).unwrap().shift(-(a as i64) * (b as i64));
        prop_assert_eq!(q_multinomial(&[a, b]).unwrap(), expected);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in -6i64..6, b in -6i64..6, q in qparam()) {
        let (x, y) = (q_int(a), q_int(b));
        prop_assert_eq!((x.clone() * y.clone()).eval_exact(&q), x.eval_exact(&q) * y.eval_exact(&q));
        prop_assert_eq!((x.clone() + y.clone()).eval_exact(&q), x.eval_exact(&q) + y.eval_exact(&q));
    }

    #[test]
    fn q_int_tends_to_integer(z in -50i64..50) {
        let q = QParam::new(999_999, 1_000_000).unwrap();
        let p = Precision::DEFAULT;
        let diff = &q_int(z).eval(&q, p) - &QScalar::from_int(z, p);
        prop_assert!(diff.abs() <= QScalar::ten_pow(-3, p));
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn generators_move_weights_and_preserve_interlacing(parts in small_weight(), q in qparam()) {
        let w = HighestWeight::new(parts).unwrap();
        let m = build_irrep(&w, &q, Precision::new(30).unwrap(), 10_000).unwrap();
        let ell = m.ell();
        for k in 1..=ell {
            for (r, c, v) in m.e(k).entries() {
                prop_assert!(!v.is_zero());
                prop_assert!(*v > QScalar::zero(v.precision()));
                let (src, tgt) = (&m.basis()[c], &m.basis()[r]);
                prop_assert!(tgt.is_interlacing());
                for j in 1..=ell {
                    let delta = weight_exponent(j, tgt) - weight_exponent(j, src);
                    let expected = if j == k { 2 } else if j + 1 == k || j == k + 1 { -1 } else { 0 };
                    prop_assert_eq!(delta, expected, "E{} {} -> {}", k, src, tgt);
                }
            }
            let comm = m.e(k).mul(m.f(k)).sub(&m.f(k).mul(m.e(k)));
            let tol = QScalar::ten_pow(-25, Precision::new(30).unwrap());
            for (r, c, v) in comm.entries() {
                prop_assert!(r == c || v.abs() <= tol);
            }
        }
    }

    #[test]
    fn normal_ordering_is_confluent(g in 1usize..=4, word in prop::collection::vec(0usize..4, 0..=6)) {
        let word: Vec<usize> = word.into_iter().map(|x| x % g + 1).collect();
        let outcomes = rewrite_outcomes(g, &word).unwrap();
        prop_assert_eq!(outcomes.len(), 1);
        let (c, m) = normal_order(g, &word).unwrap();
        let (e, m2) = outcomes.into_iter().next().unwrap();
        prop_assert_eq!(m, m2);
        prop_assert_eq!(c, QLaurent::q_power(e));
    }

    #[test]
    fn factorization_postcondition(s in prop::collection::vec(0u32..=3, 1..=4), cut in 0u32..=12) {
        let z = QMonomial::new(s.clone());
        let n = cut.min(z.degree());
        let f = tensor_factorize(&z, n).unwrap();
        prop_assert_eq!(f.z1.degree(), n);
        prop_assert_eq!(f.exponent, 0);
        for r in partitions_under(&s, n) {
            let f = tensor_factorize_with(&z, &r).unwrap();
            let (p, prod) = f.z1.product(&f.z2);
            prop_assert_eq!(prod, z.clone());
            prop_assert_eq!(p, -f.exponent);
        }
    }

    #[test]
    fn twisted_coboundary_squares_to_zero(seed in any::<u64>(), n in 0usize..=2) {
        let alg = ToyAlgebra::new(&QParam::half(), vec![rat(2, 1), rat(1, 3)], 1);
        let report = twisted_coboundary_check(&alg, n, 2, seed).unwrap();
        prop_assert_eq!(report.b_squared_violations, 0);
        prop_assert_eq!(report.invariance_violations, 0);
    }

    #[test]
    fn ln_filter_matches_shape(ell in 1usize..=3, n in -2i64..=3, n1 in 0u32..=2) {
        let m = build_irrep(&block_weight(ell, n, n1), &QParam::half(), Precision::new(30).unwrap(), 10_000).unwrap();
        prop_assert_eq!(ln_conditions_filter(&m, n), ln_shape_enumeration(m.weight(), n));
    }

    #[test]
    fn kernel_counts_match_ring_dims(ell in 1usize..=4, n in -4i64..=8) {
        let expected = if n < 0 { 0 } else { graded_dim(ell + 1, n as u32) as u64 };
        prop_assert_eq!(ker_el_combinatorial(ell, n), expected);
    }
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn euler_characteristic_is_stable(n in -4i64..=4, q in qparam()) {
        let p = Precision::new(40).unwrap();
        let a = cp1_euler_characteristic(n, HalfInt::from_int(6), &q, p).unwrap();
        let b = cp1_euler_characteristic(n, HalfInt::from_int(7), &q, p).unwrap();
        prop_assert_eq!(a.chi, b.chi);
        prop_assert_eq!(a.chi, 1 - n);
    }
}
