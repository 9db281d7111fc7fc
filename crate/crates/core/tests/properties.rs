use proptest::prelude::*;
use twl_core::arith::{rat, ExactRat, LaurentPoly, TruncSeries};
use twl_core::classical::{lah, stirling1u, stirling2};
use twl_core::qcalc::{qbinom, qint, QBase};
use twl_core::qwhitney::{qw1, qw2, qwl, qwl_explicit};
use twl_core::verify::{check_identity, identity, Mode, Suite, SuiteConfig};
use twl_core::whitney::{twl, TwlMethod};

fn small_rat() -> impl Strategy<Value = ExactRat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ExactRat::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, small_rat()), 0..6).prop_map(LaurentPoly::from_terms)
}

fn int_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(LaurentPoly::from_int_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_round_trip(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn integer_division_round_trip(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_q1(), a.eval_q1() * b.eval_q1());
        prop_assert_eq!((&a + &b).eval_q1(), a.eval_q1() + b.eval_q1());
    }

    #[test]
    fn power_substitution_is_a_ring_map(a in poly(), b in poly(), k in 1i64..=3) {
        prop_assert_eq!((&a * &b).subst_power(k), &a.subst_power(k) * &b.subst_power(k));
    }

    #[test]
    fn canonical_string_round_trips(a in poly()) {
        let s = a.to_string();
        let back: LaurentPoly = s.parse().unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn canonical_string_is_independent_of_construction(a in poly(), b in poly()) {
        // the same value built two different ways prints identically
        let left = &(&a + &b) * &(&a - &b);
        let right = &(&a * &a) - &(&b * &b);
        prop_assert_eq!(left.to_string(), right.to_string());
    }

    #[test]
    fn series_inverse_round_trip(c0 in small_rat(), rest in prop::collection::vec(small_rat(), 0..8), order in 0usize..10) {
        prop_assume!(c0 != rat(0));
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        let s = TruncSeries::new(coeffs, order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, TruncSeries::one(order));
    }

    #[test]
    fn laurent_series_inverse_round_trip(e in -3i64..=3, rest in prop::collection::vec(int_poly(), 0..5), order in 0usize..7) {
        let mut coeffs = vec![LaurentPoly::q_pow(e)];
        coeffs.extend(rest);
        let s = TruncSeries::new(coeffs, order);
        prop_assert_eq!(&s * &s.inverse().unwrap(), TruncSeries::one(order));
    }

    #[test]
    fn q_binomial_symmetry_and_pascal(n in 1i64..=10, k in 0i64..=10, a in 1u32..=3) {
        prop_assume!(k <= n);
        let b = QBase::new(a).unwrap();
        prop_assert_eq!(qbinom(n, k, b), qbinom(n, n - k, b));
        let pascal = qbinom(n - 1, k - 1, b) + qbinom(n - 1, k, b).shift(a as i64 * k);
        prop_assert_eq!(qbinom(n, k, b), pascal);
    }

    #[test]
    fn q_integers_reduce_to_integers(n in 0u64..40, a in 1u32..=4) {
        prop_assert_eq!(qint(n, QBase::new(a).unwrap()).eval_q1(), rat(n as i64));
    }

    #[test]
    fn whitney_lah_routes_agree(alpha in 1i64..=6, n in 0usize..=15, k in 0usize..=15) {
        prop_assume!(k <= n);
        let r = twl(alpha, n, k, TwlMethod::Recurrence).unwrap();
        for m in TwlMethod::ALL {
            prop_assert_eq!(twl(alpha, n, k, m).unwrap(), r.clone());
        }
    }

    #[test]
    fn q_families_reduce_to_classical(alpha in 1i64..=4, n in 0usize..=9, k in 0usize..=9) {
        prop_assume!(k <= n);
        let s = ExactRat::from_integer(num_bigint::BigInt::from(alpha).pow((n - k) as u32));
        let sign = if (n - k) % 2 == 0 { rat(1) } else { rat(-1) };
        let to_rat = |v| ExactRat::from_integer(v);
        prop_assert_eq!(qwl(alpha, n, k).unwrap().eval_q1(), &s * to_rat(lah(n, k)));
        prop_assert_eq!(qw2(alpha, n, k).unwrap().eval_q1(), &s * to_rat(stirling2(n, k)));
        prop_assert_eq!(qw1(alpha, n, k).unwrap().eval_q1(), sign * &s * to_rat(stirling1u(n, k)));
    }

    #[test]
    fn q_whitney_lah_has_nonnegative_integer_coefficients(alpha in 1i64..=3, n in 0usize..=8, k in 0usize..=8) {
        prop_assume!(k <= n);
        let p = qwl(alpha, n, k).unwrap();
        prop_assert!(p.has_integer_coeffs());
        prop_assert!(p.terms().all(|(e, c)| e >= 0 && *c >= rat(0)));
        prop_assert_eq!(qwl_explicit(alpha, n, k).unwrap(), p);
    }

    #[test]
    fn registered_grid_points_pass(seed in any::<prop::sample::Index>(), alpha in 1i64..=3) {
        let cfg = SuiteConfig::new(Suite::All, vec![alpha], 6, Mode::Corrected);
        let ids: Vec<&str> = twl_core::verify::registry().iter().map(|s| s.id).collect();
        let id = ids[seed.index(ids.len())];
        let grid = identity(id).unwrap().grid(&cfg);
        let p = &grid[seed.index(grid.len())];
        let r = check_identity(id, p).unwrap();
        prop_assert!(r.passed, "{} {:?}: {} vs {}", id, p, r.lhs_canonical, r.rhs_canonical);
    }
}
