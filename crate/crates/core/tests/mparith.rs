mod common;

use common::{c, ctx, dist_to_pole, q, rel_log10, within_target};
use hypid_core::mparith::{delta_split, gamma, gamma_ratio, pochhammer, pochhammer_vec};
use hypid_core::{MathError, MpComplex, PrecisionContext, Rational, Scalar};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-120i64..=120, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn complex_point() -> impl Strategy<Value = (Rational, Rational)> {
    (-1280i64..=1280, -1280i64..=1280)
        .prop_map(|(x, y)| (q(x, 64), q(y, 64)))
        .prop_filter("|z| <= 20", |(x, y)| x * x + y * y <= q(400, 1))
        .prop_filter("away from poles", |(x, y)| *y != q(0, 1) || dist_to_pole(x) >= q(1, 50))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gamma_recurrence((x, y) in complex_point()) {
        let ctx = ctx();
        let z = MpComplex::new(c(&x, &ctx).re, c(&y, &ctx).re);
        let one = MpComplex::one(ctx.bits());
        let lhs = gamma(&(z.clone() + one), &ctx).unwrap();
        let rhs = z.clone() * gamma(&z, &ctx).unwrap();
        prop_assert!(within_target(&lhs, &rhs, &ctx), "z = {} + {}i: {}", x, y, rel_log10(&lhs, &rhs));
    }
}

proptest! {
    #[test]
    fn pochhammer_splits_exactly(a in small_rational(), m in 0u64..=10, n in 0u64..=10) {
        let am = a.clone() + Rational::from_integer(m.into());
        prop_assert_eq!(pochhammer(&a, m + n), pochhammer(&a, m) * pochhammer(&am, n));
    }

    #[test]
    fn triple_index_pochhammer_is_a_delta_product(z in small_rational(), k in 0u64..=6) {
        let lhs = pochhammer(&z, 3 * k);
        let deltas = delta_split(&z, 3);
        let rhs = Rational::from_integer(27.into()).pow(k as i32) * pochhammer_vec(&deltas, &[k; 3], &q(1, 1)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_index_pochhammer_is_a_delta_product(z in small_rational(), k in 0u64..=6) {
        let rhs = Rational::from_integer(4.into()).pow(k as i32) * pochhammer_vec(&delta_split(&z, 2), &[k; 2], &q(1, 1)).unwrap();
        prop_assert_eq!(pochhammer(&z, 2 * k), rhs);
    }

    #[test]
    fn guard_digits_do_not_move_results(x in small_rational(), y in small_rational()) {
        prop_assume!(dist_to_pole(&x) >= q(1, 50));
        let base = PrecisionContext::with_guard(30, 20);
        let wide = base.widened(10);
        let z = |ctx: &PrecisionContext| MpComplex::new(c(&x, ctx).re, c(&(y.clone() / q(4, 1)), ctx).re);
        let a = gamma(&z(&base), &base).unwrap();
        let b = gamma(&z(&wide), &wide).unwrap();
        prop_assert!(rel_log10(&a, &b) < -30.0, "{}", rel_log10(&a, &b));
    }

    #[test]
    fn rational_gamma_ratio_matches_float(a in small_rational(), k in -6i64..=6) {
        prop_assume!(dist_to_pole(&a) >= q(1, 50));
        let b = a.clone() + Rational::from_integer(k.into());
        prop_assume!(dist_to_pole(&b) >= q(1, 50));
        let ctx = ctx();
        let exact = gamma_ratio(std::slice::from_ref(&a), std::slice::from_ref(&b), &ctx).unwrap();
        let float = gamma(&c(&a, &ctx), &ctx).unwrap() / gamma(&c(&b, &ctx), &ctx).unwrap();
        prop_assert!(within_target(&c(&exact, &ctx), &float, &ctx));
    }
}

#[test]
fn gamma_known_values() {
    let ctx = ctx();
    let pi = hypid_core::MpReal::pi(ctx.bits());
    let half = gamma(&c(&q(1, 2), &ctx), &ctx).unwrap();
    assert!(within_target(&half, &MpComplex::from_real(pi.sqrt()), &ctx));
    let fact = gamma(&c(&q(11, 1), &ctx), &ctx).unwrap();
    assert!(within_target(&fact, &MpComplex::from_i64(3_628_800, ctx.bits()), &ctx));
    // Gamma(-3/2) = 4 sqrt(pi) / 3
    let neg = gamma(&c(&q(-3, 2), &ctx), &ctx).unwrap();
    let want = MpComplex::from_real(pi.sqrt()) * c(&q(4, 3), &ctx);
    assert!(within_target(&neg, &want, &ctx));
}

#[test]
fn gamma_poles_are_errors() {
    let ctx = ctx();
    for n in [0, -1, -7] {
        assert!(matches!(gamma(&MpComplex::from_i64(n, ctx.bits()), &ctx), Err(MathError::Pole(_))));
        assert!(matches!(Rational::from_integer(n.into()).gamma(&ctx), Err(MathError::Pole(_))));
    }
}
