mod common;

use common::{c, ctx, dist_to_pole, q, rel_log10, within_target};
use hypid_core::catalog::{find, sample, transform, Mode};
use hypid_core::hypseries::{eval_phf, master_lhs, master_rhs, SeriesSpec};
use hypid_core::mparith::gamma_ratio;
use hypid_core::polyfactory::{to_shift_pairs, Polynomial};
use hypid_core::{MathError, MpComplex, PrecisionContext, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-48i64..=48, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn lower_param() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("lower parameter near a pole", |b| dist_to_pole(b) >= q(1, 100))
}

fn exact(upper: Vec<Rational>, lower: Vec<Rational>, x: Rational) -> Rational {
    eval_phf(&SeriesSpec::new(upper, lower, x), &ctx()).unwrap().value
}

fn float(upper: &[Rational], lower: &[Rational], x: &Rational, ctx: &PrecisionContext) -> MpComplex {
    let f = |v: &[Rational]| v.iter().map(|r| c(r, ctx)).collect::<Vec<_>>();
    eval_phf(&SeriesSpec::new(f(upper), f(lower), c(x, ctx)), ctx).unwrap().value
}

proptest! {
    #[test]
    fn permuting_parameters_is_exactly_invariant(
        n in 0i64..=8,
        a in prop::collection::vec(small_rational(), 2),
        b in prop::collection::vec(lower_param(), 3),
        x in small_rational(),
        rot in 0usize..3,
    ) {
        let up = vec![q(-n, 1), a[0].clone(), a[1].clone()];
        let mut up2 = up.clone();
        up2.rotate_left(rot);
        let mut lo2 = b.clone();
        lo2.reverse();
        prop_assert_eq!(exact(up, b, x.clone()), exact(up2, lo2, x));
    }

    #[test]
    fn permuting_parameters_is_invariant_in_float(
        a in prop::collection::vec(small_rational(), 3),
        b in prop::collection::vec(lower_param(), 2),
        xn in -6i64..=6,
    ) {
        let ctx = ctx();
        let x = q(xn, 13);
        let one = float(&a, &b, &x, &ctx);
        let two = float(&[a[2].clone(), a[0].clone(), a[1].clone()], &[b[1].clone(), b[0].clone()], &x, &ctx);
        prop_assert!(within_target(&one, &two, &ctx) || one == two);
    }

    #[test]
    fn equal_parameter_pairs_cancel(
        n in 0i64..=8,
        a in small_rational(),
        b in lower_param(),
        extra in lower_param(),
        x in small_rational(),
    ) {
        let base = exact(vec![q(-n, 1), a.clone()], vec![b.clone()], x.clone());
        prop_assert_eq!(base, exact(vec![q(-n, 1), a, extra.clone()], vec![b, extra], x));
    }
}

// Gauss's sum over 200 draws: terminating draws are exact, the rest carry
// an excess large enough for direct summation to reach the target.
#[test]
fn gauss_sum_sanity() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a05);
    let ctx = ctx();
    let mut r = |lo: i64, hi: i64| q(rng.gen_range(lo..=hi), rng.gen_range(1..=12));
    let mut done = 0;
    while done < 200 {
        let (a, b) = (r(-36, 36), r(-36, 36));
        let terminating = done % 2 == 0;
        let (a, c_) = if terminating {
            (q(-(done as i64 % 9), 1), a)
        } else {
            (a.clone(), a + b.clone() + q(20, 1) + r(0, 144))
        };
        let cab = c_.clone() - a.clone() - b.clone();
        if [&c_, &(c_.clone() - a.clone()), &(c_.clone() - b.clone())].iter().any(|v| dist_to_pole(v) < q(1, 100)) {
            continue;
        }
        let num = [c_.clone(), cab];
        let den = [c_.clone() - a.clone(), c_.clone() - b.clone()];
        if terminating {
            let lhs = exact(vec![a.clone(), b.clone()], vec![c_.clone()], q(1, 1));
            assert_eq!(lhs, gamma_ratio(&num, &den, &ctx).unwrap(), "a={} b={} c={}", a, b, c_);
        } else {
            let lhs = float(&[a.clone(), b.clone()], std::slice::from_ref(&c_), &q(1, 1), &ctx);
            let f = |v: &[Rational]| v.iter().map(|x| c(x, &ctx)).collect::<Vec<_>>();
            let rhs = gamma_ratio(&f(&num), &f(&den), &ctx).unwrap();
            assert!(within_target(&lhs, &rhs, &ctx), "a={} b={} c={}: {}", a, b, c_, rel_log10(&lhs, &rhs));
        }
        done += 1;
    }
}

#[test]
fn slowly_convergent_unit_argument_is_refused() {
    let ctx = ctx();
    let s = SeriesSpec::new(vec![c(&q(1, 3), &ctx), c(&q(1, 5), &ctx)], vec![c(&q(31, 30), &ctx)], c(&q(1, 1), &ctx));
    assert!(matches!(eval_phf(&s, &ctx), Err(MathError::NoConvergence(_))));
}

#[test]
fn master_identity_on_cubic_entries() {
    let ctx = ctx();
    for id in ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T7M"] {
        let case = find(id).unwrap();
        for trial in 0..50 {
            let b = sample(&case, 11, trial, Mode::Exact).unwrap();
            let (t, a, bv) = transform::<Rational>(id, &b, &ctx).unwrap().unwrap();
            let l = master_lhs(&t, &a, &bv, &ctx).unwrap();
            assert_eq!(l, master_rhs(&t, &a, &bv, &ctx).unwrap(), "{} {}", id, b);
        }
    }
}

fn poly_from_roots(roots: &[Rational], lead: Rational) -> Polynomial<Rational> {
    Polynomial::from_roots(roots, &q(1, 1)).scale(&lead)
}

fn root() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("integer roots make shift pairs singular", |r| !r.is_integer())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characteristic_equals_shift_pairs_exactly(
        roots in prop::collection::vec(root(), 1..=3),
        n in 0i64..=6,
        a in small_rational(),
        b in lower_param(),
        x in small_rational(),
    ) {
        let ctx = ctx();
        let p = poly_from_roots(&roots, q(3, 2));
        let sp = to_shift_pairs(&p, &ctx).unwrap();
        let with_char = eval_phf(&SeriesSpec::new(vec![q(-n, 1), a.clone()], vec![b.clone()], x.clone()).with_characteristic(p), &ctx).unwrap().value;
        let up = [vec![q(-n, 1), a], sp.upper].concat();
        let lo = [vec![b], sp.lower].concat();
        prop_assert_eq!(with_char, sp.scale * exact(up, lo, x));
    }

    #[test]
    fn characteristic_equals_shift_pairs_in_float(
        re in prop::collection::vec(root(), 2),
        im in 1i64..=6,
        a in small_rational(),
        b in lower_param(),
        xn in -6i64..=6,
    ) {
        // a complex-conjugate pair and a real root
        let ctx = ctx();
        let z = MpComplex::new(c(&re[0], &ctx).re, c(&q(im, 5), &ctx).re);
        let roots = [z.clone(), z.conj(), c(&re[1], &ctx)];
        let p = Polynomial::from_roots(&roots, &MpComplex::one(ctx.bits()));
        let sp = to_shift_pairs(&p, &ctx).unwrap();
        let x = c(&q(xn, 13), &ctx);
        let base = SeriesSpec::new(vec![c(&a, &ctx)], vec![c(&b, &ctx)], x.clone());
        let with_char = eval_phf(&base.clone().with_characteristic(p), &ctx).unwrap().value;
        let up = [base.upper.clone(), sp.upper].concat();
        let lo = [base.lower.clone(), sp.lower].concat();
        let pairs = sp.scale * eval_phf(&SeriesSpec::new(up, lo, x), &ctx).unwrap().value;
        prop_assert!(within_target(&with_char, &pairs, &ctx), "{}", rel_log10(&with_char, &pairs));
    }
}
