mod common;

use common::{c, ctx, q, rel_log10, within_target};
use hypid_core::catalog::{
    finite_remark_sum, find, gessel_stanton_sum, lambda_sign_probe, registry, sample, verify, Binding, CatalogError, Mode, Value,
};
use hypid_core::hypseries::{eval_phf, SeriesSpec};
use hypid_core::mparith::gamma_ratio;
use hypid_core::{MpComplex, PrecisionContext, Rational};
use proptest::prelude::*;

fn both_exact(id: &str, b: &Binding) -> (Rational, Rational) {
    let ctx = ctx();
    let (l, r) = find(id).unwrap().build_exact(b, &ctx).unwrap();
    (l.eval(&ctx).unwrap(), r.eval(&ctx).unwrap())
}

#[test]
fn l2_13_worked_example() {
    let b = Binding::new()
        .with("k", Value::Int(0))
        .with("lambda", Value::Q(q(1, 1)))
        .with("d", Value::Q(q(1, 1)))
        .with("e", Value::Q(q(3, 1)))
        .with("h", Value::QVec(vec![q(2, 1)]))
        .with("p", Value::IntVec(vec![1]));
    assert_eq!(both_exact("L2-13", &b), (q(1, 2), q(1, 2)));
}

#[test]
fn trivial_instances_are_one() {
    let t1 = Binding::new().with("alpha", Value::Q(q(2, 7))).with("beta", Value::Q(q(5, 3))).with("n", Value::Int(0));
    assert_eq!(both_exact("T1", &t1), (q(1, 1), q(1, 1)));
    let l3 = Binding::new().with("lambda", Value::Q(q(3, 5))).with("n", Value::Int(0)).with("k", Value::Int(0));
    assert_eq!(both_exact("L3-GS", &l3), (q(1, 1), q(1, 1)));
}

#[test]
fn gessel_stanton_examples() {
    let ctx = ctx();
    assert_eq!(gessel_stanton_sum(&q(3, 5), 0, 0, &ctx).unwrap(), q(1, 1));
    for n in 0..=4 {
        assert_eq!(gessel_stanton_sum(&q(-2, 7), n, n, &ctx).unwrap(), q(1, 1));
    }
    // n = 1, k = 0 leaves a two-term series
    let lam = q(1, 2);
    let upper = vec![-lam.clone(), -(lam.clone() + q(1, 1)) / q(3, 1), q(-1, 1)];
    let lower = vec![(q(5, 1) - lam.clone()) / q(3, 1), q(4, 1) - lam.clone()];
    let direct = eval_phf(&SeriesSpec::new(upper, lower, q(1, 1)), &ctx).unwrap().value;
    assert_eq!(gessel_stanton_sum(&lam, 1, 0, &ctx).unwrap(), direct);
}

#[test]
fn samples_are_deterministic_and_constrained() {
    for case in registry() {
        for mode in [Mode::Exact, Mode::Float] {
            if mode == Mode::Exact && !case.exact_capable {
                continue;
            }
            let a = sample(&case, 7, 3, mode).unwrap();
            assert_eq!(a, sample(&case, 7, 3, mode).unwrap(), "{}", case.id);
            assert!(case.constraints.iter().all(|c| (c.holds)(&a)), "{} {}", case.id, a);
        }
    }
    for trial in 0..25 {
        let b = sample(&find("T1").unwrap(), 7, trial, Mode::Exact).unwrap();
        assert!((0..=4).contains(&b.int("n")));
        let t15 = sample(&find("T15").unwrap(), 7, trial, Mode::Float).unwrap();
        let margin = t15.q("A") - t15.q("C") - t15.q("D") - t15.q("E");
        assert!(margin >= q(1, 2), "{}", t15);
    }
}

#[test]
fn special_cases_of_the_ipd_sum_agree_with_it() {
    let ctx = ctx();
    let l2 = find("L2").unwrap();
    for (id, u, v) in [("L2-13", 1, 3), ("L2-23", 2, 3), ("L2-32", 3, 2), ("L2-1m2", 1, -2)] {
        let case = find(id).unwrap();
        for trial in 0..20 {
            let b = sample(&case, 19, trial, Mode::Exact).unwrap();
            let general = b.clone().with("u", Value::Int(u)).with("v", Value::Int(v));
            assert_eq!(both_exact(id, &b), both_exact("L2", &general), "{} {}", id, b);
        }
        // the general form has Gamma(e+lambda-d) Gamma(1+d-e-lambda), which the
        // special forms avoid; draws where that product has a pole are skipped
        let mut compared = 0;
        for trial in 0..40 {
            let b = sample(&case, 19, trial, Mode::Float).unwrap();
            let general = b.clone().with("u", Value::Int(u)).with("v", Value::Int(v));
            let (_, special) = case.build_float(&b, &ctx).unwrap();
            let (_, full) = l2.build_float(&general, &ctx).unwrap();
            let Ok(f) = full.eval(&ctx) else { continue };
            let s = special.eval(&ctx).unwrap();
            assert!(within_target(&s, &f, &ctx), "{} {}: {}", id, b, rel_log10(&s, &f));
            compared += 1;
        }
        assert!(compared >= 5, "{}: only {} float comparisons", id, compared);
    }
}

fn cs(v: &[Rational], ctx: &PrecisionContext) -> Vec<MpComplex> {
    v.iter().map(|x| c(x, ctx)).collect()
}

#[test]
fn remark_sum_without_pairs_is_gauss() {
    let ctx = ctx();
    let (a, d, e) = (q(1, 3), q(-2, 7), q(5, 2));
    for l in 0..3u64 {
        let ll = Rational::from_integer(l.into());
        let sum = finite_remark_sum(&c(&a, &ctx), &c(&d, &ctx), &c(&e, &ctx), &[], &[], l, &ctx).unwrap();
        let num = [e.clone() + ll.clone(), e.clone() - a.clone() - d.clone() - ll.clone()];
        let den = [e.clone() - a.clone(), e.clone() - d.clone()];
        let gauss = gamma_ratio(&cs(&num, &ctx), &cs(&den, &ctx), &ctx).unwrap();
        assert!(within_target(&sum, &gauss, &ctx), "l={}: {}", l, rel_log10(&sum, &gauss));
    }
}

#[test]
fn remark_sum_at_l0_is_the_ipd_sum() {
    let ctx = ctx();
    let (lam, d, e, h) = (q(2, 7), q(1, 5), q(79, 3), q(5, 4));
    let b = Binding::new()
        .with("u", Value::Int(1))
        .with("v", Value::Int(0))
        .with("k", Value::Int(0))
        .with("lambda", Value::Q(lam.clone()))
        .with("d", Value::Q(d.clone()))
        .with("e", Value::Q(e.clone()))
        .with("h", Value::QVec(vec![h.clone()]))
        .with("p", Value::IntVec(vec![1]));
    let (_, rhs) = find("L2").unwrap().build_float(&b, &ctx).unwrap();
    let rhs = rhs.eval(&ctx).unwrap();
    let sum = finite_remark_sum(&c(&-lam, &ctx), &c(&d, &ctx), &c(&e, &ctx), &[c(&h, &ctx)], &[1], 0, &ctx).unwrap();
    assert!(within_target(&sum, &rhs, &ctx), "{}", rel_log10(&sum, &rhs));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn remark_sum_matches_direct_summation(
        (an, dn) in (-40i64..=40, -40i64..=40),
        h in prop::collection::vec((1i64..=40, 1i64..=12), 1..=2),
        p in prop::collection::vec(1u64..=2, 2),
        l in 0u64..=3,
        margin in 0i64..=120,
    ) {
        let ctx = ctx();
        let (a, d) = (q(an, 7), q(dn, 9));
        let h: Vec<Rational> = h.iter().map(|&(n, m)| q(n, m)).collect();
        let p = &p[..h.len()];
        let total: u64 = p.iter().sum();
        let e = a.clone() + d.clone() + Rational::from_integer(((total + l) as i64 + 24).into()) + q(2 * margin + 1, 22);
        let ll = Rational::from_integer(l.into());
        let hp: Vec<Rational> = h.iter().zip(p).map(|(x, &n)| x + Rational::from_integer(n.into()) + ll.clone()).collect();
        let hl: Vec<Rational> = h.iter().map(|x| x + ll.clone()).collect();
        let up = [vec![a.clone() + ll.clone(), d.clone() + ll.clone()], hp].concat();
        let lo = [vec![e.clone() + ll.clone()], hl].concat();
        let direct = eval_phf(&SeriesSpec::new(cs(&up, &ctx), cs(&lo, &ctx), MpComplex::one(ctx.bits())), &ctx).unwrap().value;
        let sum = finite_remark_sum(&c(&a, &ctx), &c(&d, &ctx), &c(&e, &ctx), &cs(&h, &ctx), p, l, &ctx).unwrap();
        prop_assert!(within_target(&sum, &direct, &ctx), "{}", rel_log10(&sum, &direct));
    }
}

#[test]
fn probe_is_deterministic() {
    let one = lambda_sign_probe("T4", 3).unwrap();
    assert_eq!(one, lambda_sign_probe("T4", 3).unwrap());
    assert!(matches!(lambda_sign_probe("T14", 3), Err(CatalogError::UnknownId(_))));
}

#[test]
fn report_counts_failures_with_reasons() {
    let r = verify("T18", 10, &ctx(), Mode::Exact, 5).unwrap();
    assert_eq!(r.failures as usize, r.records.iter().filter(|x| !x.pass).count());
    assert!(r.records.iter().filter(|x| !x.pass).all(|x| x.reason.is_some()));
    let ok = verify("C18.1", 10, &ctx(), Mode::Exact, 5).unwrap();
    assert!(ok.passed());
}
