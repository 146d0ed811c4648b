//! Unit-argument sums with integral parameter differences, and the
//! Gessel-Stanton sum behind the cubic transformations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{boost, builders, cat, dpoch, ipd, k, ki, plus, poch_all, poch_v, shift, sign, total};
use crate::catalog::binding::qi;
use crate::catalog::{Binding, Domain, Draw, Expr, IdentityCase, Kind, Plan, Support, Value};
use crate::mparith::{pochhammer, MathError, MathResult, PrecisionContext, Scalar};
use crate::polyfactory::y_poly_core;

const L2_PARAMS: &[(&str, Domain)] = &[
    ("u", Domain::Ints(1, 3)),
    ("v", Domain::Ints(-2, 3)),
    ("k", Domain::Ints(0, 4)),
    ("lambda", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];

const L2S_PARAMS: &[(&str, Domain)] = &[
    ("k", Domain::Ints(0, 4)),
    ("lambda", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];

fn draw_l2_with(d: &mut Draw, plan: &Plan, u: i64, v: i64) -> Binding {
    let lambda = d.rat();
    let len = d.int(1, 2) as usize;
    let (h, p) = ipd(d, len, 2);
    let pp = total(&p) as i64;
    let (dd, kk, e) = if plan.terminating {
        let n = d.int(1, 4);
        let kk = d.int(0, n / u);
        (qi(-n), kk, d.rat())
    } else {
        let dd = d.rat();
        let kk = d.int(0, 2);
        // the left side has excess e + lambda - d - v k - P
        let excess = d.rat();
        let lift = boost(d, &excess);
        let e = excess + lift - lambda.clone() + dd.clone() + qi(v * kk + pp);
        (dd, kk, e)
    };
    Binding::new()
        .with("k", Value::Int(kk))
        .with("lambda", Value::Q(lambda))
        .with("d", Value::Q(dd))
        .with("e", Value::Q(e))
        .with("h", Value::QVec(h))
        .with("p", Value::IntVec(p))
}

fn draw_l2(d: &mut Draw, plan: &Plan) -> Binding {
    let u = d.int(1, 3);
    let v = d.int(-2, 3);
    draw_l2_with(d, plan, u, v).with("u", Value::Int(u)).with("v", Value::Int(v))
}

fn draw_l2s<const U: i64, const V: i64>(d: &mut Draw, plan: &Plan) -> Binding {
    draw_l2_with(d, plan, U, V)
}

struct L2Data<S> {
    kk: i64,
    lambda: S,
    d: S,
    e: S,
    h: Vec<S>,
    p: Vec<u64>,
}

fn l2_data<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> L2Data<S> {
    L2Data { kk: b.int("k"), lambda: b.s("lambda", ctx), d: b.s("d", ctx), e: b.s("e", ctx), h: b.sv("h", ctx), p: b.ints("p") }
}

fn l2_lhs<S: Scalar>(x: &L2Data<S>, u: i64, v: i64, ctx: &PrecisionContext) -> Expr<S> {
    let uk = ki::<S>(u * x.kk, ctx);
    let upper = cat(&[
        &[-x.lambda.clone() + ki(v * x.kk, ctx), x.d.clone() + uk.clone()],
        &shift(&plus(&x.h, &x.p, ctx), &uk),
    ]);
    let lower = cat(&[&[x.e.clone() + uk.clone()], &shift(&x.h, &uk)]);
    Expr::series(upper, lower, S::one(ctx))
}

fn l2<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (u, v) = (b.int("u"), b.int("v"));
    let x = l2_data::<S>(b, ctx);
    let one = S::one(ctx);
    let pp = ki::<S>(total(&x.p) as i64, ctx);
    let kk = x.kk;
    let uk = ki::<S>(u * kk, ctx);
    let vk = ki::<S>(v * kk, ctx);
    let (d, e, lam) = (&x.d, &x.e, &x.lambda);
    let y = y_poly_core(u, v, d, e, lam, &x.h, &x.p, ctx)?.eval(&ki(kk, ctx));
    let scalar = (sign::<S>(v * kk, ctx) * y).checked_div(poch_v(&shift(&x.h, &uk), &x.p, ctx)?)?;
    let g = Expr::gamma(
        vec![e.clone() + lam.clone() - d.clone(), one.clone() + d.clone() - e.clone() - lam.clone(), e.clone() + uk],
        vec![
            ki::<S>((u - v) * kk, ctx) + e.clone() + lam.clone(),
            vk + d.clone() - e.clone() - lam.clone() + pp + one,
            e.clone() - d.clone(),
        ],
    );
    Ok((l2_lhs(&x, u, v, ctx), Expr::Prod(vec![g, Expr::Num(scalar)])))
}

/// The four displayed specialisations of the unit-argument sum.
fn l2_special<S: Scalar, const U: i64, const V: i64>(
    b: &Binding,
    ctx: &PrecisionContext,
) -> MathResult<(Expr<S>, Expr<S>)> {
    let x = l2_data::<S>(b, ctx);
    let one = S::one(ctx);
    let kk = x.kk as u64;
    let pp = total(&x.p);
    let (d, e, lam) = (&x.d, &x.e, &x.lambda);
    let hp = plus(&x.h, &x.p, ctx);
    let y = y_poly_core(U, V, d, e, lam, &x.h, &x.p, ctx)?.eval(&ki(x.kk, ctx));
    let base = poch_v(&x.h, &x.p, ctx)? * pochhammer(&(one.clone() + d.clone() - e.clone() - lam.clone()), pp);
    let shifted = one.clone() + d.clone() - e.clone() - lam.clone() + ki(pp as i64, ctx);
    let dv = |v: &[S], m: u32| v.iter().fold(one.clone(), |acc, z| acc * dpoch(z, m, kk, ctx));
    let (num, den, z) = match (U, V) {
        (1, 3) => (
            pochhammer(e, kk) * poch_all(&x.h, kk, ctx) * dpoch(&(one.clone() - e.clone() - lam.clone()), 2, kk, ctx),
            poch_all(&hp, kk, ctx) * dpoch(&shifted, 3, kk, ctx),
            k::<S>(-4, 27, ctx),
        ),
        (2, 3) => (
            dpoch(e, 2, kk, ctx) * dv(&x.h, 2) * pochhammer(&(one.clone() - e.clone() - lam.clone()), kk),
            dv(&hp, 2) * dpoch(&shifted, 3, kk, ctx),
            k::<S>(4, 27, ctx),
        ),
        (3, 2) => (
            dpoch(e, 3, kk, ctx) * dv(&x.h, 3),
            dv(&hp, 3) * pochhammer(&(e.clone() + lam.clone()), kk) * dpoch(&shifted, 2, kk, ctx),
            k::<S>(27, 4, ctx),
        ),
        (1, -2) => (
            pochhammer(e, kk)
                * poch_all(&x.h, kk, ctx)
                * dpoch(&(e.clone() + lam.clone() - d.clone() - ki(pp as i64, ctx)), 2, kk, ctx),
            poch_all(&hp, kk, ctx) * dpoch(&(e.clone() + lam.clone()), 3, kk, ctx),
            k::<S>(4, 27, ctx),
        ),
        _ => unreachable!("no specialisation for ({}, {})", U, V),
    };
    let scalar = (num * z.powi(x.kk)? * y).checked_div(den * base)?;
    let g = Expr::gamma(
        vec![e.clone() + lam.clone() - d.clone(), e.clone()],
        vec![e.clone() + lam.clone(), e.clone() - d.clone()],
    );
    Ok((l2_lhs(&x, U, V, ctx), Expr::Prod(vec![g, Expr::Num(scalar)])))
}

/// Closed form of the terminating `3F2` whose top row is
/// `-lambda + 3k, -(lambda+1)/3 + k, -n + k`.
pub fn gessel_stanton_sum<S: Scalar>(lambda: &S, n: u64, kk: u64, ctx: &PrecisionContext) -> MathResult<S> {
    assert!(kk <= n, "gessel_stanton_sum needs k <= n");
    let one = S::one(ctx);
    let ns = ki::<S>(n as i64, ctx);
    let two_l = ki::<S>(2, ctx) - lambda.clone();
    let fact = |m: u64| pochhammer(&one, m);
    let num = two_l.clone()
        * (ns.clone() + one.clone())
        * fact(3 * n + 2)
        * pochhammer(&(k::<S>(-1, 2, ctx) - ns.clone()), kk)
        * pochhammer(&(two_l.clone() + ki::<S>(2 * n as i64, ctx)), kk)
        * pochhammer(&((ki::<S>(5, ctx) - lambda.clone()) / ki(3, ctx)), kk)
        * k::<S>(-4, 27, ctx).powi(kk as i64)?;
    let den = (two_l.clone() + ki::<S>(3 * n as i64, ctx))
        * fact(2 * n + 2)
        * pochhammer(&(two_l.clone() + ki::<S>(2 * n as i64, ctx)), n)
        * pochhammer(&(k::<S>(-2, 3, ctx) - ns.clone()), kk)
        * pochhammer(&(k::<S>(-1, 3, ctx) - ns), kk)
        * pochhammer(&(two_l / ki(3, ctx)), kk);
    if den.is_zero() {
        return Err(MathError::Pole(format!("denominator of the Gessel-Stanton sum at lambda = {}", lambda)));
    }
    Ok(num / den)
}

fn l3<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let lam: S = b.s("lambda", ctx);
    let (n, kk) = (b.int("n"), b.int("k"));
    let one = S::one(ctx);
    let ks = ki::<S>(kk, ctx);
    let ns = ki::<S>(n, ctx);
    let upper = vec![
        -lam.clone() + ki(3 * kk, ctx),
        -(lam.clone() + one.clone()) / ki(3, ctx) + ks.clone(),
        -ns.clone() + ks.clone(),
    ];
    let lower = vec![
        (ki::<S>(5, ctx) - lam.clone()) / ki(3, ctx) + ks.clone(),
        ki::<S>(2, ctx) * ns + ki(2, ctx) - lam.clone() + ks,
    ];
    let rhs = gessel_stanton_sum(&lam, n as u64, kk as u64, ctx)?;
    Ok((Expr::series(upper, lower, one), Expr::Num(rhs)))
}

fn draw_l3(d: &mut Draw, _: &Plan) -> Binding {
    let n = d.int(0, 4);
    let kk = d.int(0, n);
    Binding::new().with("lambda", Value::Q(d.rat())).with("n", Value::Int(n)).with("k", Value::Int(kk))
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Summation as S;
    let ipd_sum = "unit-argument sum with integral parameter differences";
    vec![
        IdentityCase::new("L2", S, ipd_sum, L2_PARAMS, builders!(l2), draw_l2).support(Support::Both),
        IdentityCase::new("L2-13", S, "unit-argument sum, (u,v) = (1,3)", L2S_PARAMS, builders!(l2_special, 1, 3), draw_l2s::<1, 3>)
            .support(Support::Both),
        IdentityCase::new("L2-23", S, "unit-argument sum, (u,v) = (2,3)", L2S_PARAMS, builders!(l2_special, 2, 3), draw_l2s::<2, 3>)
            .support(Support::Both),
        IdentityCase::new("L2-32", S, "unit-argument sum, (u,v) = (3,2)", L2S_PARAMS, builders!(l2_special, 3, 2), draw_l2s::<3, 2>)
            .support(Support::Both),
        IdentityCase::new(
            "L2-1m2",
            S,
            "unit-argument sum, (u,v) = (1,-2)",
            L2S_PARAMS,
            builders!(l2_special, 1, -2),
            draw_l2s::<1, -2>,
        )
        .support(Support::Both),
        IdentityCase::new(
            "L3-GS",
            S,
            "Gessel-Stanton terminating 3F2 sum",
            &[("lambda", Domain::Rational), ("n", Domain::Ints(0, 4)), ("k", Domain::Ints(0, 4))],
            builders!(l3),
            draw_l3,
        )
        .constraint("0 <= k <= n", |b| (0..=b.int("n")).contains(&b.int("k"))),
    ]
}
