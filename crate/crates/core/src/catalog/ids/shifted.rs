//! Transformations for series with a `b+1` (or `b+k`) over `b` pair next to
//! integral parameter differences, and the finite sums they reduce to.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use super::{boost, builders, cat, ipd, ki, plus, poch_all, poch_v, reflect, shift, sign, total};
use crate::catalog::binding::qi;
use crate::catalog::{Binding, Domain, Draw, Expr, IdentityCase, Kind, Plan, Support, Value};
use crate::hypseries::{eval_phf, SeriesSpec};
use crate::mparith::{pochhammer, MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::{beta_l, lhat_poly, sigma_ql, t_poly_scaled, y_poly_core};

struct Data<S> {
    a: S,
    d: S,
    e: S,
    h: Vec<S>,
    p: Vec<u64>,
    hp: Vec<S>,
}

fn data<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> Data<S> {
    let h = b.sv("h", ctx);
    let p = b.ints("p");
    let hp = plus(&h, &p, ctx);
    Data { a: b.s("a", ctx), d: b.s("d", ctx), e: b.s("e", ctx), h, p, hp }
}

/// `sum_l coef_l * F(a+l, d+l, hp+l; e+l, h+l | 1)` over `l < m`.
fn shifted_sum<S: Scalar>(x: &Data<S>, coef: &[S], ctx: &PrecisionContext) -> MathResult<Expr<S>> {
    let mut terms = Vec::new();
    for (l, c) in coef.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ls = ki::<S>(l as i64, ctx);
        let lu = l as u64;
        let w = (c.clone() * pochhammer(&x.a, lu) * pochhammer(&x.d, lu) * poch_all(&x.hp, lu, ctx))
            .checked_div(pochhammer(&x.e, lu) * poch_all(&x.h, lu, ctx))?;
        if w.is_zero() {
            continue;
        }
        let s = Expr::series(
            cat(&[&[x.a.clone() + ls.clone(), x.d.clone() + ls.clone()], &shift(&x.hp, &ls)]),
            cat(&[&[x.e.clone() + ls.clone()], &shift(&x.h, &ls)]),
            S::one(ctx),
        );
        terms.push(Expr::Prod(vec![Expr::Num(w), s]));
    }
    Ok(Expr::Sum(terms))
}

fn t8<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let x = data::<S>(b, ctx);
    let bb: S = b.s("b", ctx);
    let (f, m) = (b.sv::<S>("f", ctx), b.ints("m"));
    let one = S::one(ctx);
    let fm = plus(&f, &m, ctx);
    let (a, d, e) = (&x.a, &x.d, &x.e);
    let lhs = Expr::series(
        cat(&[&[a.clone(), bb.clone(), d.clone()], &fm, &x.hp]),
        cat(&[&[bb.clone() + one.clone(), e.clone()], &f, &x.h]),
        one.clone(),
    );
    let fb: Vec<S> = f.iter().map(|y| y.clone() - bb.clone()).collect();
    let omega = poch_v(&fb, &m, ctx)?.checked_div(
        poch_v(&f, &m, ctx)? * poch_v(&x.h, &x.p, ctx)? * pochhammer(&(d.clone() + a.clone() - e.clone()), total(&x.p)),
    )?;
    let g = Expr::gamma(
        vec![e.clone(), e.clone() - a.clone() - d.clone() + one.clone()],
        vec![e.clone() + one.clone() - a.clone(), e.clone() - d.clone()],
    );
    let y = y_poly_core(1, 0, d, e, &(one.clone() - a.clone()), &x.h, &x.p, ctx)?;
    let first = Expr::series_with(
        vec![one.clone(), bb.clone() + one.clone() - a.clone(), d.clone()],
        vec![bb.clone() + one.clone(), e.clone() - a.clone() + one],
        S::one(ctx),
        y,
    );
    let coef = (0..total(&m)).map(|l| beta_l(l, &bb, &f, &m, ctx)).collect::<MathResult<Vec<_>>>()?;
    let rhs = Expr::Sum(vec![Expr::Prod(vec![Expr::Num(omega), g, first]), shifted_sum(&x, &coef, ctx)?]);
    Ok((lhs, rhs))
}

fn t9<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let x = data::<S>(b, ctx);
    let bb: S = b.s("b", ctx);
    let kk = b.int("k") as u64;
    let (f, m) = (b.sv::<S>("f", ctx), b.ints("m"));
    let one = S::one(ctx);
    let fm = plus(&f, &m, ctx);
    let (a, d, e) = (&x.a, &x.d, &x.e);
    let ks = ki::<S>(kk as i64, ctx);
    let lhs = Expr::series(
        cat(&[&[a.clone(), bb.clone(), d.clone()], &fm, &x.hp]),
        cat(&[&[bb.clone() + ks.clone(), e.clone()], &f, &x.h]),
        one.clone(),
    );
    let scale = one.clone().checked_div(
        poch_v(&f, &m, ctx)? * poch_v(&x.h, &x.p, ctx)? * pochhammer(&(d.clone() - e.clone() + a.clone()), total(&x.p)),
    )?;
    let g = Expr::gamma(
        vec![e.clone(), e.clone() + one.clone() - a.clone() - d.clone()],
        vec![e.clone() - a.clone() + one.clone(), e.clone() - d.clone()],
    );
    let y = y_poly_core(1, 0, d, e, &(one.clone() - a.clone()), &x.h, &x.p, ctx)?;
    let tp = t_poly_scaled(kk, a, &bb, &f, &m, ctx)?;
    let first = Expr::series_with(
        vec![one.clone(), bb.clone() - a.clone() + one.clone(), d.clone()],
        vec![bb.clone() + ks, e.clone() - a.clone() + one.clone()],
        one.clone(),
        tp * y,
    );
    let mm = total(&m);
    let mut coef = vec![S::zero(ctx); mm as usize];
    let fact = |n: u64| pochhammer(&one, n);
    for q in 1..=kk {
        let cq = (sign::<S>(q as i64 - 1, ctx) * pochhammer(&bb, kk))
            .checked_div((bb.clone() + ki(q as i64 - 1, ctx)) * fact(q - 1) * fact(kk - q))?;
        for (l, c) in coef.iter_mut().enumerate() {
            *c = c.clone() + cq.clone() * sigma_ql(q, l as u64, &bb, &f, &m, ctx)?;
        }
    }
    let rhs = Expr::Sum(vec![Expr::Prod(vec![Expr::Num(scale), g, first]), shifted_sum(&x, &coef, ctx)?]);
    Ok((lhs, rhs))
}

fn remark_expr<S: Scalar>(a: &S, d: &S, e: &S, h: &[S], p: &[u64], l: u64, ctx: &PrecisionContext) -> MathResult<Expr<S>> {
    let one = S::one(ctx);
    let pp = total(p);
    let ls = ki::<S>(l as i64, ctx);
    let ps = ki::<S>(pp as i64, ctx);
    let g = Expr::gamma(
        vec![e.clone() - a.clone() - d.clone(), one.clone() + d.clone() - e.clone() + a.clone(), e.clone() + ls.clone()],
        vec![e.clone() - a.clone(), e.clone() - d.clone(), ls.clone() + d.clone() - e.clone() + a.clone() + ps + one.clone()],
    );
    let hd: Vec<S> = h.iter().map(|y| y.clone() - d.clone()).collect();
    let pre = (sign::<S>(l as i64, ctx) * poch_v(&hd, p, ctx)?).checked_div(poch_v(&shift(h, &ls), p, ctx)?)?;
    let inner_up: Vec<S> = h.iter().map(|y| one.clone() - y.clone() + d.clone()).collect();
    let inner_lo: Vec<S> = inner_up.iter().zip(p).map(|(y, &n)| y.clone() - ki(n as i64, ctx)).collect();
    let mut sum = S::zero(ctx);
    for j in 0..=pp {
        let js = ki::<S>(j as i64, ctx);
        let spec = SeriesSpec::new(cat(&[&[-js.clone()], &inner_up]), inner_lo.clone(), one.clone());
        let inner = eval_phf(&spec, ctx)?.value;
        let t = pochhammer(&(d.clone() - e.clone() + one.clone()), j) / pochhammer(&one, j)
            * inner
            * pochhammer(&(ls.clone() + d.clone()), j)
            * pochhammer(&(ls.clone() + d.clone() - e.clone() + a.clone() + js + one.clone()), pp - j);
        sum = sum + t;
    }
    Ok(Expr::Prod(vec![g, Expr::Num(pre * sum)]))
}

/// `F(a+l, d+l, h+p+l; e+l, h+l | 1)` as a finite sum of `P+1` terms.
pub fn finite_remark_sum<S: Scalar>(
    a: &S,
    d: &S,
    e: &S,
    h: &[S],
    p: &[u64],
    l: u64,
    ctx: &PrecisionContext,
) -> MathResult<S> {
    remark_expr(a, d, e, h, p, l, ctx)?.eval(ctx)
}

fn t9r<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let x = data::<S>(b, ctx);
    let l = b.int("l");
    let ls = ki::<S>(l, ctx);
    let lhs = Expr::series(
        cat(&[&[x.a.clone() + ls.clone(), x.d.clone() + ls.clone()], &shift(&x.hp, &ls)]),
        cat(&[&[x.e.clone() + ls.clone()], &shift(&x.h, &ls)]),
        S::one(ctx),
    );
    Ok((lhs, remark_expr(&x.a, &x.d, &x.e, &x.h, &x.p, l as u64, ctx)?))
}

fn t10<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let x = data::<S>(b, ctx);
    let (g, bb, c): (S, S, S) = (b.s("g", ctx), b.s("b", ctx), b.s("c", ctx));
    let (f, m) = (b.sv::<S>("f", ctx), b.ints("m"));
    let one = S::one(ctx);
    let (a, d, e) = (&x.a, &x.d, &x.e);
    let mm = total(&m);
    let lam = c.clone() - a.clone() - g.clone() - ki(mm as i64, ctx) + one.clone();
    let fm = plus(&f, &m, ctx);
    let top = [a.clone(), g.clone(), d.clone(), bb.clone()];
    let low = [c.clone(), e.clone(), bb.clone() + one.clone()];
    let lhs = Expr::series(cat(&[&top, &fm, &x.hp]), cat(&[&low, &f, &x.h]), one.clone());
    let fb: Vec<S> = f.iter().map(|y| y.clone() - bb.clone()).collect();
    let (pf, pfb) = (poch_v(&f, &m, ctx)?, poch_v(&fb, &m, ctx)?);
    let first = Expr::Prod(vec![
        Expr::Num(pfb.clone().checked_div(pf.clone())?),
        Expr::series(cat(&[&top, &x.hp]), cat(&[&low, &x.h]), one.clone()),
    ]);
    let lhat = lhat_poly(a, &g, &c, &bb, &f, &m, ctx)?;
    let l0 = lhat.eval(&S::zero(ctx));
    let lr = reflect(&lhat, ctx).scale(&one.clone().checked_div(l0)?);
    let y = y_poly_core(1, 0, d, e, &lam, &x.h, &x.p, ctx)?;
    let w = (pf.clone() - pfb).checked_div(
        pochhammer(&(d.clone() - e.clone() - lam.clone() + one.clone()), total(&x.p)) * pf * poch_v(&x.h, &x.p, ctx)?,
    )?;
    let gr = Expr::gamma(vec![e.clone(), e.clone() + lam.clone() - d.clone()], vec![e.clone() + lam.clone(), e.clone() - d.clone()]);
    let second = Expr::series_with(
        vec![d.clone(), g + lam.clone(), a.clone() + lam.clone()],
        vec![c, e.clone() + lam],
        one,
        lr * y,
    );
    Ok((lhs, Expr::Sum(vec![first, Expr::Prod(vec![gr, Expr::Num(w), second])])))
}

/// Shared draw: `a, b, f, m, h, p` plus `d` and `e`, with `e` lifted so
/// that every unit-argument series converges fast when `d` is generic.
fn draw_common(dr: &mut Draw, plan: &Plan, with_fm: bool, slack: impl Fn(&Binding) -> Rational) -> Binding {
    let mut b = Binding::new().with("a", Value::Q(dr.rat()));
    if with_fm {
        let len = dr.int(1, 2) as usize;
        let (f, m) = ipd(dr, len, 2);
        b = b.with("b", Value::Q(dr.rat())).with("f", Value::QVec(f)).with("m", Value::IntVec(m));
    }
    let (h, p) = ipd(dr, 1, 2);
    b = b.with("h", Value::QVec(h)).with("p", Value::IntVec(p));
    if plan.terminating {
        b.with("d", Value::Q(qi(-dr.int(1, 4)))).with("e", Value::Q(dr.rat()))
    } else {
        b = b.with("d", Value::Q(dr.rat())).with("e", Value::Q(dr.rat()));
        let lift = boost(dr, &slack(&b));
        let e = b.q("e") + lift;
        b.with("e", Value::Q(e))
    }
}

/// `e - a - d - P - m`, the smallest excess among the series of the
/// `b+1` transformations.
fn excess_abd(b: &Binding) -> Rational {
    let m: u64 = b.get("m").map(|_| total(&b.ints("m"))).unwrap_or(0);
    b.q("e") - b.q("a") - b.q("d") - qi((total(&b.ints("p")) + m) as i64)
}

fn draw_t8(dr: &mut Draw, plan: &Plan) -> Binding {
    draw_common(dr, plan, true, excess_abd)
}

fn draw_t9(dr: &mut Draw, plan: &Plan) -> Binding {
    let kk = dr.int(2, 3);
    draw_common(dr, plan, true, excess_abd).with("k", Value::Int(kk))
}

fn draw_t9r(dr: &mut Draw, plan: &Plan) -> Binding {
    let b = draw_common(dr, plan, false, |b| excess_abd(b) - qi(2));
    let hi = if plan.terminating { (-b.q("d")).to_integer().to_i64().unwrap_or(0) } else { 2 };
    let l = dr.int(0, hi);
    b.with("l", Value::Int(l))
}

fn draw_t10(dr: &mut Draw, plan: &Plan) -> Binding {
    let g = dr.rat();
    let c = dr.rat();
    let gap = (g.clone() - c.clone()).abs();
    let b = draw_common(dr, plan, true, |b| excess_abd(b) - gap.clone());
    b.with("g", Value::Q(g)).with("c", Value::Q(c))
}

const T8_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("b", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];

const T9_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("b", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
    ("k", Domain::Ints(2, 3)),
];

const T9R_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
    ("l", Domain::Ints(0, 4)),
];

const T10_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("g", Domain::Rational),
    ("b", Domain::Rational),
    ("c", Domain::Rational),
    ("d", Domain::Rational),
    ("e", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Transformation as T;
    vec![
        IdentityCase::new("T8", T, "Karlsson-type transformation with a b+1 over b pair", T8_PARAMS, builders!(t8), draw_t8)
            .support(Support::Both),
        IdentityCase::new("T9", T, "Karlsson-type transformation with a b+k over b pair", T9_PARAMS, builders!(t9), draw_t9)
            .support(Support::Both)
            .constraint("k >= 2", |b| b.int("k") >= 2),
        IdentityCase::new("T9R", T, "finite-sum evaluation of the shifted IPD series", T9R_PARAMS, builders!(t9r), draw_t9r)
            .support(Support::Both)
            .constraint("l >= 0", |b| b.int("l") >= 0),
        IdentityCase::new("T10", T, "transformation with a degree m-1 characteristic from the zeros of L-hat", T10_PARAMS, builders!(t10), draw_t10)
            .support(Support::Both),
    ]
}
