//! Closed-form sums with non-linearly constrained parameters.

use alloc::vec;
use alloc::vec::Vec;

use super::{builders, cat, delta, k, ki};
use crate::catalog::binding::{q, qi};
use crate::catalog::{Binding, Domain, Draw, Expr, IdentityCase, Kind, Plan, Support, Value};
use crate::mparith::{pochhammer, MathResult, PrecisionContext, Scalar};

fn t14<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (be, d, g): (S, S, S) = (b.s("beta", ctx), b.s("d", ctx), b.s("gamma", ctx));
    let (one, two, three) = (ki::<S>(1, ctx), ki::<S>(2, ctx), ki::<S>(3, ctx));
    let u = two.clone() + be.clone() - d.clone() - g.clone();
    let v = g.clone() - d.clone() - one.clone();
    let zeta = (u.clone() * v.clone()).checked_div(be.clone())? + g.clone() - one.clone();
    let psi = (be.clone() * (one.clone() - d.clone()) * (be.clone() + d.clone())).checked_div(
        (be.clone() + d.clone()) * u.clone()
            + (g.clone() - be.clone() - one.clone()) * (d.clone() + g.clone() - two.clone()),
    )?;
    let a = be
        .clone()
        .checked_div((be.clone() * (g.clone() - one.clone()) + u * v) * (be.clone() + d.clone()))?;
    let lhs = Expr::series(
        vec![be.clone(), d.clone(), one.clone() - d.clone(), zeta.clone() + one.clone(), psi.clone() + one.clone()],
        vec![g.clone(), three.clone() + two.clone() * be.clone() - g.clone(), zeta, psi],
        one.clone(),
    );
    let half = (d.clone() + g.clone()).checked_div(two.clone())?;
    let hdiff = (g.clone() - d.clone()).checked_div(two.clone())?;
    let rhs = Expr::Prod(vec![
        Expr::Num(a),
        Expr::gamma(
            vec![
                g.clone(),
                half.clone(),
                one.clone() + be.clone() - half,
                three + two.clone() * be.clone() - g.clone(),
            ],
            vec![
                d.clone() + g.clone() - one.clone(),
                hdiff.clone(),
                one + be.clone() - hdiff,
                two.clone() + two * be - d - g,
            ],
        ),
    ]);
    Ok((lhs, rhs))
}

fn t15<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (a, c, d, e, f): (S, S, S, S, S) = (b.s("A", ctx), b.s("C", ctx), b.s("D", ctx), b.s("E", ctx), b.s("F", ctx));
    let one = S::one(ctx);
    let half_a = a.clone() * k(1, 2, ctx);
    let a1 = one.clone() + a.clone();
    let lhs = Expr::series(
        vec![
            a.clone(),
            one.clone() + half_a.clone(),
            c.clone(),
            d.clone(),
            e.clone(),
            f.clone() + one.clone(),
            a1.clone() - f.clone(),
        ],
        vec![
            half_a,
            a1.clone() - c.clone(),
            a1.clone() - d.clone(),
            a1.clone() - e.clone(),
            f.clone(),
            a.clone() - f.clone(),
        ],
        one.clone(),
    );
    let g = Expr::gamma(
        vec![
            a1.clone() - c.clone(),
            a1.clone() - d.clone(),
            a1.clone() - e.clone(),
            a1.clone() - c.clone() - d.clone() - e.clone(),
        ],
        vec![
            a1.clone(),
            a1.clone() - c.clone() - e.clone(),
            a1.clone() - d.clone() - e.clone(),
            a1 - c.clone() - d.clone(),
        ],
    );
    let corr = (c.clone() * d.clone() * e.clone())
        .checked_div(f.clone() * (f - a.clone()) * (c + d + e - a))?;
    Ok((lhs, Expr::Prod(vec![g, Expr::Num(one + corr)])))
}

/// `xi` and the common factor `(h-d) alpha - (e-d-1) h`.
fn xi<S: Scalar>(al: &S, d: &S, e: &S, h: &S, ctx: &PrecisionContext) -> MathResult<(S, S)> {
    let one = S::one(ctx);
    let w = (h.clone() - d.clone()) * al.clone() - (e.clone() - d.clone() - one.clone()) * h.clone();
    let den = ki::<S>(3, ctx) * h.clone() - ki::<S>(2, ctx) * d.clone() - e.clone() + one;
    Ok((w.clone().checked_div(den)?, w))
}

fn t16<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, d, e, h): (S, S, S, S) = (b.s("alpha", ctx), b.s("d", ctx), b.s("e", ctx), b.s("h", ctx));
    let (one, two) = (ki::<S>(1, ctx), ki::<S>(2, ctx));
    let (x, w) = xi(&al, &d, &e, &h, ctx)?;
    let lhs = Expr::series(
        cat(&[&delta(&al, 3), &delta(&(one.clone() + al.clone() - e.clone()), 2), &[d.clone(), x.clone() + one.clone()]]),
        cat(&[
            &[al.clone() * k(1, 2, ctx), (al.clone() + ki(3, ctx)) * k(1, 2, ctx)],
            &delta(&(two.clone() + al.clone() + d.clone() - e.clone()), 3),
            &[x],
        ]),
        one.clone(),
    );
    let g = Expr::gamma(
        vec![e.clone() - al.clone(), e.clone() - d.clone()],
        vec![e.clone(), e.clone() - al.clone() - d.clone()],
    );
    let pre = (h.clone() * (one.clone() + al.clone() + d.clone() - e.clone())).checked_div(w)?;
    let corr = one.clone()
        - (two * d * (h.clone() + one)).checked_div((al + ki(3, ctx)) * e * h)?;
    Ok((lhs, Expr::Prod(vec![g, Expr::Num(pre * corr)])))
}

fn t17<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, d, h): (S, S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("d", ctx), b.s("h", ctx));
    let (one, two, three) = (ki::<S>(1, ctx), ki::<S>(2, ctx), ki::<S>(3, ctx));
    let e = two.clone() + al.clone() + d.clone() - three.clone() * be.clone();
    let (x, w) = xi(&al, &d, &e, &h, ctx)?;
    let lhs = Expr::series(
        cat(&[
            &delta(&al, 3),
            core::slice::from_ref(&be),
            &delta(&(one.clone() + al.clone() - e.clone()), 2),
            &[d.clone(), x.clone() + one.clone()],
        ]),
        cat(&[
            &delta(&al, 2),
            &[be.clone() + one.clone()],
            &delta(&(two.clone() + al.clone() + d.clone() - e.clone()), 3),
            &[x],
        ]),
        one.clone(),
    );
    let g = Expr::gamma(
        vec![e.clone() - al.clone(), e.clone() - d.clone() - one.clone()],
        vec![e.clone() - one.clone(), e.clone() - al.clone() - d.clone()],
    );
    let b3a = three * be.clone() - al.clone();
    let num = be.clone()
        * (one.clone() + al.clone() + d.clone() - e)
        * (h.clone() * b3a.clone() * (be.clone() - d.clone() - one.clone())
            + d.clone() * (two * be.clone() - al + h));
    let den = (be.clone() - d.clone() - one) * (be - d) * b3a * w;
    Ok((lhs, Expr::Prod(vec![g, Expr::Num(num.checked_div(den)?)])))
}

struct T18<S> {
    lhs: Expr<S>,
    pref: Expr<S>,
    al: S,
    n: S,
}

fn t18_common<S: Scalar>(b: &Binding, r: i64, ctx: &PrecisionContext) -> MathResult<T18<S>> {
    let al: S = b.s("alpha", ctx);
    let n = ki::<S>(b.int("n"), ctx);
    let (one, two, three) = (ki::<S>(1, ctx), ki::<S>(2, ctx), ki::<S>(3, ctx));
    let half = k::<S>(1, 2, ctx);
    let lhs = Expr::series(
        cat(&[&delta(&(al.clone() - one.clone()), 3), &[-half.clone() - n.clone(), -n.clone()]]),
        vec![
            al.clone() * half.clone() + ki(r, ctx),
            al.clone() * half + k(3, 2, ctx),
            -k::<S>(1, 3, ctx) - n.clone(),
            -k::<S>(2, 3, ctx) - n.clone(),
        ],
        one,
    );
    let pref = Expr::Prod(vec![
        Expr::Num(three.clone().checked_div(al.clone() + two.clone())?),
        Expr::gamma(
            vec![two.clone() * n.clone() + three.clone(), three.clone() * n.clone() + al.clone() + three.clone()],
            vec![three * n.clone() + ki(4, ctx), two.clone() * n.clone() + al.clone() + two],
        ),
    ]);
    Ok(T18 { lhs, pref, al, n })
}

fn t18<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let r = b.int("r");
    let T18 { lhs, pref, al, n } = t18_common::<S>(b, r, ctx)?;
    let (one, two) = (ki::<S>(1, ctx), ki::<S>(2, ctx));
    let rs = ki::<S>(r, ctx);
    let ru = r as u64;
    let half = k::<S>(1, 2, ctx);
    let be = k::<S>(3, 2, ctx) - rs.clone();
    let u = be.clone() - rs.clone() - half.clone();
    let v = -be.clone() - rs.clone() - half.clone();
    let n1 = two.clone() * n.clone() * al.clone() * (al.clone() - one.clone()) * (one.clone() - rs.clone())
        * pochhammer(&u, ru)
        * pochhammer(&v, ru);
    let d1 = (al.clone() + ki(3, ctx))
        * (al.clone() + ki(5, ctx))
        * (al.clone() + two.clone() * rs.clone())
        * (al.clone() + two.clone() * n + two.clone())
        * pochhammer(&(be.clone() + half.clone()), ru)
        * pochhammer(&(-be + half), ru);
    let n2 = two * rs * (al + one.clone());
    let d2 = u * v;
    let inner = Expr::Sum(vec![Expr::Num(one.clone()), Expr::quot(Expr::Num(n2), Expr::Num(d2))]);
    let braces = Expr::Sum(vec![
        Expr::Num(one),
        Expr::Prod(vec![Expr::quot(Expr::Num(n1), Expr::Num(d1)), inner]),
    ]);
    Ok((lhs, Expr::Prod(vec![pref, braces])))
}

fn c181<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let T18 { lhs, pref, al, n } = t18_common::<S>(b, 0, ctx)?;
    let (one, two) = (ki::<S>(1, ctx), ki::<S>(2, ctx));
    let corr = (two.clone() * n.clone() * (al.clone() - one.clone())).checked_div(
        (al.clone() + ki(3, ctx)) * (al.clone() + ki(5, ctx)) * (al + two.clone() * n + two),
    )?;
    Ok((lhs, Expr::Prod(vec![pref, Expr::Num(one + corr)])))
}

fn draw_t14(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("beta", Value::Q(q(dr.int(170, 210), 7)))
        .with("d", Value::Q(dr.rat()))
        .with("gamma", Value::Q(dr.rat()))
}

fn draw_t15(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("A", Value::Q(dr.rat() + qi(dr.int(30, 36))))
        .with("C", Value::Q(dr.rat()))
        .with("D", Value::Q(dr.rat()))
        .with("E", Value::Q(dr.rat()))
        .with("F", Value::Q(dr.rat()))
}

fn draw_t16(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("alpha", Value::Q(dr.rat()))
        .with("d", Value::Q(qi(-dr.int(1, 4))))
        .with("e", Value::Q(dr.rat()))
        .with("h", Value::Q(dr.rat()))
}

fn draw_t17(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("alpha", Value::Q(dr.rat()))
        .with("beta", Value::Q(dr.rat()))
        .with("d", Value::Q(qi(-dr.int(1, 4))))
        .with("h", Value::Q(dr.rat()))
}

fn draw_t18(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("alpha", Value::Q(dr.rat()))
        .with("n", Value::Int(dr.int(0, 4)))
        .with("r", Value::Int(dr.int(0, 4)))
}

fn draw_c181(dr: &mut Draw, _: &Plan) -> Binding {
    Binding::new().with("alpha", Value::Q(dr.rat())).with("n", Value::Int(dr.int(0, 4)))
}

const T14_PARAMS: &[(&str, Domain)] = &[("beta", Domain::Rational), ("d", Domain::Rational), ("gamma", Domain::Rational)];

const T15_PARAMS: &[(&str, Domain)] = &[
    ("A", Domain::Rational),
    ("C", Domain::Rational),
    ("D", Domain::Rational),
    ("E", Domain::Rational),
    ("F", Domain::Rational),
];

const T16_PARAMS: &[(&str, Domain)] =
    &[("alpha", Domain::Rational), ("d", Domain::Rational), ("e", Domain::Rational), ("h", Domain::Rational)];

const T17_PARAMS: &[(&str, Domain)] =
    &[("alpha", Domain::Rational), ("beta", Domain::Rational), ("d", Domain::Rational), ("h", Domain::Rational)];

const T18_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Rational), ("n", Domain::Ints(0, 4)), ("r", Domain::Ints(0, 4))];

const C181_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Rational), ("n", Domain::Ints(0, 4))];

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Summation as S;
    vec![
        IdentityCase::new("T14", S, "non-terminating 5F4 sum with two unit shifts (from Dixon's theorem)", T14_PARAMS, builders!(t14), draw_t14)
            .float_only()
            .support(Support::NonTerminating)
            .constraint("Re(beta) > 0", |b| b.q("beta") > qi(0)),
        IdentityCase::new("T15", S, "very well-poised 7F6 sum with an F+1 over F pair", T15_PARAMS, builders!(t15), draw_t15)
            .float_only()
            .support(Support::NonTerminating)
            .constraint("Re(A - C - D - E) >= 1/2", |b| b.q("A") - b.q("C") - b.q("D") - b.q("E") >= q(1, 2)),
        IdentityCase::new("T16", S, "terminating 7F6 sum from the cubic transformation with 2 beta = alpha + 1", T16_PARAMS, builders!(t16), draw_t16)
            .constraint("-d in N", |b| b.q("d") < qi(0) && b.q("d").is_integer()),
        IdentityCase::new("T17", S, "terminating 8F7 sum of Saalschutz type from the cubic transformation", T17_PARAMS, builders!(t17), draw_t17)
            .constraint("-d in N", |b| b.q("d") < qi(0) && b.q("d").is_integer()),
        IdentityCase::new("T18", S, "terminating 5F4 sum with beta = 3/2 - r", T18_PARAMS, builders!(t18), draw_t18),
        IdentityCase::new("C18.1", S, "terminating 5F4 sum, the r = 0 case", C181_PARAMS, builders!(c181), draw_c181),
    ]
}
