//! Transformations in the variable `x`, checked at fixed grid points.

use alloc::vec;
use alloc::vec::Vec;

use super::{builders, cat, delta, ipd, k, ki, plus, poch_v, reflect, set_x, sign, total};
use crate::catalog::binding::qi;
use crate::catalog::{Binding, Domain, Draw, Expr, Grid, IdentityCase, Kind, Plan, Support, Value};
use crate::mparith::{pochhammer, MathResult, PrecisionContext, Scalar};
use crate::polyfactory::{beta_l, lhat_poly, p2r_poly, q3r_poly, sigma_ql, t_poly_scaled};

const FULL: &[(i64, i64)] = &[(1, 7), (1, 3), (1, 2), (9, 10)];
const NT: &[(i64, i64)] = &[(1, 7), (1, 3)];
const SEVENTH: &[(i64, i64)] = &[(1, 7)];

fn pow<S: Scalar>(base: S, exp: S) -> Expr<S> {
    Expr::Pow { base, exp }
}

/// `-27x / (4 (1-x)^3)`.
fn cubic_arg<S: Scalar>(x: &S, ctx: &PrecisionContext) -> MathResult<S> {
    let y = S::one(ctx) - x.clone();
    (ki::<S>(-27, ctx) * x.clone()).checked_div(ki::<S>(4, ctx) * y.clone() * y.clone() * y)
}

fn bailey<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, x): (S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("x", ctx));
    let (one, two) = (S::one(ctx), ki::<S>(2, ctx));
    let low = vec![be.clone(), al.clone() - be.clone() + k(3, 2, ctx)];
    let lhs = Expr::series(
        vec![al.clone(), two.clone() * be.clone() - al.clone() - one.clone(), al.clone() + two.clone() - two * be],
        low.clone(),
        x.clone() * k(1, 4, ctx),
    );
    let rhs = Expr::series(delta(&al, 3), low, cubic_arg(&x, ctx)?);
    Ok((lhs, Expr::Prod(vec![pow(one - x, -al), rhs])))
}

fn gs513<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, x): (S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("x", ctx));
    let one = S::one(ctx);
    let lhs = Expr::series(
        vec![one.clone(), al.clone() - ki::<S>(2, ctx) * be.clone()],
        vec![be.clone() + one.clone()],
        x.clone(),
    );
    let rhs = Expr::series(
        cat(&[&delta(&al, 3), core::slice::from_ref(&be)]),
        cat(&[&delta(&al, 2), &[be + one.clone()]]),
        cubic_arg(&x, ctx)?,
    );
    Ok((lhs, Expr::Prod(vec![pow(one - x, -al), rhs])))
}

fn aar185<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, x): (S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("x", ctx));
    let (one, two, half) = (S::one(ctx), ki::<S>(2, ctx), k::<S>(1, 2, ctx));
    let lhs = Expr::series(
        vec![al.clone(), be.clone() - half, al.clone() - be.clone() + one.clone()],
        vec![two.clone() * be.clone() - one.clone(), two.clone() * (al.clone() - be.clone()) + two],
        ki::<S>(4, ctx) * x.clone(),
    );
    let y = one.clone() - x.clone();
    let arg = (ki::<S>(27, ctx) * x.clone() * x).checked_div(ki::<S>(4, ctx) * y.clone() * y.clone() * y.clone())?;
    let rhs = Expr::series(delta(&al, 3), vec![be.clone(), al.clone() - be + k(3, 2, ctx)], arg);
    Ok((lhs, Expr::Prod(vec![pow(y, -al), rhs])))
}

fn gs520<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, x): (S, S) = (b.s("alpha", ctx), b.s("x", ctx));
    let (one, half) = (S::one(ctx), k::<S>(1, 2, ctx));
    let a3 = ki::<S>(3, ctx) * al.clone();
    let lhs = Expr::series(
        vec![a3.clone(), a3 + half.clone()],
        vec![ki::<S>(6, ctx) * al.clone() + one.clone()],
        k::<S>(4, 3, ctx) * x.clone(),
    );
    let y = one.clone() - x.clone();
    let arg = (ki::<S>(4, ctx) * x.clone() * x.clone() * x).checked_div(ki::<S>(27, ctx) * y.clone() * y.clone())?;
    let a2 = ki::<S>(2, ctx) * al.clone();
    let rhs = Expr::series(vec![al.clone(), al + half], vec![a2.clone() + one], arg);
    Ok((lhs, Expr::Prod(vec![pow(y, -a2), rhs])))
}

fn gs518<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, x): (S, S) = (b.s("alpha", ctx), b.s("x", ctx));
    let half = k::<S>(1, 2, ctx);
    let a3 = ki::<S>(3, ctx) * al.clone();
    let lhs = Expr::series(vec![a3.clone(), -a3], vec![half.clone()], k::<S>(3, 4, ctx) * x.clone());
    let y = S::one(ctx) - x.clone();
    let arg = k::<S>(27, 4, ctx) * x * y.clone() * y;
    let rhs = Expr::series(vec![al.clone(), -al], vec![half], arg);
    Ok((lhs, rhs))
}

fn maier32<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, x): (S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("x", ctx));
    let r = b.int("r");
    let (one, two, half) = (S::one(ctx), ki::<S>(2, ctx), k::<S>(1, 2, ctx));
    let rs = ki::<S>(r, ctx);
    let low = vec![
        (al.clone() + be.clone() + rs.clone()) / two.clone() + k(3, 4, ctx),
        (al.clone() - be.clone() + rs.clone()) / two + k(3, 4, ctx),
    ];
    let lhs = Expr::series_with(
        vec![al.clone(), half.clone() - rs.clone() - be.clone(), half - rs + be.clone()],
        low.clone(),
        x.clone() * k(1, 4, ctx),
        q3r_poly(r as u64, &al, &be, ctx)?,
    );
    let rhs = Expr::series(delta(&al, 3), low, cubic_arg(&x, ctx)?);
    Ok((lhs, Expr::Prod(vec![pow(one - x, -al), rhs])))
}

fn maier31<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be, de, x): (S, S, S, S) = (b.s("alpha", ctx), b.s("beta", ctx), b.s("delta", ctx), b.s("x", ctx));
    let r = b.int("r");
    let (one, half) = (S::one(ctx), k::<S>(1, 2, ctx));
    let low = vec![one.clone() + al.clone() - be.clone(), one.clone() + al.clone() - de.clone()];
    let lhs = Expr::series_with(
        vec![al.clone(), be.clone(), de.clone()],
        low.clone(),
        x.clone(),
        p2r_poly(r as u64, &al, &be, &de, ctx)?,
    );
    let y = one.clone() - x.clone();
    let arg = (ki::<S>(-4, ctx) * x).checked_div(y.clone() * y.clone())?;
    let a2 = al.clone() * half.clone();
    let rhs = Expr::series(
        vec![a2.clone(), a2 + half, al.clone() - be - de - ki(r, ctx) + one],
        low,
        arg,
    );
    Ok((lhs, Expr::Prod(vec![pow(y, -al), rhs])))
}

fn abcx<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> (S, S, S, S) {
    (b.s("a", ctx), b.s("b", ctx), b.s("c", ctx), b.s("x", ctx))
}

fn euler1<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (a, bb, c, x) = abcx::<S>(b, ctx);
    let one = S::one(ctx);
    let lhs = Expr::series(vec![a.clone(), bb.clone()], vec![c.clone()], x.clone());
    let arg = x.clone().checked_div(x.clone() - one.clone())?;
    let rhs = Expr::series(vec![a.clone(), c.clone() - bb], vec![c], arg);
    Ok((lhs, Expr::Prod(vec![pow(one - x, -a), rhs])))
}

fn euler2<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (a, bb, c, x) = abcx::<S>(b, ctx);
    let one = S::one(ctx);
    let lhs = Expr::series(vec![a.clone(), bb.clone()], vec![c.clone()], x.clone());
    let rhs = Expr::series(vec![c.clone() - a.clone(), c.clone() - bb.clone()], vec![c.clone()], x.clone());
    Ok((lhs, Expr::Prod(vec![pow(one - x, c - a - bb), rhs])))
}

struct Karlsson<S> {
    a: S,
    b: S,
    x: S,
    f: Vec<S>,
    m: Vec<u64>,
    fm: Vec<S>,
}

fn karlsson<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> Karlsson<S> {
    let f = b.sv("f", ctx);
    let m = b.ints("m");
    let fm = plus(&f, &m, ctx);
    Karlsson { a: b.s("a", ctx), b: b.s("b", ctx), x: b.s("x", ctx), f, m, fm }
}

/// `sum_j coef_j (a)_j x^j (1-x)^(-a-j)`.
fn pow_sum<S: Scalar>(a: &S, x: &S, coef: &[S], ctx: &PrecisionContext) -> MathResult<Expr<S>> {
    let one = S::one(ctx);
    let mut terms = Vec::new();
    for (j, c) in coef.iter().enumerate() {
        let w = c.clone() * pochhammer(a, j as u64) * x.powi(j as i64)?;
        terms.push(Expr::Prod(vec![Expr::Num(w), pow(one.clone() - x.clone(), -a.clone() - ki(j as i64, ctx))]));
    }
    Ok(Expr::Sum(terms))
}

fn kar112<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let Karlsson { a, b: bb, x, f, m, fm } = karlsson::<S>(b, ctx);
    let one = S::one(ctx);
    let lhs = Expr::series(cat(&[&[a.clone(), bb.clone()], &fm]), cat(&[&[bb.clone() + one.clone()], &f]), x.clone());
    let fb: Vec<S> = f.iter().map(|y| y.clone() - bb.clone()).collect();
    let w = poch_v(&fb, &m, ctx)?.checked_div(poch_v(&f, &m, ctx)?)?;
    let first = Expr::Prod(vec![
        Expr::Num(w),
        pow(one.clone() - x.clone(), one.clone() - a.clone()),
        Expr::series(vec![one.clone(), bb.clone() + one.clone() - a.clone()], vec![bb.clone() + one], x.clone()),
    ]);
    let coef = (0..total(&m)).map(|l| beta_l(l, &bb, &f, &m, ctx)).collect::<MathResult<Vec<_>>>()?;
    Ok((lhs, Expr::Sum(vec![first, pow_sum(&a, &x, &coef, ctx)?])))
}

fn kar121<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let Karlsson { a, b: bb, x, f, m, fm } = karlsson::<S>(b, ctx);
    let kk = b.int("k") as u64;
    let one = S::one(ctx);
    let ks = ki::<S>(kk as i64, ctx);
    let lhs = Expr::series(cat(&[&[a.clone(), bb.clone()], &fm]), cat(&[&[bb.clone() + ks.clone()], &f]), x.clone());
    let first = Expr::Prod(vec![
        Expr::Num(one.clone().checked_div(poch_v(&f, &m, ctx)?)?),
        pow(one.clone() - x.clone(), one.clone() - a.clone()),
        Expr::series_with(
            vec![one.clone(), bb.clone() + one.clone() - a.clone()],
            vec![bb.clone() + ks],
            x.clone(),
            t_poly_scaled(kk, &a, &bb, &f, &m, ctx)?,
        ),
    ]);
    let fact = |n: u64| pochhammer(&one, n);
    let mut coef = vec![S::zero(ctx); total(&m) as usize];
    for q in 1..=kk {
        let cq = (sign::<S>(q as i64 - 1, ctx) * pochhammer(&bb, kk))
            .checked_div((bb.clone() + ki(q as i64 - 1, ctx)) * fact(q - 1) * fact(kk - q))?;
        for (j, c) in coef.iter_mut().enumerate() {
            *c = c.clone() + cq.clone() * sigma_ql(q, j as u64, &bb, &f, &m, ctx)?;
        }
    }
    Ok((lhs, Expr::Sum(vec![first, pow_sum(&a, &x, &coef, ctx)?])))
}

fn deqvect1<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let Karlsson { a, b: bb, x, f, m, fm } = karlsson::<S>(b, ctx);
    let (g, c): (S, S) = (b.s("g", ctx), b.s("c", ctx));
    let one = S::one(ctx);
    let top = [a.clone(), g.clone(), bb.clone()];
    let low = [c.clone(), bb.clone() + one.clone()];
    let lhs = Expr::series(cat(&[&top, &fm]), cat(&[&low, &f]), x.clone());
    let fb: Vec<S> = f.iter().map(|y| y.clone() - bb.clone()).collect();
    let (pf, pfb) = (poch_v(&f, &m, ctx)?, poch_v(&fb, &m, ctx)?);
    let first = Expr::Prod(vec![
        Expr::Num(pfb.clone().checked_div(pf.clone())?),
        Expr::series(top.to_vec(), low.to_vec(), x.clone()),
    ]);
    let lhat = lhat_poly(&a, &g, &c, &bb, &f, &m, ctx)?;
    let l0 = lhat.eval(&S::zero(ctx));
    let lr = reflect(&lhat, ctx).scale(&one.clone().checked_div(l0)?);
    let mm = ki::<S>(total(&m) as i64, ctx);
    let ca = c.clone() - a.clone() - mm.clone() + one.clone();
    let cg = c.clone() - g.clone() - mm + one.clone();
    let lam = ca.clone() - g;
    let second = Expr::Prod(vec![
        Expr::Num((pf.clone() - pfb).checked_div(pf)?),
        pow(one - x.clone(), lam),
        Expr::series_with(vec![ca, cg], vec![c], x, lr),
    ]);
    Ok((lhs, Expr::Sum(vec![first, second])))
}

fn draw_cubic(d: &mut Draw, plan: &Plan) -> Binding {
    let b = Binding::new().with("alpha", Value::Q(qi(-d.int(1, 4)))).with("beta", Value::Q(d.rat()));
    set_x(b, plan)
}

fn draw_gs513(d: &mut Draw, plan: &Plan) -> Binding {
    set_x(Binding::new().with("alpha", Value::Q(d.rat())).with("beta", Value::Q(d.rat())), plan)
}

fn draw_gs520(d: &mut Draw, plan: &Plan) -> Binding {
    set_x(Binding::new().with("alpha", Value::Q(d.rat())), plan)
}

fn draw_gs518(d: &mut Draw, plan: &Plan) -> Binding {
    let al = if plan.terminating {
        let n = d.int(1, 4);
        qi(if d.int(0, 1) == 0 { n } else { -n })
    } else {
        d.rat()
    };
    set_x(Binding::new().with("alpha", Value::Q(al)), plan)
}

fn draw_maier32(d: &mut Draw, plan: &Plan) -> Binding {
    let r = d.int(0, 3);
    draw_cubic(d, plan).with("r", Value::Int(r))
}

fn draw_maier31(d: &mut Draw, plan: &Plan) -> Binding {
    let al = if plan.terminating { qi(-2 * d.int(1, 4)) } else { d.rat() };
    let b = Binding::new()
        .with("alpha", Value::Q(al))
        .with("beta", Value::Q(d.rat()))
        .with("delta", Value::Q(d.rat()))
        .with("r", Value::Int(d.int(0, 2)));
    set_x(b, plan)
}

fn draw_euler1(d: &mut Draw, plan: &Plan) -> Binding {
    let a = if plan.terminating { qi(-d.int(1, 4)) } else { d.rat() };
    let b = Binding::new().with("a", Value::Q(a)).with("b", Value::Q(d.rat())).with("c", Value::Q(d.rat()));
    set_x(b, plan)
}

fn draw_euler2(d: &mut Draw, plan: &Plan) -> Binding {
    let c = d.rat();
    let (a, b) = if plan.terminating {
        (qi(-d.int(1, 4)), c.clone() + qi(d.int(0, 4)))
    } else {
        (d.rat(), d.rat())
    };
    set_x(Binding::new().with("a", Value::Q(a)).with("b", Value::Q(b)).with("c", Value::Q(c)), plan)
}

fn draw_karlsson(d: &mut Draw, plan: &Plan) -> Binding {
    let a = if plan.terminating { qi(-d.int(1, 4)) } else { d.rat() };
    let len = d.int(1, 2) as usize;
    let (f, m) = ipd(d, len, 2);
    let b = Binding::new()
        .with("a", Value::Q(a))
        .with("b", Value::Q(d.rat()))
        .with("f", Value::QVec(f))
        .with("m", Value::IntVec(m));
    set_x(b, plan)
}

fn draw_kar121(d: &mut Draw, plan: &Plan) -> Binding {
    let kk = d.int(2, 3);
    draw_karlsson(d, plan).with("k", Value::Int(kk))
}

fn draw_deqvect1(d: &mut Draw, plan: &Plan) -> Binding {
    let (g, c) = (d.rat(), d.rat());
    draw_karlsson(d, plan).with("g", Value::Q(g)).with("c", Value::Q(c))
}

const CUBIC_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Ints(-4, -1)), ("beta", Domain::Rational), ("x", Domain::Grid)];
const GS513_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Rational), ("beta", Domain::Rational), ("x", Domain::Grid)];
const ALPHA_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Rational), ("x", Domain::Grid)];
const MAIER32_PARAMS: &[(&str, Domain)] =
    &[("alpha", Domain::Ints(-4, -1)), ("beta", Domain::Rational), ("r", Domain::Ints(0, 3)), ("x", Domain::Grid)];
const MAIER31_PARAMS: &[(&str, Domain)] = &[
    ("alpha", Domain::Rational),
    ("beta", Domain::Rational),
    ("delta", Domain::Rational),
    ("r", Domain::Ints(0, 2)),
    ("x", Domain::Grid),
];
const EULER_PARAMS: &[(&str, Domain)] =
    &[("a", Domain::Rational), ("b", Domain::Rational), ("c", Domain::Rational), ("x", Domain::Grid)];
const KAR112_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("b", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("x", Domain::Grid),
];
const KAR121_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("b", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("k", Domain::Ints(2, 3)),
    ("x", Domain::Grid),
];
const DEQ_PARAMS: &[(&str, Domain)] = &[
    ("a", Domain::Rational),
    ("g", Domain::Rational),
    ("b", Domain::Rational),
    ("c", Domain::Rational),
    ("f", Domain::RationalVec),
    ("m", Domain::IntVec(1, 2)),
    ("x", Domain::Grid),
];

fn grid(terminating: &'static [(i64, i64)], nonterminating: &'static [(i64, i64)]) -> Grid {
    Grid { terminating, nonterminating }
}

fn not_integer(b: &Binding, name: &str, scale: i64) -> bool {
    !(b.q(name) * qi(scale)).is_integer()
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Pointwise as P;
    use Support::{Both, NonTerminating};
    vec![
        IdentityCase::new("PX-Bailey", P, "Bailey's cubic transformation", CUBIC_PARAMS, builders!(bailey), draw_cubic)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-GS513", P, "Gessel-Stanton cubic transformation (5.13)", GS513_PARAMS, builders!(gs513), draw_gs513)
            .float_only()
            .support(NonTerminating)
            .grid(grid(&[(1, 20), (1, 12)], &[(1, 20), (1, 12)]))
            .constraint("alpha not an integer", |b| not_integer(b, "alpha", 1)),
        IdentityCase::new("PX-AAR185", P, "cubic transformation from Andrews-Askey-Roy, Exercise 3.18(5)", CUBIC_PARAMS, builders!(aar185), draw_cubic)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-GS520", P, "Gessel-Stanton cubic transformation (5.20)", ALPHA_PARAMS, builders!(gs520), draw_gs520)
            .float_only()
            .support(NonTerminating)
            .grid(grid(NT, NT))
            .constraint("6 alpha not an integer", |b| not_integer(b, "alpha", 6)),
        IdentityCase::new("PX-GS518", P, "Gessel-Stanton cubic transformation (5.18)", ALPHA_PARAMS, builders!(gs518), draw_gs518)
            .support(Both)
            .grid(grid(FULL, SEVENTH)),
        IdentityCase::new("PX-Maier32", P, "Maier's generalisation of Bailey's cubic transformation", MAIER32_PARAMS, builders!(maier32), draw_maier32)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-Maier31", P, "Maier's generalisation of Whipple's quadratic transformation", MAIER31_PARAMS, builders!(maier31), draw_maier31)
            .support(Both)
            .grid(grid(FULL, SEVENTH)),
        IdentityCase::new("PX-Euler1", P, "Euler-Pfaff transformation", EULER_PARAMS, builders!(euler1), draw_euler1)
            .support(Both)
            .grid(grid(FULL, NT)),
        IdentityCase::new("PX-Euler2", P, "Euler's transformation", EULER_PARAMS, builders!(euler2), draw_euler2)
            .support(Both)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-Kar112", P, "Karlsson's reduction with a b+1 over b pair", KAR112_PARAMS, builders!(kar112), draw_karlsson)
            .float_only()
            .support(Both)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-Kar121", P, "Karlsson's reduction with a b+k over b pair", KAR121_PARAMS, builders!(kar121), draw_kar121)
            .float_only()
            .support(Both)
            .grid(grid(FULL, FULL)),
        IdentityCase::new("PX-Deqvect1", P, "degenerate Miller-Paris transformation", DEQ_PARAMS, builders!(deqvect1), draw_deqvect1)
            .float_only()
            .support(Both)
            .grid(grid(FULL, FULL)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::binding::q;
    use crate::mparith::Rational;

    #[test]
    fn euler_pfaff_small_case() {
        // F(-1, b; c | x) = 1 - b x / c
        let ctx = PrecisionContext::default();
        let b = Binding::new()
            .with("a", Value::Q(qi(-1)))
            .with("b", Value::Q(q(2, 3)))
            .with("c", Value::Q(q(5, 4)))
            .with("x", Value::Q(q(1, 2)));
        let (l, r) = euler1::<Rational>(&b, &ctx).unwrap();
        let lv = l.eval(&ctx).unwrap();
        assert_eq!(lv, qi(1) - q(2, 3) * q(1, 2) / q(5, 4));
        assert_eq!(lv, r.eval(&ctx).unwrap());
    }
}
