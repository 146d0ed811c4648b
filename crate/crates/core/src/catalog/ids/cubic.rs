//! Cubic transformations lifted to unit-argument identities, with and
//! without integral parameter differences.

use alloc::vec;
use alloc::vec::Vec;

use super::{builders, cat, delta, ipd, k, ki, plus, poch_v, total};
use crate::catalog::{Binding, Domain, Draw, Expr, IdentityCase, Kind, Plan, Value};
use crate::mparith::{pochhammer, MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::{q3r_poly, y_poly_core};

/// Sign `s` in `lambda = s * alpha` (`s * 2 alpha` for the quadratic-cubic
/// case), as validated by [`crate::catalog::lambda_sign_probe`].
pub const LAMBDA_SIGN: i64 = -1;

pub(crate) type Signed<S> = fn(&Binding, i64, &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)>;

pub(crate) fn signed_builder(id: &str) -> Option<Signed<Rational>> {
    match id {
        "T2" => Some(t2::<Rational>),
        "T4" => Some(t4::<Rational>),
        "T5" => Some(t5::<Rational>),
        "T6" => Some(t6::<Rational>),
        _ => None,
    }
}

/// `(alpha+2)/3 * Gamma(3n+4) Gamma(2n+alpha+2) / (Gamma(2n+3) Gamma(3n+alpha+3))`.
fn pre<S: Scalar>(alpha: &S, n: i64, ctx: &PrecisionContext) -> Expr<S> {
    let g = Expr::gamma(
        vec![ki::<S>(3 * n + 4, ctx), ki::<S>(2 * n + 2, ctx) + alpha.clone()],
        vec![ki::<S>(2 * n + 3, ctx), ki::<S>(3 * n + 3, ctx) + alpha.clone()],
    );
    Expr::Prod(vec![Expr::Num((alpha.clone() + ki(2, ctx)) / ki(3, ctx)), g])
}

/// `-1/2-n, -n` over `-1/3-n, -2/3-n` on the right of the Gessel-Stanton forms.
fn n_pairs<S: Scalar>(n: i64, ctx: &PrecisionContext) -> (Vec<S>, Vec<S>) {
    let ns = ki::<S>(n, ctx);
    (
        vec![k::<S>(-1, 2, ctx) - ns.clone(), -ns.clone()],
        vec![k::<S>(-1, 3, ctx) - ns.clone(), k::<S>(-2, 3, ctx) - ns],
    )
}

/// `(alpha-1)/3, -n` over `(alpha+5)/3, 2n+alpha+2`.
pub(crate) fn gs_ab<S: Scalar>(alpha: &S, n: i64, ctx: &PrecisionContext) -> (Vec<S>, Vec<S>) {
    let three = ki::<S>(3, ctx);
    (
        vec![(alpha.clone() - ki(1, ctx)) / three.clone(), -ki::<S>(n, ctx)],
        vec![(alpha.clone() + ki(5, ctx)) / three, ki::<S>(2 * n + 2, ctx) + alpha.clone()],
    )
}

fn t1<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let n = b.int("n");
    let one = S::one(ctx);
    let two = ki::<S>(2, ctx);
    let low = vec![be.clone(), al.clone() - be.clone() + k(3, 2, ctx)];
    let (a, bb) = gs_ab(&al, n, ctx);
    let lhs = Expr::series(
        cat(&[&[al.clone(), two.clone() * be.clone() - al.clone() - one.clone(), al.clone() + two.clone() - two * be], &a]),
        cat(&[&low, &bb]),
        k(1, 4, ctx),
    );
    let (nu, nl) = n_pairs::<S>(n, ctx);
    let rhs = Expr::series(cat(&[&delta(&(al.clone() - one.clone()), 3), &nu]), cat(&[&low, &nl]), one);
    Ok((lhs, Expr::Prod(vec![pre(&al, n, ctx), rhs])))
}

fn t3<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let n = b.int("n");
    let one = S::one(ctx);
    let (a, bb) = gs_ab(&al, n, ctx);
    let lhs = Expr::series(
        cat(&[&[one.clone(), al.clone() - ki::<S>(2, ctx) * be.clone()], &a]),
        cat(&[&[be.clone() + one.clone()], &bb]),
        one.clone(),
    );
    let (nu, nl) = n_pairs::<S>(n, ctx);
    let rhs = Expr::series(
        cat(&[&delta(&(al.clone() - one.clone()), 3), core::slice::from_ref(&be), &nu]),
        cat(&[&delta(&al, 2), &[be + one.clone()], &nl]),
        one,
    );
    Ok((lhs, Expr::Prod(vec![pre(&al, n, ctx), rhs])))
}

fn t7m<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let (n, r) = (b.int("n"), b.int("r"));
    let half = k::<S>(1, 2, ctx);
    let rs = ki::<S>(r, ctx);
    let two = ki::<S>(2, ctx);
    let low = vec![
        (al.clone() + be.clone() + rs.clone()) / two.clone() + k(3, 4, ctx),
        (al.clone() - be.clone() + rs.clone()) / two + k(3, 4, ctx),
    ];
    let (a, bb) = gs_ab(&al, n, ctx);
    let lhs = Expr::series_with(
        cat(&[&[al.clone(), half.clone() - rs.clone() - be.clone(), half - rs + be.clone()], &a]),
        cat(&[&low, &bb]),
        k(1, 4, ctx),
        q3r_poly(r as u64, &al, &be, ctx)?,
    );
    let (nu, nl) = n_pairs::<S>(n, ctx);
    let one = S::one(ctx);
    let rhs = Expr::series(cat(&[&delta(&(al.clone() - one.clone()), 3), &nu]), cat(&[&low, &nl]), one);
    Ok((lhs, Expr::Prod(vec![pre(&al, n, ctx), rhs])))
}

struct Ipd<S> {
    d: S,
    e: S,
    h: Vec<S>,
    p: Vec<u64>,
    hp: Vec<S>,
}

fn ipd_of<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> Ipd<S> {
    let h = b.sv("h", ctx);
    let p = b.ints("p");
    let hp = plus(&h, &p, ctx);
    Ipd { d: b.s("d", ctx), e: b.s("e", ctx), h, p, hp }
}

/// `Gamma(e-s-d) Gamma(e) / ((h)_p Gamma(e-s) Gamma(e-d) (1+d+s-e)_P)`,
/// split into its Gamma quotient and a rational factor.
fn pf<S: Scalar>(x: &Ipd<S>, s: &S, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let one = S::one(ctx);
    let (d, e) = (&x.d, &x.e);
    let g = Expr::gamma(vec![e.clone() - s.clone() - d.clone(), e.clone()], vec![e.clone() - s.clone(), e.clone() - d.clone()]);
    let den = poch_v(&x.h, &x.p, ctx)? * pochhammer(&(one.clone() + d.clone() + s.clone() - e.clone()), total(&x.p));
    Ok((g, Expr::Num(one.checked_div(den)?)))
}

/// `Delta(1+d+s-e+P, m)`.
fn top_shift<S: Scalar>(x: &Ipd<S>, s: &S, m: u32, ctx: &PrecisionContext) -> Vec<S> {
    let z = S::one(ctx) + x.d.clone() + s.clone() - x.e.clone() + ki(total(&x.p) as i64, ctx);
    delta(&z, m)
}

fn t2<S: Scalar>(b: &Binding, sgn: i64, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let x = ipd_of::<S>(b, ctx);
    let one = S::one(ctx);
    let two = ki::<S>(2, ctx);
    let lam = ki::<S>(sgn, ctx) * al.clone();
    let low = vec![be.clone(), al.clone() - be.clone() + k(3, 2, ctx)];
    let lhs = Expr::series(
        cat(&[
            &[al.clone(), two.clone() * be.clone() - al.clone() - one.clone(), al.clone() + two.clone() - two * be, x.d.clone()],
            &x.hp,
        ]),
        cat(&[&low, core::slice::from_ref(&x.e), &x.h]),
        k(1, 4, ctx),
    );
    let y = y_poly_core(1, 3, &x.d, &x.e, &lam, &x.h, &x.p, ctx)?;
    let (g, r) = pf(&x, &al, ctx)?;
    let series = Expr::series_with(
        cat(&[&delta(&al, 3), &delta(&(one.clone() + al.clone() - x.e.clone()), 2), core::slice::from_ref(&x.d)]),
        cat(&[&low, &top_shift(&x, &al, 3, ctx)]),
        one,
        y,
    );
    Ok((lhs, Expr::Prod(vec![g, r, series])))
}

fn t4<S: Scalar>(b: &Binding, sgn: i64, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let x = ipd_of::<S>(b, ctx);
    let one = S::one(ctx);
    let lam = ki::<S>(sgn, ctx) * al.clone();
    let lhs = Expr::series(
        cat(&[&[one.clone(), al.clone() - ki::<S>(2, ctx) * be.clone(), x.d.clone()], &x.hp]),
        cat(&[&[be.clone() + one.clone(), x.e.clone()], &x.h]),
        one.clone(),
    );
    let y = y_poly_core(1, 3, &x.d, &x.e, &lam, &x.h, &x.p, ctx)?;
    let (g, r) = pf(&x, &al, ctx)?;
    let series = Expr::series_with(
        cat(&[&delta(&al, 3), core::slice::from_ref(&be), &delta(&(one.clone() + al.clone() - x.e.clone()), 2), core::slice::from_ref(&x.d)]),
        cat(&[&delta(&al, 2), &[be + one.clone()], &top_shift(&x, &al, 3, ctx)]),
        one,
        y,
    );
    Ok((lhs, Expr::Prod(vec![g, r, series])))
}

fn t5<S: Scalar>(b: &Binding, sgn: i64, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, be): (S, S) = (b.s("alpha", ctx), b.s("beta", ctx));
    let x = ipd_of::<S>(b, ctx);
    let one = S::one(ctx);
    let two = ki::<S>(2, ctx);
    let lam = ki::<S>(sgn, ctx) * al.clone();
    let lhs = Expr::series(
        cat(&[&[al.clone(), be.clone() - k(1, 2, ctx), al.clone() - be.clone() + one.clone(), x.d.clone()], &x.hp]),
        cat(&[
            &[two.clone() * be.clone() - one.clone(), two.clone() * al.clone() - two * be.clone() + ki(2, ctx), x.e.clone()],
            &x.h,
        ]),
        ki(4, ctx),
    );
    let y = y_poly_core(2, 3, &x.d, &x.e, &lam, &x.h, &x.p, ctx)?;
    let (g, r) = pf(&x, &al, ctx)?;
    let series = Expr::series_with(
        cat(&[&delta(&al, 3), &delta(&x.d, 2), &[one.clone() + al.clone() - x.e.clone()]]),
        cat(&[&[be.clone(), al.clone() - be + k(3, 2, ctx)], &top_shift(&x, &al, 3, ctx)]),
        one,
        y,
    );
    Ok((lhs, Expr::Prod(vec![g, r, series])))
}

fn t6<S: Scalar>(b: &Binding, sgn: i64, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let al: S = b.s("alpha", ctx);
    let x = ipd_of::<S>(b, ctx);
    let one = S::one(ctx);
    let half = k::<S>(1, 2, ctx);
    let al2 = ki::<S>(2, ctx) * al.clone();
    let al3 = ki::<S>(3, ctx) * al.clone();
    let lam = ki::<S>(sgn, ctx) * al2.clone();
    let lhs = Expr::series(
        cat(&[&[al3.clone(), al3.clone() + half.clone(), x.d.clone()], &x.hp]),
        cat(&[&[al3.clone() + al3 + one.clone(), x.e.clone()], &x.h]),
        k(4, 3, ctx),
    );
    let y = y_poly_core(3, 2, &x.d, &x.e, &lam, &x.h, &x.p, ctx)?;
    let (g, r) = pf(&x, &al2, ctx)?;
    let series = Expr::series_with(
        cat(&[&[al.clone(), al + half], &delta(&x.d, 3)]),
        cat(&[&[al2.clone() + one.clone(), x.e.clone() - al2.clone()], &top_shift(&x, &al2, 2, ctx)]),
        one,
        y,
    );
    Ok((lhs, Expr::Prod(vec![g, r, series])))
}

fn t7<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let al: S = b.s("alpha", ctx);
    let x = ipd_of::<S>(b, ctx);
    let one = S::one(ctx);
    let half = k::<S>(1, 2, ctx);
    let al3 = ki::<S>(3, ctx) * al.clone();
    let zero = S::zero(ctx);
    let lhs = Expr::series(
        cat(&[&[al3.clone(), -al3, x.d.clone()], &x.hp]),
        cat(&[&[half.clone(), x.e.clone()], &x.h]),
        k(3, 4, ctx),
    );
    let y = y_poly_core(1, -2, &x.d, &x.e, &zero, &x.h, &x.p, ctx)?;
    let den = poch_v(&x.h, &x.p, ctx)? * pochhammer(&(one.clone() + x.d.clone() - x.e.clone()), total(&x.p));
    let ed = x.e.clone() - x.d.clone() - ki(total(&x.p) as i64, ctx);
    let series = Expr::series_with(
        cat(&[&[al.clone(), -al, x.d.clone()], &delta(&ed, 2)]),
        cat(&[&[half], &delta(&x.e, 3)]),
        one.clone(),
        y,
    );
    Ok((lhs, Expr::Prod(vec![Expr::Num(one.checked_div(den)?), series])))
}

fn pinned_t2<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    t2(b, LAMBDA_SIGN, ctx)
}

fn pinned_t4<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    t4(b, LAMBDA_SIGN, ctx)
}

fn pinned_t5<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    t5(b, LAMBDA_SIGN, ctx)
}

fn pinned_t6<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    t6(b, LAMBDA_SIGN, ctx)
}

fn c61<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, d, e, h): (S, S, S, S) = (b.s("alpha", ctx), b.s("d", ctx), b.s("e", ctx), b.s("h", ctx));
    let one = S::one(ctx);
    let two = ki::<S>(2, ctx);
    let half = k::<S>(1, 2, ctx);
    let al2 = two.clone() * al.clone();
    let edm = e.clone() - d.clone() - one.clone();
    let top = al2.clone() * (h.clone() - d.clone()) - edm.clone() * h.clone();
    let xi = top.clone().checked_div(two * (h.clone() - d.clone()) - ki::<S>(3, ctx) * edm)?;
    let lhs = Expr::series(
        vec![ki::<S>(3, ctx) * al.clone(), ki::<S>(3, ctx) * al.clone() + half.clone(), d.clone(), h.clone() + one.clone()],
        vec![ki::<S>(6, ctx) * al.clone() + one.clone(), e.clone(), h.clone()],
        k(4, 3, ctx),
    );
    let g = Expr::gamma(vec![e.clone() - al2.clone() - d.clone(), e.clone()], vec![e.clone() - d.clone(), e.clone() - al2.clone()]);
    let factor = top.checked_div(h * (one.clone() + d.clone() + al2.clone() - e.clone()))?;
    let series = Expr::series(
        cat(&[&[al.clone(), al + half], &delta(&d, 3), &[xi.clone() + one.clone()]]),
        cat(&[&[al2.clone() + one.clone(), e.clone() - al2.clone()], &delta(&(ki::<S>(2, ctx) + d + al2 - e), 2), &[xi]]),
        one,
    );
    Ok((lhs, Expr::Prod(vec![g, Expr::Num(factor), series])))
}

fn c71<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, d, e, h): (S, S, S, S) = (b.s("alpha", ctx), b.s("d", ctx), b.s("e", ctx), b.s("h", ctx));
    let one = S::one(ctx);
    let half = k::<S>(1, 2, ctx);
    let edm = e.clone() - d.clone() - one.clone();
    let xi = (edm.clone() * h.clone()).checked_div(ki::<S>(2, ctx) * h.clone() + e.clone() - ki::<S>(3, ctx) * d.clone() - one.clone())?;
    let al3 = ki::<S>(3, ctx) * al.clone();
    let lhs = Expr::series(
        vec![al3.clone(), -al3, d.clone(), h.clone() + one.clone()],
        vec![half.clone(), e.clone(), h],
        k(3, 4, ctx),
    );
    let rhs = Expr::series(
        cat(&[&[al.clone(), -al, d], &delta(&edm, 2), &[xi.clone() + one.clone()]]),
        cat(&[&[half], &delta(&e, 3), &[xi]]),
        one,
    );
    Ok((lhs, rhs))
}

fn c72<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (al, d, h): (S, S, S) = (b.s("alpha", ctx), b.s("d", ctx), b.s("h", ctx));
    let one = S::one(ctx);
    let half = k::<S>(1, 2, ctx);
    let al3 = ki::<S>(3, ctx) * al.clone();
    let lhs = Expr::series(
        vec![al3.clone(), -al3, d.clone(), h.clone() + one.clone()],
        vec![half, d.clone() + one.clone(), h.clone()],
        k(3, 4, ctx),
    );
    let series = Expr::series(vec![al.clone(), -al, d.clone(), one.clone()], delta(&(d.clone() + one.clone()), 3), one);
    let rhs = Expr::Sum(vec![
        Expr::Num(d.clone().checked_div(h.clone())?),
        Expr::Prod(vec![Expr::Num((h.clone() - d).checked_div(h)?), series]),
    ]);
    Ok((lhs, rhs))
}

fn draw_gs(d: &mut Draw, _: &Plan) -> Binding {
    Binding::new().with("alpha", Value::Q(d.rat())).with("beta", Value::Q(d.rat())).with("n", Value::Int(d.int(0, 4)))
}

fn draw_t7m(d: &mut Draw, plan: &Plan) -> Binding {
    let r = d.int(0, 4);
    draw_gs(d, plan).with("r", Value::Int(r))
}

fn draw_ipd_nobeta(d: &mut Draw, _: &Plan) -> Binding {
    let len = d.int(1, 2) as usize;
    let (h, p) = ipd(d, len, 2);
    Binding::new()
        .with("alpha", Value::Q(d.rat()))
        .with("d", Value::Int(-d.int(1, 4)))
        .with("e", Value::Q(d.rat()))
        .with("h", Value::QVec(h))
        .with("p", Value::IntVec(p))
}

fn draw_ipd(d: &mut Draw, plan: &Plan) -> Binding {
    let beta = d.rat();
    draw_ipd_nobeta(d, plan).with("beta", Value::Q(beta))
}

fn draw_p1(d: &mut Draw, _: &Plan) -> Binding {
    Binding::new()
        .with("alpha", Value::Q(d.rat()))
        .with("d", Value::Int(-d.int(1, 4)))
        .with("e", Value::Q(d.rat()))
        .with("h", Value::Q(d.rat()))
}

fn draw_c72(d: &mut Draw, _: &Plan) -> Binding {
    Binding::new().with("alpha", Value::Int(d.int(0, 4))).with("d", Value::Q(d.rat())).with("h", Value::Q(d.rat()))
}

const GS_PARAMS: &[(&str, Domain)] = &[("alpha", Domain::Rational), ("beta", Domain::Rational), ("n", Domain::Ints(0, 4))];
const IPD_PARAMS: &[(&str, Domain)] = &[
    ("alpha", Domain::Rational),
    ("beta", Domain::Rational),
    ("d", Domain::Ints(-4, -1)),
    ("e", Domain::Rational),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];
const IPD_NOBETA: &[(&str, Domain)] = &[
    ("alpha", Domain::Rational),
    ("d", Domain::Ints(-4, -1)),
    ("e", Domain::Rational),
    ("h", Domain::RationalVec),
    ("p", Domain::IntVec(1, 2)),
];
const P1_PARAMS: &[(&str, Domain)] =
    &[("alpha", Domain::Rational), ("d", Domain::Ints(-4, -1)), ("e", Domain::Rational), ("h", Domain::Rational)];

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Transformation as T;
    let n_range = |b: &Binding| (0..=4).contains(&b.int("n"));
    vec![
        IdentityCase::new("T1", T, "Bailey cubic transformation at unit argument", GS_PARAMS, builders!(t1), draw_gs)
            .constraint("0 <= n <= 4", n_range),
        IdentityCase::new("T2", T, "Bailey cubic transformation with IPD pairs", IPD_PARAMS, builders!(pinned_t2), draw_ipd),
        IdentityCase::new("T3", T, "Gessel-Stanton cubic transformation at unit argument", GS_PARAMS, builders!(t3), draw_gs)
            .constraint("0 <= n <= 4", n_range),
        IdentityCase::new("T4", T, "Gessel-Stanton cubic transformation with IPD pairs", IPD_PARAMS, builders!(pinned_t4), draw_ipd),
        IdentityCase::new("T5", T, "quadratic-cubic transformation with IPD pairs, argument 4", IPD_PARAMS, builders!(pinned_t5), draw_ipd),
        IdentityCase::new("T6", T, "cubic-quadratic transformation with IPD pairs, argument 4/3", IPD_NOBETA, builders!(pinned_t6), draw_ipd_nobeta),
        IdentityCase::new("C6.1", T, "cubic-quadratic transformation, one IPD pair", P1_PARAMS, builders!(c61), draw_p1),
        IdentityCase::new("T7", T, "cubic transformation of 2F1(3a,-3a;1/2) with IPD pairs", IPD_NOBETA, builders!(t7), draw_ipd_nobeta),
        IdentityCase::new("C7.1", T, "cubic transformation of 2F1(3a,-3a;1/2), one IPD pair", P1_PARAMS, builders!(c71), draw_p1),
        IdentityCase::new(
            "C7.2",
            T,
            "limiting 4F3 reduction of the 2F1(3a,-3a;1/2) transformation",
            &[("alpha", Domain::Ints(0, 4)), ("d", Domain::Rational), ("h", Domain::Rational)],
            builders!(c72),
            draw_c72,
        )
        .constraint("alpha is a non-negative integer", |b| b.int("alpha") >= 0),
        IdentityCase::new(
            "T7M",
            T,
            "Maier cubic transformation with Q3 characteristic at unit argument",
            &[("alpha", Domain::Rational), ("beta", Domain::Rational), ("n", Domain::Ints(0, 4)), ("r", Domain::Ints(0, 4))],
            builders!(t7m),
            draw_t7m,
        )
        .constraint("0 <= n <= 4", n_range),
    ]
}

pub(crate) fn ipd_ab<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> (Vec<S>, Vec<S>) {
    let x = ipd_of::<S>(b, ctx);
    (cat(&[core::slice::from_ref(&x.d), &x.hp]), cat(&[core::slice::from_ref(&x.e), &x.h]))
}
