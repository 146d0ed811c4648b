//! Series with one upper parameter exceeding a lower one by a positive
//! integer, rewritten with a polynomial characteristic.

use alloc::vec;
use alloc::vec::Vec;

use super::{boost, builders, cat, ki, poch_all, shift};
use crate::catalog::binding::qi;
use crate::catalog::{Binding, Domain, Draw, Expr, IdentityCase, Kind, Plan, Support, Value};
use crate::mparith::{MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::{p2r_poly, p_big_m, q_big_m, r_big_m};

fn vecs<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> (Vec<S>, Vec<S>) {
    (b.sv("a", ctx), b.sv("b", ctx))
}

fn inv_bq<S: Scalar>(bs: &[S], qn: u64, ctx: &PrecisionContext) -> MathResult<Expr<S>> {
    Ok(Expr::Num(S::one(ctx).checked_div(poch_all(bs, qn, ctx))?))
}

fn t11<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let qn = b.int("q") as u64;
    let (g, be): (S, S) = (b.s("gamma", ctx), b.s("beta", ctx));
    let (a, bs) = vecs::<S>(b, ctx);
    let one = S::one(ctx);
    let qs = ki::<S>(qn as i64, ctx);
    let lhs = Expr::series(cat(&[&[g.clone() + qs.clone(), be.clone()], &a]), cat(&[core::slice::from_ref(&g), &bs]), one.clone());
    let pm = p_big_m(qn, &g, &be, &a, &bs, ctx)?;
    let rhs = Expr::series_with(cat(&[&[be + qs.clone()], &a]), shift(&bs, &qs), one, pm);
    Ok((lhs, Expr::Prod(vec![inv_bq(&bs, qn, ctx)?, rhs])))
}

fn t12<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let qn = b.int("q") as u64;
    let (g, al): (S, S) = (b.s("gamma", ctx), b.s("alpha", ctx));
    let (a, bs) = vecs::<S>(b, ctx);
    let one = S::one(ctx);
    let qs = ki::<S>(qn as i64, ctx);
    let lhs = Expr::series(cat(&[&[g.clone() + qs.clone(), al.clone()], &a]), cat(&[core::slice::from_ref(&g), &bs]), one.clone());
    let rm = r_big_m(qn, &al, &g, &a, &bs, ctx)?;
    let rhs = Expr::series_with(cat(&[&[al], &a]), shift(&bs, &qs), one, rm);
    Ok((lhs, Expr::Prod(vec![inv_bq(&bs, qn, ctx)?, rhs])))
}

fn t13<S: Scalar>(b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)> {
    let (qn, r) = (b.int("q") as u64, b.int("r") as u64);
    let (be, de): (S, S) = (b.s("beta", ctx), b.s("delta", ctx));
    let (a, bs) = vecs::<S>(b, ctx);
    let one = S::one(ctx);
    let qs = ki::<S>(qn as i64, ctx);
    let rq = ki::<S>(r as i64 - qn as i64, ctx);
    let al = be.clone() + de.clone() + rq.clone() - one.clone();
    let p2r = p2r_poly(r, &al, &be, &de, ctx)?;
    let lhs = Expr::series_with(
        cat(&[&[al.clone(), be.clone(), de.clone()], &a]),
        cat(&[&[de.clone() + rq.clone(), be.clone() + rq], &bs]),
        one.clone(),
        p2r,
    );
    let qm = q_big_m(qn, r, &be, &de, &a, &bs, ctx)?;
    let rhs = Expr::series_with(cat(&[&[al], &a]), shift(&bs, &qs), one, qm);
    Ok((lhs, Expr::Prod(vec![inv_bq(&bs, qn, ctx)?, rhs])))
}

fn sum_diff(b: &Binding) -> Rational {
    b.qs("b").iter().zip(b.qs("a")).map(|(x, y)| x - y).sum()
}

/// Draws `a` and `b` of common length; `a[0] = -N` for terminating plans,
/// otherwise `b[0]` is lifted until `sum(b - a) - offset` clears the
/// convergence margin.
fn draw_ab(dr: &mut Draw, plan: &Plan, b: Binding, offset: impl Fn(&Binding) -> Rational) -> Binding {
    let len = dr.int(1, 2) as usize;
    let mut a = dr.rats(len);
    let mut bs = dr.rats(len);
    if plan.terminating {
        a[0] = qi(-dr.int(1, 4));
        return b.with("a", Value::QVec(a)).with("b", Value::QVec(bs));
    }
    let b = b.with("a", Value::QVec(a)).with("b", Value::QVec(bs.clone()));
    let lift = boost(dr, &(sum_diff(&b) - offset(&b)));
    bs[0] += lift;
    b.with("b", Value::QVec(bs))
}

fn draw_t11(dr: &mut Draw, plan: &Plan) -> Binding {
    let b = Binding::new()
        .with("q", Value::Int(dr.int(1, 2)))
        .with("gamma", Value::Q(dr.rat()))
        .with("beta", Value::Q(dr.rat()));
    draw_ab(dr, plan, b, |b| b.q("beta") + b.q("q"))
}

fn draw_t12(dr: &mut Draw, _: &Plan) -> Binding {
    let m = dr.int(1, 4);
    let len = dr.int(1, 2) as usize;
    let mut a = dr.rats(len);
    a[0] = qi(-m);
    Binding::new()
        .with("q", Value::Int(dr.int(1, m.min(3))))
        .with("gamma", Value::Q(dr.rat()))
        .with("alpha", Value::Q(dr.rat()))
        .with("a", Value::QVec(a))
        .with("b", Value::QVec(dr.rats(len)))
}

fn t13_offset(b: &Binding) -> Rational {
    let q = b.q("q");
    b.q("beta") + b.q("delta") + b.q("r") - q.clone() - qi(1) + q * qi(2)
}

fn draw_t13(dr: &mut Draw, plan: &Plan) -> Binding {
    let b = Binding::new()
        .with("q", Value::Int(dr.int(1, 2)))
        .with("r", Value::Int(dr.int(0, 2)))
        .with("beta", Value::Q(dr.rat()))
        .with("delta", Value::Q(dr.rat()));
    draw_ab(dr, plan, b, t13_offset)
}

const T11_PARAMS: &[(&str, Domain)] = &[
    ("q", Domain::Ints(1, 2)),
    ("gamma", Domain::Rational),
    ("beta", Domain::Rational),
    ("a", Domain::RationalVec),
    ("b", Domain::RationalVec),
];

const T12_PARAMS: &[(&str, Domain)] = &[
    ("q", Domain::Ints(1, 3)),
    ("gamma", Domain::Rational),
    ("alpha", Domain::Rational),
    ("a", Domain::RationalVec),
    ("b", Domain::RationalVec),
];

const T13_PARAMS: &[(&str, Domain)] = &[
    ("q", Domain::Ints(1, 2)),
    ("r", Domain::Ints(0, 2)),
    ("beta", Domain::Rational),
    ("delta", Domain::Rational),
    ("a", Domain::RationalVec),
    ("b", Domain::RationalVec),
];

pub(super) fn cases() -> Vec<IdentityCase> {
    use Kind::Transformation as T;
    vec![
        IdentityCase::new("T11", T, "interchange of Euler's second transformation with a gamma+q over gamma pair", T11_PARAMS, builders!(t11), draw_t11)
            .support(Support::Both),
        IdentityCase::new("T12", T, "interchange of the Euler-Pfaff transformation with a gamma+q over gamma pair", T12_PARAMS, builders!(t12), draw_t12)
            .constraint("q <= m = -a_1", |b| qi(b.int("q")) <= -b.qs("a")[0].clone()),
        IdentityCase::new("T13", T, "interchange of Maier's quadratic transformation", T13_PARAMS, builders!(t13), draw_t13)
            .support(Support::Both)
            .constraint("sum(b - a) - alpha - 2q >= 1/2", |b| {
                sum_diff(b) - t13_offset(b) >= Rational::new(1.into(), 2.into())
            }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::binding::q;

    #[test]
    fn t11_p1_q1_matches_closed_form_prefactor() {
        // constant term of P_M over (b)_q gives 1 - (gamma-beta) a / (gamma b)
        let ctx = PrecisionContext::default();
        let b = Binding::new()
            .with("q", Value::Int(1))
            .with("gamma", Value::Q(q(5, 2)))
            .with("beta", Value::Q(q(1, 3)))
            .with("a", Value::QVec(vec![qi(-3)]))
            .with("b", Value::QVec(vec![q(7, 4)]));
        let (l, r) = t11::<Rational>(&b, &ctx).unwrap();
        assert_eq!(l.eval(&ctx).unwrap(), r.eval(&ctx).unwrap());
        let pm = p_big_m(1, &q(5, 2), &q(1, 3), &[qi(-3)], &[q(7, 4)], &ctx).unwrap();
        let c0 = pm.eval(&qi(0)) / q(7, 4);
        assert_eq!(c0, qi(1) - (q(5, 2) - q(1, 3)) * qi(-3) / (q(5, 2) * q(7, 4)));
    }
}
