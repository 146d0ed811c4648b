//! Builders and samplers for every catalog entry.

mod cubic;
mod interchange;
mod lemmas;
mod pointwise;
mod shifted;
mod sums;

use alloc::vec::Vec;

use num_traits::Signed;

use super::binding::{q, qi};
use super::{Binding, Draw, IdentityCase, Plan};
use crate::mparith::{delta_split, pochhammer, pochhammer_vec, MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::Polynomial;

pub use cubic::LAMBDA_SIGN;
pub use lemmas::gessel_stanton_sum;
pub use shifted::finite_remark_sum;

pub(crate) use cubic::{gs_ab, ipd_ab, signed_builder};

macro_rules! builders {
    ($f:ident $(, $c:expr)*) => {
        (
            $f::<crate::mparith::Rational $(, $c)*> as crate::catalog::Builder<crate::mparith::Rational>,
            $f::<crate::mparith::MpComplex $(, $c)*> as crate::catalog::Builder<crate::mparith::MpComplex>,
        )
    };
}
pub(crate) use builders;

pub(crate) fn all() -> Vec<IdentityCase> {
    let mut v = lemmas::cases();
    v.extend(cubic::cases());
    v.extend(shifted::cases());
    v.extend(interchange::cases());
    v.extend(sums::cases());
    v.extend(pointwise::cases());
    v
}

pub(crate) fn k<S: Scalar>(n: i64, d: i64, ctx: &PrecisionContext) -> S {
    S::from_rational(&q(n, d), ctx)
}

pub(crate) fn ki<S: Scalar>(n: i64, ctx: &PrecisionContext) -> S {
    S::from_i64(n, ctx)
}

pub(crate) fn shift<S: Scalar>(v: &[S], by: &S) -> Vec<S> {
    v.iter().map(|x| x.clone() + by.clone()).collect()
}

/// `h + p` entrywise.
pub(crate) fn plus<S: Scalar>(h: &[S], p: &[u64], ctx: &PrecisionContext) -> Vec<S> {
    h.iter().zip(p).map(|(x, &n)| x.clone() + ki(n as i64, ctx)).collect()
}

pub(crate) fn total(p: &[u64]) -> u64 {
    p.iter().sum()
}

/// `prod (v_i)_n`.
pub(crate) fn poch_all<S: Scalar>(v: &[S], n: u64, ctx: &PrecisionContext) -> S {
    v.iter().fold(S::one(ctx), |acc, x| acc * pochhammer(x, n))
}

pub(crate) fn poch_v<S: Scalar>(h: &[S], p: &[u64], ctx: &PrecisionContext) -> MathResult<S> {
    pochhammer_vec(h, p, &S::one(ctx))
}

/// `prod_j (Δ(z,m)_j)_n`, i.e. `(z)_{mn} / m^{mn}`.
pub(crate) fn dpoch<S: Scalar>(z: &S, m: u32, n: u64, ctx: &PrecisionContext) -> S {
    poch_all(&delta_split(z, m), n, ctx)
}

pub(crate) fn delta<S: Scalar>(z: &S, m: u32) -> Vec<S> {
    delta_split(z, m)
}

pub(crate) fn sign<S: Scalar>(k: i64, ctx: &PrecisionContext) -> S {
    if k.rem_euclid(2) == 0 {
        S::one(ctx)
    } else {
        -S::one(ctx)
    }
}

pub(crate) fn cat<S: Clone>(parts: &[&[S]]) -> Vec<S> {
    parts.concat()
}

/// `P(-t)`.
pub(crate) fn reflect<S: Scalar>(p: &Polynomial<S>, ctx: &PrecisionContext) -> Polynomial<S> {
    let c = p.coeffs().iter().enumerate().map(|(i, c)| sign::<S>(i as i64, ctx) * c.clone()).collect();
    Polynomial::new(c)
}

/// Non-negative integer shift bringing `excess` into `[margin, margin + 1)`
/// for a margin drawn in `24..=30`.
pub(crate) fn boost(d: &mut Draw, excess: &Rational) -> Rational {
    let margin = qi(d.int(24, 30));
    let gap = (margin - excess).ceil();
    if gap.is_positive() {
        gap
    } else {
        qi(0)
    }
}

/// Length-`len` parameter vector plus matching positive integer shifts.
pub(crate) fn ipd(d: &mut Draw, len: usize, hi: u64) -> (Vec<Rational>, Vec<u64>) {
    (d.rats(len), d.ints(len, 1, hi))
}

pub(crate) fn set_x(b: Binding, plan: &Plan) -> Binding {
    match &plan.x {
        Some(x) => b.with("x", super::Value::Q(x.clone())),
        None => b,
    }
}
