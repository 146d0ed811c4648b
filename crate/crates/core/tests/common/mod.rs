#![allow(dead_code)]

use hypid_core::{MpComplex, PrecisionContext, Rational, Scalar};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn c(x: &Rational, ctx: &PrecisionContext) -> MpComplex {
    MpComplex::from_rational(x, ctx.bits())
}

/// `log10` of `|a-b| / max(|a|, |b|)`; `-inf` when equal.
pub fn rel_log10(a: &MpComplex, b: &MpComplex) -> f64 {
    let diff = (a.clone() - b.clone()).log2_abs();
    (diff - a.log2_abs().max(b.log2_abs())) * core::f64::consts::LOG10_2
}

pub fn within_target(a: &MpComplex, b: &MpComplex, ctx: &PrecisionContext) -> bool {
    rel_log10(a, b) <= -(ctx.target_digits as f64)
}

pub fn dist_to_pole(x: &Rational) -> Rational {
    use num_traits::Signed;
    if x > &q(0, 1) {
        return x.clone();
    }
    (x - x.round()).abs()
}

pub fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

pub fn rat<T: Scalar>(x: &Rational, ctx: &PrecisionContext) -> T {
    T::from_rational(x, ctx)
}
