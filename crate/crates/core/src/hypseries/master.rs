use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{eval_phf, SeriesSpec};
use crate::mparith::{delta_split, pochhammer, MathError, MathResult, PrecisionContext, Scalar};
use crate::polyfactory::Polynomial;

/// Data of a transformation
/// `F(alpha, Δ(a,w); beta, Δ(b,w) | M) = sum_k (delta)_k (a)_{uk} D^k / ((gamma)_k (b)_{uk} k!) F(-lambda+vk, a+uk; b+uk | 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformSpec<S> {
    pub alpha: Vec<S>,
    pub beta: Vec<S>,
    pub delta: Vec<S>,
    pub gamma: Vec<S>,
    pub lambda: S,
    pub w: u32,
    pub u: u32,
    pub v: i32,
    pub m: S,
    pub d: S,
    /// Characteristic attached to the left-hand series, if any.
    pub characteristic: Option<Polynomial<S>>,
}

impl<S: Scalar> TransformSpec<S> {
    /// The left-hand series for given `a`, `b`.
    pub fn lhs_series(&self, a: &[S], b: &[S]) -> SeriesSpec<S> {
        assert!(self.w >= 1 && self.u >= 1, "w and u must be positive");
        let mut upper = self.alpha.clone();
        for ai in a {
            upper.extend(delta_split(ai, self.w));
        }
        let mut lower = self.beta.clone();
        for bi in b {
            lower.extend(delta_split(bi, self.w));
        }
        SeriesSpec { upper, lower, characteristic: self.characteristic.clone(), argument: self.m.clone() }
    }

    /// Last index of the outer sum when it terminates.
    pub fn outer_termination(&self, a: &[S]) -> Option<u64> {
        let from_delta = self.delta.iter().filter_map(|x| x.nonpositive_integer());
        let from_a = a.iter().filter_map(|x| x.nonpositive_integer()).map(|m| m / self.u as u64);
        from_delta.chain(from_a).min()
    }
}

pub fn master_lhs<S: Scalar>(t: &TransformSpec<S>, a: &[S], b: &[S], ctx: &PrecisionContext) -> MathResult<S> {
    Ok(eval_phf(&t.lhs_series(a, b), ctx)?.value)
}

const OUTER_CAP: u64 = 20_000;

/// Double-sum side, every inner series summed independently at unit argument.
pub fn master_rhs<S: Scalar>(t: &TransformSpec<S>, a: &[S], b: &[S], ctx: &PrecisionContext) -> MathResult<S> {
    let stop = t.outer_termination(a);
    if stop.is_none() {
        if t.v != 0 {
            return Err(MathError::DivergentSeries(format!("outer sum with v = {} must terminate", t.v)));
        }
        if S::EXACT {
            return Err(MathError::NotExact(String::from("non-terminating outer sum")));
        }
    }
    let one = S::one(ctx);
    let eps = -(ctx.working_digits() as f64) * core::f64::consts::LOG2_10;
    let mut sum = S::zero(ctx);
    let mut small = 0;
    let mut k: u64 = 0;
    loop {
        if stop.is_some_and(|n| k > n) {
            break;
        }
        if k > OUTER_CAP {
            return Err(MathError::NoConvergence(OUTER_CAP as usize));
        }
        let uk = t.u as u64 * k;
        let ks = S::from_i64(k as i64, ctx);
        let uks = S::from_i64(uk as i64, ctx);
        let mut num = t.d.powi(k as i64)?;
        for x in &t.delta {
            num = num * pochhammer(x, k);
        }
        for x in a {
            num = num * pochhammer(x, uk);
        }
        let mut den = pochhammer(&one, k);
        for x in &t.gamma {
            den = den * pochhammer(x, k);
        }
        for x in b {
            den = den * pochhammer(x, uk);
        }
        let coef = num.checked_div(den)?;
        if !coef.is_zero() {
            let mut upper = Vec::with_capacity(a.len() + 1);
            upper.push(-t.lambda.clone() + S::from_i64(t.v as i64, ctx) * ks.clone());
            upper.extend(a.iter().map(|x| x.clone() + uks.clone()));
            let lower: Vec<S> = b.iter().map(|x| x.clone() + uks.clone()).collect();
            let inner = eval_phf(&SeriesSpec::new(upper, lower, one.clone()), ctx)?.value;
            let term = coef * inner;
            let lt = term.log2_abs();
            sum = sum + term;
            if stop.is_none() {
                small = if k >= 10 && lt < eps + sum.log2_abs() { small + 1 } else { 0 };
                if small >= 2 {
                    break;
                }
            }
        }
        k += 1;
    }
    Ok(sum)
}
