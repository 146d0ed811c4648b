//! Extended generalized hypergeometric series
//! `sum_n (a)_n / ((b)_n n!) P(n) x^n` and the double-sum oracle for
//! transformations of the form handled by the master lemma.

mod master;

use alloc::format;
use alloc::vec::Vec;

use crate::mparith::{MathError, MathResult, PrecisionContext, Scalar};
use crate::polyfactory::Polynomial;

pub use master::{master_lhs, master_rhs, TransformSpec};

/// One series instance: parameters, optional characteristic, argument.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec<S> {
    pub upper: Vec<S>,
    pub lower: Vec<S>,
    pub characteristic: Option<Polynomial<S>>,
    pub argument: S,
}

impl<S: Scalar> SeriesSpec<S> {
    pub fn new(upper: Vec<S>, lower: Vec<S>, argument: S) -> Self {
        SeriesSpec { upper, lower, characteristic: None, argument }
    }

    pub fn with_characteristic(mut self, p: Polynomial<S>) -> Self {
        self.characteristic = Some(p);
        self
    }

    fn lifted(&self, ctx: &PrecisionContext) -> Self {
        SeriesSpec {
            upper: self.upper.iter().map(|a| a.lift(ctx)).collect(),
            lower: self.lower.iter().map(|b| b.lift(ctx)).collect(),
            characteristic: self.characteristic.as_ref().map(|p| p.map(|c| c.lift(ctx))),
            argument: self.argument.lift(ctx),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult<S> {
    pub value: S,
    pub terms_used: usize,
    pub terminated: bool,
    /// Estimated absolute size of the neglected tail; zero when terminated.
    pub tail_bound: Option<f64>,
    /// Set when cancellation survived every precision retry.
    pub degraded: bool,
    /// `log2` of the largest partial sum, the scale rounding errors are
    /// relative to.
    pub magnitude: f64,
}

/// `sum(lower) - sum(upper)`.
pub fn parametric_excess<S: Scalar>(upper: &[S], lower: &[S], ctx: &PrecisionContext) -> S {
    let lo = lower.iter().fold(S::zero(ctx), |acc, b| acc + b.clone());
    upper.iter().fold(lo, |acc, a| acc - a.clone())
}

/// Index of the last possibly nonzero term when an upper parameter is a
/// non-positive integer.
pub fn termination_index<S: Scalar>(spec: &SeriesSpec<S>) -> Option<u64> {
    spec.upper.iter().filter_map(|a| a.nonpositive_integer()).min()
}

const MAX_TERMS: usize = 200_000;
const RETRIES: u32 = 3;

/// Sum of the terms with index below `n`, with no convergence checks.
pub fn partial_sum<S: Scalar>(spec: &SeriesSpec<S>, n: u64, ctx: &PrecisionContext) -> MathResult<S> {
    let one = S::one(ctx);
    let char_at = |k: u64| match &spec.characteristic {
        Some(c) => c.eval(&S::from_i64(k as i64, ctx)),
        None => one.clone(),
    };
    let mut t = one.clone();
    let mut sum = S::zero(ctx);
    for k in 0..n {
        if k > 0 {
            let kk = S::from_i64(k as i64 - 1, ctx);
            let mut num = spec.argument.clone();
            for a in &spec.upper {
                num = num * (a.clone() + kk.clone());
            }
            let mut den = S::from_i64(k as i64, ctx);
            for b in &spec.lower {
                den = den * (b.clone() + kk.clone());
            }
            t = t * num.checked_div(den)?;
        }
        sum = sum + t.clone() * char_at(k);
    }
    Ok(sum)
}

/// Sums the series in `S`, exactly for terminating rational input.
pub fn eval_phf<S: Scalar>(spec: &SeriesSpec<S>, ctx: &PrecisionContext) -> MathResult<EvalResult<S>> {
    let mut res = sum_once(spec, ctx)?;
    if S::EXACT || res.1.is_infinite() {
        return Ok(res.0);
    }
    let target = -(ctx.target_digits as f64) * core::f64::consts::LOG2_10;
    let mut wide = *ctx;
    let mut tries = 0;
    while res.0.value.log2_abs() - res.1 < target {
        if tries == RETRIES {
            res.0.degraded = true;
            break;
        }
        tries += 1;
        wide = wide.widened(wide.guard_digits);
        res = sum_once(&spec.lifted(&wide), &wide)?;
    }
    let mut out = res.0;
    out.value = out.value.lift(ctx);
    Ok(out)
}

fn unit_magnitude<S: Scalar>(x: &S) -> bool {
    x.log2_abs().abs() < 1e-9
}

/// One pass of the summation. Also returns `log2` of the largest partial
/// sum for the cancellation test.
fn sum_once<S: Scalar>(spec: &SeriesSpec<S>, ctx: &PrecisionContext) -> MathResult<(EvalResult<S>, f64)> {
    let stop = termination_index(spec);
    if let Some(n) = stop {
        if let Some(b) = spec.lower.iter().find(|b| b.nonpositive_integer().is_some_and(|m| m < n)) {
            return Err(MathError::LowerParamPole(format!("{}", b)));
        }
    } else {
        if let Some(b) = spec.lower.iter().find(|b| b.nonpositive_integer().is_some()) {
            return Err(MathError::LowerParamPole(format!("{}", b)));
        }
        if S::EXACT {
            return Err(MathError::NotExact(format!("non-terminating series at {}", spec.argument)));
        }
    }
    let x = &spec.argument;
    let (p, q) = (spec.upper.len(), spec.lower.len());
    let deg = spec.characteristic.as_ref().map_or(0, |c| c.degree());
    let mut unit_s_eff = None;
    if stop.is_none() {
        let lx = x.log2_abs();
        if p > q + 1 && !x.is_zero() {
            return Err(MathError::DivergentSeries(format!("{}F{} with nonzero argument", p, q)));
        }
        if p == q + 1 {
            if unit_magnitude(x) {
                let s = parametric_excess(&spec.upper, &spec.lower, ctx).re_f64() - deg as f64;
                if s <= 0.0 {
                    return Err(MathError::DivergentSeries(format!("excess {} at unit argument", s)));
                }
                unit_s_eff = Some(s);
            } else if lx > 0.0 {
                return Err(MathError::DivergentSeries(format!("|x| > 1 for {}F{}", p, q)));
            }
        }
    }
    let char_at = |n: u64| -> S {
        match &spec.characteristic {
            Some(c) => c.eval(&S::from_i64(n as i64, ctx)),
            None => S::one(ctx),
        }
    };
    let eps = -(ctx.working_digits() as f64) * core::f64::consts::LOG2_10;
    let n0 = 2.0 * spec.upper.iter().chain(&spec.lower).map(|a| libm::exp2(a.log2_abs())).fold(0.0, f64::max) + 10.0;
    let lx = x.log2_abs();
    let one = S::one(ctx);
    let mut t = one.clone();
    let mut sum = char_at(0);
    let mut max_partial = sum.log2_abs();
    let tail;
    let mut n: u64 = 0;
    loop {
        if Some(n) == stop {
            tail = Some(0.0);
            break;
        }
        if n as usize >= MAX_TERMS {
            return Err(MathError::NoConvergence(MAX_TERMS));
        }
        let nn = S::from_i64(n as i64, ctx);
        let prev = t.log2_abs();
        let mut num = x.clone();
        for a in &spec.upper {
            num = num * (a.clone() + nn.clone());
        }
        let mut den = nn.clone() + one.clone();
        for b in &spec.lower {
            den = den * (b.clone() + nn.clone());
        }
        t = t * num / den;
        n += 1;
        let term = if spec.characteristic.is_some() { t.clone() * char_at(n) } else { t.clone() };
        sum = sum + term.clone();
        max_partial = max_partial.max(sum.log2_abs());
        if stop.is_some() || (n as f64) < n0 {
            continue;
        }
        if t.is_zero() {
            tail = Some(0.0);
            break;
        }
        let lt = term.log2_abs();
        let ls = sum.log2_abs();
        let bound = match unit_s_eff {
            Some(s) => {
                let b = lt + libm::log2((n as f64 + 1.0) / s);
                // the tail shrinks like n^-s, so the needed length is predictable
                let missing = b - (eps + ls);
                if missing > 0.0 && libm::log2(n as f64) + missing / s > libm::log2(MAX_TERMS as f64) {
                    return Err(MathError::NoConvergence(MAX_TERMS));
                }
                b
            }
            None => {
                let mut r = t.log2_abs() - prev;
                if p == q + 1 {
                    r = r.max(lx);
                }
                let r = libm::exp2(r) * (1.0 + deg as f64 / n as f64);
                if r >= 1.0 {
                    continue;
                }
                lt + libm::log2(r / (1.0 - r))
            }
        };
        if bound < eps + ls || (sum.is_zero() && lt < eps) {
            tail = Some(libm::exp2(bound));
            break;
        }
    }
    let terminated = tail == Some(0.0);
    let result = EvalResult { value: sum, terms_used: n as usize + 1, terminated, tail_bound: tail, degraded: false, magnitude: max_partial };
    // exact zero sums and exact arithmetic need no cancellation test
    let reference = if terminated && S::EXACT { f64::INFINITY } else { max_partial };
    let reference = if result_is_exact_zero(&result) { f64::INFINITY } else { reference };
    Ok((result, reference))
}

fn result_is_exact_zero<S: Scalar>(r: &EvalResult<S>) -> bool {
    r.value.is_zero() && r.terminated
}
