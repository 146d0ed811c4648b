//! Expression trees for the two sides of an identity.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::hypseries::{eval_phf, parametric_excess, SeriesSpec};
use crate::mparith::{gamma_ratio, MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::Polynomial;

/// A composition of series values, Gamma quotients and scalars.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr<S> {
    Num(S),
    Series(SeriesSpec<S>),
    /// `prod Gamma(num) / prod Gamma(den)`.
    Gamma { num: Vec<S>, den: Vec<S> },
    Pow { base: S, exp: S },
    Sum(Vec<Expr<S>>),
    Prod(Vec<Expr<S>>),
    /// Quotient whose denominator is only checked at evaluation.
    Quot(Box<Expr<S>>, Box<Expr<S>>),
}

impl<S: Scalar> Expr<S> {
    pub fn series(upper: Vec<S>, lower: Vec<S>, x: S) -> Self {
        Expr::Series(SeriesSpec::new(upper, lower, x))
    }

    pub fn series_with(upper: Vec<S>, lower: Vec<S>, x: S, p: Polynomial<S>) -> Self {
        Expr::Series(SeriesSpec::new(upper, lower, x).with_characteristic(p))
    }

    pub fn gamma(num: Vec<S>, den: Vec<S>) -> Self {
        Expr::Gamma { num, den }
    }

    pub fn quot(a: Expr<S>, b: Expr<S>) -> Self {
        Expr::Quot(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, ctx: &PrecisionContext) -> MathResult<S> {
        match self {
            Expr::Num(x) => Ok(x.clone()),
            Expr::Series(s) => Ok(eval_phf(s, ctx)?.value),
            Expr::Gamma { num, den } => gamma_ratio(num, den, ctx),
            Expr::Pow { base, exp } => base.pow(exp, ctx),
            Expr::Sum(xs) => {
                let mut acc = S::zero(ctx);
                for x in xs {
                    acc = acc + x.eval(ctx)?;
                }
                Ok(acc)
            }
            Expr::Prod(xs) => {
                let mut acc = S::one(ctx);
                for x in xs {
                    acc = acc * x.eval(ctx)?;
                }
                Ok(acc)
            }
            Expr::Quot(a, b) => a.eval(ctx)?.checked_div(b.eval(ctx)?),
        }
    }

    /// Value together with `log2` of the largest intermediate magnitude,
    /// which bounds what rounding can leave behind when the value cancels.
    pub fn eval_scaled(&self, ctx: &PrecisionContext) -> MathResult<(S, f64)> {
        let (v, scale) = match self {
            Expr::Series(s) => {
                let r = eval_phf(s, ctx)?;
                let m = r.magnitude;
                (r.value, m)
            }
            Expr::Sum(xs) => {
                let mut acc = S::zero(ctx);
                let mut scale = f64::NEG_INFINITY;
                for x in xs {
                    let (v, s) = x.eval_scaled(ctx)?;
                    acc = acc + v;
                    scale = scale.max(s);
                }
                (acc, scale)
            }
            Expr::Prod(xs) => {
                let mut acc = S::one(ctx);
                let mut scale = 0.0;
                for x in xs {
                    let (v, s) = x.eval_scaled(ctx)?;
                    acc = acc * v;
                    scale += s;
                }
                (acc, scale)
            }
            Expr::Quot(a, b) => {
                let (va, sa) = a.eval_scaled(ctx)?;
                let vb = b.eval(ctx)?;
                let scale = sa - vb.log2_abs();
                (va.checked_div(vb)?, scale)
            }
            _ => {
                let v = self.eval(ctx)?;
                let s = v.log2_abs();
                (v, s)
            }
        };
        let s = scale.max(v.log2_abs());
        Ok((v, s))
    }

    /// Series nodes in depth-first order.
    pub fn series_nodes(&self) -> Vec<&SeriesSpec<S>> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let Expr::Series(s) = e {
                out.push(s);
            }
        });
        out
    }

    /// Parametric excess of the first series, ignoring any characteristic.
    pub fn leading_excess(&self, ctx: &PrecisionContext) -> Option<S> {
        self.series_nodes().first().map(|s| parametric_excess(&s.upper, &s.lower, ctx))
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr<S>)) {
        f(self);
        match self {
            Expr::Sum(xs) | Expr::Prod(xs) => xs.iter().for_each(|x| x.walk(f)),
            Expr::Quot(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            _ => {}
        }
    }
}

fn near_pole(q: &Rational) -> bool {
    let tol = Rational::new(1.into(), 100.into());
    *q < tol && (q - q.round()).abs() < tol
}

/// First lower parameter or Gamma argument within 1/100 of a non-positive
/// integer, if any.
pub fn pole_guard(e: &Expr<Rational>) -> Option<Rational> {
    let mut hit = None;
    e.walk(&mut |node| {
        if hit.is_some() {
            return;
        }
        let args: Vec<&Rational> = match node {
            Expr::Series(s) => s.lower.iter().collect(),
            Expr::Gamma { num, den } => num.iter().chain(den).collect(),
            _ => Vec::new(),
        };
        hit = args.into_iter().find(|q| near_pole(q)).cloned();
    });
    hit
}
