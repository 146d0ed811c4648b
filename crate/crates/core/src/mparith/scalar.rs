use alloc::string::{String, ToString};
use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{gamma, MathError, MathResult, MpComplex, MpReal, PrecisionContext, Rational};

/// Field in which series, polynomials and identities are evaluated.
///
/// `Rational` gives exact results and refuses anything transcendental;
/// `MpComplex` works at the precision of a [`PrecisionContext`].
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn from_rational(q: &Rational, ctx: &PrecisionContext) -> Self;

    fn from_i64(n: i64, ctx: &PrecisionContext) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)), ctx)
    }

    fn zero(ctx: &PrecisionContext) -> Self {
        Self::from_i64(0, ctx)
    }

    fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    fn is_zero(&self) -> bool;

    /// Nearest integer when the value is one, exactly or within the pole
    /// tolerance of its precision.
    fn integer(&self) -> Option<i64>;

    /// `Some(n)` when the value is the non-positive integer `-n`.
    fn nonpositive_integer(&self) -> Option<u64> {
        self.integer().filter(|&n| n <= 0).map(|n| n.unsigned_abs())
    }

    fn log2_abs(&self) -> f64;

    /// Real part, rounded to f64; used only for convergence decisions.
    fn re_f64(&self) -> f64;

    fn gamma(&self, ctx: &PrecisionContext) -> MathResult<Self>;

    fn pow(&self, e: &Self, ctx: &PrecisionContext) -> MathResult<Self>;

    fn sqrt(&self, ctx: &PrecisionContext) -> MathResult<Self>;

    /// Re-expresses the value at the precision of `ctx`.
    fn lift(&self, ctx: &PrecisionContext) -> Self;

    fn to_complex(&self, ctx: &PrecisionContext) -> MpComplex;

    fn to_rational(&self) -> Option<Rational>;

    fn to_decimal(&self, digits: usize) -> String;

    fn powi(&self, n: i64) -> MathResult<Self> {
        if n < 0 && self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        let mut acc: Option<Self> = None;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a * base.clone(),
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        let p = match acc {
            Some(a) => a,
            None => return Ok(self.unit()),
        };
        Ok(if n < 0 { self.unit() / p } else { p })
    }

    /// One, at the precision of `self`.
    fn unit(&self) -> Self;

    fn checked_div(self, rhs: Self) -> MathResult<Self> {
        if rhs.is_zero() {
            Err(MathError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(q: &Rational, _: &PrecisionContext) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn log2_abs(&self) -> f64 {
        if Zero::is_zero(self) {
            return f64::NEG_INFINITY;
        }
        let (n, d) = (self.numer().abs(), self.denom().clone());
        bigint_log2(&n) - bigint_log2(&d)
    }

    fn re_f64(&self) -> f64 {
        libm::exp2(self.log2_abs()) * if self.is_negative() { -1.0 } else { 1.0 }
    }

    fn gamma(&self, _: &PrecisionContext) -> MathResult<Self> {
        match self.integer() {
            Some(n) if n <= 0 => Err(MathError::Pole(self.to_string())),
            Some(n) => {
                let mut f = BigInt::one();
                for k in 2..n {
                    f *= BigInt::from(k);
                }
                Ok(Rational::from_integer(f))
            }
            None => Err(MathError::NotExact(alloc::format!("Gamma({})", self))),
        }
    }

    fn pow(&self, e: &Self, _: &PrecisionContext) -> MathResult<Self> {
        if let Some(n) = e.integer() {
            return Scalar::powi(self, n);
        }
        // a rational power of a perfect power stays rational
        let (p, q) = (e.numer().clone(), e.denom().clone());
        let q = q.to_u32().ok_or_else(|| MathError::NotExact(alloc::format!("{}^{}", self, e)))?;
        let root = exact_root(self, q).ok_or_else(|| MathError::NotExact(alloc::format!("{}^{}", self, e)))?;
        Scalar::powi(&root, p.to_i64().ok_or(MathError::DivisionByZero)?)
    }

    fn sqrt(&self, _: &PrecisionContext) -> MathResult<Self> {
        exact_root(self, 2).ok_or_else(|| MathError::NotExact(alloc::format!("sqrt({})", self)))
    }

    fn lift(&self, _: &PrecisionContext) -> Self {
        self.clone()
    }

    fn to_complex(&self, ctx: &PrecisionContext) -> MpComplex {
        MpComplex::from_rational(self, ctx.bits())
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_decimal(&self, _: usize) -> String {
        self.to_string()
    }

    fn unit(&self) -> Self {
        <Rational as One>::one()
    }
}

fn bigint_log2(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits > 60 {
        let lead = (n >> (bits - 60)).to_f64().unwrap_or(1.0);
        libm::log2(lead) + (bits - 60) as f64
    } else {
        libm::log2(n.to_f64().unwrap_or(1.0))
    }
}

fn exact_root(x: &Rational, q: u32) -> Option<Rational> {
    if x.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let root_int = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(q);
        (num_traits::pow(r.clone(), q as usize) == *n).then_some(r)
    };
    Some(Rational::new(root_int(x.numer())?, root_int(x.denom())?))
}

impl Scalar for MpComplex {
    const EXACT: bool = false;

    fn from_rational(q: &Rational, ctx: &PrecisionContext) -> Self {
        MpComplex::from_rational(q, ctx.bits())
    }

    fn from_i64(n: i64, ctx: &PrecisionContext) -> Self {
        MpComplex::from_i64(n, ctx.bits())
    }

    fn is_zero(&self) -> bool {
        MpComplex::is_zero(self)
    }

    fn integer(&self) -> Option<i64> {
        let prec = self.prec() as f64;
        // 10^(5 - working digits) in bits
        let tol = -prec + 8.0 + 5.0 * core::f64::consts::LOG2_10;
        let n = self.re.round();
        let dist = MpComplex::new(self.re.clone() - MpReal::from_bigint(&n, self.prec()), self.im.clone());
        if dist.is_zero() || dist.log2_abs() < tol {
            n.to_i64()
        } else {
            None
        }
    }

    fn log2_abs(&self) -> f64 {
        MpComplex::log2_abs(self)
    }

    fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }

    fn gamma(&self, ctx: &PrecisionContext) -> MathResult<Self> {
        gamma(self, ctx)
    }

    fn pow(&self, e: &Self, _: &PrecisionContext) -> MathResult<Self> {
        MpComplex::pow(self, e)
    }

    fn sqrt(&self, _: &PrecisionContext) -> MathResult<Self> {
        Ok(MpComplex::sqrt(self))
    }

    fn lift(&self, ctx: &PrecisionContext) -> Self {
        self.with_prec(ctx.bits())
    }

    fn to_complex(&self, ctx: &PrecisionContext) -> MpComplex {
        self.with_prec(ctx.bits())
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.to_rational())
    }

    fn to_decimal(&self, digits: usize) -> String {
        self.to_sci_string(digits)
    }

    fn unit(&self) -> Self {
        MpComplex::one(self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_integers() {
        assert_eq!(q(-6, 2).integer(), Some(-3));
        assert_eq!(q(-6, 2).nonpositive_integer(), Some(3));
        assert_eq!(q(1, 2).integer(), None);
        assert_eq!(q(4, 1).nonpositive_integer(), None);
    }

    #[test]
    fn rational_gamma_is_factorial_or_not_exact() {
        let ctx = PrecisionContext::default();
        assert_eq!(q(5, 1).gamma(&ctx).unwrap(), q(24, 1));
        assert!(matches!(q(0, 1).gamma(&ctx), Err(MathError::Pole(_))));
        assert!(matches!(q(1, 2).gamma(&ctx), Err(MathError::NotExact(_))));
    }

    #[test]
    fn rational_powers() {
        let ctx = PrecisionContext::default();
        assert_eq!(Scalar::pow(&q(4, 9), &q(3, 2), &ctx).unwrap(), q(8, 27));
        assert_eq!(Scalar::powi(&q(2, 3), -2).unwrap(), q(9, 4));
        assert_eq!(Scalar::powi(&q(2, 3), 0).unwrap(), q(1, 1));
        assert!(Scalar::pow(&q(2, 1), &q(1, 2), &ctx).is_err());
    }

    #[test]
    fn complex_integer_detection_uses_tolerance() {
        let ctx = PrecisionContext::new(30);
        let three = <MpComplex as Scalar>::from_rational(&q(-3, 1), &ctx);
        assert_eq!(three.integer(), Some(-3));
        let near = three.clone() + <MpComplex as Scalar>::from_rational(&q(1, 1_000_000_000), &ctx);
        assert_eq!(near.integer(), None);
        assert_eq!(Scalar::powi(&three, 0).unwrap(), <MpComplex as Scalar>::one(&ctx));
    }
}
