use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::{MathError, MathResult, MpReal, Rational};

/// Complex number with multiprecision real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct MpComplex {
    pub re: MpReal,
    pub im: MpReal,
}

impl MpComplex {
    pub fn new(re: MpReal, im: MpReal) -> Self {
        MpComplex { re, im }
    }

    pub fn from_real(re: MpReal) -> Self {
        let prec = re.prec();
        MpComplex { re, im: MpReal::zero(prec) }
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Self::from_real(MpReal::from_rational(q, prec))
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_real(MpReal::from_i64(n, prec))
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_real(MpReal::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_real(MpReal::one(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        MpComplex { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        MpComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, s: &MpReal) -> Self {
        MpComplex { re: self.re.clone() * s.clone(), im: self.im.clone() * s.clone() }
    }

    pub fn norm_sqr(&self) -> MpReal {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn abs(&self) -> MpReal {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// Approximate `log2 |z|`.
    pub fn log2_abs(&self) -> f64 {
        let (a, b) = (self.re.log2_abs(), self.im.log2_abs());
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if lo == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * libm::log2(1.0 + libm::exp2(2.0 * (lo - hi)))
    }

    pub fn arg(&self) -> MpReal {
        MpReal::atan2(&self.im, &self.re)
    }

    pub fn ln(&self) -> MathResult<Self> {
        if self.is_zero() {
            return Err(MathError::Domain(String::from("logarithm of zero")));
        }
        if self.im.is_zero() && !self.re.is_negative() {
            return Ok(Self::from_real(self.re.ln()));
        }
        let prec = self.prec();
        let wide = self.with_prec(prec + 16);
        let modulus = wide.norm_sqr().ln().ldexp(-1);
        Ok(MpComplex { re: modulus.with_prec(prec), im: wide.arg().with_prec(prec) })
    }

    pub fn exp(&self) -> Self {
        let r = self.re.exp();
        if self.im.is_zero() {
            return Self::from_real(r);
        }
        let (s, c) = self.im.sin_cos();
        MpComplex { re: r.clone() * c, im: r * s }
    }

    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.im.is_zero() {
            return if self.re.is_negative() {
                MpComplex { re: MpReal::zero(prec), im: (-self.re.clone()).sqrt() }
            } else {
                Self::from_real(self.re.sqrt())
            };
        }
        let r = self.abs();
        let re = (r.clone() + self.re.clone()).ldexp(-1).sqrt();
        let mut im = (r - self.re.clone()).ldexp(-1).sqrt();
        if self.im.is_negative() {
            im = -im;
        }
        MpComplex { re, im }
    }

    pub fn powi(&self, n: i64) -> Self {
        let prec = self.prec();
        let mut base = if n < 0 { Self::one(prec) / self.clone() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::one(prec);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Principal power `exp(w ln z)`.
    pub fn pow(&self, w: &Self) -> MathResult<Self> {
        if w.im.is_zero() {
            if let Some(n) = small_integer(&w.re) {
                if n < 0 && self.is_zero() {
                    return Err(MathError::DivisionByZero);
                }
                return Ok(self.powi(n));
            }
        }
        if self.is_zero() {
            return if w.re.signum() > 0 {
                Ok(Self::zero(self.prec()))
            } else {
                Err(MathError::Domain(String::from("zero to a non-positive power")))
            };
        }
        Ok((w.clone() * self.ln()?).exp())
    }

    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.im.is_zero() {
            return self.re.to_sci_string(digits);
        }
        let im = self.im.to_sci_string(digits);
        let sep = if im.starts_with('-') { "" } else { "+" };
        format!("{}{}{}i", self.re.to_sci_string(digits), sep, im)
    }
}

fn small_integer(x: &MpReal) -> Option<i64> {
    if x.is_zero() {
        return Some(0);
    }
    if x.exponent() < 0 {
        return None;
    }
    use num_traits::ToPrimitive;
    let n = x.round();
    let v = n.to_i64()?;
    (v.unsigned_abs() < 1 << 20).then_some(v)
}

impl Add for MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: MpComplex) -> MpComplex {
        MpComplex { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: MpComplex) -> MpComplex {
        MpComplex { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: MpComplex) -> MpComplex {
        if rhs.im.is_zero() {
            let prec = self.prec().max(rhs.prec());
            return MpComplex { re: self.re * rhs.re.clone(), im: (self.im * rhs.re).with_prec(prec) };
        }
        if self.im.is_zero() {
            let prec = self.prec().max(rhs.prec());
            return MpComplex { re: rhs.re * self.re.clone(), im: (rhs.im * self.re).with_prec(prec) };
        }
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        MpComplex { re, im }
    }
}

impl Div for MpComplex {
    type Output = MpComplex;
    fn div(self, rhs: MpComplex) -> MpComplex {
        if rhs.im.is_zero() {
            let prec = self.prec().max(rhs.prec());
            return MpComplex { re: self.re / rhs.re.clone(), im: (self.im / rhs.re).with_prec(prec) };
        }
        let den = rhs.norm_sqr();
        let re = self.re.clone() * rhs.re.clone() + self.im.clone() * rhs.im.clone();
        let im = self.im * rhs.re - self.re * rhs.im;
        MpComplex { re: re / den.clone(), im: im / den }
    }
}

impl Neg for MpComplex {
    type Output = MpComplex;
    fn neg(self) -> MpComplex {
        MpComplex { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.re.decimal_digits());
        f.write_str(&self.to_sci_string(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> MpComplex {
        MpComplex::new(MpReal::from_i64(re, 200), MpReal::from_i64(im, 200))
    }

    fn close(a: &MpComplex, b: &MpComplex, bits: f64) -> bool {
        (a.clone() - b.clone()).log2_abs() < -bits
    }

    #[test]
    fn arithmetic() {
        let z = c(3, 4) * c(1, -2);
        assert_eq!(z, c(11, -2));
        let q = c(11, -2) / c(1, -2);
        assert!(close(&q, &c(3, 4), 190.0));
        assert_eq!(c(3, 4).abs(), MpReal::from_i64(5, 200));
    }

    #[test]
    fn exp_of_ln() {
        let z = c(-2, 5);
        let back = z.ln().unwrap().exp();
        assert!(close(&back, &z, 185.0));
    }

    #[test]
    fn euler_identity() {
        let i_pi = MpComplex::new(MpReal::zero(200), MpReal::pi(200));
        let e = i_pi.exp();
        assert!(close(&e, &c(-1, 0), 190.0));
    }

    #[test]
    fn square_roots() {
        let s = c(-4, 0).sqrt();
        assert_eq!(s, c(0, 2));
        let t = c(3, -4).sqrt();
        assert!(close(&t, &c(2, -1), 190.0));
    }

    #[test]
    fn powers() {
        let z = c(2, 0);
        let half = MpComplex::from_rational(&Rational::new(1.into(), 2.into()), 200);
        let r = z.pow(&half).unwrap();
        assert_eq!(r.to_sci_string(20), "1.4142135623730950488");
        assert_eq!(c(1, 1).pow(&c(4, 0)).unwrap(), c(-4, 0));
        assert!(c(0, 0).pow(&c(-1, 0)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(c(1, -2).to_sci_string(5), "1-2i");
        assert_eq!(c(1, 2).to_sci_string(5), "1+2i");
        assert_eq!(c(7, 0).to_sci_string(5), "7");
    }
}
