use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Binary floating point number `man * 2^exp` with a mantissa of at most
/// `prec` bits.
#[derive(Clone, Debug)]
pub struct MpReal {
    man: BigInt,
    exp: i64,
    prec: u32,
}

/// Bits of precision needed to carry `digits` decimal digits.
pub fn digits_to_bits(digits: u32) -> u32 {
    // log2(10) = 3.3219..., rounded up with a small cushion
    (digits as u64 * 33220 / 10000) as u32 + 8
}

fn round_mag(mag: BigUint, shift: u64) -> BigUint {
    if shift == 0 {
        return mag;
    }
    let half = BigUint::one() << (shift - 1);
    (mag + half) >> shift
}

impl MpReal {
    pub fn zero(prec: u32) -> Self {
        MpReal { man: BigInt::zero(), exp: 0, prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_parts(BigInt::from(n), 0, prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::from_parts(n.clone(), 0, prec)
    }

    /// Exact conversion of a finite double; non-finite input maps to zero.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        if !x.is_finite() || x == 0.0 {
            return Self::zero(prec);
        }
        let (m, e) = libm::frexp(x);
        let man = libm::ldexp(m, 53) as i64;
        Self::from_parts(BigInt::from(man), e as i64 - 53, prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let num = Self::from_parts(q.numer().clone(), 0, prec + 4);
        let den = Self::from_parts(q.denom().clone(), 0, prec + 4);
        (num / den).with_prec(prec)
    }

    /// Builds `man * 2^exp`, rounding the mantissa to `prec` bits.
    pub fn from_parts(man: BigInt, exp: i64, prec: u32) -> Self {
        let prec = prec.max(8);
        if man.is_zero() {
            return MpReal { man, exp: 0, prec };
        }
        let bits = man.bits();
        if bits <= prec as u64 {
            return MpReal { man, exp, prec };
        }
        let (sign, mag) = man.into_parts();
        let mut shift = bits - prec as u64;
        let mut mag = round_mag(mag, shift);
        if mag.bits() > prec as u64 {
            mag >>= 1;
            shift += 1;
        }
        MpReal { man: BigInt::from_biguint(sign, mag), exp: exp + shift as i64, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::from_parts(self.man.clone(), self.exp, prec)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        MpReal { man: self.man.abs(), exp: self.exp, prec: self.prec }
    }

    /// Position just above the leading bit: `|x|` lies in `[2^(t-1), 2^t)`.
    fn top(&self) -> i64 {
        self.exp + self.man.bits() as i64
    }

    /// Approximate `log2 |x|`; negative infinity for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.man.bits();
        let (lead, shift) = if bits > 53 {
            ((self.man.magnitude() >> (bits - 53)).to_f64().unwrap_or(0.0), bits - 53)
        } else {
            (self.man.magnitude().to_f64().unwrap_or(0.0), 0)
        };
        libm::log2(lead) + (self.exp + shift as i64) as f64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits();
        let shift = bits.saturating_sub(60);
        let lead = (&self.man >> shift).to_f64().unwrap_or(0.0);
        let e = self.exp + shift as i64;
        if e > 2000 {
            return if lead > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -2200 {
            return 0.0;
        }
        libm::ldexp(lead, e as i32)
    }

    /// Nearest integer, ties rounded up.
    pub fn round(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.man << self.exp as u64;
        }
        let sh = (-self.exp) as u64;
        if sh > self.man.bits() + 2 {
            return BigInt::zero();
        }
        (&self.man + (BigInt::one() << (sh - 1))) >> sh
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.man << self.exp as u64;
        }
        let sh = (-self.exp) as u64;
        if sh > self.man.bits() + 2 {
            return if self.is_negative() { -BigInt::one() } else { BigInt::zero() };
        }
        &self.man >> sh
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        MpReal { man: self.man.clone(), exp: self.exp + k, prec: self.prec }
    }

    /// Exact value as a rational number.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.man << self.exp as u64)
        } else {
            Rational::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let prec = self.prec.max(other.prec);
        let b_man = if negate { -other.man.clone() } else { other.man.clone() };
        if other.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return Self::from_parts(b_man, other.exp, prec);
        }
        let (ta, tb) = (self.top(), other.top());
        if ta > tb + prec as i64 + 2 {
            return self.with_prec(prec);
        }
        if tb > ta + prec as i64 + 2 {
            return Self::from_parts(b_man, other.exp, prec);
        }
        let e = self.exp.min(other.exp);
        let man = (&self.man << (self.exp - e) as u64) + (b_man << (other.exp - e) as u64);
        Self::from_parts(man, e, prec)
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative MpReal");
        if self.is_zero() {
            return self.clone();
        }
        let want = 2 * (self.prec as i64 + 4);
        let mut s = (want - self.man.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m = self.man.magnitude() << s as u64;
        let r = m.sqrt();
        Self::from_parts(BigInt::from(r), (self.exp - s) / 2, self.prec)
    }

    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { MpReal::one(self.prec) / self.clone() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = MpReal::one(self.prec);
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

    /// Fixed point image `round(x * 2^w)`.
    fn to_fixed(&self, w: u64) -> BigInt {
        let e = self.exp + w as i64;
        if e >= 0 {
            &self.man << e as u64
        } else {
            let sh = (-e) as u64;
            (&self.man + (BigInt::one() << (sh - 1))) >> sh
        }
    }

    pub fn pi(prec: u32) -> Self {
        let w = prec as u64 + 32;
        let v = 16 * atan_inv_fixed(5, w) - 4 * atan_inv_fixed(239, w);
        Self::from_parts(v, -(w as i64), prec)
    }

    pub fn ln2(prec: u32) -> Self {
        let w = prec as u64 + 32;
        Self::from_parts(2 * atanh_inv_fixed(3, w), -(w as i64), prec)
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec;
        if self.is_zero() {
            return MpReal::one(prec);
        }
        let approx = self.to_f64();
        assert!(approx.abs() < 1.0e9, "exponent argument out of range");
        let n = libm::round(approx / core::f64::consts::LN_2) as i64;
        let extra = 64 - (n.unsigned_abs() | 1).leading_zeros();
        let wp = prec + 32 + extra;
        let r = self.with_prec(wp) - MpReal::ln2(wp) * MpReal::from_i64(n, wp);
        let s = (libm::sqrt(prec as f64) as u64).max(4);
        let w = wp as u64 + 2 * s + 16;
        let x = r.ldexp(-(s as i64)).to_fixed(w);
        let one = BigInt::one() << w;
        let mut sum = one.clone();
        let mut term = one;
        let mut k = 1u64;
        loop {
            term = shr(term * &x, w) / BigInt::from(k);
            if term.is_zero() {
                break;
            }
            sum += &term;
            k += 1;
        }
        for _ in 0..s {
            sum = shr(&sum * &sum, w);
        }
        Self::from_parts(sum, n - w as i64, prec)
    }

    /// Natural logarithm of a positive number.
    pub fn ln(&self) -> Self {
        assert!(self.signum() > 0, "logarithm of a non-positive MpReal");
        let prec = self.prec;
        let bits = self.man.bits();
        let mut e2 = self.exp + bits as i64;
        let w = prec as u64 + 40;
        // m = man / 2^bits in [1/2, 1), scaled to w bits
        let mut m = if bits >= w {
            self.man.magnitude() >> (bits - w)
        } else {
            self.man.magnitude() << (w - bits)
        };
        // move m into [1/sqrt2, sqrt2)
        let two_m_sq = (&m * &m) << 1u32;
        if two_m_sq < (BigUint::one() << (2 * w)) {
            m <<= 1u32;
            e2 -= 1;
        }
        let one = BigUint::one() << w;
        let m = BigInt::from(m);
        let onei = BigInt::from(one);
        let y = ((&m - &onei) << w) / (&m + &onei);
        let y2 = shr(&y * &y, w);
        let mut sum = BigInt::zero();
        let mut term = y;
        let mut k = 1u64;
        while !term.is_zero() {
            sum += &term / BigInt::from(k);
            term = shr(term * &y2, w);
            k += 2;
        }
        let lnm = Self::from_parts(sum << 1u32, -(w as i64), prec + 16);
        (MpReal::ln2(prec + 16) * MpReal::from_i64(e2, prec + 16) + lnm).with_prec(prec)
    }

    /// Arc tangent, result in (-pi/2, pi/2).
    pub fn atan(&self) -> Self {
        let prec = self.prec;
        if self.is_zero() {
            return self.clone();
        }
        let wp = prec + 32;
        let one = MpReal::one(wp);
        let mut t = self.with_prec(wp);
        let mut outer: Option<MpReal> = None;
        if t.abs() > one {
            let half_pi = MpReal::pi(wp).ldexp(-1);
            outer = Some(if t.is_negative() { -half_pi } else { half_pi });
            t = -(one.clone() / t);
        }
        const HALVINGS: i64 = 5;
        for _ in 0..HALVINGS {
            t = t.clone() / (one.clone() + (one.clone() + t.clone() * t.clone()).sqrt());
        }
        let w = wp as u64 + 16;
        let x = t.to_fixed(w);
        let x2 = shr(&x * &x, w);
        let mut sum = BigInt::zero();
        let mut term = x;
        let mut k = 1i64;
        while !term.is_zero() {
            let q = &term / BigInt::from(k);
            if (k / 2) % 2 == 0 {
                sum += q;
            } else {
                sum -= q;
            }
            term = shr(term * &x2, w);
            k += 2;
        }
        let a = Self::from_parts(sum, -(w as i64), wp).ldexp(HALVINGS);
        match outer {
            Some(o) => (o + a).with_prec(prec),
            None => a.with_prec(prec),
        }
    }

    /// Angle of the point `(x, y)` in (-pi, pi].
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let prec = y.prec.max(x.prec);
        if x.is_zero() {
            let half_pi = MpReal::pi(prec).ldexp(-1);
            return match y.signum() {
                1 => half_pi,
                -1 => -half_pi,
                _ => MpReal::zero(prec),
            };
        }
        let base = (y.clone() / x.clone()).atan();
        if x.signum() > 0 {
            base
        } else if y.is_negative() {
            base - MpReal::pi(prec)
        } else {
            base + MpReal::pi(prec)
        }
    }

    /// Sine and cosine of the same argument.
    pub fn sin_cos(&self) -> (Self, Self) {
        let prec = self.prec;
        if self.is_zero() {
            return (MpReal::zero(prec), MpReal::one(prec));
        }
        let mag = self.log2_abs().max(0.0) as u32;
        let wp = prec + 32 + mag;
        let two_pi = MpReal::pi(wp).ldexp(1);
        let x = self.with_prec(wp);
        let n = (x.clone() / two_pi.clone()).round();
        let r = x - two_pi * MpReal::from_bigint(&n, wp);
        const HALVINGS: u64 = 8;
        let w = wp as u64 + 2 * HALVINGS + 16;
        let y = r.ldexp(-(HALVINGS as i64)).to_fixed(w);
        let y2 = shr(&y * &y, w);
        let one = BigInt::one() << w;
        // sine and cosine series of the reduced argument
        let mut s = BigInt::zero();
        let mut term = y.clone();
        let mut k = 1u64;
        while !term.is_zero() {
            s += &term;
            term = -shr(term * &y2, w) / BigInt::from((k + 1) * (k + 2));
            k += 2;
        }
        let mut c = BigInt::zero();
        let mut term = one.clone();
        let mut k = 0u64;
        while !term.is_zero() {
            c += &term;
            term = -shr(term * &y2, w) / BigInt::from((k + 1) * (k + 2));
            k += 2;
        }
        for _ in 0..HALVINGS {
            let s2 = shr(&s * &c, w) << 1u32;
            let c2 = shr(&c * &c, w) - shr(&s * &s, w);
            s = s2;
            c = c2;
        }
        (
            Self::from_parts(s, -(w as i64), prec),
            Self::from_parts(c, -(w as i64), prec),
        )
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        use core::fmt::Write;
        let digits = digits.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        let mut e10 = libm::floor(self.log2_abs() * core::f64::consts::LOG10_2) as i64;
        let ten = BigUint::from(10u32);
        let lo = num_traits::pow(ten.clone(), digits - 1);
        let hi = &lo * &ten;
        let n = loop {
            let k = digits as i64 - 1 - e10;
            let mut num = self.man.magnitude().clone();
            let mut den = BigUint::one();
            if k >= 0 {
                num *= num_traits::pow(ten.clone(), k as usize);
            } else {
                den *= num_traits::pow(ten.clone(), (-k) as usize);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            let n = ((num << 1u32) + &den) / (den << 1u32);
            if n >= hi {
                e10 += 1;
            } else if n < lo {
                e10 -= 1;
            } else {
                break n;
            }
        };
        let ds = n.to_str_radix(10);
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        out.push_str(&ds[..1]);
        let rest = ds[1..].trim_end_matches('0');
        if !rest.is_empty() {
            out.push('.');
            out.push_str(rest);
        }
        if e10 != 0 {
            let _ = write!(out, "e{}", e10);
        }
        out
    }

    /// Decimal digits this value's precision supports.
    pub fn decimal_digits(&self) -> usize {
        ((self.prec as u64 - 8) * 10000 / 33220).max(1) as usize
    }
}

/// Right shift rounding toward zero, so fixed point series terms of either
/// sign die out.
fn shr(v: BigInt, w: u64) -> BigInt {
    if v.is_negative() {
        -((-v) >> w)
    } else {
        v >> w
    }
}

/// `atan(1/n)` scaled by `2^w`.
fn atan_inv_fixed(n: u32, w: u64) -> BigInt {
    let n2 = BigInt::from(n as u64 * n as u64);
    let mut term = (BigInt::one() << w) / BigInt::from(n);
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    let mut neg = false;
    while !term.is_zero() {
        let q = &term / BigInt::from(k);
        if neg {
            sum -= q;
        } else {
            sum += q;
        }
        term /= &n2;
        k += 2;
        neg = !neg;
    }
    sum
}

/// `atanh(1/n)` scaled by `2^w`.
fn atanh_inv_fixed(n: u32, w: u64) -> BigInt {
    let n2 = BigInt::from(n as u64 * n as u64);
    let mut term = (BigInt::one() << w) / BigInt::from(n);
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += &term / BigInt::from(k);
        term /= &n2;
        k += 2;
    }
    sum
}

impl PartialEq for MpReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for MpReal {}

impl PartialOrd for MpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MpReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.top(), other.top());
        let mag = if ta != tb {
            ta.cmp(&tb)
        } else {
            let e = self.exp.min(other.exp);
            let a = self.man.magnitude() << (self.exp - e) as u64;
            let b = other.man.magnitude() << (other.exp - e) as u64;
            a.cmp(&b)
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }
}

impl Add for MpReal {
    type Output = MpReal;
    fn add(self, rhs: MpReal) -> MpReal {
        self.add_impl(&rhs, false)
    }
}

impl Sub for MpReal {
    type Output = MpReal;
    fn sub(self, rhs: MpReal) -> MpReal {
        self.add_impl(&rhs, true)
    }
}

impl Mul for MpReal {
    type Output = MpReal;
    fn mul(self, rhs: MpReal) -> MpReal {
        let prec = self.prec.max(rhs.prec);
        MpReal::from_parts(self.man * rhs.man, self.exp + rhs.exp, prec)
    }
}

impl Div for MpReal {
    type Output = MpReal;
    fn div(self, rhs: MpReal) -> MpReal {
        assert!(!rhs.is_zero(), "MpReal division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return MpReal::zero(prec);
        }
        let shift = (prec as i64 + 4 + rhs.man.bits() as i64 - self.man.bits() as i64).max(0);
        let num = self.man << shift as u64;
        let q = num.div_floor(&rhs.man);
        MpReal::from_parts(q, self.exp - rhs.exp - shift, prec)
    }
}

impl Neg for MpReal {
    type Output = MpReal;
    fn neg(self) -> MpReal {
        MpReal { man: -self.man, exp: self.exp, prec: self.prec }
    }
}

impl fmt::Display for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.decimal_digits());
        f.write_str(&self.to_sci_string(digits))
    }
}

/// Bernoulli numbers `B_2, B_4, ..., B_{2n}` via tangent numbers.
pub fn bernoulli_even(n: usize) -> Vec<Rational> {
    if n == 0 {
        return Vec::new();
    }
    let mut t: Vec<BigInt> = Vec::with_capacity(n + 1);
    t.push(BigInt::zero());
    t.push(BigInt::one());
    for k in 2..=n {
        let prev = &t[k - 1] * BigInt::from(k as u64 - 1);
        t.push(prev);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from((j - k) as u64) + &t[j] * BigInt::from((j - k + 2) as u64);
        }
    }
    (1..=n)
        .map(|k| {
            let four_k = BigInt::one() << (2 * k as u64);
            let den = &four_k * (&four_k - BigInt::one());
            let num = &t[k] * BigInt::from(2 * k as u64);
            let b = Rational::new(num, den);
            if k % 2 == 0 {
                -b
            } else {
                b
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> MpReal {
        MpReal::from_i64(x, 200)
    }

    #[test]
    fn pi_digits() {
        let p = MpReal::pi(digits_to_bits(40));
        assert_eq!(p.to_sci_string(40), "3.141592653589793238462643383279502884197");
    }

    #[test]
    fn exp_ln_roundtrip() {
        let x = MpReal::from_rational(&Rational::new(BigInt::from(37), BigInt::from(7)), 256);
        let y = x.exp().ln();
        let err = (y - x.clone()).abs();
        assert!(err.log2_abs() < -240.0, "{}", err);
        let e = MpReal::one(256).exp();
        assert_eq!(e.to_sci_string(30), "2.71828182845904523536028747135");
    }

    #[test]
    fn ln_of_small_and_large() {
        let ten = r(10);
        assert_eq!(ten.ln().to_sci_string(25), "2.302585092994045684017991");
        let tiny = MpReal::one(200) / r(1_000_000);
        assert_eq!(tiny.ln().to_sci_string(20), "-1.3815510557964274104e1");
    }

    #[test]
    fn trig_identities() {
        let x = MpReal::from_rational(&Rational::new(BigInt::from(-123), BigInt::from(10)), 256);
        let (s, c) = x.sin_cos();
        let one = s.clone() * s + c.clone() * c;
        assert!((one - MpReal::one(256)).abs().log2_abs() < -240.0);
        let (s1, _) = MpReal::one(200).sin_cos();
        assert_eq!(s1.to_sci_string(20), "8.4147098480789650665e-1");
        let a = MpReal::one(200).atan();
        assert_eq!(a.ldexp(2).to_sci_string(25), MpReal::pi(200).to_sci_string(25));
    }

    #[test]
    fn atan2_quadrants() {
        let pi = MpReal::pi(200);
        let a = MpReal::atan2(&r(-1), &r(-1));
        let expect = -(pi.clone() * r(3)).ldexp(-2);
        assert!((a - expect).abs().log2_abs() < -180.0);
        let b = MpReal::atan2(&r(0), &r(-5));
        assert!((b - pi).abs().log2_abs() < -180.0);
    }

    #[test]
    fn sqrt_two() {
        let s = r(2).sqrt();
        assert_eq!(s.to_sci_string(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn rounding_and_floor() {
        let x = MpReal::from_rational(&Rational::new(BigInt::from(-7), BigInt::from(2)), 64);
        assert_eq!(x.round(), BigInt::from(-3));
        assert_eq!(x.floor(), BigInt::from(-4));
        assert_eq!(r(5).round(), BigInt::from(5));
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_even(5);
        let expect = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66)];
        for (got, (n, d)) in b.iter().zip(expect) {
            assert_eq!(*got, Rational::new(BigInt::from(n), BigInt::from(d)));
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(r(0).to_sci_string(5), "0");
        assert_eq!(r(1200).to_sci_string(5), "1.2e3");
        let third = MpReal::one(100) / r(3);
        assert_eq!(third.to_sci_string(6), "3.33333e-1");
        assert_eq!((-third).to_sci_string(3), "-3.33e-1");
    }

    #[test]
    fn add_far_apart_keeps_larger() {
        let big = r(1).ldexp(400);
        let sum = big.clone() + r(1);
        assert_eq!(sum, big);
    }
}
