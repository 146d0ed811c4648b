use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::mparith::{MathResult, Scalar};

/// Dense polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `a t + b`.
    pub fn linear(a: S, b: S) -> Self {
        Self::new(vec![b, a])
    }

    /// `(a t + b)_n` expanded as a product of linear factors.
    pub fn rising(a: &S, b: &S, n: u64) -> Self {
        let one = a.unit();
        let mut acc = Self::constant(one.clone());
        let mut shift = b.clone();
        for _ in 0..n {
            acc = acc * Self::linear(a.clone(), shift.clone());
            shift = shift + one.clone();
        }
        acc
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &S) -> S {
        let mut it = self.coeffs.iter().rev();
        let Some(first) = it.next() else {
            return x.clone() - x.clone();
        };
        it.fold(first.clone(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let kk = repeat_add(&c.unit(), k);
                c.clone() * kk
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn try_map<T: Scalar>(&self, mut f: impl FnMut(&S) -> MathResult<T>) -> MathResult<Polynomial<T>> {
        Ok(Polynomial::new(self.coeffs.iter().map(&mut f).collect::<MathResult<_>>()?))
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[S], one: &S) -> Self {
        roots.iter().fold(Self::constant(one.clone()), |acc, r| acc * Self::linear(one.clone(), -r.clone()))
    }
}

fn repeat_add<S: Scalar>(one: &S, k: usize) -> S {
    let mut acc = one.clone() - one.clone();
    for _ in 0..k {
        acc = acc + one.clone();
    }
    acc
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        for (i, c) in short.coeffs.into_iter().enumerate() {
            long.coeffs[i] = long.coeffs[i].clone() + c;
        }
        Self::new(long.coeffs)
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out: Vec<Option<S>> = vec![None; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let p = a.clone() * b.clone();
                out[i + j] = Some(match out[i + j].take() {
                    Some(acc) => acc + p,
                    None => p,
                });
            }
        }
        Self::new(out.into_iter().map(|c| c.expect("every slot is written")).collect())
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})t", c)?,
                _ => write!(f, "({})t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mparith::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), 1);
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).eval(&q(3)), q(0));
    }

    #[test]
    fn product_and_eval() {
        let p = poly(&[-1, 1]) * poly(&[1, 1]);
        assert_eq!(p, poly(&[-1, 0, 1]));
        assert_eq!(p.eval(&q(3)), q(8));
        assert_eq!((p.clone() - p).degree(), 0);
    }

    #[test]
    fn rising_expansion() {
        // (t+1)_2 = (t+1)(t+2)
        assert_eq!(Polynomial::rising(&q(1), &q(1), 2), poly(&[2, 3, 1]));
        assert_eq!(Polynomial::rising(&q(3), &q(5), 0), poly(&[1]));
        let r = Polynomial::rising(&q(2), &q(-1), 3);
        for t in -3..4 {
            let x = q(2 * t - 1);
            assert_eq!(r.eval(&q(t)), x.clone() * (x.clone() + q(1)) * (x + q(2)));
        }
    }

    #[test]
    fn roots_and_derivative() {
        let p = Polynomial::from_roots(&[q(1), q(-2)], &q(1));
        assert_eq!(p, poly(&[-2, 1, 1]));
        assert_eq!(p.derivative(), poly(&[1, 2]));
    }
}
