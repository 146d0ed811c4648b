//! Parameter bindings and the random source that draws them.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mparith::{PrecisionContext, Rational, Scalar};

/// A bound parameter value. Everything is rational so bindings can be
/// replayed exactly in either arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Q(Rational),
    Int(i64),
    QVec(Vec<Rational>),
    IntVec(Vec<u64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")
        }
        match self {
            Value::Q(q) => write!(f, "{}", q),
            Value::Int(n) => write!(f, "{}", n),
            Value::QVec(v) => list(f, v),
            Value::IntVec(v) => list(f, v),
        }
    }
}

/// Ordered name to value map.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Binding {
    entries: Vec<(&'static str, Value)>,
}

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &'static str, v: Value) -> &mut Self {
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = v,
            None => self.entries.push((name, v)),
        }
        self
    }

    pub fn with(mut self, name: &'static str, v: Value) -> Self {
        self.set(name, v);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.entries.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|(n, _)| *n)
    }

    /// Rational parameter. Integers are promoted.
    ///
    /// # Panics
    /// If `name` is unbound or holds a vector.
    pub fn q(&self, name: &str) -> Rational {
        match self.get(name) {
            Some(Value::Q(q)) => q.clone(),
            Some(Value::Int(n)) => Rational::from_integer((*n).into()),
            other => panic!("parameter {} is {:?}, expected a scalar", name, other),
        }
    }

    pub fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            Some(Value::Int(n)) => *n,
            other => panic!("parameter {} is {:?}, expected an integer", name, other),
        }
    }

    pub fn qs(&self, name: &str) -> Vec<Rational> {
        match self.get(name) {
            Some(Value::QVec(v)) => v.clone(),
            other => panic!("parameter {} is {:?}, expected a vector", name, other),
        }
    }

    pub fn ints(&self, name: &str) -> Vec<u64> {
        match self.get(name) {
            Some(Value::IntVec(v)) => v.clone(),
            other => panic!("parameter {} is {:?}, expected an integer vector", name, other),
        }
    }

    pub fn s<S: Scalar>(&self, name: &str, ctx: &PrecisionContext) -> S {
        S::from_rational(&self.q(name), ctx)
    }

    pub fn sv<S: Scalar>(&self, name: &str, ctx: &PrecisionContext) -> Vec<S> {
        self.qs(name).iter().map(|q| S::from_rational(q, ctx)).collect()
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}={}", n, v)?;
        }
        Ok(())
    }
}

/// Deterministic stream of small parameters for one `(seed, id, trial)`.
pub struct Draw {
    rng: ChaCha8Rng,
}

impl Draw {
    pub fn new(seed: u64, id: &str, trial: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&trial.to_le_bytes());
        for (i, b) in id.bytes().enumerate() {
            key[16 + i % 16] ^= b.rotate_left((i / 16) as u32);
        }
        Draw { rng: ChaCha8Rng::from_seed(key) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// `n/d` with `|n| <= 12` and `1 <= d <= 12`.
    pub fn rat(&mut self) -> Rational {
        let n = self.int(-12, 12);
        let d = self.int(1, 12);
        Rational::new(n.into(), d.into())
    }

    /// Like [`Draw::rat`] but strictly positive.
    pub fn pos(&mut self) -> Rational {
        let n = self.int(1, 12);
        let d = self.int(1, 12);
        Rational::new(n.into(), d.into())
    }

    pub fn rats(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rat()).collect()
    }

    pub fn ints(&mut self, len: usize, lo: u64, hi: u64) -> Vec<u64> {
        (0..len).map(|_| self.int(lo as i64, hi as i64) as u64).collect()
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.rng.gen_range(0..xs.len())]
    }
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn display_and_access() {
        let b = Binding::new()
            .with("alpha", Value::Q(q(3, 2)))
            .with("n", Value::Int(2))
            .with("h", Value::QVec(vec![q(1, 3), qi(2)]))
            .with("p", Value::IntVec(vec![1, 2]));
        assert_eq!(b.to_string(), "alpha=3/2 n=2 h=(1/3,2) p=(1,2)");
        assert_eq!(b.q("n"), qi(2));
        assert_eq!(b.ints("p"), vec![1, 2]);
    }

    #[test]
    fn draws_are_reproducible() {
        let mut a = Draw::new(7, "T1", 3);
        let mut b = Draw::new(7, "T1", 3);
        let mut c = Draw::new(7, "T2", 3);
        let xa: Vec<_> = (0..8).map(|_| a.rat()).collect();
        let xb: Vec<_> = (0..8).map(|_| b.rat()).collect();
        let xc: Vec<_> = (0..8).map(|_| c.rat()).collect();
        assert_eq!(xa, xb);
        assert_ne!(xa, xc);
    }
}
