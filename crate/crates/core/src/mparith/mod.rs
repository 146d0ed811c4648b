//! Exact rationals, multiprecision real and complex numbers, and the
//! Gamma and Pochhammer primitives built on them.

mod complex;
mod gamma;
mod poch;
mod real;
mod scalar;

use alloc::string::String;

pub use complex::MpComplex;
pub use gamma::{gamma, gamma_ratio};
pub use poch::{delta_split, pochhammer, pochhammer_vec, rising_shifted};
pub use real::{bernoulli_even, digits_to_bits, MpReal};
pub use scalar::Scalar;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised anywhere in the evaluation pipeline.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum MathError {
    #[error("pole of Gamma at {0}")]
    Pole(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value cannot be represented exactly: {0}")]
    NotExact(String),
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("lower parameter {0} reaches a pole before the series terminates")]
    LowerParamPole(String),
    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("degenerate leading coefficient")]
    DegenerateLeadingCoefficient,
    #[error("polynomial has degree {0}, root extraction needs at least 1")]
    DegenerateDegree(usize),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("root {0} is a non-negative integer")]
    IntegerRoot(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
}

pub type MathResult<T> = core::result::Result<T, MathError>;

/// Target and guard digits; arithmetic runs at their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    pub target_digits: u32,
    pub guard_digits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { target_digits: 30, guard_digits: 20 }
    }
}

impl PrecisionContext {
    pub fn new(target_digits: u32) -> Self {
        Self::with_guard(target_digits, 20)
    }

    pub fn with_guard(target_digits: u32, guard_digits: u32) -> Self {
        assert!(target_digits + guard_digits >= 10, "working precision below 10 digits");
        PrecisionContext { target_digits, guard_digits }
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    pub fn bits(&self) -> u32 {
        digits_to_bits(self.working_digits())
    }

    /// Same target with `extra` more guard digits.
    pub fn widened(&self, extra: u32) -> Self {
        PrecisionContext { target_digits: self.target_digits, guard_digits: self.guard_digits + extra }
    }

    /// Relative tolerance used to accept float agreement, `10^(5 - target)`.
    pub fn tolerance_log10(&self) -> f64 {
        5.0 - self.target_digits as f64
    }
}
