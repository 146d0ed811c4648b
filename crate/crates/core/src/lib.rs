//! Extended generalized hypergeometric functions with polynomial
//! characteristics, the polynomial families that appear in their
//! transformation and summation formulas, and a catalog of those
//! formulas that can be checked exactly or in multiprecision.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod hypseries;
pub mod mparith;
pub mod polyfactory;

pub use mparith::{MathError, MpComplex, MpReal, PrecisionContext, Rational, Scalar};
