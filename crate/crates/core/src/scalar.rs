//! The scalar abstraction: an exact field of characteristic zero.

use num::{BigInt, One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational numbers, the constant field Q.
///
/// `num::BigRational` keeps fractions reduced with a positive denominator and
/// represents zero as 0/1, which is exactly the invariant we need.
pub type BigRat = num::BigRational;

/// An exact field of characteristic zero.
///
/// Implemented by [`BigRat`] and by rational functions over a `Scalar`, so the
/// polynomial and reduction machinery works the same over Q and over Q(n).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embed an integer.
    fn from_i64(v: i64) -> Self;

    /// Embed a rational constant.
    fn from_rat(v: &BigRat) -> Self;

    /// Return the value as a rational constant if it is one.
    fn to_rat(&self) -> Option<BigRat>;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Whether printing this scalar may need parentheses inside a product.
    fn needs_parens(&self) -> bool;

    /// Render as a coefficient; `param` names the parameter variable of the
    /// coefficient field when there is one (e.g. "n" for Q(n)).
    fn coeff_text(&self, param: &str) -> String {
        let _ = param;
        self.to_string()
    }
}

impl Scalar for BigRat {
    fn from_i64(v: i64) -> Self {
        BigRat::from(BigInt::from(v))
    }

    fn from_rat(v: &BigRat) -> Self {
        v.clone()
    }

    fn to_rat(&self) -> Option<BigRat> {
        Some(self.clone())
    }

    fn needs_parens(&self) -> bool {
        false
    }
}

/// Rational constant from an integer pair, mainly for tests and parsing.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(v: i64) -> BigRat {
    BigRat::from(BigInt::from(v))
}
