//! Exact symbolic summation for hypergeometric terms.
//!
//! The engine decomposes a hypergeometric term T(k) into a summable part and a
//! canonical non-summable remainder (a residual form), decides summability, and
//! for bivariate terms T(n,k) computes minimal telescopers with certificates by
//! reduction-based creative telescoping, together with upper and lower bounds on
//! the telescoper order.
//!
//! All arithmetic is exact. The scalar type of polynomials and rational
//! functions is generic over [`scalar::Scalar`]; the two instantiations used in
//! practice are plain rationals (univariate terms over Q) and rational functions
//! in `n` (bivariate terms, where coefficients live in Q(n)).

pub mod scalar;
#[macro_use]
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod shifts;
pub mod factor;
pub mod linear;
pub mod bipoly;
pub mod hyperterm;
pub mod reduction;
pub mod telescoping;

pub use scalar::{BigRat, Scalar};

/// Polynomials over Q in the summation variable.
pub type QPoly = poly::Poly<BigRat>;
/// Rational functions over Q in the summation variable.
pub type QRat = ratfunc::RatFunc<BigRat>;
/// The coefficient field Q(n) of the bivariate layer.
pub type NRat = ratfunc::RatFunc<BigRat>;
/// Polynomials in k with coefficients in Q(n), i.e. elements of Q(n)[k].
pub type NkPoly = poly::Poly<NRat>;
/// Rational functions in k over Q(n), i.e. elements of Q(n)(k) = Q(n,k).
pub type NkRat = ratfunc::RatFunc<NRat>;

use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The input expression is not a hypergeometric term.
    #[error("not a hypergeometric term: {0}")]
    NotHypergeometric(String),
    /// No telescoper exists for the given term (integer-linearity criterion).
    #[error("no telescoper exists")]
    NoTelescoper,
    /// Internal degree growth exceeded the configured limit.
    #[error("degree limit exceeded ({0}); raise HYPERSUM_MAX_DEGREE")]
    DegreeLimit(usize),
    /// The requested evaluation path runs through a pole.
    #[error("pole encountered at ({0}, {1})")]
    Pole(i64, i64),
    /// Malformed input to an engine operation.
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Degree cap for internal growth, read from `HYPERSUM_MAX_DEGREE` (default 10000).
pub fn max_degree() -> usize {
    static LIMIT: std::sync::OnceLock<usize> = std::sync::OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("HYPERSUM_MAX_DEGREE")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(10_000)
    })
}

pub(crate) fn check_degree(d: usize) -> Result<(), Error> {
    if d > max_degree() {
        Err(Error::DegreeLimit(max_degree()))
    } else {
        Ok(())
    }
}
