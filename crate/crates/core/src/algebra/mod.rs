//! Exact arithmetic tower.
//!
//! Scalars are arbitrary-precision rationals ([`Rat`], backed by
//! `num-rational`, which keeps gcd(|num|, den) = 1 and den > 0 as structural
//! invariants). On top of those sit truncated polynomials
//! ([`truncpoly::TruncPoly`]), finite Laurent polynomials in the circle
//! variable λ ([`laurent::LaurentPoly`]), canonical rational functions in λ
//! ([`rational_fn::LaurentRational`]) and truncated q-power series
//! ([`qseries::QSeries`]) over any of them.

pub mod laurent;
pub mod qseries;
pub mod rational_fn;
pub mod ring;
pub mod truncpoly;

pub use laurent::LaurentPoly;
pub use qseries::QSeries;
pub use rational_fn::LaurentRational;
pub use ring::CoeffRing;
pub use truncpoly::{EqPoly, Poly, TruncPoly};

use thiserror::Error;

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// Errors of the exact layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("q^0 coefficient is not invertible")]
    NonUnitConstantTerm,
    #[error("exponential of a polynomial with nonzero constant term")]
    NonNilpotentInput,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at evaluation point")]
    PoleAtEvaluationPoint,
}

/// `n` as an exact rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
