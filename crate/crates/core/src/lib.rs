//! Exact-arithmetic index theory on cohomology CP^m models.
//!
//! The crate is organized in layers:
//!
//! - [`algebra`]: the exact coefficient tower — arbitrary-precision rationals,
//!   truncated polynomials Q[x]/(x^{m+1}), Laurent polynomials and rational
//!   functions in the circle variable λ, and truncated q-power series over any
//!   of these.
//! - [`phi`]: the Weierstrass φ-function as an exact q-series.
//! - [`classes`]: characteristic-class calculus from formal roots
//!   (multiplicative sequences, Chern character, spinor characters, twist
//!   series of symmetric/exterior powers).
//! - [`index`]: non-equivariant twisted Spin^c indices, the mod-24
//!   congruence, the vanishing relations on the top Â-components, and the
//!   Pontrjagin-class reconstruction solver.
//! - [`lefschetz`]: S^1 fixed-point data, exact local terms, their summation
//!   and pole-cancellation checks, weight identities and the bound machinery
//!   for the first Pontrjagin class.
//! - [`jacobi`]: complex-numeric evaluation of φ and verification of the
//!   Jacobi transformation laws.
//! - [`report`] / [`fixture`]: machine-readable verification reports and the
//!   JSON fixture format used by the CLI.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything can be shared freely across threads.

pub mod algebra;
pub mod classes;
pub mod fixture;
pub mod index;
pub mod jacobi;
pub mod lefschetz;
pub mod phi;
pub mod report;

pub use algebra::{
    qseries::QSeries,
    rational_fn::LaurentRational,
    laurent::LaurentPoly,
    ring::CoeffRing,
    truncpoly::{EqPoly, Poly, TruncPoly},
    AlgebraError, Int, Rat,
};
