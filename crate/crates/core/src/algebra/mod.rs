//! Exact scalars, binomial-type coefficients, integer partitions and
//! truncated multivariate polynomials.
//!
//! Every count in the crate is carried as an arbitrary-precision integer;
//! rational numbers only appear as polynomial coefficients and in the
//! `1/r!` normalisation of Macdonald's formula.

mod binomial;
mod partition;
mod poly;

pub use binomial::{binom, choose, choose_nonneg, factorial, multinomial};
pub use partition::{partitions_of, Partition};
pub use poly::TruncatedMultiPoly;

pub type ExactInt = num_bigint::BigInt;
pub type ExactRat = num_rational::BigRational;

/// Converts a rational known to be integral, or returns `None`.
pub fn to_integer(value: &ExactRat) -> Option<ExactInt> {
    if value.is_integer() {
        Some(value.to_integer())
    } else {
        None
    }
}
