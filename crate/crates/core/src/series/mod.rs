//! Truncated exponential-generating-function arithmetic.
//!
//! Series store *ordinary* coefficients internally; the EGF view
//! (coefficients of `t^n/n!`) multiplies by `n!` only at extraction via
//! [`TruncSeries::egf_coeff`]. That keeps multiplication a plain Cauchy
//! product. All operations are pure functions over immutable values.
//!
//! Binary operations require equal truncation orders; a mismatch is a
//! usage error and panics. Data-dependent failures (inverting a series
//! whose constant term has no inverse, dividing by `t^k` when low-order
//! coefficients are nonzero) are reported as errors.

mod bivariate;
mod ring;
mod univariate;

pub use bivariate::BiTruncSeries;
pub use ring::RingElem;
pub use univariate::TruncSeries;
