//! Exact computation of poly-Bernoulli / poly-Euler style number and
//! polynomial families, together with an identity-verification harness.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the computation path. Each family is defined
//! by a truncated exponential generating function (the definition of
//! record) and, where one exists, by an explicit closed-form sum. The
//! [`harness`] module recomputes both sides of every supported identity
//! over a parameter grid and reports exact agreement or the first
//! mismatching coefficient.

pub mod algebra;
pub mod error;
pub mod families;
pub mod harness;
pub mod polylog;
pub mod series;
pub mod special;

pub use algebra::{Poly, Rational};
pub use error::{Error, Result};
pub use series::{BiTruncSeries, RingElem, TruncSeries};
