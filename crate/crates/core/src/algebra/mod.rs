//! Exact scalar and polynomial arithmetic underlying everything else.
//!
//! [`Rational`] is the base scalar (arbitrary precision, always in lowest
//! terms, denominator positive). [`Poly`] is a dense univariate polynomial
//! over `Rational`; it carries the `x` variable of the polynomial families.
//! All values are immutable after construction.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::Rational;

/// Exact binomial coefficient C(n, k) as a `Rational`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = num_bigint::BigInt::from(1u32);
    let mut den = num_bigint::BigInt::from(1u32);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    Rational::from_bigint_parts(num, den)
}

/// n! as a `Rational`.
pub fn factorial(n: u64) -> Rational {
    let mut f = num_bigint::BigInt::from(1u32);
    for i in 2..=n {
        f *= i;
    }
    Rational::from_bigint(f)
}
