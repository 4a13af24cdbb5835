//! Coefficient-ring abstraction for the series engine.

use crate::algebra::{Poly, Rational};

/// A commutative ring with a distinguished embedding of the rationals.
///
/// Implemented by [`Rational`] itself and by [`Poly`] (so series can carry
/// a symbolic `x` in their coefficients). Inversion is partial: every
/// nonzero rational is invertible, while a polynomial is invertible only
/// when it is a nonzero constant.
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, s: &Rational) -> Self;
    /// Canonical image of a rational in this ring.
    fn from_rational(q: &Rational) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn try_invert(&self) -> Option<Self>;

    fn pow_u(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl RingElem for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn try_invert(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl RingElem for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        Poly::scale(self, s)
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
    fn try_invert(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Poly::constant(self.coeff(0).recip().ok()?)),
            _ => None,
        }
    }
}
