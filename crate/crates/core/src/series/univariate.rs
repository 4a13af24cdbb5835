//! Truncated power series in one variable.

use crate::algebra::{factorial, Rational};
use crate::error::{Error, Result};

use super::RingElem;

/// A power series in `t` truncated at a fixed order `N`, with coefficients
/// in a ring `R`.
///
/// `coeffs[n]` is the ordinary coefficient of `t^n`; the vector always has
/// length `N + 1` and arithmetic never reads beyond the truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<R: RingElem> {
    coeffs: Vec<R>,
}

impl<R: RingElem> TruncSeries<R> {
    /// Series with the given ordinary coefficients; the order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        assert!(k <= order, "monomial degree beyond truncation order");
        let mut s = Self::zero(order);
        s.coeffs[k] = c;
        s
    }

    /// `e^{lambda t}` truncated at `order`: ordinary coefficients
    /// `lambda^n / n!`.
    pub fn exp_linear(lambda: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pow = R::one();
        for n in 0..=order {
            if n > 0 {
                pow = pow.mul(lambda);
            }
            coeffs.push(pow.scale(&factorial(n as u64).recip().unwrap()));
        }
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ordinary coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// EGF coefficient: `n! *` (ordinary coefficient of `t^n`).
    ///
    /// Panics if `n` exceeds the truncation order.
    pub fn egf_coeff(&self, n: usize) -> R {
        assert!(
            n <= self.order(),
            "EGF coefficient {} beyond truncation order {}",
            n,
            self.order()
        );
        self.coeffs[n].scale(&factorial(n as u64))
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation order mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        TruncSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncSeries { coeffs }
    }

    /// Coefficient-wise multiplication by a ring element.
    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn pow_u(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse: `self * result = 1 + O(t^{N+1})`.
    ///
    /// Requires the constant term to be invertible in `R`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .try_invert()
            .ok_or_else(|| Error::SingularSeries(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut inv = vec![R::zero(); n + 1];
        inv[0] = c0.clone();
        for m in 1..=n {
            // c[m] = -c0_inv * sum_{k=1..m} f[k] * c[m-k]
            let mut sum = R::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() || inv[m - k].is_zero() {
                    continue;
                }
                sum = sum.add(&self.coeffs[k].mul(&inv[m - k]));
            }
            inv[m] = sum.neg().mul(&c0);
        }
        Ok(TruncSeries { coeffs: inv })
    }

    /// Composition `self(other)` by Horner's scheme.
    ///
    /// The inner series must have zero constant term; the result carries
    /// the common truncation order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.assert_same_order(inner);
        if !inner.coeffs[0].is_zero() {
            return Err(Error::SingularSeries(
                "composition requires zero inner constant term".into(),
            ));
        }
        let order = self.order();
        let mut acc = TruncSeries::monomial(self.coeffs[order].clone(), 0, order);
        for i in (0..order).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[i]);
        }
        Ok(acc)
    }

    /// Exact division by `t^k`: requires the first `k` coefficients to be
    /// zero; the result has order `N - k`.
    pub fn shift_div_t(&self, k: usize) -> Result<Self> {
        assert!(k >= 1 && k <= self.order(), "invalid shift power");
        for (i, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(Error::NonDivisible { power: k, index: i });
            }
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Ordinary derivative with respect to the series variable; the result
    /// has order `N - 1`.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale(&Rational::from(n as u64)))
            .collect();
        TruncSeries { coeffs }
    }

    /// Truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Maps coefficients into another ring.
    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl TruncSeries<Rational> {
    /// Lifts a rational series into any coefficient ring.
    pub fn lift<S: RingElem>(&self) -> TruncSeries<S> {
        self.map(S::from_rational)
    }
}
