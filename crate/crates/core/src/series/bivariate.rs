//! Truncated power series in two variables `t` and `u`.

use crate::algebra::{factorial, Rational};
use crate::error::{Error, Result};

use super::{RingElem, TruncSeries};

/// A power series in `(t, u)` truncated at orders `(N_t, N_u)`.
///
/// `coeffs[n][m]` is the ordinary coefficient of `t^n u^m`; the matrix is
/// rectangular, `(N_t + 1) x (N_u + 1)`, and truncation is closed under
/// all operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiTruncSeries<R: RingElem> {
    coeffs: Vec<Vec<R>>,
}

impl<R: RingElem> BiTruncSeries<R> {
    pub fn zero(order_t: usize, order_u: usize) -> Self {
        BiTruncSeries {
            coeffs: vec![vec![R::zero(); order_u + 1]; order_t + 1],
        }
    }

    pub fn one(order_t: usize, order_u: usize) -> Self {
        let mut s = Self::zero(order_t, order_u);
        s.coeffs[0][0] = R::one();
        s
    }

    /// `e^{lambda_t t + lambda_u u}`: coefficients
    /// `lambda_t^n lambda_u^m / (n! m!)`.
    pub fn exp_linear(lambda_t: &R, lambda_u: &R, order_t: usize, order_u: usize) -> Self {
        let t_part = TruncSeries::exp_linear(lambda_t, order_t);
        let u_part = TruncSeries::exp_linear(lambda_u, order_u);
        let coeffs = t_part
            .coeffs()
            .iter()
            .map(|a| u_part.coeffs().iter().map(|b| a.mul(b)).collect())
            .collect();
        BiTruncSeries { coeffs }
    }

    /// Embeds a `t`-only series.
    pub fn from_t_series(f: &TruncSeries<R>, order_u: usize) -> Self {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|a| {
                let mut row = vec![R::zero(); order_u + 1];
                row[0] = a.clone();
                row
            })
            .collect();
        BiTruncSeries { coeffs }
    }

    pub fn order_t(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_u(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, n: usize, m: usize) -> &R {
        &self.coeffs[n][m]
    }

    /// EGF coefficient of `t^n/n! u^m/m!`.
    pub fn egf_coeff(&self, n: usize, m: usize) -> R {
        assert!(
            n <= self.order_t() && m <= self.order_u(),
            "EGF coefficient ({}, {}) beyond truncation orders ({}, {})",
            n,
            m,
            self.order_t(),
            self.order_u()
        );
        self.coeffs[n][m].scale(&(factorial(n as u64) * factorial(m as u64)))
    }

    /// Restriction to `u = 0`: the univariate `t`-series of the
    /// coefficients at `u^0`.
    pub fn at_u_zero(&self) -> TruncSeries<R> {
        TruncSeries::from_coeffs(self.coeffs.iter().map(|row| row[0].clone()).collect())
    }

    fn assert_same_orders(&self, other: &Self) {
        assert_eq!(self.order_t(), other.order_t(), "t-order mismatch");
        assert_eq!(self.order_u(), other.order_u(), "u-order mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_orders(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a.add(b)).collect())
            .collect();
        BiTruncSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_orders(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a.sub(b)).collect())
            .collect();
        BiTruncSeries { coeffs }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|a| a.scale(s)).collect())
            .collect();
        BiTruncSeries { coeffs }
    }

    /// Double Cauchy product, truncated at both orders.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_orders(other);
        let (nt, nu) = (self.order_t(), self.order_u());
        let mut coeffs = vec![vec![R::zero(); nu + 1]; nt + 1];
        for i in 0..=nt {
            for j in 0..=nu {
                if self.coeffs[i][j].is_zero() {
                    continue;
                }
                for p in 0..=(nt - i) {
                    for q in 0..=(nu - j) {
                        if other.coeffs[p][q].is_zero() {
                            continue;
                        }
                        let prod = self.coeffs[i][j].mul(&other.coeffs[p][q]);
                        coeffs[i + p][j + q] = coeffs[i + p][j + q].add(&prod);
                    }
                }
            }
        }
        BiTruncSeries { coeffs }
    }

    pub fn pow_u(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order_t(), self.order_u());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires an invertible `(0,0)` coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let c00 = self.coeffs[0][0]
            .try_invert()
            .ok_or_else(|| Error::SingularSeries(format!("{:?}", self.coeffs[0][0])))?;
        let (nt, nu) = (self.order_t(), self.order_u());
        let mut inv = vec![vec![R::zero(); nu + 1]; nt + 1];
        inv[0][0] = c00.clone();
        // Lexicographic order on (p, q): every convolution term references
        // an already-computed entry.
        for p in 0..=nt {
            for q in 0..=nu {
                if p == 0 && q == 0 {
                    continue;
                }
                let mut sum = R::zero();
                for i in 0..=p {
                    for j in 0..=q {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        if self.coeffs[i][j].is_zero() || inv[p - i][q - j].is_zero() {
                            continue;
                        }
                        sum = sum.add(&self.coeffs[i][j].mul(&inv[p - i][q - j]));
                    }
                }
                inv[p][q] = sum.neg().mul(&c00);
            }
        }
        Ok(BiTruncSeries { coeffs: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_parts(n, d).unwrap()
    }

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn exp_product_coefficient() {
        // e^t e^u: EGF coefficient of t^1 u^1 is 1
        let f = BiTruncSeries::exp_linear(&one(), &one(), 3, 3);
        assert_eq!(f.egf_coeff(1, 1), one());
        assert_eq!(f.coeff(2, 2), &q(1, 4));
    }

    #[test]
    fn mixed_exponential_inverse_round_trip() {
        // f = e^t + e^u - e^{t+u} has constant term 1 + 1 - 1 = 1
        let nt = 4;
        let nu = 4;
        let f = BiTruncSeries::exp_linear(&one(), &Rational::zero(), nt, nu)
            .add(&BiTruncSeries::exp_linear(&Rational::zero(), &one(), nt, nu))
            .sub(&BiTruncSeries::exp_linear(&one(), &one(), nt, nu));
        assert_eq!(f.coeff(0, 0), &one());
        let inv = f.inverse().unwrap();
        assert_eq!(f.mul(&inv), BiTruncSeries::one(nt, nu));
    }

    #[test]
    fn u_zero_specialization_matches_univariate() {
        // arithmetic restricted to u^0 reproduces univariate arithmetic
        let a = BiTruncSeries::exp_linear(&q(2, 1), &q(1, 1), 5, 3);
        let b = BiTruncSeries::exp_linear(&q(-1, 2), &q(3, 1), 5, 3);
        let prod = a.mul(&b).at_u_zero();
        let ua = TruncSeries::exp_linear(&q(2, 1), 5);
        let ub = TruncSeries::exp_linear(&q(-1, 2), 5);
        assert_eq!(prod, ua.mul(&ub));

        let inv = a.inverse().unwrap().at_u_zero();
        assert_eq!(inv, ua.inverse().unwrap());
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let f = BiTruncSeries::<Rational>::zero(2, 2);
        assert!(f.inverse().is_err());
    }
}
