//! Combinatorial numbers and classical polynomial oracles.
//!
//! The classical Bernoulli / Euler-polynomial oracles are computed by
//! their defining recurrences, deliberately *not* through the series
//! engine, so they can serve as engine-independent cross-checks.

use crate::algebra::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::series::{RingElem, TruncSeries};

/// Triangle of Stirling numbers of the second kind `S(n, m)`.
///
/// Built once by the recurrence `S(n+1, m) = m S(n, m) + S(n, m-1)` with
/// `S(0, 0) = 1`, immutable thereafter.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<Rational>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Rational::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Rational::zero(); n + 1];
            for m in 1..=n {
                let keep = &Rational::from(m as u64) * &prev.get(m).cloned().unwrap_or_else(Rational::zero);
                row[m] = keep + prev[m - 1].clone();
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n, m)`; zero outside the triangle.
    pub fn get(&self, n: usize, m: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(m))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Stirling number of the second kind `S(n, m)`.
pub fn stirling2(n: usize, m: usize) -> Rational {
    if m > n {
        return Rational::zero();
    }
    StirlingTable::new(n).get(n, m)
}

/// The `(r, beta)`-generalized Stirling number with parameters
/// `beta` (a nonzero rational) and `rho` (a ring element, so a symbolic
/// polynomial parameter is allowed).
///
/// Computed as the finite sum
/// `(1/(beta^m m!)) sum_{j=0..m} C(m,j) (-1)^{m-j} (j beta + rho)^n`,
/// which is what the defining generating function
/// `(1/(beta^m m!)) e^{rho t} (e^{beta t} - 1)^m` expands to.
pub fn rbeta_stirling<R: RingElem>(n: usize, m: usize, beta: &Rational, rho: &R) -> Result<R> {
    if beta.is_zero() {
        return Err(Error::DegenerateParameter("beta = 0 in generalized Stirling".into()));
    }
    let mut sum = R::zero();
    for j in 0..=m {
        let base = R::from_rational(&(beta * &Rational::from(j as u64))).add(rho);
        let sign = if (m - j) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let term = base.pow_u(n as u32).scale(&(binomial(m as u64, j as u64) * sign));
        sum = sum.add(&term);
    }
    let norm = (beta.pow(m as i64).unwrap() * factorial(m as u64)).recip().unwrap();
    Ok(sum.scale(&norm))
}

/// Rising factorial `x (x+1) ... (x+m-1)`, with the empty product 1.
pub fn rising_factorial<R: RingElem>(x: &R, m: usize) -> R {
    let mut acc = R::one();
    for i in 0..m {
        acc = acc.mul(&x.add(&R::from_rational(&Rational::from(i as u64))));
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-m+1)`.
pub fn falling_factorial<R: RingElem>(x: &R, m: usize) -> R {
    let mut acc = R::one();
    for i in 0..m {
        acc = acc.mul(&x.sub(&R::from_rational(&Rational::from(i as u64))));
    }
    acc
}

/// `(e^t - 1)/t` truncated at `order` (unit constant term).
fn exp_minus_one_over_t<R: RingElem>(order: usize) -> TruncSeries<R> {
    let exp = TruncSeries::exp_linear(&R::one(), order + 1);
    let num = exp.sub(&TruncSeries::one(order + 1));
    num.shift_div_t(1).expect("e^t - 1 vanishes at t = 0")
}

/// Higher-order Bernoulli polynomial value `B_n^{(s)}(x0)`, from the
/// generating function `(t/(e^t - 1))^s e^{x0 t}`.
pub fn bernoulli_higher<R: RingElem>(n: usize, s: u32, x0: &R) -> R {
    let base = exp_minus_one_over_t::<R>(n)
        .inverse()
        .expect("(e^t - 1)/t has constant term 1")
        .pow_u(s);
    base.mul(&TruncSeries::exp_linear(x0, n)).egf_coeff(n)
}

/// Frobenius-Euler polynomial value `H_n^{(s)}(x0; lambda)`, from the
/// generating function `((1 - lambda)/(e^t - lambda))^s e^{x0 t}`.
pub fn frobenius_euler<R: RingElem>(n: usize, s: u32, x0: &R, lambda: &Rational) -> Result<R> {
    if lambda.is_one() {
        return Err(Error::DegenerateParameter("lambda = 1 in Frobenius-Euler".into()));
    }
    let exp = TruncSeries::exp_linear(&R::one(), n);
    let lam = TruncSeries::monomial(R::from_rational(lambda), 0, n);
    let denom = exp.sub(&lam);
    let base = denom
        .inverse()
        .expect("e^t - lambda has nonzero constant term")
        .scale_rational(&(Rational::one() - lambda.clone()))
        .pow_u(s);
    Ok(base.mul(&TruncSeries::exp_linear(x0, n)).egf_coeff(n))
}

/// Bernoulli numbers `B_0..B_{n_max}` in the `B_1 = -1/2` convention,
/// from the recurrence `sum_j C(n+1, j) B_j = 0`.
pub fn classical_bernoulli_table(n_max: usize) -> Vec<Rational> {
    let mut b = Vec::with_capacity(n_max + 1);
    b.push(Rational::one());
    for n in 1..=n_max {
        let sum: Rational = (0..n)
            .map(|j| binomial(n as u64 + 1, j as u64) * b[j].clone())
            .sum();
        let val = -sum / Rational::from(n as u64 + 1);
        b.push(val);
    }
    b
}

pub fn classical_bernoulli(n: usize) -> Rational {
    classical_bernoulli_table(n).pop().unwrap()
}

/// Euler polynomials `E_0(x0)..E_{n_max}(x0)` from the recurrence
/// `E_n(x) = x^n - (1/2) sum_{j<n} C(n, j) E_j(x)`, independent of the
/// series engine.
pub fn classical_euler_poly_table<R: RingElem>(n_max: usize, x0: &R) -> Vec<R> {
    let mut e: Vec<R> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut val = x0.pow_u(n as u32);
        let mut sum = R::zero();
        for (j, ej) in e.iter().enumerate() {
            sum = sum.add(&ej.scale(&binomial(n as u64, j as u64)));
        }
        val = val.sub(&sum.scale(&Rational::from_parts(1, 2).unwrap()));
        e.push(val);
    }
    e
}

pub fn classical_euler_poly<R: RingElem>(n: usize, x0: &R) -> R {
    classical_euler_poly_table(n, x0).pop().unwrap()
}

/// Bell numbers by the recurrence `B_{n+1} = sum_k C(n, k) B_k`.
pub fn bell_table(n_max: usize) -> Vec<Rational> {
    let mut bell = vec![Rational::one()];
    for n in 0..n_max {
        let next: Rational = (0..=n)
            .map(|k| binomial(n as u64, k as u64) * bell[k].clone())
            .sum();
        bell.push(next);
    }
    bell
}
