//! Multiple polylogarithms and Hurwitz-Lerch zeta variants as truncated
//! series, plus their compositions with `1 - e^{-lambda t}`.
//!
//! Chain sums are computed by dynamic programming over the depth with
//! prefix sums (strict chains) or running sums (weak chains), so the cost
//! is `O(depth * order)` ring operations rather than an enumeration of
//! chains.

use std::fmt;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::series::TruncSeries;

/// An ordered integer index vector `(k_1, ..., k_r)`; entries may be
/// negative, the depth `r` is at least 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyIndex);
        }
        Ok(MultiIndex(entries))
    }

    /// Convenience constructor for statically known, nonempty index lists.
    pub fn of(entries: &[i64]) -> Self {
        MultiIndex::new(entries.to_vec()).expect("nonempty index list")
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn last(&self) -> i64 {
        *self.0.last().unwrap()
    }

    /// Index with the last entry decremented.
    pub fn decrement_last(&self) -> MultiIndex {
        let mut v = self.0.clone();
        *v.last_mut().unwrap() -= 1;
        MultiIndex(v)
    }

    /// Index with the first entry decremented.
    pub fn decrement_first(&self) -> MultiIndex {
        let mut v = self.0.clone();
        v[0] -= 1;
        MultiIndex(v)
    }

    /// Index with the last entry dropped; `None` at depth 1.
    pub fn drop_last(&self) -> Option<MultiIndex> {
        if self.0.len() == 1 {
            return None;
        }
        Some(MultiIndex(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Entries in reversed order.
    pub fn reversed(&self) -> MultiIndex {
        let mut v = self.0.clone();
        v.reverse();
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The parameters `(alpha, beta, gamma) = (ln a, ln b, ln c)` as exact
/// rationals. The generating functions depend on `a, b, c` only through
/// these logarithms, which keeps all arithmetic rational.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamTriple {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl ParamTriple {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        ParamTriple { alpha, beta, gamma }
    }

    pub fn from_i64(alpha: i64, beta: i64, gamma: i64) -> Self {
        ParamTriple::new(Rational::from(alpha), Rational::from(beta), Rational::from(gamma))
    }

    /// `ln a + ln b`, the quantity the papers' reductions divide by.
    pub fn ln_ab(&self) -> Rational {
        &self.alpha + &self.beta
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.gamma)
    }
}

/// The multiple polylogarithm as a truncated series in `z`.
///
/// The coefficient of `z^M` is the sum over strict chains
/// `0 < m_1 < ... < m_{r-1} < M` of `prod m_i^{-k_i} * M^{-k_r}`; in
/// particular it vanishes for `M < depth`.
pub fn multi_polylog_z(k: &MultiIndex, order: usize) -> TruncSeries<Rational> {
    let mut layer = vec![Rational::zero(); order + 1];
    for (m, c) in layer.iter_mut().enumerate().skip(1) {
        *c = Rational::from(m as u64).pow(-k.entries()[0]).unwrap();
    }
    for &ki in &k.entries()[1..] {
        let mut next = vec![Rational::zero(); order + 1];
        let mut prefix = Rational::zero();
        for m in 1..=order {
            prefix = prefix + layer[m - 1].clone();
            if !prefix.is_zero() {
                next[m] = Rational::from(m as u64).pow(-ki).unwrap() * prefix.clone();
            }
        }
        layer = next;
    }
    TruncSeries::from_coeffs(layer)
}

/// The series of `1 - e^{-lambda t}` (zero constant term).
pub fn one_minus_exp_neg(lambda: &Rational, order: usize) -> TruncSeries<Rational> {
    TruncSeries::one(order).sub(&TruncSeries::exp_linear(&-lambda, order))
}

/// `Li_{(k_1..k_r)}(1 - e^{-lambda t})` as a truncated series in `t`.
pub fn multi_polylog_t(k: &MultiIndex, lambda: &Rational, order: usize) -> TruncSeries<Rational> {
    multi_polylog_z(k, order)
        .compose(&one_minus_exp_neg(lambda, order))
        .expect("inner series vanishes at t = 0")
}

/// Hurwitz-Lerch zeta series: coefficient of `z^n` is `(n + a)^{-k}`.
///
/// Rejects `a` in `{0, -1, ..., -order}`, where a denominator would
/// vanish inside the truncation window.
pub fn hurwitz_lerch_phi(k: i64, a: &Rational, order: usize) -> Result<TruncSeries<Rational>> {
    let neg_a = -a;
    if a.is_integer() && !neg_a.is_negative() && neg_a <= Rational::from(order as u64) {
        return Err(Error::PoleParameter(format!(
            "Hurwitz parameter a = {} hits a zero denominator at n = {}",
            a, neg_a
        )));
    }
    let coeffs = (0..=order)
        .map(|n| (Rational::from(n as u64) + a.clone()).pow(-k))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::from_coeffs(coeffs))
}

/// Rejects parameters for which some denominator factor
/// `(m_i + a - r + i)` vanishes with `m_i <= max_m`.
pub fn hl_pole_screen(k: &MultiIndex, a: &Rational, max_m: usize) -> Result<()> {
    let r = k.depth();
    for i in 1..=r {
        let shift = a + &(Rational::from(i as u64) - Rational::from(r as u64));
        let neg = -&shift;
        if shift.is_integer() && !neg.is_negative() && neg <= Rational::from(max_m as u64) {
            return Err(Error::PoleParameter(format!(
                "factor {} of the multiple Hurwitz-Lerch series vanishes for a = {}",
                i, a
            )));
        }
    }
    Ok(())
}

/// The Hurwitz-Lerch *multiple* zeta series: the coefficient of `z^M`
/// sums over weak chains `0 <= m_1 <= ... <= m_r = M` with denominator
/// factors `(m_i + a - r + i)^{k_i}`.
pub fn hl_multi_phi(k: &MultiIndex, a: &Rational, order: usize) -> Result<TruncSeries<Rational>> {
    let r = k.depth();
    hl_pole_screen(k, a, order)?;
    let factor = |m: usize, i: usize, ki: i64| -> Rational {
        let base = Rational::from(m as u64) + a.clone() - Rational::from(r as u64)
            + Rational::from(i as u64);
        base.pow(-ki).expect("pole screened above")
    };
    let mut layer: Vec<Rational> = (0..=order).map(|m| factor(m, 1, k.entries()[0])).collect();
    for (idx, &ki) in k.entries().iter().enumerate().skip(1) {
        let i = idx + 1;
        let mut next = vec![Rational::zero(); order + 1];
        let mut running = Rational::zero();
        for m in 0..=order {
            running = running + layer[m].clone();
            next[m] = factor(m, i, ki) * running.clone();
        }
        layer = next;
    }
    Ok(TruncSeries::from_coeffs(layer))
}

/// Both sides of the polylogarithm derivative rule, as series of order
/// `order - 1`.
///
/// For a last entry `k_r != 1` the right side is `Li_{k_1..k_r - 1}(z)/z`;
/// for `k_r = 1` it is `Li_{k_1..k_{r-1}}(z)/(1-z)`, with the depth-1 case
/// read directly as `d/dz Li_1(z) = 1/(1-z)`.
pub fn derivative_rule_sides(
    k: &MultiIndex,
    order: usize,
) -> (TruncSeries<Rational>, TruncSeries<Rational>) {
    let lhs = multi_polylog_z(k, order).derivative();
    let rhs = if k.last() == 1 {
        let geom = one_minus_z(order - 1).inverse().expect("1 - z is a unit");
        match k.drop_last() {
            Some(head) => multi_polylog_z(&head, order - 1).mul(&geom),
            None => geom,
        }
    } else {
        multi_polylog_z(&k.decrement_last(), order)
            .shift_div_t(1)
            .expect("polylogarithm has no constant term")
    };
    (lhs, rhs)
}

/// True iff the derivative rule holds coefficient-wise up to `order - 1`.
pub fn polylog_derivative_check(k: &MultiIndex, order: usize) -> bool {
    let (lhs, rhs) = derivative_rule_sides(k, order);
    lhs == rhs
}

fn one_minus_z(order: usize) -> TruncSeries<Rational> {
    TruncSeries::one(order).sub(&TruncSeries::monomial(Rational::one(), 1, order))
}
