//! Poly-Euler style families.

use crate::algebra::{binomial, factorial, Rational};
use crate::polylog::{multi_polylog_t, MultiIndex, ParamTriple};
use crate::series::{RingElem, TruncSeries};

use super::scaled;

/// Values `E_0^{(k)}(x) .. E_n^{(k)}(x)` of the poly-Euler polynomials,
/// from `2 Li_k(1-e^{-t}) e^{xt} / (1+e^t)`.
pub fn poly_euler_poly<R: RingElem>(k: i64, x: &R, n_max: usize) -> Vec<R> {
    let li = multi_polylog_t(&MultiIndex::of(&[k]), &Rational::one(), n_max);
    let denom = TruncSeries::one(n_max).add(&TruncSeries::exp_linear(&Rational::one(), n_max));
    let base = li
        .mul(&denom.inverse().expect("1 + e^t has constant term 2"))
        .scale_rational(&Rational::from(2));
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(x, n_max));
    (0..=n_max).map(|n| series.egf_coeff(n)).collect()
}

/// Ohno-Sasaki poly-Euler numbers, from `Li_k(1-e^{-4t}) / (4t cosh t)`.
pub fn ohno_sasaki_poly_euler(k: i64, n_max: usize) -> Vec<Rational> {
    let li = multi_polylog_t(&MultiIndex::of(&[k]), &Rational::from(4), n_max + 1);
    let over_4t = li
        .shift_div_t(1)
        .expect("Li_k(1-e^{-4t}) vanishes at t = 0")
        .scale_rational(&Rational::from_parts(1, 4).unwrap());
    let cosh = TruncSeries::exp_linear(&Rational::one(), n_max)
        .add(&TruncSeries::exp_linear(&-Rational::one(), n_max))
        .scale_rational(&Rational::from_parts(1, 2).unwrap());
    let series = over_4t.mul(&cosh.inverse().expect("cosh 0 = 1"));
    (0..=n_max).map(|n| series.egf_coeff(n)).collect()
}

/// `2 Li_{(k)}(1-(ab)^{-t}) / (a^{-t}+b^t)^r` — the generalized multi
/// poly-Euler generating function without its exponential factor.
fn mpe_base(k: &MultiIndex, alpha: &Rational, beta: &Rational, order: usize) -> TruncSeries<Rational> {
    let lam = alpha + beta;
    let li = multi_polylog_t(k, &lam, order);
    let denom = TruncSeries::exp_linear(&-alpha, order)
        .add(&TruncSeries::exp_linear(beta, order))
        .pow_u(k.depth() as u32);
    li.mul(&denom.inverse().expect("denominator has constant term 2^r"))
        .scale_rational(&Rational::from(2))
}

/// Generalized multi poly-Euler polynomial values
/// `E_n^{(k_1..k_r)}(x; a, b, c)` for `n = 0..n_max`.
///
/// `ln a + ln b = 0` is allowed: the numerator then degenerates to the
/// zero series and the values are all zero.
pub fn multi_poly_euler<R: RingElem>(
    k: &MultiIndex,
    x: &R,
    p: &ParamTriple,
    n_max: usize,
) -> Vec<R> {
    let base = mpe_base(k, &p.alpha, &p.beta, n_max);
    let exponent = scaled(x, &(&p.gamma * &Rational::from(k.depth() as u64)));
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(&exponent, n_max));
    (0..=n_max).map(|n| series.egf_coeff(n)).collect()
}

/// The variant with a plain `e^{yt}` in place of `c^{rxt}`: the form the
/// Stirling identities expand against. Satisfies
/// `multi_poly_euler(k, x, p, n) = multi_poly_euler_shifted(k, r*gamma*x, alpha, beta, n)`.
pub fn multi_poly_euler_shifted<R: RingElem>(
    k: &MultiIndex,
    y: &R,
    alpha: &Rational,
    beta: &Rational,
    n_max: usize,
) -> Vec<R> {
    let base = mpe_base(k, alpha, beta, n_max);
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(y, n_max));
    (0..=n_max).map(|n| series.egf_coeff(n)).collect()
}

/// Which reading of the explicit multi poly-Euler sum to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MpeExplicitVariant {
    /// Finite closed form derived from the generating function by the
    /// `(2 - w)^{-r}` expansion of the denominator; agrees with route A.
    Corrected,
    /// The sum as displayed at the source: compositions `c_1+..+c_r = r`
    /// with `s = sum i c_i` and exponent pieces
    /// `(rx ln c - j ln ab)` and `(s ln ab + r ln a)`.
    Stated,
}

/// Explicit (route B) value of `E_n^{(k_1..k_r)}(x; a, b, c)`, using the
/// adjudicated-correct closed form and the default chain bound.
pub fn multi_poly_euler_explicit(n: usize, k: &MultiIndex, x: &Rational, p: &ParamTriple) -> Rational {
    multi_poly_euler_explicit_with(n, k, x, p, MpeExplicitVariant::Corrected, 0)
}

/// Explicit value with a selectable variant and an extension of the chain
/// truncation bound `m_r <= n + r` (for truncation-stability checks).
pub fn multi_poly_euler_explicit_with(
    n: usize,
    k: &MultiIndex,
    x: &Rational,
    p: &ParamTriple,
    variant: MpeExplicitVariant,
    bound_extra: usize,
) -> Rational {
    let r = k.depth();
    let lam = p.ln_ab();
    let max_mr = n + r + bound_extra;
    let chains = super::strict_chains(max_mr, r);
    let mut total = Rational::zero();
    match variant {
        MpeExplicitVariant::Corrected => {
            // 2^{1-r} sum over chains, q >= 0 and j of
            //   C(r+q-1, q) 2^{-q} (-1)^j C(m_r+q, j) (r gamma x - r beta - j lam)^n
            let base_const = &(&p.gamma * x) * &Rational::from(r as u64)
                - &p.beta * &Rational::from(r as u64);
            for chain in &chains {
                let weight = chain_weight(chain, k);
                let mr = *chain.last().unwrap();
                let q_max = (n + bound_extra).saturating_sub(mr);
                if mr > n + bound_extra {
                    continue;
                }
                let mut inner = Rational::zero();
                for q in 0..=q_max {
                    let cq = binomial((r + q - 1) as u64, q as u64)
                        * Rational::from(2).pow(-(q as i64)).unwrap();
                    let mut jsum = Rational::zero();
                    for j in 0..=(mr + q) {
                        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
                        let arg = &base_const - &(&lam * &Rational::from(j as u64));
                        jsum = jsum
                            + sign
                                * binomial((mr + q) as u64, j as u64)
                                * arg.pow(n as i64).unwrap();
                    }
                    inner = inner + cq * jsum;
                }
                total = total + weight * inner;
            }
            total * Rational::from(2).pow(1 - r as i64).unwrap()
        }
        MpeExplicitVariant::Stated => {
            // 2 r! sum over chains, compositions and j of
            //   (-1)^{j+s} C(m_r, j) (r x ln c + r ln a + (s - j) ln ab)^n
            //   / (c_1! .. c_r!)
            let rx_lnc = &(&p.gamma * x) * &Rational::from(r as u64);
            let r_lna = &p.alpha * &Rational::from(r as u64);
            let comps = super::weak_compositions(r, r);
            for chain in &chains {
                let weight = chain_weight(chain, k);
                let mr = *chain.last().unwrap();
                let mut inner = Rational::zero();
                for comp in &comps {
                    let s: usize = comp.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum();
                    let mut denom = Rational::one();
                    for &c in comp {
                        denom = denom * factorial(c as u64);
                    }
                    for j in 0..=mr {
                        let sign = if (j + s) % 2 == 0 { Rational::one() } else { -Rational::one() };
                        let arg = &(&rx_lnc + &r_lna)
                            + &(&lam * &(Rational::from(s as u64) - Rational::from(j as u64)));
                        inner = inner
                            + sign * binomial(mr as u64, j as u64) * arg.pow(n as i64).unwrap()
                                / denom.clone();
                    }
                }
                total = total + weight * inner;
            }
            total * Rational::from(2) * factorial(r as u64)
        }
    }
}

/// `prod m_i^{-k_i}` over a strict chain.
fn chain_weight(chain: &[usize], k: &MultiIndex) -> Rational {
    chain
        .iter()
        .zip(k.entries())
        .map(|(&m, &ki)| Rational::from(m as u64).pow(-ki).unwrap())
        .fold(Rational::one(), |a, b| a * b)
}
