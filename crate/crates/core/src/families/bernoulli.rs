//! Poly-Bernoulli style families, including the Hurwitz-Lerch variants.

use crate::algebra::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::polylog::{
    hl_multi_phi, hl_pole_screen, hurwitz_lerch_phi, multi_polylog_t, one_minus_exp_neg,
    MultiIndex, ParamTriple,
};
use crate::series::{RingElem, TruncSeries};
use crate::special::{rbeta_stirling, StirlingTable};

use super::{scaled, strict_chains, weak_chains};

/// Poly-Bernoulli numbers `B_n^{(k)}` from `Li_k(1-e^{-t})/(1-e^{-t})`.
pub fn poly_bernoulli(k: i64, n_max: usize) -> Vec<Rational> {
    imatomi_mpb(&MultiIndex::of(&[k]), n_max)
}

/// Multi poly-Bernoulli numbers `B_n^{(k_1..k_r)}` from
/// `Li_{(k_1..k_r)}(1-e^{-t})/(1-e^{-t})`.
pub fn imatomi_mpb(k: &MultiIndex, n_max: usize) -> Vec<Rational> {
    let li = multi_polylog_t(k, &Rational::one(), n_max + 1);
    let w = one_minus_exp_neg(&Rational::one(), n_max + 1);
    let num = li.shift_div_t(1).expect("Li of a zero-constant series");
    let den = w.shift_div_t(1).expect("1 - e^{-t} vanishes at t = 0");
    let series = num.mul(&den.inverse().expect("(1-e^{-t})/t has constant term 1"));
    (0..=n_max).map(|n| series.egf_coeff(n)).collect()
}

/// How the index vector is attached to the chain elements in the Imatomi
/// explicit formula and which entry the recurrence decrements.
///
/// The source display attaches `k_1` to the *largest* chain element and
/// decrements `k_1`; under the strictly-increasing-chain convention of the
/// defining generating function the matching reading attaches `k_1` to the
/// smallest element (equivalently `k_r` to the largest, the entry the
/// polylogarithm derivative rule acts on) and decrements `k_r`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainIndexOrder {
    AsWritten,
    Reversed,
}

/// Explicit (route B) Imatomi multi poly-Bernoulli number, in the
/// adjudicated `Reversed` reading with the default truncation bound.
pub fn imatomi_explicit(n: usize, k: &MultiIndex) -> Rational {
    imatomi_explicit_with(n, k, ChainIndexOrder::Reversed, 0)
}

/// Explicit value with selectable index attachment and an extension of
/// the chain bound `m_max <= n + 1`.
pub fn imatomi_explicit_with(
    n: usize,
    k: &MultiIndex,
    order: ChainIndexOrder,
    bound_extra: usize,
) -> Rational {
    let r = k.depth();
    let stirling = StirlingTable::new(n);
    let mut total = Rational::zero();
    for chain in strict_chains(n + 1 + bound_extra, r) {
        let largest = *chain.last().unwrap();
        if largest > n + 1 {
            continue; // S(n, largest - 1) = 0
        }
        let s = stirling.get(n, largest - 1);
        if s.is_zero() {
            continue;
        }
        let sign = if (largest - 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let mut weight = Rational::one();
        for (i, &m) in chain.iter().enumerate() {
            let ki = match order {
                // ascending chain element i pairs with k_{r-i} as written
                ChainIndexOrder::AsWritten => k.entries()[r - 1 - i],
                ChainIndexOrder::Reversed => k.entries()[i],
            };
            weight = weight * Rational::from(m as u64).pow(-ki).unwrap();
        }
        total = total + sign * factorial(largest as u64 - 1) * s * weight;
    }
    let overall = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    overall * total
}

/// Checks the Imatomi recurrence
/// `(n+1) B_n^{(k)} = B_n^{(k with one entry decremented)} -
///  sum_{m=1}^{n-1} C(n, m-1) B_m^{(k)}`
/// for every `n <= n_max`; the decremented entry is selected by `order`.
pub fn imatomi_recurrence_check(k: &MultiIndex, n_max: usize, order: ChainIndexOrder) -> Vec<bool> {
    let dec = match order {
        ChainIndexOrder::AsWritten => k.decrement_first(),
        ChainIndexOrder::Reversed => k.decrement_last(),
    };
    let table = imatomi_mpb(k, n_max);
    let table_dec = imatomi_mpb(&dec, n_max);
    (0..=n_max)
        .map(|n| {
            let lhs = &table[n] * &Rational::from(n as u64 + 1);
            let mut rhs = table_dec[n].clone();
            for m in 1..n {
                rhs = rhs - binomial(n as u64, m as u64 - 1) * table[m].clone();
            }
            lhs == rhs
        })
        .collect()
}

/// Hurwitz type poly-Bernoulli numbers `B_{n,a}^{(k)}` from
/// `Phi(1-e^{-t}, k, a)`.
pub fn hurwitz_poly_bernoulli(k: i64, a: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let phi = hurwitz_lerch_phi(k, a, n_max)?;
    let series = phi
        .compose(&one_minus_exp_neg(&Rational::one(), n_max))
        .expect("inner series vanishes at t = 0");
    Ok((0..=n_max).map(|n| series.egf_coeff(n)).collect())
}

/// Explicit (route B) Hurwitz type poly-Bernoulli number:
/// `(-1)^n sum_{m=0}^n (-1)^m m! S(n, m) / (m + a)^k`.
pub fn hurwitz_pb_explicit(n: usize, k: i64, a: &Rational) -> Result<Rational> {
    let stirling = StirlingTable::new(n);
    let mut total = Rational::zero();
    for m in 0..=n {
        let base = Rational::from(m as u64) + a.clone();
        if base.is_zero() {
            return Err(Error::PoleParameter(format!(
                "Hurwitz parameter a = {} hits a zero denominator at m = {}",
                a, m
            )));
        }
        let sign = if m % 2 == 0 { Rational::one() } else { -Rational::one() };
        total = total + sign * factorial(m as u64) * stirling.get(n, m) * base.pow(-k).unwrap();
    }
    let overall = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    Ok(overall * total)
}

/// Hurwitz type poly-Euler numbers `E_{n,a}^{(k)}` from
/// `2 (1-e^{-t}) Phi(1-e^{-t}, k, a) / (1+e^t)` (generating-function
/// route only).
pub fn hurwitz_poly_euler(k: i64, a: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let phi = hurwitz_lerch_phi(k, a, n_max)?;
    let w = one_minus_exp_neg(&Rational::one(), n_max);
    let denom = TruncSeries::one(n_max).add(&TruncSeries::exp_linear(&Rational::one(), n_max));
    let series = phi
        .compose(&w)
        .expect("inner series vanishes at t = 0")
        .mul(&w)
        .mul(&denom.inverse().expect("1 + e^t has constant term 2"))
        .scale_rational(&Rational::from(2));
    Ok((0..=n_max).map(|n| series.egf_coeff(n)).collect())
}

/// `Li_{(k)}(1-(ab)^{-t}) / (b^t - a^{-t})^r` with the order-`r` zeros of
/// numerator and denominator cancelled exactly.
fn mpb_base(
    k: &MultiIndex,
    alpha: &Rational,
    beta: &Rational,
    order: usize,
) -> Result<TruncSeries<Rational>> {
    let r = k.depth();
    let lam = alpha + beta;
    if lam.is_zero() {
        return Err(Error::DegenerateParameter(
            "ln a + ln b = 0: the generating function's denominator has no order-r zero to cancel"
                .into(),
        ));
    }
    let work = order + r;
    let li = multi_polylog_t(k, &lam, work);
    let denom = TruncSeries::exp_linear(beta, work)
        .sub(&TruncSeries::exp_linear(&-alpha, work))
        .pow_u(r as u32);
    let num = li.shift_div_t(r).expect("Li_{(k)} has a zero of order >= r");
    let den = denom.shift_div_t(r).expect("denominator has a zero of order exactly r");
    Ok(num.mul(&den.inverse().expect("leading coefficient (ln ab)^r is nonzero")))
}

/// Generalized multi poly-Bernoulli polynomial values
/// `B_n^{(k_1..k_r)}(x; a, b, c)` for `n = 0..n_max`.
pub fn multi_poly_bernoulli<R: RingElem>(
    k: &MultiIndex,
    x: &R,
    p: &ParamTriple,
    n_max: usize,
) -> Result<Vec<R>> {
    let base = mpb_base(k, &p.alpha, &p.beta, n_max)?;
    let exponent = scaled(x, &(&p.gamma * &Rational::from(k.depth() as u64)));
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(&exponent, n_max));
    Ok((0..=n_max).map(|n| series.egf_coeff(n)).collect())
}

/// The plain-exponential variant, with `e^{yt}` in place of `c^{rxt}`.
pub fn multi_poly_bernoulli_shifted<R: RingElem>(
    k: &MultiIndex,
    y: &R,
    alpha: &Rational,
    beta: &Rational,
    n_max: usize,
) -> Result<Vec<R>> {
    let base = mpb_base(k, alpha, beta, n_max)?;
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(y, n_max));
    Ok((0..=n_max).map(|n| series.egf_coeff(n)).collect())
}

/// Which reading of the explicit multi poly-Bernoulli sum to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MpbExplicitVariant {
    /// Exponent base `r gamma x - j alpha - (j+r) beta`, as the
    /// generating function actually expands.
    Corrected,
    /// Exponent base `r x - j alpha - (j+1) beta`, as displayed.
    Stated,
}

/// Explicit (route B) generalized multi poly-Bernoulli value, in the
/// adjudicated `Corrected` reading with the default chain bound.
pub fn mpb_explicit(n: usize, k: &MultiIndex, x: &Rational, p: &ParamTriple) -> Result<Rational> {
    mpb_explicit_with(n, k, x, p, MpbExplicitVariant::Corrected, 0)
}

/// Explicit value with selectable variant and chain-bound extension
/// (`m_r <= n + r + bound_extra`).
pub fn mpb_explicit_with(
    n: usize,
    k: &MultiIndex,
    x: &Rational,
    p: &ParamTriple,
    variant: MpbExplicitVariant,
    bound_extra: usize,
) -> Result<Rational> {
    let r = k.depth();
    let lam = p.ln_ab();
    if lam.is_zero() {
        return Err(Error::DegenerateParameter("ln a + ln b = 0".into()));
    }
    let rq = Rational::from(r as u64);
    let base_const = match variant {
        MpbExplicitVariant::Corrected => &(&p.gamma * x) * &rq,
        MpbExplicitVariant::Stated => x * &rq,
    };
    let mut total = Rational::zero();
    for chain in strict_chains(n + r + bound_extra, r) {
        let mr = *chain.last().unwrap();
        if mr > n + r {
            continue; // finite difference of order m_r - r > n vanishes
        }
        let mut weight = Rational::one();
        for (&m, &ki) in chain.iter().zip(k.entries()) {
            weight = weight * Rational::from(m as u64).pow(-ki).unwrap();
        }
        let mut inner = Rational::zero();
        for j in 0..=(mr - r) {
            let jq = Rational::from(j as u64);
            let beta_mult = match variant {
                MpbExplicitVariant::Corrected => &jq + &rq,
                MpbExplicitVariant::Stated => &jq + &Rational::one(),
            };
            let arg = &base_const - &(&(&p.alpha * &jq) + &(&p.beta * &beta_mult));
            let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            inner = inner + sign * binomial((mr - r) as u64, j as u64) * arg.pow(n as i64).unwrap();
        }
        total = total + weight * inner;
    }
    Ok(total)
}

/// Hurwitz-Lerch type multi poly-Bernoulli numbers, from
/// `Phi_{(k_1..k_r)}(1-e^{-t}, a)`.
pub fn hl_multi_pb(k: &MultiIndex, a: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    hl_multi_pb_poly(k, a, &Rational::zero(), n_max)
}

/// Hurwitz-Lerch type multi poly-Bernoulli polynomial values, from
/// `Phi_{(k_1..k_r)}(1-e^{-t}, a) e^{rxt}`.
pub fn hl_multi_pb_poly<R: RingElem>(
    k: &MultiIndex,
    a: &Rational,
    x: &R,
    n_max: usize,
) -> Result<Vec<R>> {
    let phi = hl_multi_phi(k, a, n_max)?;
    let base = phi
        .compose(&one_minus_exp_neg(&Rational::one(), n_max))
        .expect("inner series vanishes at t = 0");
    let exponent = scaled(x, &Rational::from(k.depth() as u64));
    let series = base.lift::<R>().mul(&TruncSeries::exp_linear(&exponent, n_max));
    Ok((0..=n_max).map(|n| series.egf_coeff(n)).collect())
}

/// Explicit (route B) Hurwitz-Lerch type value via generalized Stirling
/// numbers:
/// `sum over weak chains m_1 <= .. <= m_r <= n` of
/// `m_r! {n, m_r}_{-1, xr} / prod (m_i + a - r + i)^{k_i}`.
pub fn hl_mpb_explicit<R: RingElem>(n: usize, k: &MultiIndex, a: &Rational, x: &R) -> Result<R> {
    hl_mpb_explicit_with(n, k, a, x, 0)
}

/// Explicit value with chain-bound extension (`m_r <= n + bound_extra`).
pub fn hl_mpb_explicit_with<R: RingElem>(
    n: usize,
    k: &MultiIndex,
    a: &Rational,
    x: &R,
    bound_extra: usize,
) -> Result<R> {
    let r = k.depth();
    let max_m = n + bound_extra;
    hl_pole_screen(k, a, max_m)?;
    let rho = scaled(x, &Rational::from(r as u64));
    // m_r! {n, m_r}_{-1, xr}, cached per m_r
    let stirling_factor: Vec<R> = (0..=max_m)
        .map(|m| {
            Ok(rbeta_stirling(n, m, &-Rational::one(), &rho)?.scale(&factorial(m as u64)))
        })
        .collect::<Result<_>>()?;
    let mut total = R::zero();
    for chain in weak_chains(max_m, r) {
        let mr = *chain.last().unwrap();
        if stirling_factor[mr].is_zero() {
            continue;
        }
        let mut weight = Rational::one();
        for (i, (&m, &ki)) in chain.iter().zip(k.entries()).enumerate() {
            let base = Rational::from(m as u64) + a.clone() - Rational::from(r as u64)
                + Rational::from(i as u64 + 1);
            weight = weight * base.pow(-ki).unwrap();
        }
        total = total.add(&stirling_factor[mr].scale(&weight));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::families::euler::poly_euler_poly;
    use crate::special::classical_bernoulli_table;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_parts(n, d).unwrap()
    }

    #[test]
    fn poly_bernoulli_low_order() {
        for k in [-2i64, 0, 1, 2, 5] {
            let table = poly_bernoulli(k, 2);
            assert_eq!(table[0], Rational::one(), "k = {}", k);
            assert_eq!(table[1], q(2, 1).pow(-k).unwrap(), "k = {}", k);
        }
    }

    #[test]
    fn poly_bernoulli_k1_is_bernoulli_plus_half_convention() {
        let table = poly_bernoulli(1, 12);
        let oracle = classical_bernoulli_table(12);
        for (n, b) in oracle.iter().enumerate() {
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            assert_eq!(table[n], sign * b.clone(), "n = {}", n);
        }
    }

    #[test]
    fn hurwitz_pb_values_and_reduction() {
        // constant term of Phi is 1/a^k
        for (k, a) in [(2i64, q(2, 1)), (-1, q(1, 2)), (3, q(5, 3))] {
            let table = hurwitz_poly_bernoulli(k, &a, 1).unwrap();
            assert_eq!(table[0], a.pow(-k).unwrap());
        }
        // a = 1 reduces to the poly-Bernoulli numbers
        for k in [-2i64, 0, 1, 3] {
            let hur = hurwitz_poly_bernoulli(k, &Rational::one(), 10).unwrap();
            assert_eq!(hur, poly_bernoulli(k, 10), "k = {}", k);
        }
        assert!(hurwitz_poly_bernoulli(2, &Rational::zero(), 4).is_err());
    }

    #[test]
    fn hurwitz_pb_dual_route() {
        for k in -2..=3i64 {
            for a in [q(1, 1), q(2, 1), q(1, 2)] {
                let route_a = hurwitz_poly_bernoulli(k, &a, 10).unwrap();
                for n in 0..=10 {
                    assert_eq!(
                        route_a[n],
                        hurwitz_pb_explicit(n, k, &a).unwrap(),
                        "k={} a={} n={}",
                        k,
                        a,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn hurwitz_pe_values() {
        for (k, a) in [(2i64, q(2, 1)), (1, q(1, 2)), (-1, q(3, 1))] {
            let table = hurwitz_poly_euler(k, &a, 4).unwrap();
            assert!(table[0].is_zero());
            assert_eq!(table[1], a.pow(-k).unwrap(), "k={} a={}", k, a);
        }
        // k = 0, a = 1: (1-e^{-t}) Phi(1-e^{-t}, 0, 1) = Li_0(1-e^{-t}),
        // so the table equals the poly-Euler values at k = 0, x = 0
        let lhs = hurwitz_poly_euler(0, &Rational::one(), 8).unwrap();
        let rhs = poly_euler_poly(0, &Rational::zero(), 8);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn imatomi_basics() {
        // depth 2: numerator starts at w^2, so B_0 = 0
        let table = imatomi_mpb(&MultiIndex::of(&[1, 2]), 3);
        assert!(table[0].is_zero());
        // depth 1 is plain poly-Bernoulli
        for k in [-1i64, 2] {
            assert_eq!(
                imatomi_mpb(&MultiIndex::of(&[k]), 10),
                poly_bernoulli(k, 10)
            );
        }
    }

    #[test]
    fn imatomi_dual_route() {
        let ks = [
            MultiIndex::of(&[1]),
            MultiIndex::of(&[2]),
            MultiIndex::of(&[1, 1]),
            MultiIndex::of(&[1, 2]),
            MultiIndex::of(&[2, 1]),
            MultiIndex::of(&[1, 2, 2]),
            MultiIndex::of(&[2, 1, 1]),
        ];
        for k in &ks {
            let route_a = imatomi_mpb(k, 8);
            for n in 0..=8 {
                assert_eq!(route_a[n], imatomi_explicit(n, k), "k = {} n = {}", k, n);
            }
        }
        // the as-written attachment disagrees for asymmetric indices
        let k = MultiIndex::of(&[1, 2]);
        let route_a = imatomi_mpb(&k, 4);
        let stated: Vec<Rational> = (0..=4)
            .map(|n| imatomi_explicit_with(n, &k, ChainIndexOrder::AsWritten, 0))
            .collect();
        assert_ne!(route_a, stated);
        // and the as-written value is route A of the reversed index
        let reversed_a = imatomi_mpb(&k.reversed(), 4);
        assert_eq!(reversed_a, stated);
    }

    #[test]
    fn imatomi_explicit_bound_stable() {
        let k = MultiIndex::of(&[2, 1]);
        for n in 0..=6 {
            assert_eq!(
                imatomi_explicit_with(n, &k, ChainIndexOrder::Reversed, 0),
                imatomi_explicit_with(n, &k, ChainIndexOrder::Reversed, 2),
                "n = {}",
                n
            );
        }
    }

    #[test]
    fn imatomi_recurrence() {
        // decrementing the entry the derivative rule acts on passes
        for k in [MultiIndex::of(&[2]), MultiIndex::of(&[1, 2]), MultiIndex::of(&[2, 1, 1])] {
            let ok = imatomi_recurrence_check(&k, 8, ChainIndexOrder::Reversed);
            assert!(ok.iter().all(|&b| b), "k = {}", k);
        }
        // the as-written first-entry decrement fails for asymmetric indices
        let bad = imatomi_recurrence_check(&MultiIndex::of(&[1, 2]), 8, ChainIndexOrder::AsWritten);
        assert!(bad.iter().any(|&b| !b));
    }

    #[test]
    fn mpb_leading_value_and_degenerate_params() {
        let p = ParamTriple::new(q(2, 1), q(1, 1), q(1, 2));
        for k in [MultiIndex::of(&[1, 1]), MultiIndex::of(&[2, 1, 3])] {
            let table = multi_poly_bernoulli(&k, &q(1, 2), &p, 3).unwrap();
            let mut expected = Rational::one();
            for (i, &ki) in k.entries().iter().enumerate() {
                expected = expected / Rational::from((i + 1) as u64).pow(ki).unwrap();
            }
            assert_eq!(table[0], expected, "k = {}", k);
        }
        let degenerate = ParamTriple::from_i64(1, -1, 1);
        assert!(multi_poly_bernoulli(&MultiIndex::of(&[1]), &q(0, 1), &degenerate, 3).is_err());
    }

    #[test]
    fn mpb_specialization_matches_direct_assembly() {
        // (alpha, beta, gamma) = (1, 0, 1): Li(1-e^{-t})/(1-e^{-t})^r e^{rxt}
        let p = ParamTriple::from_i64(1, 0, 1);
        let k = MultiIndex::of(&[1, 2]);
        let r = k.depth();
        let x = q(1, 2);
        let n_max = 7;
        let work = n_max + r;
        let li = multi_polylog_t(&k, &Rational::one(), work);
        let w = one_minus_exp_neg(&Rational::one(), work).pow_u(r as u32);
        let direct = li
            .shift_div_t(r)
            .unwrap()
            .mul(&w.shift_div_t(r).unwrap().inverse().unwrap())
            .mul(&TruncSeries::exp_linear(&(q(2, 1) * x.clone()), n_max));
        let table = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
        for n in 0..=n_max {
            assert_eq!(table[n], direct.egf_coeff(n), "n = {}", n);
        }
    }

    #[test]
    fn mpb_dual_route() {
        let params = [
            ParamTriple::from_i64(1, 0, 1),
            ParamTriple::from_i64(1, 1, 1),
            ParamTriple::new(q(2, 1), q(1, 1), q(1, 2)),
        ];
        let ks = [
            MultiIndex::of(&[1]),
            MultiIndex::of(&[1, 2]),
            MultiIndex::of(&[2, 1, 1]),
        ];
        for p in &params {
            for k in &ks {
                let route_a = multi_poly_bernoulli(k, &q(1, 2), p, 6).unwrap();
                for n in 0..=6 {
                    assert_eq!(
                        route_a[n],
                        mpb_explicit(n, k, &q(1, 2), p).unwrap(),
                        "k={} p={} n={}",
                        k,
                        p,
                        n
                    );
                }
            }
        }
        // the stated exponent disagrees once beta != 0 or gamma != 1
        let p = ParamTriple::from_i64(1, 1, 1);
        let k = MultiIndex::of(&[1, 1]);
        let route_a = multi_poly_bernoulli(&k, &q(1, 2), &p, 4).unwrap();
        let stated: Result<Vec<Rational>> = (0..=4)
            .map(|n| mpb_explicit_with(n, &k, &q(1, 2), &p, MpbExplicitVariant::Stated, 0))
            .collect();
        assert_ne!(route_a, stated.unwrap());
    }

    #[test]
    fn mpb_explicit_bound_stable() {
        let p = ParamTriple::new(q(2, 1), q(1, 1), q(1, 2));
        let k = MultiIndex::of(&[2, 1]);
        for n in 0..=5 {
            assert_eq!(
                mpb_explicit_with(n, &k, &q(1, 1), &p, MpbExplicitVariant::Corrected, 0).unwrap(),
                mpb_explicit_with(n, &k, &q(1, 1), &p, MpbExplicitVariant::Corrected, 2).unwrap(),
                "n = {}",
                n
            );
        }
    }

    #[test]
    fn hl_constant_term_and_depth_one() {
        // B_0 = prod 1/(a - r + i)^{k_i} over the all-zero chain
        let k = MultiIndex::of(&[1, 2]);
        let a = q(2, 1);
        let table = hl_multi_pb(&k, &a, 2).unwrap();
        assert_eq!(table[0], q(1, 4));
        // depth 1 reduces to the Hurwitz type poly-Bernoulli numbers
        for kk in [-1i64, 2] {
            for a in [q(2, 1), q(1, 2)] {
                assert_eq!(
                    hl_multi_pb(&MultiIndex::of(&[kk]), &a, 8).unwrap(),
                    hurwitz_poly_bernoulli(kk, &a, 8).unwrap(),
                    "k={} a={}",
                    kk,
                    a
                );
            }
        }
    }

    #[test]
    fn hl_at_a_equals_depth_matches_li_normalization() {
        // a = r: Phi(1-e^{-t}, r) = Li(1-e^{-t})/(1-e^{-t})^r, which is the
        // multi poly-Bernoulli specialization (1, 0, 1) at x = 0
        for k in [MultiIndex::of(&[1, 2]), MultiIndex::of(&[2, 1, 1])] {
            let r = k.depth();
            let p = ParamTriple::from_i64(1, 0, 1);
            let hl = hl_multi_pb(&k, &Rational::from(r as u64), 8).unwrap();
            let mpb = multi_poly_bernoulli(&k, &Rational::zero(), &p, 8).unwrap();
            assert_eq!(hl, mpb, "k = {}", k);
        }
    }

    #[test]
    fn hl_dual_route() {
        let ks = [
            MultiIndex::of(&[2]),
            MultiIndex::of(&[1, 1]),
            MultiIndex::of(&[1, 2]),
            MultiIndex::of(&[2, 1, 1]),
        ];
        for k in &ks {
            let r = k.depth();
            for a in [Rational::from(r as u64), q(1, 2), Rational::from(r as u64 + 2)] {
                for x in [q(0, 1), q(1, 1), q(-1, 2)] {
                    let route_a = hl_multi_pb_poly(k, &a, &x, 8).unwrap();
                    for n in 0..=8 {
                        assert_eq!(
                            route_a[n],
                            hl_mpb_explicit(n, k, &a, &x).unwrap(),
                            "k={} a={} x={} n={}",
                            k,
                            a,
                            x,
                            n
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hl_explicit_symbolic_x_consistency() {
        let k = MultiIndex::of(&[1, 2]);
        let a = q(1, 2);
        for n in 0..=5 {
            let sym = hl_mpb_explicit(n, &k, &a, &Poly::x()).unwrap();
            for x0 in [q(0, 1), q(2, 3)] {
                let num = hl_mpb_explicit(n, &k, &a, &x0).unwrap();
                assert_eq!(sym.eval(&x0), num);
            }
        }
    }

    #[test]
    fn hl_explicit_reduces_to_hurwitz_explicit_at_depth_one() {
        for kk in [-1i64, 1, 3] {
            for a in [q(1, 1), q(2, 1), q(1, 2)] {
                for n in 0..=8 {
                    assert_eq!(
                        hl_mpb_explicit(n, &MultiIndex::of(&[kk]), &a, &Rational::zero()).unwrap(),
                        hurwitz_pb_explicit(n, kk, &a).unwrap(),
                        "k={} a={} n={}",
                        kk,
                        a,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn hl_explicit_bound_stable() {
        let k = MultiIndex::of(&[1, 2]);
        let a = q(1, 2);
        for n in 0..=5 {
            assert_eq!(
                hl_mpb_explicit_with(n, &k, &a, &q(1, 1), 0).unwrap(),
                hl_mpb_explicit_with(n, &k, &a, &q(1, 1), 2).unwrap(),
                "n = {}",
                n
            );
        }
    }
}
