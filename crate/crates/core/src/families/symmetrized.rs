//! The symmetrized constructions built from negative-upper-index
//! poly-Euler values.

use crate::algebra::{binomial, Rational};
use crate::error::{Error, Result};
use crate::polylog::{MultiIndex, ParamTriple};

use super::euler::multi_poly_euler;
use super::{multinomial, weak_compositions};

/// The depth-1 symmetrized value
/// `D_n^{(m)}(x, y; a, b, c) = (ln a + ln b)^{-n} sum_{j=0}^m C(m, j)
///  E_n^{(-j)}(x; a, b, c) ((y ln c + ln a)/(ln a + ln b))^{m-j}`.
pub fn symmetrized_d(
    m: usize,
    n: usize,
    x: &Rational,
    y: &Rational,
    p: &ParamTriple,
) -> Result<Rational> {
    let lam = p.ln_ab();
    if lam.is_zero() {
        return Err(Error::DegenerateParameter("ln a + ln b = 0".into()));
    }
    let ratio = &(&(y * &p.gamma) + &p.alpha) / &lam;
    let mut total = Rational::zero();
    for j in 0..=m {
        let e = multi_poly_euler(&MultiIndex::of(&[-(j as i64)]), x, p, n)
            .pop()
            .unwrap();
        if e.is_zero() {
            continue;
        }
        total = total
            + binomial(m as u64, j as u64) * e * ratio.pow((m - j) as i64).unwrap();
    }
    Ok(total / lam.pow(n as i64).unwrap())
}

/// The depth-`r` symmetrized value (`r >= 2`): sums over weak compositions
/// `k_1 + ... + k_r = m` the multinomial-weighted products of the
/// depth-`(r-1)` values `E_n^{(-k_1,..,-k_{r-1})}(x; a, b, c)` and powers
/// of `((r-1) y ln c + ln a)/(ln a + ln b)`.
///
/// The `E` factor is the full three-parameter family at its own depth
/// `r - 1`, i.e. with exponential factor `c^{(r-1)xt}`.
pub fn symmetrized_dcal(
    m: usize,
    n: usize,
    r: usize,
    x: &Rational,
    y: &Rational,
    p: &ParamTriple,
) -> Result<Rational> {
    if r < 2 {
        return Err(Error::UnsupportedDepth(
            "the symmetrized construction needs r >= 2; r = 1 is the depth-1 form".into(),
        ));
    }
    let lam = p.ln_ab();
    if lam.is_zero() {
        return Err(Error::DegenerateParameter("ln a + ln b = 0".into()));
    }
    let ratio = &(&(&(y * &p.gamma) * &Rational::from(r as u64 - 1)) + &p.alpha) / &lam;
    let lam_pow = lam.pow(n as i64).unwrap();

    // cache E values per leading (r-1)-part of the composition
    let mut cache: std::collections::BTreeMap<Vec<usize>, Rational> = Default::default();
    let mut total = Rational::zero();
    for comp in weak_compositions(m, r) {
        let head = comp[..r - 1].to_vec();
        let k_r = comp[r - 1];
        let e = cache
            .entry(head.clone())
            .or_insert_with(|| {
                let idx =
                    MultiIndex::new(head.iter().map(|&v| -(v as i64)).collect()).unwrap();
                multi_poly_euler(&idx, x, p, n).pop().unwrap()
            })
            .clone();
        if e.is_zero() {
            continue;
        }
        let parts: Vec<u64> = comp.iter().map(|&v| v as u64).collect();
        total = total
            + multinomial(m as u64, &parts) * e * ratio.pow(k_r as i64).unwrap();
    }
    Ok(total / lam_pow)
}
