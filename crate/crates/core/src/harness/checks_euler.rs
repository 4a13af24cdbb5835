//! Checks for the poly-Euler side: the four basic properties, the
//! Stirling-expansion identities, the polylogarithm derivative rule and
//! the explicit formula.

use crate::algebra::{binomial, Poly, Rational};
use crate::families::{
    multi_poly_euler, multi_poly_euler_explicit_with, multi_poly_euler_shifted, MpeExplicitVariant,
};
use crate::polylog::{derivative_rule_sides, MultiIndex, ParamTriple};
use crate::special::{
    bernoulli_higher, falling_factorial, frobenius_euler, rising_factorial, StirlingTable,
};

use super::grids::{index_grid, index_grid_small, param_triples, q, sample_points};
use super::{case_from_rows, params_of, CaseOutcome, CheckDef, GridCfg, Variant};

pub(crate) fn defs() -> Vec<CheckDef> {
    vec![
        CheckDef::Single("eq1.12", check_eq1_12),
        CheckDef::Dual("eq1.13", check_eq1_13),
        CheckDef::Single("eq1.14", check_eq1_14),
        CheckDef::Single("eq1.15", check_eq1_15),
        CheckDef::Dual("thm2.2", check_thm2_2),
        CheckDef::Dual("thm2.3", check_thm2_3),
        CheckDef::Single("thm2.4", check_thm2_4),
        CheckDef::Single("thm2.5", check_thm2_5),
        CheckDef::Single("eq2.3", check_eq2_3),
        CheckDef::Dual("eq1.16", check_eq1_16),
    ]
}

fn rq(r: usize) -> Rational {
    Rational::from(r as u64)
}

/// Rows comparing two polynomials coefficient by coefficient at index `n`.
pub(crate) fn poly_rows(
    n: usize,
    lhs: &Poly,
    rhs: &Poly,
) -> Vec<(usize, Option<usize>, Rational, Rational)> {
    let deg = lhs.coeffs().len().max(rhs.coeffs().len());
    (0..deg.max(1))
        .map(|d| (n, Some(d), lhs.coeff(d), rhs.coeff(d)))
        .collect()
}

/// `E_n(x; a, b, c) = sum_i C(n,i) (r ln c)^{n-i} E_i(a, b) x^{n-i}`.
fn check_eq1_12(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let base = multi_poly_euler_shifted(&k, &Rational::zero(), &p.alpha, &p.beta, n_max);
            for x in sample_points() {
                let lhs = multi_poly_euler(&k, &x, &p, n_max);
                let scale = &rq(r) * &p.gamma;
                let rows = (0..=n_max).map(|n| {
                    let rhs: Rational = (0..=n)
                        .map(|i| {
                            binomial(n as u64, i as u64)
                                * scale.pow((n - i) as i64).unwrap()
                                * base[i].clone()
                                * x.pow((n - i) as i64).unwrap()
                        })
                        .sum();
                    (n, None, lhs[n].clone(), rhs)
                });
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// `E_n(x; a, b, c) = (ln a + ln b)^n E_n(arg)` with the reduced family
/// read as the plain-exponential form at `(alpha, beta) = (0, 1)`:
/// `arg` is `(r x ln c + ln a)/(ln a + ln b)` as written, or the
/// substitution-derived `r (x ln c + ln a)/(ln a + ln b)`.
fn check_eq1_13(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            for x in sample_points() {
                let lhs = multi_poly_euler(&k, &x, &p, n_max);
                let lam = p.ln_ab();
                let y = match variant {
                    Variant::Statement => &(&(&rq(r) * &(&p.gamma * &x)) + &p.alpha) / &lam,
                    Variant::Proof => &(&rq(r) * &(&(&p.gamma * &x) + &p.alpha)) / &lam,
                };
                let reduced =
                    multi_poly_euler_shifted(&k, &y, &Rational::zero(), &Rational::one(), n_max);
                let rows = (0..=n_max).map(|n| {
                    let rhs = lam.pow(n as i64).unwrap() * reduced[n].clone();
                    (n, None, lhs[n].clone(), rhs)
                });
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// `d/dx E_{n+1}(x; a, b, c) = (n+1) (r ln c) E_n(x; a, b, c)`, checked on
/// the symbolic-in-`x` tables.
fn check_eq1_14(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let table = multi_poly_euler(&k, &Poly::x(), &p, n_max + 1);
            let scale = &rq(r) * &p.gamma;
            let rows = (0..=n_max).flat_map(|n| {
                let lhs = table[n + 1].derivative();
                let rhs = table[n].scale(&(&scale * &Rational::from(n as u64 + 1)));
                poly_rows(n, &lhs, &rhs)
            });
            out.push(case_from_rows(
                params_of(&[("k", k.to_string()), ("params", p.to_string())]),
                rows,
            ));
        }
    }
    out
}

/// `E_n(x + y; a, b, c) = sum_i C(n,i) (r ln c)^{n-i} E_i(x; a, b, c) y^{n-i}`.
fn check_eq1_15(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let pts = sample_points();
    let pairs = [
        (pts[0].clone(), pts[1].clone()),
        (pts[1].clone(), pts[3].clone()),
        (pts[2].clone(), pts[1].clone()),
        (pts[3].clone(), pts[2].clone()),
    ];
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            for (x, y) in &pairs {
                let lhs = multi_poly_euler(&k, &(x + y), &p, n_max);
                let at_x = multi_poly_euler(&k, x, &p, n_max);
                let scale = &rq(r) * &p.gamma;
                let rows = (0..=n_max).map(|n| {
                    let rhs: Rational = (0..=n)
                        .map(|i| {
                            binomial(n as u64, i as u64)
                                * scale.pow((n - i) as i64).unwrap()
                                * at_x[i].clone()
                                * y.pow((n - i) as i64).unwrap()
                        })
                        .sum();
                    (n, None, lhs[n].clone(), rhs)
                });
                out.push(case_from_rows(
                    params_of(&[
                        ("k", k.to_string()),
                        ("params", p.to_string()),
                        ("x", x.to_string()),
                        ("y", y.to_string()),
                    ]),
                    rows,
                ));
            }
        }
    }
    out
}

/// Shared shape of the first two Stirling-expansion identities:
/// `E_n(x; a, b, c) = sum_m sum_{l=m}^n (r ln c)^l S(l, m) C(n, l)
///  E_{n-l}(y_m; a, b) F_m(x)`.
fn stirling_expansion_rows(
    k: &MultiIndex,
    p: &ParamTriple,
    x: &Rational,
    n_max: usize,
    y_of_m: impl Fn(usize) -> Rational,
    factor_of_m: impl Fn(usize) -> Rational,
) -> Vec<(usize, Option<usize>, Rational, Rational)> {
    let r = k.depth();
    let lhs = multi_poly_euler(k, x, p, n_max);
    let stirling = StirlingTable::new(n_max);
    let shifted: Vec<Vec<Rational>> = (0..=n_max)
        .map(|m| multi_poly_euler_shifted(k, &y_of_m(m), &p.alpha, &p.beta, n_max))
        .collect();
    let scale = &rq(r) * &p.gamma;
    (0..=n_max)
        .map(|n| {
            let mut rhs = Rational::zero();
            for m in 0..=n {
                let fm = factor_of_m(m);
                if fm.is_zero() {
                    continue;
                }
                let mut inner = Rational::zero();
                for l in m..=n {
                    let s = stirling.get(l, m);
                    if s.is_zero() {
                        continue;
                    }
                    inner = inner
                        + scale.pow(l as i64).unwrap()
                            * s
                            * binomial(n as u64, l as u64)
                            * shifted[m][n - l].clone();
                }
                rhs = rhs + fm * inner;
            }
            (n, None, lhs[n].clone(), rhs)
        })
        .collect()
}

/// Rising-factorial expansion with `E` at `-m ln c` (statement) or
/// `-m r ln c` (proof).
fn check_thm2_2(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for p in param_triples() {
            for x in sample_points() {
                let gamma = p.gamma.clone();
                let y_of_m = |m: usize| {
                    let mult = match variant {
                        Variant::Statement => Rational::from(m as u64),
                        Variant::Proof => Rational::from((m * r) as u64),
                    };
                    -(&gamma * &mult)
                };
                let rows = stirling_expansion_rows(&k, &p, &x, n_max, y_of_m, |m| {
                    rising_factorial(&x, m)
                });
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// Expansion with `E` at 0 and a rising (statement) or falling (proof)
/// factorial in `x`.
fn check_thm2_3(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        for p in param_triples() {
            for x in sample_points() {
                let rows = stirling_expansion_rows(
                    &k,
                    &p,
                    &x,
                    n_max,
                    |_| Rational::zero(),
                    |m| match variant {
                        Variant::Statement => rising_factorial(&x, m),
                        Variant::Proof => falling_factorial(&x, m),
                    },
                );
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// Expansion through higher-order Bernoulli polynomials:
/// `E_n(x;a,b,c) = sum_m C(n,m) sum_l C(n-m,l)/C(l+s,l) S(l+s,s)
///  E_{n-m-l}(0;a,b) B_m^{(s)}(x r ln c)`.
fn check_thm2_4(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for p in param_triples() {
            let base = multi_poly_euler_shifted(&k, &Rational::zero(), &p.alpha, &p.beta, n_max);
            let stirling = StirlingTable::new(n_max + 2);
            for x in sample_points() {
                let lhs = multi_poly_euler(&k, &x, &p, n_max);
                for s in [1u32, 2] {
                    let x0 = &(&x * &p.gamma) * &rq(r);
                    let bern: Vec<Rational> =
                        (0..=n_max).map(|m| bernoulli_higher(m, s, &x0)).collect();
                    let rows = (0..=n_max).map(|n| {
                        let mut rhs = Rational::zero();
                        for m in 0..=n {
                            let mut inner = Rational::zero();
                            for l in 0..=(n - m) {
                                inner = inner
                                    + binomial((n - m) as u64, l as u64)
                                        * stirling.get(l + s as usize, s as usize)
                                        * base[n - m - l].clone()
                                        / binomial((l + s as usize) as u64, l as u64);
                            }
                            rhs = rhs + binomial(n as u64, m as u64) * bern[m].clone() * inner;
                        }
                        (n, None, lhs[n].clone(), rhs)
                    });
                    out.push(case_from_rows(
                        params_of(&[
                            ("k", k.to_string()),
                            ("params", p.to_string()),
                            ("x", x.to_string()),
                            ("s", s.to_string()),
                        ]),
                        rows,
                    ));
                }
            }
        }
    }
    out
}

/// Expansion through Frobenius-Euler polynomials:
/// `E_n(x;a,b,c) = sum_m C(n,m)/(1-lambda)^s sum_j C(s,j) (-lambda)^{s-j}
///  E_{n-m}(j;a,b) H_m^{(s)}(x r ln c; lambda)`.
fn check_thm2_5(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let lambdas = [q(2, 1), q(1, 2), q(-1, 1)];
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for p in param_triples() {
            for s in [1u32, 2] {
                let shifted: Vec<Vec<Rational>> = (0..=s as usize)
                    .map(|j| {
                        multi_poly_euler_shifted(
                            &k,
                            &Rational::from(j as u64),
                            &p.alpha,
                            &p.beta,
                            n_max,
                        )
                    })
                    .collect();
                for lambda in &lambdas {
                    for x in sample_points() {
                        let lhs = multi_poly_euler(&k, &x, &p, n_max);
                        let x0 = &(&x * &p.gamma) * &rq(r);
                        let frob: Vec<Rational> = (0..=n_max)
                            .map(|m| frobenius_euler(m, s, &x0, lambda).unwrap())
                            .collect();
                        let norm = (Rational::one() - lambda.clone())
                            .pow(s as i64)
                            .unwrap()
                            .recip()
                            .unwrap();
                        let rows = (0..=n_max).map(|n| {
                            let mut rhs = Rational::zero();
                            for j in 0..=s as usize {
                                let w = binomial(s as u64, j as u64)
                                    * (-lambda.clone()).pow((s as usize - j) as i64).unwrap();
                                let mut inner = Rational::zero();
                                for m in 0..=n {
                                    inner = inner
                                        + binomial(n as u64, m as u64)
                                            * frob[m].clone()
                                            * shifted[j][n - m].clone();
                                }
                                rhs = rhs + w * inner;
                            }
                            (n, None, lhs[n].clone(), norm.clone() * rhs)
                        });
                        out.push(case_from_rows(
                            params_of(&[
                                ("k", k.to_string()),
                                ("params", p.to_string()),
                                ("x", x.to_string()),
                                ("s", s.to_string()),
                                ("lambda", lambda.to_string()),
                            ]),
                            rows,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// The polylogarithm derivative rule, coefficient-wise to order `N - 1`.
fn check_eq2_3(_cfg: &GridCfg) -> Vec<CaseOutcome> {
    let order = 10;
    let ks = [
        MultiIndex::of(&[1]),
        MultiIndex::of(&[2]),
        MultiIndex::of(&[1, 1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[2, 2]),
        MultiIndex::of(&[3, 1]),
        MultiIndex::of(&[0, 2]),
        MultiIndex::of(&[1, 1, 1]),
        MultiIndex::of(&[2, 1, 2]),
        MultiIndex::of(&[1, 2, 1]),
    ];
    ks.iter()
        .map(|k| {
            let (lhs, rhs) = derivative_rule_sides(k, order);
            let rows = (0..order).map(|n| (n, None, lhs.coeff(n).clone(), rhs.coeff(n).clone()));
            case_from_rows(
                params_of(&[("k", k.to_string()), ("order", order.to_string())]),
                rows,
            )
        })
        .collect()
}

/// Explicit formula for the generalized multi poly-Euler polynomials,
/// as displayed (statement) and in the corrected finite form (proof).
fn check_eq1_16(_cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = 6;
    let mv = match variant {
        Variant::Statement => MpeExplicitVariant::Stated,
        Variant::Proof => MpeExplicitVariant::Corrected,
    };
    let ks = [
        MultiIndex::of(&[1]),
        MultiIndex::of(&[2]),
        MultiIndex::of(&[-1]),
        MultiIndex::of(&[1, 1]),
        MultiIndex::of(&[1, 2]),
    ];
    let mut out = Vec::new();
    for k in &ks {
        for p in param_triples() {
            for x in [q(0, 1), q(1, 1), q(1, 2)] {
                let route_a = multi_poly_euler(k, &x, &p, n_max);
                let rows = (0..=n_max).map(|n| {
                    let route_b = multi_poly_euler_explicit_with(n, k, &x, &p, mv, 0);
                    (n, None, route_a[n].clone(), route_b)
                });
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}
