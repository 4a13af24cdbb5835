//! Checks for the poly-Bernoulli side: the Stirling-expansion block, the
//! explicit formulas, the polynomial-structure theorems and the
//! Hurwitz-Lerch results.

use crate::algebra::{binomial, factorial, Poly, Rational};
use crate::families::{
    hl_mpb_explicit, hl_multi_pb, hl_multi_pb_poly, hurwitz_pb_explicit, hurwitz_poly_bernoulli,
    imatomi_explicit_with, imatomi_mpb, mpb_explicit_with, multi_poly_bernoulli,
    multi_poly_bernoulli_shifted, ChainIndexOrder, MpbExplicitVariant,
};
use crate::polylog::{hl_multi_phi, multi_polylog_z, MultiIndex, ParamTriple};
use crate::special::{
    bernoulli_higher, falling_factorial, frobenius_euler, rising_factorial, StirlingTable,
};

use super::checks_euler::poly_rows;
use super::grids::{hurwitz_parameters, index_grid, index_grid_small, param_triples, q, sample_points};
use super::{case_from_rows, params_of, CaseOutcome, CheckDef, GridCfg, Variant};

pub(crate) fn defs() -> Vec<CheckDef> {
    vec![
        CheckDef::Dual("thm4.1a", check_thm4_1a),
        CheckDef::Dual("thm4.1b", check_thm4_1b),
        CheckDef::Single("thm4.1c", check_thm4_1c),
        CheckDef::Single("thm4.1d", check_thm4_1d),
        CheckDef::Dual("thm4.2", check_thm4_2),
        CheckDef::Dual("thm4.3", check_thm4_3),
        CheckDef::Dual("thm4.4", check_thm4_4),
        CheckDef::Dual("thm4.5", check_thm4_5),
        CheckDef::Dual("cor4.1", check_cor4_1),
        CheckDef::Dual("cor4.2", check_cor4_2),
        CheckDef::Single("thm4.7", check_thm4_7),
        CheckDef::Single("eq1.4", check_eq1_4),
        CheckDef::Dual("imatomi.explicit", check_imatomi_explicit),
        CheckDef::Dual("imatomi.recurrence", check_imatomi_recurrence),
        CheckDef::Single("thm5.1", check_thm5_1),
        CheckDef::Single("cor5.2", check_cor5_2),
        CheckDef::Single("cor5.2.r1", check_cor5_2_r1),
        CheckDef::Single("sec5.liphi", check_sec5_liphi),
    ]
}

fn rq(r: usize) -> Rational {
    Rational::from(r as u64)
}

/// Stirling-expansion skeleton for the multi poly-Bernoulli family,
/// mirroring the poly-Euler one.
fn b_stirling_expansion_rows(
    k: &MultiIndex,
    p: &ParamTriple,
    x: &Rational,
    n_max: usize,
    y_of_m: impl Fn(usize) -> Rational,
    factor_of_m: impl Fn(usize) -> Rational,
) -> Vec<(usize, Option<usize>, Rational, Rational)> {
    let r = k.depth();
    let lhs = multi_poly_bernoulli(k, x, p, n_max).expect("grid parameters are non-degenerate");
    let stirling = StirlingTable::new(n_max);
    let shifted: Vec<Vec<Rational>> = (0..=n_max)
        .map(|m| {
            multi_poly_bernoulli_shifted(k, &y_of_m(m), &p.alpha, &p.beta, n_max)
                .expect("grid parameters are non-degenerate")
        })
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

/// Rising-factorial expansion with `B` at `-m ln c` (statement) or
/// `-m r ln c` (proof).
fn check_thm4_1a(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
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
                let rows =
                    b_stirling_expansion_rows(&k, &p, &x, n_max, y_of_m, |m| rising_factorial(&x, m));
                out.push(case_from_rows(
                    params_of(&[("k", k.to_string()), ("params", p.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// Expansion with `B` at 0 and rising (statement) vs falling (proof)
/// factorial.
fn check_thm4_1b(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        for p in param_triples() {
            for x in sample_points() {
                let rows = b_stirling_expansion_rows(
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

/// Expansion through higher-order Bernoulli polynomials.
fn check_thm4_1c(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for p in param_triples() {
            let base = multi_poly_bernoulli_shifted(&k, &Rational::zero(), &p.alpha, &p.beta, n_max)
                .expect("grid parameters are non-degenerate");
            let stirling = StirlingTable::new(n_max + 2);
            for x in sample_points() {
                let lhs = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
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

/// Expansion through Frobenius-Euler polynomials.
fn check_thm4_1d(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let lambdas = [q(2, 1), q(1, 2), q(-1, 1)];
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for p in param_triples() {
            for s in [1u32, 2] {
                let shifted: Vec<Vec<Rational>> = (0..=s as usize)
                    .map(|j| {
                        multi_poly_bernoulli_shifted(
                            &k,
                            &Rational::from(j as u64),
                            &p.alpha,
                            &p.beta,
                            n_max,
                        )
                        .unwrap()
                    })
                    .collect();
                for lambda in &lambdas {
                    for x in sample_points() {
                        let lhs = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
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

/// Explicit formula: exponent base as displayed (statement) vs as the
/// generating function expands (proof).
fn check_thm4_2(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max.min(6);
    let mv = match variant {
        Variant::Statement => MpbExplicitVariant::Stated,
        Variant::Proof => MpbExplicitVariant::Corrected,
    };
    let mut out = Vec::new();
    for k in index_grid_small() {
        for p in param_triples() {
            for x in [q(0, 1), q(1, 1), q(1, 2)] {
                let route_a = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
                let rows = (0..=n_max).map(|n| {
                    let route_b = mpb_explicit_with(n, &k, &x, &p, mv, 0).unwrap();
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

/// Polynomial structure in `x` with `(ln c)^{n-i}` (statement) vs
/// `(r ln c)^{n-i}` (proof).
fn check_thm4_3(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let base = multi_poly_bernoulli_shifted(&k, &Rational::zero(), &p.alpha, &p.beta, n_max)
                .unwrap();
            let scale = match variant {
                Variant::Statement => p.gamma.clone(),
                Variant::Proof => &rq(r) * &p.gamma,
            };
            for x in sample_points() {
                let lhs = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
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

/// Reduction to the two-parameter-free family:
/// `B_n(x; a, b, c) = (ln a + ln b)^n B_n(arg)` with `arg` as displayed
/// `(x ln c - r ln b)/(ln a + ln b)` (statement) or the derived
/// `(x ln c - ln b)/(ln a + ln b)` (proof).
fn check_thm4_4(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let reduced_params = ParamTriple::from_i64(1, 0, 1);
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let lam = p.ln_ab();
            for x in sample_points() {
                let lhs = multi_poly_bernoulli(&k, &x, &p, n_max).unwrap();
                let beta_mult = match variant {
                    Variant::Statement => rq(r),
                    Variant::Proof => Rational::one(),
                };
                let arg = &(&(&x * &p.gamma) - &(&p.beta * &beta_mult)) / &lam;
                let reduced = multi_poly_bernoulli(&k, &arg, &reduced_params, n_max).unwrap();
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

/// Derivative constant `(n+1)(ln c)` (statement) vs `(n+1)(r ln c)`
/// (proof), on symbolic tables.
fn check_thm4_5(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let table = multi_poly_bernoulli(&k, &Poly::x(), &p, n_max + 1).unwrap();
            let scale = match variant {
                Variant::Statement => p.gamma.clone(),
                Variant::Proof => &rq(r) * &p.gamma,
            };
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

/// Appell property at `c = e`: constant `n+1` (statement) vs `(n+1) r`
/// (proof).
fn check_cor4_1(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let p = ParamTriple::new(p.alpha.clone(), p.beta.clone(), Rational::one());
            let table = multi_poly_bernoulli(&k, &Poly::x(), &p, n_max + 1).unwrap();
            let scale = match variant {
                Variant::Statement => Rational::one(),
                Variant::Proof => rq(r),
            };
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

/// Addition at `c = e`: weight `y^{n-i}` (statement) vs `(ry)^{n-i}`
/// (proof).
fn check_cor4_2(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let pts = sample_points();
    let pairs = [
        (pts[1].clone(), pts[3].clone()),
        (pts[3].clone(), pts[1].clone()),
        (pts[2].clone(), pts[1].clone()),
    ];
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            let p = ParamTriple::new(p.alpha.clone(), p.beta.clone(), Rational::one());
            for (x, y) in &pairs {
                let lhs = multi_poly_bernoulli(&k, &(x + y), &p, n_max).unwrap();
                let at_x = multi_poly_bernoulli(&k, x, &p, n_max).unwrap();
                let weight_base = match variant {
                    Variant::Statement => y.clone(),
                    Variant::Proof => &rq(r) * y,
                };
                let rows = (0..=n_max).map(|n| {
                    let rhs: Rational = (0..=n)
                        .map(|i| {
                            binomial(n as u64, i as u64)
                                * at_x[i].clone()
                                * weight_base.pow((n - i) as i64).unwrap()
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

/// General addition formula with weight `(r ln c)^{n-i} y^{n-i}`, as
/// displayed.
fn check_thm4_7(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let pts = sample_points();
    let pairs = [
        (pts[0].clone(), pts[1].clone()),
        (pts[1].clone(), pts[3].clone()),
        (pts[3].clone(), pts[2].clone()),
    ];
    let mut out = Vec::new();
    for k in index_grid() {
        let r = k.depth();
        for p in param_triples() {
            for (x, y) in &pairs {
                let lhs = multi_poly_bernoulli(&k, &(x + y), &p, n_max).unwrap();
                let at_x = multi_poly_bernoulli(&k, x, &p, n_max).unwrap();
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

/// Hurwitz type poly-Bernoulli numbers: generating function vs the
/// Stirling explicit formula.
fn check_eq1_4(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max.max(10);
    let mut out = Vec::new();
    for k in -2..=3i64 {
        for a in hurwitz_parameters(1) {
            let route_a = hurwitz_poly_bernoulli(k, &a, n_max).unwrap();
            let rows = (0..=n_max).map(|n| {
                (n, None, route_a[n].clone(), hurwitz_pb_explicit(n, k, &a).unwrap())
            });
            out.push(case_from_rows(
                params_of(&[("k", k.to_string()), ("a", a.to_string())]),
                rows,
            ));
        }
    }
    out
}

/// Imatomi explicit formula with the index vector attached to the chain
/// as written (statement) or reversed (proof).
fn check_imatomi_explicit(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let order = match variant {
        Variant::Statement => ChainIndexOrder::AsWritten,
        Variant::Proof => ChainIndexOrder::Reversed,
    };
    let ks = [
        MultiIndex::of(&[1]),
        MultiIndex::of(&[2]),
        MultiIndex::of(&[1, 1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[2, 1]),
        MultiIndex::of(&[1, 2, 2]),
        MultiIndex::of(&[2, 1, 1]),
    ];
    ks.iter()
        .map(|k| {
            let route_a = imatomi_mpb(k, n_max);
            let rows = (0..=n_max).map(|n| {
                (n, None, route_a[n].clone(), imatomi_explicit_with(n, k, order, 0))
            });
            case_from_rows(params_of(&[("k", k.to_string())]), rows)
        })
        .collect()
}

/// Imatomi recurrence with the first (statement) or last (proof) entry
/// decremented.
fn check_imatomi_recurrence(cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let ks = [
        MultiIndex::of(&[2]),
        MultiIndex::of(&[1, 1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[2, 1]),
        MultiIndex::of(&[1, 2, 2]),
        MultiIndex::of(&[2, 1, 1]),
    ];
    ks.iter()
        .map(|k| {
            let dec = match variant {
                Variant::Statement => k.decrement_first(),
                Variant::Proof => k.decrement_last(),
            };
            let table = imatomi_mpb(k, n_max);
            let table_dec = imatomi_mpb(&dec, n_max);
            let rows = (0..=n_max).map(|n| {
                let lhs = &table[n] * &Rational::from(n as u64 + 1);
                let mut rhs = table_dec[n].clone();
                for m in 1..n {
                    rhs = rhs - binomial(n as u64, m as u64 - 1) * table[m].clone();
                }
                (n, None, lhs, rhs)
            });
            case_from_rows(params_of(&[("k", k.to_string())]), rows)
        })
        .collect()
}

/// Hurwitz-Lerch type polynomials: generating function vs the
/// generalized-Stirling explicit formula.
fn check_thm5_1(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for a in hurwitz_parameters(r) {
            for x in sample_points() {
                let route_a = hl_multi_pb_poly(&k, &a, &x, n_max).unwrap();
                let rows = (0..=n_max).map(|n| {
                    (n, None, route_a[n].clone(), hl_mpb_explicit(n, &k, &a, &x).unwrap())
                });
                out.push(case_from_rows(
                    params_of(&[("a", a.to_string()), ("k", k.to_string()), ("x", x.to_string())]),
                    rows,
                ));
            }
        }
    }
    out
}

/// Hurwitz-Lerch type numbers: generating function vs the plain-Stirling
/// corollary sum `sum (-1)^{n+m_r} m_r! S(n, m_r) / prod(...)`.
fn check_cor5_2(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in index_grid_small() {
        let r = k.depth();
        for a in hurwitz_parameters(r) {
            let route_a = hl_multi_pb(&k, &a, n_max).unwrap();
            let rows = (0..=n_max).map(|n| {
                (n, None, route_a[n].clone(), cor5_2_sum(n, &k, &a))
            });
            out.push(case_from_rows(
                params_of(&[("a", a.to_string()), ("k", k.to_string())]),
                rows,
            ));
        }
    }
    out
}

/// The corollary sum itself, built from plain Stirling numbers.
fn cor5_2_sum(n: usize, k: &MultiIndex, a: &Rational) -> Rational {
    let r = k.depth();
    let stirling = StirlingTable::new(n);
    let mut total = Rational::zero();
    for chain in crate::families::weak_chains(n, r) {
        let mr = *chain.last().unwrap();
        let s = stirling.get(n, mr);
        if s.is_zero() {
            continue;
        }
        let mut weight = Rational::one();
        for (i, (&m, &ki)) in chain.iter().zip(k.entries()).enumerate() {
            let base = Rational::from(m as u64) + a.clone() - Rational::from(r as u64)
                + Rational::from(i as u64 + 1);
            weight = weight * base.pow(-ki).unwrap();
        }
        let sign = if (n + mr) % 2 == 0 { Rational::one() } else { -Rational::one() };
        total = total + sign * factorial(mr as u64) * s * weight;
    }
    total
}

/// Depth-1 reduction: the corollary sum equals the Hurwitz explicit
/// formula.
fn check_cor5_2_r1(cfg: &GridCfg) -> Vec<CaseOutcome> {
    let n_max = cfg.n_max;
    let mut out = Vec::new();
    for k in -2..=3i64 {
        for a in hurwitz_parameters(1) {
            let ki = MultiIndex::of(&[k]);
            let rows = (0..=n_max).map(|n| {
                (
                    n,
                    None,
                    cor5_2_sum(n, &ki, &a),
                    hurwitz_pb_explicit(n, k, &a).unwrap(),
                )
            });
            out.push(case_from_rows(
                params_of(&[("k", k.to_string()), ("a", a.to_string())]),
                rows,
            ));
        }
    }
    out
}

/// `Li_{(k)}(z) / z^r = Phi_{(k)}(z, r)` coefficient-exactly at order 15.
fn check_sec5_liphi(_cfg: &GridCfg) -> Vec<CaseOutcome> {
    let order = 15;
    let ks = [
        MultiIndex::of(&[2]),
        MultiIndex::of(&[-1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[2, -1]),
        MultiIndex::of(&[1, 1, 2]),
        MultiIndex::of(&[1, 1, 1, 1]),
    ];
    ks.iter()
        .map(|k| {
            let r = k.depth();
            let li = multi_polylog_z(k, order).shift_div_t(r).unwrap();
            let phi = hl_multi_phi(k, &Rational::from(r as u64), order - r).unwrap();
            let rows = (0..=order - r).map(|n| (n, None, li.coeff(n).clone(), phi.coeff(n).clone()));
            case_from_rows(
                params_of(&[("k", k.to_string()), ("order", order.to_string())]),
                rows,
            )
        })
        .collect()
}
