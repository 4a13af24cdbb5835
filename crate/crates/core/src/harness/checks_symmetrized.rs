//! Checks of the symmetrized constructions against their double
//! generating functions, built with the bivariate series engine.

use crate::algebra::Rational;
use crate::families::{symmetrized_d, symmetrized_dcal};
use crate::polylog::ParamTriple;
use crate::series::BiTruncSeries;

use super::grids::{param_triples, q};
use super::{case_from_rows, params_of, CaseOutcome, CheckDef, GridCfg, Variant};

pub(crate) fn defs() -> Vec<CheckDef> {
    vec![
        CheckDef::Single("eq3.1", check_eq3_1),
        CheckDef::Dual("thm3.1", check_thm3_1),
    ]
}

const ORDER_T: usize = 5;
const ORDER_U: usize = 5;

fn xy_samples() -> Vec<(Rational, Rational)> {
    vec![
        (q(0, 1), q(0, 1)),
        (q(1, 1), q(0, 1)),
        (q(0, 1), q(1, 1)),
        (q(1, 2), q(-1, 1)),
    ]
}

fn exp_tu(lt: &Rational, lu: &Rational) -> BiTruncSeries<Rational> {
    BiTruncSeries::exp_linear(lt, lu, ORDER_T, ORDER_U)
}

/// `e^t + e^{iu} - e^{t+iu}` as a bivariate series.
fn mixed_factor(i: u64) -> BiTruncSeries<Rational> {
    let iu = Rational::from(i);
    exp_tu(&Rational::one(), &Rational::zero())
        .add(&exp_tu(&Rational::zero(), &iu))
        .sub(&exp_tu(&Rational::one(), &iu))
}

/// Depth-1 double generating function:
/// `sum D_n^{(m)} t^n/n! u^m/m! = 2 e^{Au} e^{Xt} e^{t+u} (1-e^{-t})
///  / ((e^t+1)(e^t+e^u-e^{t+u}))`
/// with `A = (y ln c + ln a)/(ln a + ln b)`, `X = (x ln c + ln a)/(ln a + ln b)`.
fn check_eq3_1(_cfg: &GridCfg) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for p in param_triples() {
        for (x, y) in xy_samples() {
            let lam = p.ln_ab();
            let a_exp = &(&(&y * &p.gamma) + &p.alpha) / &lam;
            let x_exp = &(&(&x * &p.gamma) + &p.alpha) / &lam;
            let numerator = exp_tu(&x_exp, &a_exp)
                .mul(&exp_tu(&Rational::one(), &Rational::one()))
                .mul(&one_minus_exp_neg_t())
                .scale_rational(&Rational::from(2));
            let denom = exp_tu(&Rational::one(), &Rational::zero())
                .add(&BiTruncSeries::one(ORDER_T, ORDER_U))
                .mul(&mixed_factor(1));
            let rhs = numerator.mul(&denom.inverse().expect("constant term 2"));
            let rows = (0..=ORDER_T).flat_map(|n| {
                let x = x.clone();
                let y = y.clone();
                let p = p.clone();
                let rhs = rhs.clone();
                (0..=ORDER_U).map(move |m| {
                    let lhs = symmetrized_d(m, n, &x, &y, &p).unwrap();
                    (n, Some(m), lhs, rhs.egf_coeff(n, m))
                })
            });
            out.push(case_from_rows(
                params_of(&[
                    ("params", p.to_string()),
                    ("x", x.to_string()),
                    ("y", y.to_string()),
                ]),
                rows,
            ));
        }
    }
    out
}

fn one_minus_exp_neg_t() -> BiTruncSeries<Rational> {
    BiTruncSeries::one(ORDER_T, ORDER_U).sub(&exp_tu(&-Rational::one(), &Rational::zero()))
}

/// Depth-`r` double generating function; the `t`-exponent carries
/// `((r-1) x ln c + ln a)/(ln a + ln b)` as displayed (statement) or the
/// substitution-derived `(x ln c + ln a)/(ln a + ln b)` (proof).
fn check_thm3_1(_cfg: &GridCfg, variant: Variant) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    // two parameter triples keep the bivariate checks inside budget
    let triples: Vec<ParamTriple> = param_triples().into_iter().take(2).collect();
    for r in [2usize, 3] {
        for p in &triples {
            for (x, y) in xy_samples() {
                let lam = p.ln_ab();
                let r1 = Rational::from(r as u64 - 1);
                let b_exp = &(&(&(&y * &p.gamma) * &r1) + &p.alpha) / &lam;
                let x_num = match variant {
                    Variant::Statement => &(&(&x * &p.gamma) * &r1) + &p.alpha,
                    Variant::Proof => &(&x * &p.gamma) + &p.alpha,
                };
                let t_exp = &r1 * &(&x_num / &lam);
                let choose_r_2 = Rational::from((r * (r - 1) / 2) as u64);
                let numerator = exp_tu(&t_exp, &b_exp)
                    .mul(&exp_tu(&r1, &choose_r_2))
                    .mul(&one_minus_exp_neg_t().pow_u(r as u32 - 1))
                    .scale_rational(&Rational::from(2));
                let mut denom = exp_tu(&Rational::one(), &Rational::zero())
                    .add(&BiTruncSeries::one(ORDER_T, ORDER_U))
                    .pow_u(r as u32 - 1);
                for i in 1..r {
                    denom = denom.mul(&mixed_factor(i as u64));
                }
                let rhs = numerator.mul(&denom.inverse().expect("nonzero constant term"));
                let rows = (0..=ORDER_T).flat_map(|n| {
                    let x = x.clone();
                    let y = y.clone();
                    let p = p.clone();
                    let rhs = rhs.clone();
                    (0..=ORDER_U).map(move |m| {
                        let lhs = symmetrized_dcal(m, n, r, &x, &y, &p).unwrap();
                        (n, Some(m), lhs, rhs.egf_coeff(n, m))
                    })
                });
                out.push(case_from_rows(
                    params_of(&[
                        ("r", r.to_string()),
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
