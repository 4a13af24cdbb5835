//! Acceptance suite: one test per criterion, exact rational equality
//! throughout (zero tolerance). Each test prints a single
//! `acceptance criterion N (...): PASS` line when it holds; failures
//! carry the first offending tuple in the assertion message.

use std::time::{Duration, Instant};

use polybe::algebra::{binomial, Poly, Rational};
use polybe::families::{
    hl_mpb_explicit_with, hl_multi_pb_poly, hurwitz_pb_explicit, hurwitz_poly_bernoulli,
    imatomi_explicit_with, imatomi_mpb, imatomi_recurrence_check, mpb_explicit_with,
    multi_poly_bernoulli, multi_poly_euler, multi_poly_euler_explicit_with,
    multi_poly_euler_shifted, poly_bernoulli, poly_euler_poly, symmetrized_dcal, ChainIndexOrder,
    MpbExplicitVariant, MpeExplicitVariant,
};
use polybe::harness::{run, run_all, HarnessConfig};
use polybe::polylog::{MultiIndex, ParamTriple};
use polybe::special::{
    classical_bernoulli_table, classical_euler_poly_table, rising_factorial, StirlingTable,
};
use polybe::series::TruncSeries;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_parts(n, d).unwrap()
}

fn param_grid() -> Vec<ParamTriple> {
    vec![
        ParamTriple::from_i64(1, 0, 1),
        ParamTriple::from_i64(1, 1, 1),
        ParamTriple::new(q(2, 1), q(1, 1), q(1, 2)),
    ]
}

/// All index vectors of the given depth with entries from `values`.
fn index_vectors(depth: usize, values: &[i64]) -> Vec<MultiIndex> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|v| MultiIndex::new(v).unwrap()).collect()
}

#[test]
fn criterion_1_engine_soundness() {
    let start = Instant::now();
    let n = 12usize;

    // binomial-convolution law for EGF coefficients
    let f = TruncSeries::exp_linear(&q(2, 1), n);
    let g = TruncSeries::one(n)
        .sub(&TruncSeries::monomial(Rational::one(), 1, n))
        .inverse()
        .unwrap();
    let prod = f.mul(&g);
    for i in 0..=n {
        let conv: Rational = (0..=i)
            .map(|j| binomial(i as u64, j as u64) * f.egf_coeff(j) * g.egf_coeff(i - j))
            .sum();
        assert_eq!(prod.egf_coeff(i), conv, "binomial convolution at {}", i);
    }

    // inverse and compose round-trips
    for series in [
        f.clone(),
        TruncSeries::exp_linear(&q(-1, 3), n),
        TruncSeries::from_coeffs((0..=n).map(|i| q(2 + i as i64, 1 + (i as i64 % 3))).collect()),
    ] {
        assert_eq!(series.mul(&series.inverse().unwrap()), TruncSeries::one(n));
        let t = TruncSeries::monomial(Rational::one(), 1, n);
        assert_eq!(series.compose(&t).unwrap(), series);
    }

    // Bell-number EGF by composition vs the independent recurrence
    let exp = TruncSeries::exp_linear(&Rational::one(), n);
    let bell_egf = exp.compose(&exp.sub(&TruncSeries::one(n))).unwrap();
    let bell = polybe::special::bell_table(n);
    for (i, b) in bell.iter().enumerate() {
        assert_eq!(&bell_egf.egf_coeff(i), b, "Bell number {}", i);
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    println!("acceptance criterion 1 (engine soundness, N = 12): PASS ({:?})", elapsed);
}

#[test]
fn criterion_2_classical_anchors() {
    // Kaneko generating function at k = 1 against the Bernoulli
    // recurrence oracle in the B_1 = +1/2 convention
    let table = poly_bernoulli(1, 12);
    let oracle = classical_bernoulli_table(12);
    for n in 0..=12usize {
        let plus = if n % 2 == 0 { oracle[n].clone() } else { -oracle[n].clone() };
        assert_eq!(table[n], plus, "poly-Bernoulli anchor at n = {}", n);
    }

    // E_n^{(1)}(x) = n E_{n-1}(x) against the Euler-polynomial recurrence
    for x0 in [q(0, 1), q(1, 2), q(1, 1)] {
        let table = poly_euler_poly(1, &x0, 10);
        let oracle = classical_euler_poly_table(10, &x0);
        assert!(table[0].is_zero());
        for n in 1..=10usize {
            assert_eq!(
                table[n],
                oracle[n - 1].clone() * Rational::from(n as u64),
                "poly-Euler anchor at n = {}, x = {}",
                n,
                x0
            );
        }
    }
    println!("acceptance criterion 2 (classical anchors): PASS");
}

#[test]
fn criterion_3_dual_route_exactness() {
    let start = Instant::now();

    // Hurwitz type poly-Bernoulli numbers, n <= 10
    for k in -2..=3i64 {
        for a in [q(1, 1), q(2, 1), q(1, 2)] {
            let route_a = hurwitz_poly_bernoulli(k, &a, 10).unwrap();
            for n in 0..=10 {
                assert_eq!(
                    route_a[n],
                    hurwitz_pb_explicit(n, k, &a).unwrap(),
                    "hurwitz dual route k={} a={} n={}",
                    k,
                    a,
                    n
                );
            }
        }
    }

    // Imatomi explicit formula and recurrence, depth <= 3, n <= 8
    for depth in 1..=3usize {
        for k in index_vectors(depth, &[1, 2]) {
            let route_a = imatomi_mpb(&k, 8);
            for n in 0..=8 {
                assert_eq!(
                    route_a[n],
                    imatomi_explicit_with(n, &k, ChainIndexOrder::Reversed, 0),
                    "imatomi dual route k={} n={}",
                    k,
                    n
                );
            }
            let rec = imatomi_recurrence_check(&k, 8, ChainIndexOrder::Reversed);
            assert!(rec.iter().all(|&ok| ok), "imatomi recurrence k={}", k);
        }
    }

    // Explicit formula for the generalized multi poly-Bernoulli
    // polynomials: the corrected reading passes on the default grid
    let ks = [MultiIndex::of(&[2]), MultiIndex::of(&[1, 2]), MultiIndex::of(&[2, 1, 1])];
    for k in &ks {
        for p in param_grid() {
            for x in [q(0, 1), q(1, 1), q(1, 2)] {
                let route_a = multi_poly_bernoulli(k, &x, &p, 6).unwrap();
                for n in 0..=6 {
                    assert_eq!(
                        route_a[n],
                        mpb_explicit_with(n, k, &x, &p, MpbExplicitVariant::Corrected, 0).unwrap(),
                        "mpb explicit k={} p={} x={} n={}",
                        k,
                        p,
                        x,
                        n
                    );
                }
            }
        }
    }
    println!("  recorded: mpb explicit formula passes under the corrected exponent (r gamma x - j ln a - (j+r) ln b)");

    // Explicit formula for the generalized multi poly-Euler polynomials,
    // r <= 2, n <= 6: the corrected finite form passes
    for k in [MultiIndex::of(&[2]), MultiIndex::of(&[-1]), MultiIndex::of(&[1, 2])] {
        for p in param_grid() {
            for x in [q(0, 1), q(1, 2)] {
                let route_a = multi_poly_euler(&k, &x, &p, 6);
                for n in 0..=6 {
                    assert_eq!(
                        route_a[n],
                        multi_poly_euler_explicit_with(n, &k, &x, &p, MpeExplicitVariant::Corrected, 0),
                        "mpe explicit k={} p={} x={} n={}",
                        k,
                        p,
                        x,
                        n
                    );
                }
            }
        }
    }
    println!("  recorded: mpe explicit formula passes under the corrected (2-w)-expansion form");

    // Hurwitz-Lerch type polynomials and numbers, depth <= 3, n <= 8
    for depth in 1..=3usize {
        for k in index_vectors(depth, &[1, 2]) {
            let r = k.depth();
            for a in [Rational::from(r as u64), q(1, 2)] {
                for x in [q(0, 1), q(1, 1), q(1, 2)] {
                    let route_a = hl_multi_pb_poly(&k, &a, &x, 8).unwrap();
                    for n in 0..=8 {
                        assert_eq!(
                            route_a[n],
                            hl_mpb_explicit_with(n, &k, &a, &x, 0).unwrap(),
                            "hl dual route k={} a={} x={} n={}",
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

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    println!("acceptance criterion 3 (dual-route exactness): PASS ({:?})", elapsed);
}

#[test]
fn criterion_4_identity_suites() {
    let report = run_all(&HarnessConfig::default());
    let required = [
        "thm2.2", "thm2.3", "thm2.4", "thm2.5", "eq1.12", "eq1.13", "eq1.14", "eq1.15",
        "thm4.1a", "thm4.1b", "thm4.1c", "thm4.1d", "thm4.3", "thm4.4", "thm4.5", "thm4.7",
        "cor4.1", "cor4.2", "eq2.3", "sec5.liphi",
    ];
    for id in required {
        let passing = report
            .checks
            .iter()
            .any(|c| c.id == id && c.all_passed());
        assert!(passing, "identity group {} has no passing variant", id);
    }
    let failures = report.statement_failures();
    println!("  as-written readings that fail (each has a passing corrected reading): {}", failures.join(", "));
    println!("acceptance criterion 4 (identity suites): PASS");
}

#[test]
fn criterion_5_symmetrized_construction() {
    // hand check of the vanishing order: the (0,0) value is 0 for r >= 2
    for r in [2usize, 3] {
        let p = ParamTriple::from_i64(1, 0, 1);
        let d = symmetrized_dcal(0, 0, r, &q(1, 1), &q(1, 2), &p).unwrap();
        assert!(d.is_zero(), "D_0^(0) at r = {}", r);
    }

    // the double-generating-function checks execute deterministically
    let cfg = HarnessConfig::default();
    let first = run(&cfg, Some("thm3.1")).unwrap();
    let second = run(&cfg, Some("thm3.1")).unwrap();
    assert_eq!(first, second, "thm3.1 outcomes are not deterministic");
    let r1_first = run(&cfg, Some("eq3.1")).unwrap();
    let r1_second = run(&cfg, Some("eq3.1")).unwrap();
    assert_eq!(r1_first, r1_second, "eq3.1 outcomes are not deterministic");

    for check in first.checks.iter().chain(r1_first.checks.iter()) {
        let pass = check.cases.iter().filter(|c| c.passed()).count();
        let fail = check.cases.len() - pass;
        let detail = check
            .cases
            .iter()
            .find_map(|c| c.first_mismatch.as_ref().map(|m| format!(" first mismatch (n={}, m={:?})", m.n, m.m)))
            .unwrap_or_default();
        println!(
            "  recorded: {} [{}] pass={} fail={}{}",
            check.id, check.variant, pass, fail, detail
        );
    }
    println!("acceptance criterion 5 (symmetrized construction): PASS");
}

#[test]
fn criterion_6_determinism() {
    let parallel = HarnessConfig::default();
    let serial = HarnessConfig {
        parallel: false,
        ..HarnessConfig::default()
    };
    let a = run_all(&parallel).to_json();
    let b = run_all(&parallel).to_json();
    let c = run_all(&serial).to_json();
    assert_eq!(a, b, "repeated runs differ");
    assert_eq!(a, c, "parallel and serial runs differ");
    println!("acceptance criterion 6 (byte-identical reports): PASS");
}

#[test]
fn criterion_7_truncation_stability() {
    // every explicit-formula chain sum is unchanged when its truncation
    // bound is extended by 2, across the dual-route grid
    for depth in 1..=3usize {
        for k in index_vectors(depth, &[1, 2]) {
            for n in 0..=8 {
                assert_eq!(
                    imatomi_explicit_with(n, &k, ChainIndexOrder::Reversed, 0),
                    imatomi_explicit_with(n, &k, ChainIndexOrder::Reversed, 2),
                    "imatomi bound stability k={} n={}",
                    k,
                    n
                );
            }
            let r = k.depth();
            for a in [Rational::from(r as u64), q(1, 2)] {
                for n in 0..=8 {
                    assert_eq!(
                        hl_mpb_explicit_with(n, &k, &a, &q(1, 2), 0).unwrap(),
                        hl_mpb_explicit_with(n, &k, &a, &q(1, 2), 2).unwrap(),
                        "hl bound stability k={} a={} n={}",
                        k,
                        a,
                        n
                    );
                }
            }
        }
    }
    for k in [MultiIndex::of(&[2]), MultiIndex::of(&[1, 2]), MultiIndex::of(&[2, 1, 1])] {
        for p in param_grid() {
            for n in 0..=6 {
                assert_eq!(
                    mpb_explicit_with(n, &k, &q(1, 2), &p, MpbExplicitVariant::Corrected, 0).unwrap(),
                    mpb_explicit_with(n, &k, &q(1, 2), &p, MpbExplicitVariant::Corrected, 2).unwrap(),
                    "mpb bound stability k={} p={} n={}",
                    k,
                    p,
                    n
                );
                if k.depth() <= 2 {
                    assert_eq!(
                        multi_poly_euler_explicit_with(n, &k, &q(1, 2), &p, MpeExplicitVariant::Corrected, 0),
                        multi_poly_euler_explicit_with(n, &k, &q(1, 2), &p, MpeExplicitVariant::Corrected, 2),
                        "mpe bound stability k={} p={} n={}",
                        k,
                        p,
                        n
                    );
                }
            }
        }
    }

    // the Stirling-expansion m-sums are likewise stable when the bound
    // m <= n is extended (all added Stirling factors vanish)
    let k = MultiIndex::of(&[1, 2]);
    let p = ParamTriple::from_i64(1, 1, 1);
    let x = q(1, 2);
    let n_max = 6;
    let rhs_with_bound = |m_bound: usize| -> Vec<Rational> {
        let stirling = StirlingTable::new(n_max);
        let r = k.depth();
        let scale = Rational::from(r as u64) * p.gamma.clone();
        let shifted: Vec<Vec<Rational>> = (0..=m_bound)
            .map(|m| {
                let y = -(p.gamma.clone() * Rational::from((m * r) as u64));
                multi_poly_euler_shifted(&k, &y, &p.alpha, &p.beta, n_max)
            })
            .collect();
        (0..=n_max)
            .map(|n| {
                let mut rhs = Rational::zero();
                for m in 0..=m_bound {
                    let fm = rising_factorial(&x, m);
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
                rhs
            })
            .collect()
    };
    assert_eq!(rhs_with_bound(n_max), rhs_with_bound(n_max + 2));

    println!("acceptance criterion 7 (truncation-bound stability): PASS");
}

/// The spec-level invariants that tie the families together.
#[test]
fn specialization_lattice() {
    // depth-1 multi poly-Euler at (0, 1, 1) is the poly-Euler family
    let x = Poly::x();
    for k in [-1i64, 1, 2] {
        assert_eq!(
            multi_poly_euler(&MultiIndex::of(&[k]), &x, &ParamTriple::from_i64(0, 1, 1), 10),
            poly_euler_poly(k, &x, 10)
        );
    }
    // hurwitz at a = 1 is poly-Bernoulli
    for k in [-2i64, 0, 2] {
        assert_eq!(
            hurwitz_poly_bernoulli(k, &Rational::one(), 10).unwrap(),
            poly_bernoulli(k, 10)
        );
    }
    // hl at depth 1 is hurwitz
    for k in [-1i64, 1, 3] {
        for a in [q(2, 1), q(1, 2)] {
            assert_eq!(
                polybe::families::hl_multi_pb(&MultiIndex::of(&[k]), &a, 10).unwrap(),
                hurwitz_poly_bernoulli(k, &a, 10).unwrap()
            );
        }
    }
    println!("specialization lattice: PASS");
}
