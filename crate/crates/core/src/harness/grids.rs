//! The deterministic default grids shared by the checks.
//!
//! The grids cover signs (negative upper indices), the `b = 1`
//! degeneracy (`beta = 0`) and non-integer parameters, while keeping the
//! full suite inside its time budget.

use crate::algebra::Rational;
use crate::polylog::{MultiIndex, ParamTriple};

pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::from_parts(n, d).unwrap()
}

/// The three parameter triples `(alpha, beta, gamma)`.
pub(crate) fn param_triples() -> Vec<ParamTriple> {
    vec![
        ParamTriple::from_i64(1, 0, 1),
        ParamTriple::from_i64(1, 1, 1),
        ParamTriple::new(q(2, 1), q(1, 1), q(1, 2)),
    ]
}

/// Sample points for `x` and `y`.
pub(crate) fn sample_points() -> Vec<Rational> {
    vec![q(0, 1), q(1, 1), q(-1, 1), q(1, 2)]
}

/// Representative index vectors, depths 1 to 3, entries in `-2..=3`.
pub(crate) fn index_grid() -> Vec<MultiIndex> {
    vec![
        MultiIndex::of(&[1]),
        MultiIndex::of(&[2]),
        MultiIndex::of(&[-1]),
        MultiIndex::of(&[1, 1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[-2, 3]),
        MultiIndex::of(&[1, 1, 1]),
        MultiIndex::of(&[2, 1, 1]),
        MultiIndex::of(&[0, 2, -1]),
    ]
}

/// A slimmer index grid for the more expensive nested checks.
pub(crate) fn index_grid_small() -> Vec<MultiIndex> {
    vec![
        MultiIndex::of(&[2]),
        MultiIndex::of(&[-1]),
        MultiIndex::of(&[1, 2]),
        MultiIndex::of(&[2, 1, 1]),
    ]
}

/// Pole-free Hurwitz parameters for a depth-`r` family.
pub(crate) fn hurwitz_parameters(r: usize) -> Vec<Rational> {
    if r == 1 {
        vec![q(1, 1), q(2, 1), q(1, 2)]
    } else {
        vec![Rational::from(r as u64), Rational::from(r as u64 + 2), q(1, 2)]
    }
}
