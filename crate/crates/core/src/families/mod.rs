//! The number / polynomial families, each computable from its generating
//! function (route A, the definition of record) and, where a closed form
//! exists, from an explicit finite sum (route B).
//!
//! Route A always goes through the series engine; the `values[n]` entry of
//! a table is exactly the EGF coefficient of the defining generating
//! function. Explicit formulas are verification routes. Where the source
//! identities are ambiguous, a function computes the adjudicated-correct
//! form and a `*_stated` twin computes the form as written, so the harness
//! can report both.

mod bernoulli;
mod euler;
mod symmetrized;

pub use bernoulli::{
    hl_mpb_explicit, hl_mpb_explicit_with, hl_multi_pb, hl_multi_pb_poly, hurwitz_pb_explicit,
    hurwitz_poly_bernoulli, hurwitz_poly_euler, imatomi_explicit, imatomi_explicit_with,
    imatomi_mpb, imatomi_recurrence_check, mpb_explicit, mpb_explicit_with, multi_poly_bernoulli,
    multi_poly_bernoulli_shifted, poly_bernoulli, ChainIndexOrder, MpbExplicitVariant,
};
pub use euler::{
    multi_poly_euler, multi_poly_euler_explicit, multi_poly_euler_explicit_with,
    multi_poly_euler_shifted, ohno_sasaki_poly_euler, poly_euler_poly, MpeExplicitVariant,
};
pub use symmetrized::{symmetrized_d, symmetrized_dcal};

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};
use crate::polylog::{MultiIndex, ParamTriple};
use crate::series::RingElem;

/// Enumerates every family the crate computes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyTag {
    PolyBernoulli,
    PolyEuler,
    HurwitzPb,
    HurwitzPe,
    OhnoSasakiPe,
    ImatomiMpb,
    MultiPolyEuler,
    MultiPolyBernoulli,
    HlMultiPb,
    SymmetrizedD,
    SymmetrizedDcal,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 11] = [
        FamilyTag::PolyBernoulli,
        FamilyTag::PolyEuler,
        FamilyTag::HurwitzPb,
        FamilyTag::HurwitzPe,
        FamilyTag::OhnoSasakiPe,
        FamilyTag::ImatomiMpb,
        FamilyTag::MultiPolyEuler,
        FamilyTag::MultiPolyBernoulli,
        FamilyTag::HlMultiPb,
        FamilyTag::SymmetrizedD,
        FamilyTag::SymmetrizedDcal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::PolyBernoulli => "poly-bernoulli",
            FamilyTag::PolyEuler => "poly-euler",
            FamilyTag::HurwitzPb => "hurwitz-pb",
            FamilyTag::HurwitzPe => "hurwitz-pe",
            FamilyTag::OhnoSasakiPe => "ohno-sasaki-pe",
            FamilyTag::ImatomiMpb => "imatomi-mpb",
            FamilyTag::MultiPolyEuler => "multi-poly-euler",
            FamilyTag::MultiPolyBernoulli => "multi-poly-bernoulli",
            FamilyTag::HlMultiPb => "hl-multi-pb",
            FamilyTag::SymmetrizedD => "symmetrized-d",
            FamilyTag::SymmetrizedDcal => "symmetrized-dcal",
        }
    }

    /// Defining generating function, in plain text.
    pub fn generating_function(self) -> &'static str {
        match self {
            FamilyTag::PolyBernoulli => "Li_k(1-e^{-t}) / (1-e^{-t})",
            FamilyTag::PolyEuler => "2 Li_k(1-e^{-t}) e^{xt} / (1+e^t)",
            FamilyTag::HurwitzPb => "Phi(1-e^{-t}, k, a)",
            FamilyTag::HurwitzPe => "2 (1-e^{-t}) Phi(1-e^{-t}, k, a) / (1+e^t)",
            FamilyTag::OhnoSasakiPe => "Li_k(1-e^{-4t}) / (4t cosh t)",
            FamilyTag::ImatomiMpb => "Li_{(k1..kr)}(1-e^{-t}) / (1-e^{-t})",
            FamilyTag::MultiPolyEuler => "2 Li_{(k1..kr)}(1-(ab)^{-t}) c^{rxt} / (a^{-t}+b^t)^r",
            FamilyTag::MultiPolyBernoulli => "Li_{(k1..kr)}(1-(ab)^{-t}) c^{rxt} / (b^t-a^{-t})^r",
            FamilyTag::HlMultiPb => "Phi_{(k1..kr)}(1-e^{-t}, a) e^{rxt}",
            FamilyTag::SymmetrizedD => {
                "sum_j C(m,j) E_n^{(-j)}(x;a,b,c) ((y ln c + ln a)/(ln a + ln b))^{m-j} / (ln a + ln b)^n"
            }
            FamilyTag::SymmetrizedDcal => {
                "sum over compositions k1+..+kr=m of C(m;k1..kr) E_n^{(-k1..-k_{r-1})}(x;a,b,c) (((r-1)y ln c + ln a)/(ln a + ln b))^{kr} / (ln a + ln b)^n"
            }
        }
    }

    /// Identifier of the defining display, in the same id scheme the
    /// verification report uses.
    pub fn reference(self) -> &'static str {
        match self {
            FamilyTag::PolyBernoulli => "sec1.kaneko",
            FamilyTag::PolyEuler => "eq1.1",
            FamilyTag::HurwitzPb => "eq1.2",
            FamilyTag::HurwitzPe => "eq1.6",
            FamilyTag::OhnoSasakiPe => "sec1.ohno-sasaki",
            FamilyTag::ImatomiMpb => "eq1.8",
            FamilyTag::MultiPolyEuler => "eq1.11",
            FamilyTag::MultiPolyBernoulli => "eq4.1",
            FamilyTag::HlMultiPb => "eq5.4",
            FamilyTag::SymmetrizedD => "sec3.d",
            FamilyTag::SymmetrizedDcal => "def3.1",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnsupportedDepth(format!("unknown family `{}`", s)))
    }
}

/// The `x` argument of a polynomial family: a rational sample point or the
/// symbolic variable itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum XArg {
    Symbolic,
    Value(Rational),
}

impl XArg {
    fn as_rational(&self) -> Result<&Rational> {
        match self {
            XArg::Value(v) => Ok(v),
            XArg::Symbolic => Err(Error::UnsupportedDepth(
                "this family takes a rational x, not a symbolic one".into(),
            )),
        }
    }
}

/// A fully-specified family computation request.
#[derive(Clone, PartialEq, Debug)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub k: MultiIndex,
    pub params: ParamTriple,
    pub x: XArg,
    pub y: Rational,
    /// Hurwitz shift parameter.
    pub a: Rational,
    /// Depth of the symmetrized construction (`symmetrized-dcal` only).
    pub r: usize,
    pub n_max: usize,
}

impl FamilySpec {
    /// Validates family-specific preconditions without computing values.
    pub fn validate(&self) -> Result<()> {
        let depth1 = matches!(
            self.tag,
            FamilyTag::PolyBernoulli
                | FamilyTag::PolyEuler
                | FamilyTag::HurwitzPb
                | FamilyTag::HurwitzPe
                | FamilyTag::OhnoSasakiPe
                | FamilyTag::SymmetrizedD
        );
        if depth1 && self.k.depth() != 1 {
            return Err(Error::UnsupportedDepth(format!(
                "family {} takes a single index k, got depth {}",
                self.tag,
                self.k.depth()
            )));
        }
        match self.tag {
            FamilyTag::HurwitzPb | FamilyTag::HurwitzPe => {
                crate::polylog::hurwitz_lerch_phi(self.k.entries()[0], &self.a, self.n_max + 1)
                    .map(|_| ())
            }
            FamilyTag::HlMultiPb => {
                crate::polylog::hl_multi_phi(&self.k, &self.a, self.n_max + 1).map(|_| ())
            }
            FamilyTag::MultiPolyBernoulli | FamilyTag::SymmetrizedD => {
                if self.params.ln_ab().is_zero() {
                    return Err(Error::DegenerateParameter("ln a + ln b = 0".into()));
                }
                Ok(())
            }
            FamilyTag::SymmetrizedDcal => {
                if self.r < 2 {
                    return Err(Error::UnsupportedDepth(
                        "symmetrized-dcal needs depth r >= 2 (r = 1 is symmetrized-d)".into(),
                    ));
                }
                if self.params.ln_ab().is_zero() {
                    return Err(Error::DegenerateParameter("ln a + ln b = 0".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Runs route A (or the defining finite sum for the symmetrized
    /// constructions) and collects the values.
    pub fn compute(&self) -> Result<ValueTable> {
        self.validate()?;
        let k0 = self.k.entries()[0];
        let n = self.n_max;
        let values = match self.tag {
            FamilyTag::PolyBernoulli => TableValues::Scalar(poly_bernoulli(k0, n)),
            FamilyTag::PolyEuler => match &self.x {
                XArg::Symbolic => TableValues::Symbolic(poly_euler_poly(k0, &Poly::x(), n)),
                XArg::Value(x) => TableValues::Scalar(poly_euler_poly(k0, x, n)),
            },
            FamilyTag::HurwitzPb => TableValues::Scalar(hurwitz_poly_bernoulli(k0, &self.a, n)?),
            FamilyTag::HurwitzPe => TableValues::Scalar(hurwitz_poly_euler(k0, &self.a, n)?),
            FamilyTag::OhnoSasakiPe => TableValues::Scalar(ohno_sasaki_poly_euler(k0, n)),
            FamilyTag::ImatomiMpb => TableValues::Scalar(imatomi_mpb(&self.k, n)),
            FamilyTag::MultiPolyEuler => match &self.x {
                XArg::Symbolic => {
                    TableValues::Symbolic(multi_poly_euler(&self.k, &Poly::x(), &self.params, n))
                }
                XArg::Value(x) => TableValues::Scalar(multi_poly_euler(&self.k, x, &self.params, n)),
            },
            FamilyTag::MultiPolyBernoulli => match &self.x {
                XArg::Symbolic => TableValues::Symbolic(multi_poly_bernoulli(
                    &self.k,
                    &Poly::x(),
                    &self.params,
                    n,
                )?),
                XArg::Value(x) => {
                    TableValues::Scalar(multi_poly_bernoulli(&self.k, x, &self.params, n)?)
                }
            },
            FamilyTag::HlMultiPb => match &self.x {
                XArg::Symbolic => {
                    TableValues::Symbolic(hl_multi_pb_poly(&self.k, &self.a, &Poly::x(), n)?)
                }
                XArg::Value(x) => TableValues::Scalar(hl_multi_pb_poly(&self.k, &self.a, x, n)?),
            },
            FamilyTag::SymmetrizedD => {
                let x = self.x.as_rational()?;
                let mut grid = Vec::with_capacity(n + 1);
                for nn in 0..=n {
                    let mut row = Vec::with_capacity(n + 1);
                    for mm in 0..=n {
                        row.push(symmetrized_d(mm, nn, x, &self.y, &self.params)?);
                    }
                    grid.push(row);
                }
                TableValues::Grid(grid)
            }
            FamilyTag::SymmetrizedDcal => {
                let x = self.x.as_rational()?;
                let mut grid = Vec::with_capacity(n + 1);
                for nn in 0..=n {
                    let mut row = Vec::with_capacity(n + 1);
                    for mm in 0..=n {
                        row.push(symmetrized_dcal(mm, nn, self.r, x, &self.y, &self.params)?);
                    }
                    grid.push(row);
                }
                TableValues::Grid(grid)
            }
        };
        Ok(ValueTable {
            spec: self.clone(),
            values,
        })
    }
}

/// The values of a computed family table.
#[derive(Clone, PartialEq, Debug)]
pub enum TableValues {
    /// `values[n]` indexed by `n`.
    Scalar(Vec<Rational>),
    /// Symbolic-in-`x` values, one polynomial per `n`.
    Symbolic(Vec<Poly>),
    /// Bivariate `(n, m)` tables of the symmetrized constructions.
    Grid(Vec<Vec<Rational>>),
}

/// A family table: the request plus the exact EGF coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct ValueTable {
    pub spec: FamilySpec,
    pub values: TableValues,
}

/// Multinomial coefficient `m! / (parts_1! ... parts_k!)`; the parts must
/// sum to `m`.
pub(crate) fn multinomial(m: u64, parts: &[u64]) -> Rational {
    debug_assert_eq!(parts.iter().sum::<u64>(), m);
    let mut acc = crate::algebra::factorial(m);
    for &p in parts {
        acc = acc / crate::algebra::factorial(p);
    }
    acc
}

/// Lifts `x` scaled by a rational into a ring: used for exponents like
/// `r gamma x`.
pub(crate) fn scaled<R: RingElem>(x: &R, s: &Rational) -> R {
    x.scale(s)
}

/// All strict chains `0 < m_1 < ... < m_depth <= max`, ascending.
pub(crate) fn strict_chains(max: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(depth);
    fn go(start: usize, max: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        // need `left` distinct values above `start`
        for m in start..=max.saturating_sub(left - 1) {
            current.push(m);
            go(m + 1, max, left - 1, current, out);
            current.pop();
        }
    }
    go(1, max, depth, &mut current, &mut out);
    out
}

/// All weak chains `0 <= m_1 <= ... <= m_depth <= max`, ascending.
pub(crate) fn weak_chains(max: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(depth);
    fn go(start: usize, max: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for m in start..=max {
            current.push(m);
            go(m, max, left - 1, current, out);
            current.pop();
        }
    }
    go(0, max, depth, &mut current, &mut out);
    out
}

/// All weak compositions of `total` into exactly `parts` nonnegative parts.
pub(crate) fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn go(remaining: usize, parts_left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts_left == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in 0..=remaining {
            current.push(v);
            go(remaining - v, parts_left - 1, current, out);
            current.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eleven_family_tags() {
        assert_eq!(FamilyTag::ALL.len(), 11);
        for tag in FamilyTag::ALL {
            assert_eq!(tag.as_str().parse::<FamilyTag>().unwrap(), tag);
        }
        assert!("no-such-family".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn catalog_references() {
        assert_eq!(FamilyTag::MultiPolyEuler.reference(), "eq1.11");
        assert_eq!(FamilyTag::HlMultiPb.reference(), "eq5.4");
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, &[2, 1, 1]), Rational::from(12));
        assert_eq!(multinomial(0, &[]), Rational::one());
    }

    #[test]
    fn chain_enumeration() {
        assert_eq!(strict_chains(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(strict_chains(2, 3), Vec::<Vec<usize>>::new());
        // weak chains up to 1 of depth 2: (0,0) (0,1) (1,1)
        assert_eq!(weak_chains(1, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        // C(5+2, 2) compositions of 5 into 3 parts... sanity on count
        assert_eq!(weak_compositions(5, 3).len(), 21);
        assert_eq!(weak_compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }
}
