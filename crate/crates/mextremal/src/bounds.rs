//! Exact rational evaluation of the density bounds and per-graph reports.
//!
//! All arithmetic uses exact rationals; decimal rendering happens only at
//! the presentation layer.

use crate::coloring::chromatic_number;
use crate::error::Error;
use crate::graph::ColoredMultigraph;
use crate::reduced::reduced_max_matching;
use num::rational::Ratio;
use num::One;

/// Exact rational type used for all bound values.
pub type Rat = Ratio<i64>;

/// The baseline upper bound `1 - 1/(r(chi - 1))`.
pub fn trivial_bound(r: usize, chi: usize) -> Result<Rat, Error> {
    if chi < 2 {
        return Err(Error::ChiTooSmall { chi });
    }
    if r < 1 {
        return Err(Error::domain("r must be at least 1"));
    }
    Ok(Rat::one() - Ratio::new(1, (r * (chi - 1)) as i64))
}

/// The refined upper bound `1 - 1/(r(chi - 1)) - M/(9 r chi^2)`.
pub fn theorem_bound(r: usize, chi: usize, m: usize) -> Result<Rat, Error> {
    if m > chi / 2 {
        return Err(Error::MOutOfRange { m, chi });
    }
    let base = trivial_bound(r, chi)?;
    Ok(base - Ratio::new(m as i64, (9 * r * chi * chi) as i64))
}

/// Density achieved by the explicit family: `1 - 1/(r(k - 2m - 1))`.
pub fn construction_lower(r: usize, k: usize, m: usize) -> Result<Rat, Error> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::OddR { r });
    }
    if k < 2 * m + 2 {
        return Err(Error::domain(format!(
            "need k >= 2m + 2, got k = {k}, m = {m}"
        )));
    }
    Ok(Rat::one() - Ratio::new(1, (r * (k - 2 * m - 1)) as i64))
}

/// Chromatic and matching data of a graph together with its bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub r: usize,
    pub chi: usize,
    pub m: usize,
    pub trivial_upper: Rat,
    pub theorem_upper: Rat,
    /// Filled by [`BoundReport::with_construction_lower`]; reports computed
    /// from a bare graph leave it empty.
    pub construction_lower: Option<Rat>,
}

impl BoundReport {
    pub fn with_construction_lower(mut self, k: usize, m: usize) -> Result<Self, Error> {
        self.construction_lower = Some(construction_lower(self.r, k, m)?);
        Ok(self)
    }
}

/// Computes chi, M, and both upper bounds for a graph, viewed with `r`
/// colors (`r` defaults to the graph's color count and may exceed it).
pub fn report(g: &ColoredMultigraph, r: Option<usize>) -> Result<BoundReport, Error> {
    if g.total_edges() == 0 {
        return Err(Error::domain("bound report requires at least one edge"));
    }
    let r = r.unwrap_or(g.r());
    if r < g.r() {
        return Err(Error::ColorCountMismatch {
            left: g.r(),
            right: r,
        });
    }
    let chi = chromatic_number(g)?;
    let m = reduced_max_matching(g)?.m;
    Ok(BoundReport {
        r,
        chi,
        m,
        trivial_upper: trivial_bound(r, chi)?,
        theorem_upper: theorem_bound(r, chi, m)?,
        construction_lower: None,
    })
}

/// Comparison of the family's density against the refined bound at matching
/// parameters, with the gap expressed relative to the `M/(9 r chi^2)` term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessReport {
    pub r: usize,
    pub k: usize,
    pub m: usize,
    pub construction_lower: Rat,
    pub theorem_upper: Rat,
    pub trivial_upper: Rat,
    /// `trivial_upper - construction_lower`: what the family gives up.
    pub lower_deficit: Rat,
    /// The `M/(9 r chi^2)` term of the refined bound.
    pub theorem_term: Rat,
    /// `lower_deficit / theorem_term`.
    pub gap_ratio: Rat,
    /// `construction_lower <= theorem_upper`.
    pub holds: bool,
}

/// Evaluates the family against the refined bound in the regime `10m <= k`.
pub fn tightness_check(r: usize, k: usize, m: usize) -> Result<TightnessReport, Error> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::OddR { r });
    }
    if 10 * m > k {
        return Err(Error::RegimeViolation { k, m });
    }
    if m < 1 {
        return Err(Error::domain("need m >= 1"));
    }
    let lower = construction_lower(r, k, m)?;
    let upper = theorem_bound(r, k, m)?;
    let trivial = trivial_bound(r, k)?;
    let deficit = trivial - lower;
    let term = Ratio::new(m as i64, (9 * r * k * k) as i64);
    Ok(TightnessReport {
        r,
        k,
        m,
        construction_lower: lower,
        theorem_upper: upper,
        trivial_upper: trivial,
        lower_deficit: deficit,
        theorem_term: term,
        gap_ratio: deficit / term,
        holds: lower <= upper,
    })
}

/// Renders a rational as `num/den`.
pub fn format_rational(x: Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal value for display purposes only.
pub fn to_f64(x: Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
