//! Support geometry and the growth dichotomy.
//!
//! A sum that vanishes at every non-negative integer is either identically
//! zero or grows along the imaginary axis at rate at least π. The report
//! separates the two branches explicitly: `vanishes` comes from the exact
//! atomic pipeline, `is_trivial` from direct evaluation — an empty
//! periodized measure does *not* imply the sum itself is zero (a pair of
//! frequencies `2πi` apart cancels every atom while the sum survives off the
//! integers), so triviality is always decided by sampling the function.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::expsum::{ExpSum, GrowthEstimate, DEFAULT_GROWTH_SAMPLES, DEFAULT_Y_MIN};
use crate::hardy::{vanishing_criterion, DEFAULT_TOL};
use crate::measures::{CircleMeasure, PlanarMeasure};
use crate::numeric::{linear_grid, principal_arg};
use crate::periodize::periodize_default;

/// Number of evaluation points for the triviality scan.
const TRIVIALITY_SAMPLES: usize = 64;
/// Interval sampled by the triviality scan.
const TRIVIALITY_INTERVAL: (f64, f64) = (0.1, 5.0);
/// Relative tolerance for "evaluates to zero" in the triviality scan.
const TRIVIALITY_REL_TOL: f64 = 1e-9;

/// Extent of a planar measure's support along the imaginary direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBand {
    /// Smallest `Im(ω)` over the support.
    pub lower: f64,
    /// Largest `Im(ω)` over the support.
    pub upper: f64,
}

/// Range of principal arguments over a circle measure's support, in
/// `[-π, π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArgRange {
    pub min: f64,
    pub max: f64,
}

/// Outcome of the end-to-end dichotomy check.
#[derive(Clone, Debug, PartialEq)]
pub struct DichotomyReport {
    /// Verdict of the exact atomic pipeline: spectral measure → periodize →
    /// merged-weight cancellation.
    pub vanishes: bool,
    /// True when the sum itself evaluates to zero on a dense sample of
    /// `[0.1, 5]` *and* its periodized measure is empty.
    pub is_trivial: bool,
    /// Growth estimate along the imaginary axis.
    pub growth: GrowthEstimate,
    /// Whether the measured rate clears `π − tol − ln(Σ|c_k|)/y_max`; only
    /// meaningful for sums that vanish without being trivial.
    pub carlson_bound_met: Option<bool>,
}

/// Min/max of `Im(ω)` over the atoms of a nonempty planar measure.
pub fn spectral_band(mu: &PlanarMeasure) -> Result<SpectralBand, Error> {
    if mu.is_empty() {
        return Err(Error::EmptyMeasure);
    }
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for a in mu.atoms() {
        lower = lower.min(a.location.im);
        upper = upper.max(a.location.im);
    }
    Ok(SpectralBand { lower, upper })
}

/// Min/max principal argument over the atoms of a nonempty circle measure.
/// The ray `arg = π` folds to `-π`.
pub fn arg_support_range(nu: &CircleMeasure) -> Result<ArgRange, Error> {
    if nu.is_empty() {
        return Err(Error::EmptyMeasure);
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for a in nu.atoms() {
        let arg = principal_arg(a.location);
        min = min.min(arg);
        max = max.max(arg);
    }
    Ok(ArgRange { min, max })
}

/// True when `g` evaluates to zero, relative to its termwise magnitude
/// scale, on every point of the triviality grid.
fn evaluates_to_zero(g: &ExpSum) -> bool {
    if g.is_empty() {
        return true;
    }
    let (lo, hi) = TRIVIALITY_INTERVAL;
    linear_grid(lo, hi, TRIVIALITY_SAMPLES).iter().all(|&x| {
        let z = Complex64::new(x, 0.0);
        let residual = g.ln_abs(z) - g.ln_term_scale(z);
        residual == f64::NEG_INFINITY || residual.exp() <= TRIVIALITY_REL_TOL
    })
}

/// Run the full dichotomy: exact vanishing verdict, triviality scan, growth
/// measurement over `±[1, y_max]`, and the rate bound
/// `rate ≥ π − tol − ln(Σ|c_k|)/y_max` for sums that vanish nontrivially.
/// The `ln(Σ|c_k|)/y_max` term absorbs the finite-window bias of the grid
/// maximum.
///
/// `n_max` is accepted for interface symmetry with the finite-order density
/// checks; the atomic pipeline is exact and does not truncate, so it has no
/// effect here.
pub fn dichotomy_check(
    g: &ExpSum,
    _n_max: usize,
    y_max: f64,
    tol: f64,
) -> Result<DichotomyReport, Error> {
    let mu = g.spectral_measure();
    let nu = periodize_default(&mu)?;
    let vanishes = vanishing_criterion(&nu, DEFAULT_TOL).verdict;
    let is_trivial = nu.is_empty() && evaluates_to_zero(g);

    let growth = if g.is_empty() {
        // Every sample of the zero sum sits at ln 0 = -inf.
        GrowthEstimate {
            rate: f64::NEG_INFINITY,
            y_max,
            samples_used: 2 * DEFAULT_GROWTH_SAMPLES,
        }
    } else {
        g.growth_rate_imaginary(DEFAULT_Y_MIN, y_max, DEFAULT_GROWTH_SAMPLES)?
    };

    let carlson_bound_met = if vanishes && !is_trivial {
        let coeff_sum: f64 = g.terms().iter().map(|t| t.coefficient.norm()).sum();
        let bound = core::f64::consts::PI - tol - coeff_sum.ln() / y_max;
        Some(growth.rate >= bound)
    } else {
        None
    };

    Ok(DichotomyReport {
        vanishes,
        is_trivial,
        growth,
        carlson_bound_met,
    })
}
