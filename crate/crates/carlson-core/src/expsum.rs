//! Finite exponential sums `g(z) = Σ c_k · exp(ω_k z)`.
//!
//! Evaluation always factors out the largest real part of `ω_k z`, so sums
//! whose terms individually reach magnitudes near `exp(700)` are handled
//! without intermediate overflow; only a final result outside the double
//! range reports [`Error::Overflow`]. Growth along rays is measured on the
//! log scale for the same reason.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::measures::{Atom, PlanarMeasure};
use crate::numeric::{geometric_grid, linear_grid, log_sum_exp, sum_scaled_exp};

/// Default sample count per sign for growth-rate grids.
pub const DEFAULT_GROWTH_SAMPLES: usize = 512;
/// Default inner endpoint of the growth window.
pub const DEFAULT_Y_MIN: f64 = 1.0;
/// Default outer endpoint of the growth window.
pub const DEFAULT_Y_MAX: f64 = 100.0;

/// One term `coefficient · exp(frequency · z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub frequency: Complex64,
    pub coefficient: Complex64,
}

impl Term {
    pub fn new(frequency: Complex64, coefficient: Complex64) -> Self {
        Term {
            frequency,
            coefficient,
        }
    }
}

/// A finite exponential sum. Terms with exactly zero coefficient are dropped
/// at construction; non-finite components are rejected.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExpSum {
    terms: Vec<Term>,
}

impl ExpSum {
    pub fn new(terms: Vec<Term>) -> Result<Self, Error> {
        if terms.iter().any(|t| {
            !(t.frequency.re.is_finite()
                && t.frequency.im.is_finite()
                && t.coefficient.re.is_finite()
                && t.coefficient.im.is_finite())
        }) {
            return Err(Error::NonFinite);
        }
        Ok(ExpSum {
            terms: terms
                .into_iter()
                .filter(|t| t.coefficient.norm() > 0.0)
                .collect(),
        })
    }

    /// Convenience constructor from `(frequency, coefficient)` pairs.
    pub fn from_pairs(pairs: &[(Complex64, Complex64)]) -> Result<Self, Error> {
        ExpSum::new(pairs.iter().map(|&(f, c)| Term::new(f, c)).collect())
    }

    pub fn empty() -> Self {
        ExpSum { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sum with every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: Complex64) -> Result<ExpSum, Error> {
        ExpSum::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.frequency, t.coefficient * factor))
                .collect(),
        )
    }

    fn scaled_exp_at(&self, z: Complex64) -> crate::numeric::Scaled {
        let terms: Vec<(Complex64, Complex64)> = self
            .terms
            .iter()
            .map(|t| (t.coefficient, t.frequency * z))
            .collect();
        sum_scaled_exp(&terms)
    }

    /// Evaluate `g(z)`, factoring out the maximal `Re(ω_k z)` so nothing
    /// overflows before the final assembly.
    pub fn eval(&self, z: Complex64) -> Result<Complex64, Error> {
        self.scaled_exp_at(z).value()
    }

    /// `ln |g(z)|`, `-∞` when the sum cancels exactly at `z`. Never
    /// overflows.
    pub fn ln_abs(&self, z: Complex64) -> f64 {
        self.scaled_exp_at(z).ln_abs()
    }

    /// `ln Σ_k |c_k · exp(ω_k z)|`, the termwise magnitude scale at `z`.
    pub fn ln_term_scale(&self, z: Complex64) -> f64 {
        log_sum_exp(
            self.terms
                .iter()
                .map(move |t| t.coefficient.norm().ln() + (t.frequency * z).re),
        )
    }

    /// Scan `g(0), g(1), …, g(n_max)` for vanishing relative to the termwise
    /// magnitude sum at each point. The `n = 0` entry doubles as the limit of
    /// `g` at the origin, which for finite sums is just `Σ c_k`.
    pub fn direct_integer_vanishing(&self, n_max: usize, rel_tol: f64) -> VanishingScan {
        let mut residuals = Vec::with_capacity(n_max + 1);
        let mut witness = None;
        for n in 0..=n_max {
            let z = Complex64::new(n as f64, 0.0);
            let ln_g = self.ln_abs(z);
            let ln_scale = self.ln_term_scale(z);
            // Relative residual exp(ln|g| - ln scale); an empty sum has both
            // at -inf and vanishes trivially.
            let residual = if ln_g == f64::NEG_INFINITY {
                0.0
            } else {
                (ln_g - ln_scale).exp()
            };
            residuals.push(residual);
            if residual > rel_tol && witness.is_none() {
                witness = Some(n);
            }
        }
        VanishingScan {
            vanishes: witness.is_none(),
            rel_residuals: residuals,
            witness,
        }
    }

    /// The atomic spectral measure `Σ c_k · δ_{ω_k}`, one atom per term and
    /// no merging (periodization merges later).
    pub fn spectral_measure(&self) -> PlanarMeasure {
        PlanarMeasure::new(
            self.terms
                .iter()
                .map(|t| Atom::new(t.frequency, t.coefficient))
                .collect(),
        )
        .expect("terms are finite by construction")
    }

    /// Largest observed `ln|g(iy)| / |y|` over a geometric grid of `n_samples`
    /// points per sign in `±[y_min, y_max]`. For finite sums this converges,
    /// so the grid maximum is a lower bound of the limiting rate that tightens
    /// as the window grows.
    pub fn growth_rate_imaginary(
        &self,
        y_min: f64,
        y_max: f64,
        n_samples: usize,
    ) -> Result<GrowthEstimate, Error> {
        if self.terms.is_empty() {
            return Err(Error::DegenerateSum);
        }
        if !(y_min > 0.0 && y_max > y_min) {
            return Err(Error::InvalidParameter(
                "growth window needs 0 < y_min < y_max",
            ));
        }
        if n_samples < 2 {
            return Err(Error::InvalidParameter(
                "growth grid needs at least 2 samples",
            ));
        }
        let grid = geometric_grid(y_min, y_max, n_samples);
        let mut rate = f64::NEG_INFINITY;
        for &y in &grid {
            for sign in [1.0, -1.0] {
                let z = Complex64::new(0.0, sign * y);
                rate = rate.max(self.ln_abs(z) / y);
            }
        }
        Ok(GrowthEstimate {
            rate,
            y_max,
            samples_used: 2 * n_samples,
        })
    }

    /// Directional growth rate: largest `ln|g(r·exp(iθ))| / r` over a linear
    /// grid of radii in `[r_max/2, r_max]`. For finite sums the value tends to
    /// `max_k Re(ω_k · exp(iθ))` as the window grows.
    pub fn estimate_indicator(
        &self,
        theta: f64,
        r_max: f64,
        n_samples: usize,
    ) -> Result<IndicatorEstimate, Error> {
        if self.terms.is_empty() {
            return Err(Error::DegenerateSum);
        }
        if !(-FRAC_PI_2..=FRAC_PI_2).contains(&theta) {
            return Err(Error::InvalidParameter(
                "indicator angle must lie in [-pi/2, pi/2]",
            ));
        }
        if !r_max.is_finite() || r_max <= 0.0 || n_samples < 2 {
            return Err(Error::InvalidParameter(
                "indicator needs r_max > 0 and 2+ samples",
            ));
        }
        let direction = Complex64::from_polar(1.0, theta);
        let grid = linear_grid(r_max / 2.0, r_max, n_samples);
        let mut value = f64::NEG_INFINITY;
        for &r in &grid {
            value = value.max(self.ln_abs(direction * r) / r);
        }
        Ok(IndicatorEstimate {
            theta,
            value,
            r_max,
        })
    }
}

/// Result of a direct integer-vanishing scan.
#[derive(Clone, Debug, PartialEq)]
pub struct VanishingScan {
    /// True when every scanned point vanished relative to its term scale.
    pub vanishes: bool,
    /// `|g(n)| / Σ_k |c_k exp(ω_k n)|` for `n = 0..=n_max`.
    pub rel_residuals: Vec<f64>,
    /// First `n` that failed the tolerance, if any.
    pub witness: Option<usize>,
}

/// Estimated growth rate along the imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthEstimate {
    /// Largest observed `ln|g(iy)| / |y|`.
    pub rate: f64,
    /// Outer endpoint of the sampled window.
    pub y_max: f64,
    /// Total number of samples taken (both signs).
    pub samples_used: usize,
}

/// Estimated directional indicator value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndicatorEstimate {
    pub theta: f64,
    /// Largest observed `ln|g(r·exp(iθ))| / r`.
    pub value: f64,
    pub r_max: f64,
}
