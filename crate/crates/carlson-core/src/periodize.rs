//! Circular periodization: push an atomic planar measure through
//! `ω ↦ exp(ω)`.
//!
//! Atoms whose frequencies differ by integer multiples of `2πi` land at the
//! same point of the image and are merged there; cancelled weights drop out.
//! Location equality is decided by euclidean distance in the image, not by
//! comparing frequencies modulo `2πi` in the source — the image metric is
//! what every downstream moment computation sees, and source-side comparison
//! misjudges near-collisions with different real parts.
//!
//! No explicit folding of `Im(ω)` into a fundamental strip happens here:
//! `exp` is exactly `2πi`-periodic up to floating-point argument reduction,
//! so atoms near the strip edge `Im(ω) = ±π` land continuously near the
//! negative real axis either way. The edge only matters for the
//! principal-argument convention of the image (`arg = π` folds to `-π`),
//! which support-geometry consumers handle.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::measures::{Atom, CircleMeasure, PlanarMeasure};
use crate::numeric::sum_scaled_exp;

/// Largest admissible `Re(ω)`: beyond this the image `exp(ω)` leaves the
/// double range.
pub const MAX_FREQUENCY_REAL_PART: f64 = 700.0;

/// Default merge tolerance, relative to the largest image magnitude.
pub fn default_merge_tol(mu: &PlanarMeasure) -> f64 {
    let max_image = mu
        .atoms()
        .iter()
        .map(|a| a.location.re.exp())
        .fold(0.0, f64::max);
    1e-9 * (1.0 + max_image)
}

/// Map each atom `(ω, c)` to `(exp(ω), c)` and merge atoms landing at the
/// same image point. The image never touches the origin, so the result is a
/// valid circle measure; merged weights that cancel are dropped.
pub fn periodize(mu: &PlanarMeasure, merge_tol: f64) -> Result<CircleMeasure, Error> {
    let mut atoms = Vec::with_capacity(mu.len());
    for a in mu.atoms() {
        if a.location.re > MAX_FREQUENCY_REAL_PART {
            return Err(Error::Overflow);
        }
        atoms.push(Atom::new(a.location.exp(), a.weight));
    }
    Ok(CircleMeasure::new(atoms)?.merge_atoms(merge_tol))
}

/// [`periodize`] with the default image-relative merge tolerance.
pub fn periodize_default(mu: &PlanarMeasure) -> Result<CircleMeasure, Error> {
    periodize(mu, default_merge_tol(mu))
}

/// Largest absolute discrepancy between the moments of `μ` under
/// `ω ↦ exp(nω)` and the power moments of its periodization, over
/// `n = 0..=n_max`. Both sides are accumulated with the maximal exponent
/// factored out. This is the identity that makes integer vanishing of the
/// sum equivalent to moment vanishing of the circle measure.
pub fn moment_pushforward_check(mu: &PlanarMeasure, nu: &CircleMeasure, n_max: usize) -> f64 {
    let mut worst = 0.0f64;
    for n in 0..=n_max {
        let nf = n as f64;
        let planar_terms: Vec<(Complex64, Complex64)> = mu
            .atoms()
            .iter()
            .map(|a| (a.weight, a.location * nf))
            .collect();
        let circle_terms: Vec<(Complex64, Complex64)> = nu
            .atoms()
            .iter()
            .map(|a| (a.weight, a.location.ln() * nf))
            .collect();
        let lhs = sum_scaled_exp(&planar_terms).value_saturating();
        let rhs = sum_scaled_exp(&circle_terms).value_saturating();
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}
