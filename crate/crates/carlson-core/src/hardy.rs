//! Power moments, Cauchy-type-integral coefficients, and the vanishing
//! criteria.
//!
//! A circle measure `ν` kills every non-negative power moment exactly when
//! the sum it came from vanishes at every non-negative integer. For atomic
//! `ν` with `K` distinct atoms the moments of orders `0..K-1` form an
//! invertible Vandermonde system in the merged weights, so "all moments
//! vanish" collapses to "all merged weights vanish" — an exact, finite
//! check. For sampled densities only finitely many moments can be certified,
//! and the report's `method` field keeps that epistemic difference explicit.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::expsum::{ExpSum, Term};
use crate::measures::{cluster_atoms, Atom, BoundaryDensity, CircleMeasure};
use crate::numeric::{circle_power, pairwise_sum, reduce_mod_tau, sum_scaled_exp};

/// Default moment order for density-based checks.
pub const DEFAULT_N_MAX: usize = 128;
/// Default relative tolerance for criterion verdicts.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default circular clustering tolerance for the real-frequency criterion.
pub const DEFAULT_GROUP_TOL: f64 = 1e-9;
/// Default weight tolerance for the real-frequency criterion.
pub const DEFAULT_WEIGHT_TOL: f64 = 1e-9;
/// How far a frequency may stray off the real axis before the mod-2π
/// criterion refuses it.
pub const REAL_FREQUENCY_IM_TOL: f64 = 1e-12;

/// Power moments `values[n] = ∫ ζ^n dν`, `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentVector {
    values: Vec<Complex64>,
}

impl MomentVector {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Taylor coefficients of the Cauchy-type integral of a boundary density:
/// `a[n]` is the normalized average of `ζ^{-n} · h` over the circle.
#[derive(Clone, Debug, PartialEq)]
pub struct CauchyCoefficients {
    values: Vec<Complex64>,
}

impl CauchyCoefficients {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Which route produced a criterion verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionMethod {
    /// Exact merged-weight cancellation on an atomic measure; decides all
    /// moment orders at once through the Vandermonde argument.
    ExactVandermonde,
    /// Finite-order quadrature moments of a sampled density; orders beyond
    /// `n_max` remain unverified.
    QuadratureMoments,
}

/// Verdict plus witnesses for a vanishing criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport {
    pub verdict: bool,
    /// Largest residual the verdict was tested against: the largest merged
    /// weight magnitude on the exact path, the largest moment magnitude on
    /// the quadrature path.
    pub max_moment_residual: f64,
    /// Merged atoms (exact path) or empty (quadrature path).
    pub merged_weights: Vec<Atom>,
    pub method: CriterionMethod,
}

/// `values[n] = Σ_k w_k a_k^n`, accumulated with the maximal log-magnitude
/// factored out so large supports do not overflow intermediates.
pub fn moments_atomic(nu: &CircleMeasure, n_max: usize) -> MomentVector {
    let logs: Vec<(Complex64, Complex64)> = nu
        .atoms()
        .iter()
        .map(|a| (a.weight, a.location.ln()))
        .collect();
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let nf = n as f64;
        let terms: Vec<(Complex64, Complex64)> =
            logs.iter().map(|&(w, ln_a)| (w, ln_a * nf)).collect();
        values.push(sum_scaled_exp(&terms).value_saturating());
    }
    MomentVector { values }
}

fn density_moment(h: &BoundaryDensity, n: i32) -> Complex64 {
    let m = h.grid_size();
    let buf: Vec<Complex64> = h
        .samples()
        .iter()
        .enumerate()
        .map(|(j, s)| circle_power(h.radius(), h.theta(j), n) * s)
        .collect();
    pairwise_sum(&buf) / m as f64
}

fn check_alias(h: &BoundaryDensity, n_max: usize) -> Result<(), Error> {
    if n_max > h.grid_size() / 4 {
        return Err(Error::AliasRisk {
            n_max,
            grid: h.grid_size(),
        });
    }
    Ok(())
}

/// Quadrature power moments of a density:
/// `values[n] = (1/M) Σ_j (r·exp(iθ_j))^n h_j`. Orders above `M/4` are
/// refused — the grid cannot certify them.
pub fn moments_density(h: &BoundaryDensity, n_max: usize) -> Result<MomentVector, Error> {
    check_alias(h, n_max)?;
    Ok(MomentVector {
        values: (0..=n_max).map(|n| density_moment(h, n as i32)).collect(),
    })
}

/// Coefficients of the Cauchy-type integral:
/// `a[n] = (1/M) Σ_j (r·exp(iθ_j))^{-n} h_j`. The `n = 0` entry shares its
/// summation with `moments_density`, so the two zeroth values are
/// bit-identical: "the integral is zero at the origin" and "the zeroth
/// moment vanishes" are one predicate.
pub fn cauchy_coefficients(h: &BoundaryDensity, n_max: usize) -> Result<CauchyCoefficients, Error> {
    check_alias(h, n_max)?;
    Ok(CauchyCoefficients {
        values: (0..=n_max)
            .map(|n| density_moment(h, -(n as i32)))
            .collect(),
    })
}

/// Exact vanishing criterion for an atomic circle measure: merge atoms and
/// demand that every merged weight cancel below `tol · (1 + max input |w|)`.
///
/// For `K` distinct merged atoms the moments of orders `0..K-1` form an
/// invertible Vandermonde system, so this decides moment vanishing at every
/// order simultaneously — the only discrete measure with vanishing analytic
/// moments is the zero measure. An empty measure passes with residual zero.
pub fn vanishing_criterion(nu: &CircleMeasure, tol: f64) -> CriterionReport {
    let loc_scale = nu
        .atoms()
        .iter()
        .map(|a| a.location.norm())
        .fold(0.0, f64::max);
    let clusters = cluster_atoms(nu.atoms(), 1e-9 * (1.0 + loc_scale));
    let w_max = nu
        .atoms()
        .iter()
        .map(|a| a.weight.norm())
        .fold(0.0, f64::max);
    let threshold = tol * (1.0 + w_max);
    let residual = clusters.iter().map(|a| a.weight.norm()).fold(0.0, f64::max);
    CriterionReport {
        verdict: residual <= threshold,
        max_moment_residual: residual,
        merged_weights: clusters,
        method: CriterionMethod::ExactVandermonde,
    }
}

/// Finite-order vanishing check for a sampled density: the quadrature
/// moments of orders `0..=n_max` must all fall below
/// `tol · (1 + mean |h_j|)`. Necessary but, unlike the atomic path, silent
/// about orders beyond `n_max`.
pub fn vanishing_criterion_density(
    h: &BoundaryDensity,
    n_max: usize,
    tol: f64,
) -> Result<CriterionReport, Error> {
    let moments = moments_density(h, n_max)?;
    let residual = moments.max_abs();
    let threshold = tol * (1.0 + h.mean_abs());
    Ok(CriterionReport {
        verdict: residual <= threshold,
        max_moment_residual: residual,
        merged_weights: Vec::new(),
        method: CriterionMethod::QuadratureMoments,
    })
}

/// Vanishing criterion for sums with purely real frequencies, read in the
/// angular convention `g(z) = Σ c_k · exp(i ω_k z)`: reduce each frequency
/// modulo 2π, cluster within `group_tol` in the circular metric, and demand
/// that every cluster's coefficient sum cancel below
/// `weight_tol · (1 + max |c_k|)`.
///
/// This is the atomic criterion specialized to the unit circle: the clusters
/// are exactly the merged atoms of the periodized spectral measure, and each
/// reported witness sits at `exp(i ω)` for its cluster angle `ω`.
pub fn discrete_criterion(
    g: &ExpSum,
    group_tol: f64,
    weight_tol: f64,
) -> Result<CriterionReport, Error> {
    for (index, term) in g.terms().iter().enumerate() {
        if term.frequency.im.abs() > REAL_FREQUENCY_IM_TOL {
            return Err(Error::NonRealFrequency { index });
        }
    }
    let mut clusters: Vec<(f64, Complex64)> = Vec::new();
    for term in g.terms() {
        let angle = reduce_mod_tau(term.frequency.re);
        match clusters
            .iter_mut()
            .find(|(rep, _)| circular_distance(*rep, angle) <= group_tol)
        {
            Some((_, sum)) => *sum += term.coefficient,
            None => clusters.push((angle, term.coefficient)),
        }
    }
    let c_max = g
        .terms()
        .iter()
        .map(|t| t.coefficient.norm())
        .fold(0.0, f64::max);
    let threshold = weight_tol * (1.0 + c_max);
    let residual = clusters.iter().map(|(_, s)| s.norm()).fold(0.0, f64::max);
    let merged_weights = clusters
        .into_iter()
        .map(|(angle, sum)| Atom::new(Complex64::from_polar(1.0, angle), sum))
        .collect();
    Ok(CriterionReport {
        verdict: residual <= threshold,
        max_moment_residual: residual,
        merged_weights,
        method: CriterionMethod::ExactVandermonde,
    })
}

/// Reinterpret a real-frequency sum from the angular convention
/// `g(z) = Σ c_k · exp(i ω_k z)` into exponential form by rotating every
/// frequency to `i·ω_k`. Refuses frequencies that stray off the real axis.
pub fn lift_real_frequencies(g: &ExpSum) -> Result<ExpSum, Error> {
    let mut terms = Vec::with_capacity(g.len());
    for (index, term) in g.terms().iter().enumerate() {
        if term.frequency.im.abs() > REAL_FREQUENCY_IM_TOL {
            return Err(Error::NonRealFrequency { index });
        }
        terms.push(Term::new(
            Complex64::new(0.0, term.frequency.re),
            term.coefficient,
        ));
    }
    ExpSum::new(terms)
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(core::f64::consts::TAU - d)
}
