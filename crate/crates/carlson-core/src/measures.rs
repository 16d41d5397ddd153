//! Atomic complex measures and sampled boundary densities.
//!
//! Everything here is restricted to the fully computable cases: measures are
//! finite lists of weighted point masses, and boundary data is a density
//! sampled uniformly on a circle with respect to normalized arc measure
//! `dθ/2π`. Construction normalizes away exactly-zero weights and rejects
//! non-finite components, so downstream code never meets NaN or infinity.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;

/// Default merge tolerance for atom locations, in absolute euclidean
/// distance.
pub const DEFAULT_MERGE_TOL: f64 = 1e-9;

/// A weighted point mass.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub location: Complex64,
    pub weight: Complex64,
}

impl Atom {
    pub fn new(location: Complex64, weight: Complex64) -> Self {
        Atom { location, weight }
    }

    fn is_finite(&self) -> bool {
        self.location.re.is_finite()
            && self.location.im.is_finite()
            && self.weight.re.is_finite()
            && self.weight.im.is_finite()
    }
}

/// A finite atomic complex measure on the plane.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PlanarMeasure {
    atoms: Vec<Atom>,
}

impl PlanarMeasure {
    /// Build a planar measure. Atoms with exactly zero weight are dropped;
    /// non-finite components are rejected.
    pub fn new(atoms: Vec<Atom>) -> Result<Self, Error> {
        if atoms.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(PlanarMeasure {
            atoms: drop_zero_weights(atoms),
        })
    }

    pub fn empty() -> Self {
        PlanarMeasure { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Total mass `Σ weights`.
    pub fn total_weight(&self) -> Complex64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }
}

/// A finite atomic complex measure with no mass at the origin, the image of a
/// planar measure under `ω ↦ exp(ω)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CircleMeasure {
    atoms: Vec<Atom>,
}

impl CircleMeasure {
    /// Build a circle measure. Zero weights are dropped, non-finite
    /// components and atoms at the origin are rejected.
    pub fn new(atoms: Vec<Atom>) -> Result<Self, Error> {
        if atoms.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        let atoms = drop_zero_weights(atoms);
        if atoms.iter().any(|a| a.location.norm() == 0.0) {
            return Err(Error::OriginAtom);
        }
        Ok(CircleMeasure { atoms })
    }

    pub fn empty() -> Self {
        CircleMeasure { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_weight(&self) -> Complex64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// Union atoms whose locations lie within `tol` of each other, summing
    /// their weights, then drop merged atoms whose weight magnitude falls at
    /// or below `tol · max input |weight|` (plain `tol` when every input
    /// weight is already below `tol`).
    ///
    /// The result has pairwise-distinct locations beyond `tol` and the
    /// operation is idempotent.
    pub fn merge_atoms(&self, tol: f64) -> CircleMeasure {
        let clusters = cluster_atoms(&self.atoms, tol);
        let w_max = self
            .atoms
            .iter()
            .map(|a| a.weight.norm())
            .fold(0.0, f64::max);
        let threshold = if w_max > tol { tol * w_max } else { tol };
        let kept = clusters
            .into_iter()
            .filter(|a| a.weight.norm() > threshold)
            .collect();
        CircleMeasure { atoms: kept }
    }

    /// Largest atom modulus, the radius of the smallest disc carrying the
    /// measure. Empty measures have no support radius: they signal that the
    /// periodized measure vanishes identically and the criterion holds
    /// trivially.
    pub fn support_radius(&self) -> Result<f64, Error> {
        if self.atoms.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        Ok(self
            .atoms
            .iter()
            .map(|a| a.location.norm())
            .fold(0.0, f64::max))
    }

    /// Split into the part strictly inside the disc of radius `r` and the
    /// part on its rim: atoms with `|location| < r - tol` are interior, the
    /// rest (`|location| ∈ [r - tol, r]`) belong to the boundary. Every input
    /// atom lands in exactly one half.
    pub fn split_interior_boundary(&self, r: f64, tol: f64) -> (CircleMeasure, CircleMeasure) {
        let mut interior = Vec::new();
        let mut boundary = Vec::new();
        for a in &self.atoms {
            if a.location.norm() < r - tol {
                interior.push(*a);
            } else {
                boundary.push(*a);
            }
        }
        (
            CircleMeasure { atoms: interior },
            CircleMeasure { atoms: boundary },
        )
    }

    /// Structural equality up to tolerances: same atom count, locations
    /// within `loc_tol` and weights within `weight_tol`, in order.
    pub fn approx_eq(&self, other: &CircleMeasure, loc_tol: f64, weight_tol: f64) -> bool {
        self.atoms.len() == other.atoms.len()
            && self.atoms.iter().zip(other.atoms.iter()).all(|(a, b)| {
                (a.location - b.location).norm() <= loc_tol
                    && (a.weight - b.weight).norm() <= weight_tol
            })
    }
}

fn drop_zero_weights(atoms: Vec<Atom>) -> Vec<Atom> {
    atoms
        .into_iter()
        .filter(|a| a.weight.norm() > 0.0)
        .collect()
}

/// Greedy first-fit clustering: each atom joins the first cluster whose
/// representative (its first member's location) lies within `tol`, otherwise
/// it opens a new cluster. Cluster weight is the in-order sum of member
/// weights; no weight is dropped.
pub(crate) fn cluster_atoms(atoms: &[Atom], tol: f64) -> Vec<Atom> {
    let mut clusters: Vec<Atom> = Vec::new();
    for a in atoms {
        match clusters
            .iter_mut()
            .find(|c| (c.location - a.location).norm() <= tol)
        {
            Some(c) => c.weight += a.weight,
            None => clusters.push(*a),
        }
    }
    clusters
}

/// A complex density on the circle `|ζ| = radius`, sampled at the `M` uniform
/// angles `θ_j = 2πj/M` and understood against normalized arc measure
/// `dθ/2π`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryDensity {
    radius: f64,
    samples: Vec<Complex64>,
}

impl BoundaryDensity {
    /// Requires `radius > 0` and at least four finite samples.
    pub fn new(radius: f64, samples: Vec<Complex64>) -> Result<Self, Error> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidParameter("density radius must be positive"));
        }
        if samples.len() < 4 {
            return Err(Error::InvalidParameter(
                "density needs at least four samples",
            ));
        }
        if samples
            .iter()
            .any(|s| !s.re.is_finite() || !s.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(BoundaryDensity { radius, samples })
    }

    /// The zero density on a grid of `m` samples.
    pub fn zero(radius: f64, m: usize) -> Result<Self, Error> {
        BoundaryDensity::new(radius, alloc::vec![Complex64::new(0.0, 0.0); m])
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    /// Sample angle `θ_j = 2πj/M`.
    pub fn theta(&self, j: usize) -> f64 {
        TAU * j as f64 / self.samples.len() as f64
    }

    /// Mean of `|h_j|`, the conditioning scale for density criteria.
    pub fn mean_abs(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|s| s.norm()).sum::<f64>() / self.samples.len() as f64
    }

    pub fn scaled(&self, factor: Complex64) -> Result<Self, Error> {
        BoundaryDensity::new(
            self.radius,
            self.samples.iter().map(|s| s * factor).collect(),
        )
    }

    /// Pointwise sum; both densities must live on the same circle and grid.
    pub fn pointwise_add(&self, other: &Self) -> Result<Self, Error> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise difference; both densities must live on the same circle and
    /// grid.
    pub fn pointwise_sub(&self, other: &Self) -> Result<Self, Error> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self, Error> {
        if self.radius != other.radius || self.samples.len() != other.samples.len() {
            return Err(Error::InvalidParameter(
                "densities live on different circles or grids",
            ));
        }
        BoundaryDensity::new(
            self.radius,
            self.samples
                .iter()
                .zip(other.samples.iter())
                .map(|(a, b)| f(*a, *b))
                .collect(),
        )
    }
}
