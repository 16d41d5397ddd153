//! Spectral-measure analysis of finite exponential sums.
//!
//! A finite exponential sum `g(z) = Σ c_k · exp(ω_k z)` carries an atomic
//! spectral measure `μ = Σ c_k · δ_{ω_k}` on the plane. This crate decides
//! whether `g` vanishes at every non-negative integer by pushing `μ` through
//! the map `ω ↦ exp(ω)` onto a circle measure `ν`, sweeping the interior part
//! of `ν` onto its boundary circle as an explicit Cauchy-kernel density, and
//! testing the resulting power moments. For atomic measures the moment test
//! collapses to an exact cancellation check on merged atom weights, so the
//! verdict is decidable rather than merely certified to finite order.
//!
//! The crate also measures the growth rate of `g` along the imaginary axis
//! and its directional indicator, which together reproduce the classical
//! dichotomy: a sum that vanishes on the non-negative integers without being
//! identically zero must grow at rate at least π along the imaginary axis.
//!
//! Modules mirror the pipeline stages:
//!
//! - [`measures`] — atomic measures on the plane and on a disc, plus sampled
//!   boundary densities and structural operations (merge, split, support).
//! - [`expsum`] — evaluation, direct integer-vanishing scans, growth and
//!   indicator estimation, spectral-measure extraction.
//! - [`periodize`] — the push-forward `ω ↦ exp(ω)` with atom merging.
//! - [`balayage`] — sweeping interior atoms onto the boundary circle via the
//!   Cauchy kernel, with spectral-accuracy verification.
//! - [`hardy`] — power moments, Cauchy-type-integral coefficients, and the
//!   vanishing criteria (exact atomic, finite-order density, and the
//!   real-frequency mod-2π cluster test).
//! - [`carlson`] — support geometry (spectral band, argument range) and the
//!   end-to-end growth dichotomy report.
//!
//! The crate is `no_std` (with `alloc`); all types are immutable after
//! construction and every operation is a pure function of its inputs.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod balayage;
pub mod carlson;
pub mod error;
pub mod expsum;
pub mod hardy;
pub mod measures;
mod numeric;
pub mod periodize;

pub use error::Error;
pub use num_complex::Complex64;
pub use numeric::{principal_arg, reduce_mod_tau};
