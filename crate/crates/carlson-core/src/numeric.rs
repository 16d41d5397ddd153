//! Internal numeric helpers: scaled complex accumulation, pairwise summation,
//! angle conventions.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;

/// ln(f64::MAX), the largest admissible log-magnitude.
pub(crate) const LN_MAX: f64 = 709.782712893384;

/// A complex value carried as `exp(ln_scale) * reduced` so that sums of
/// exponentials never overflow before the final assembly.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scaled {
    ln_scale: f64,
    reduced: Complex64,
}

impl Scaled {
    pub(crate) fn ln_abs(&self) -> f64 {
        let m = self.reduced.norm();
        if m == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.ln_scale + m.ln()
        }
    }

    /// Assemble the value, erroring when it exceeds the double range.
    pub(crate) fn value(&self) -> Result<Complex64, Error> {
        if self.reduced == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if self.ln_abs() > LN_MAX {
            return Err(Error::Overflow);
        }
        if self.ln_scale <= LN_MAX {
            Ok(self.reduced * self.ln_scale.exp())
        } else {
            // The factor alone overflows but the product does not.
            let mag = self.ln_abs().exp();
            Ok(self.reduced / self.reduced.norm() * mag)
        }
    }

    /// Assemble the value, saturating to infinite components on overflow.
    pub(crate) fn value_saturating(&self) -> Complex64 {
        match self.value() {
            Ok(v) => v,
            Err(_) => self.reduced / self.reduced.norm() * f64::INFINITY,
        }
    }
}

/// `Σ coeff_k · exp(exponent_k)` with the maximal real exponent factored out.
///
/// No intermediate overflows as long as every `Re(exponent)` is finite; the
/// reduced sum is bounded by `Σ |coeff_k|`.
pub(crate) fn sum_scaled_exp(terms: &[(Complex64, Complex64)]) -> Scaled {
    let mut m = f64::NEG_INFINITY;
    for (coeff, exponent) in terms {
        if coeff.norm() > 0.0 && exponent.re > m {
            m = exponent.re;
        }
    }
    if m == f64::NEG_INFINITY {
        return Scaled {
            ln_scale: f64::NEG_INFINITY,
            reduced: Complex64::new(0.0, 0.0),
        };
    }
    let mut reduced = Complex64::new(0.0, 0.0);
    for (coeff, exponent) in terms {
        reduced += coeff * (exponent - Complex64::new(m, 0.0)).exp();
    }
    Scaled {
        ln_scale: m,
        reduced,
    }
}

/// `ln Σ exp(x_k)` over real log-magnitudes, overflow-safe.
pub(crate) fn log_sum_exp(xs: impl Iterator<Item = f64> + Clone) -> f64 {
    let m = xs.clone().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let s: f64 = xs.map(|x| (x - m).exp()).sum();
    m + s.ln()
}

/// Pairwise (cascade) summation: deterministic for a fixed length and with
/// error growing like `eps · log2(n)` instead of `eps · n`.
pub(crate) fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    if values.len() <= 8 {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in values {
            acc += v;
        }
        return acc;
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Principal argument in `[-π, π)`; the ray `arg = π` folds to `-π`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a >= PI {
        a - TAU
    } else {
        a
    }
}

/// Reduce an angle into `[0, 2π)`.
pub fn reduce_mod_tau(x: f64) -> f64 {
    let mut r = x - TAU * (x / TAU).floor();
    if r >= TAU {
        r -= TAU;
    }
    if r < 0.0 {
        r += TAU;
    }
    r
}

/// Point `r·exp(iθ)` on the circle of radius `r`.
pub(crate) fn circle_point(r: f64, theta: f64) -> Complex64 {
    Complex64::from_polar(r, theta)
}

/// `(r·exp(iθ))^n` for integer `n`, assembled in polar form so repeated
/// multiplication error never accumulates.
pub(crate) fn circle_power(r: f64, theta: f64, n: i32) -> Complex64 {
    Complex64::from_polar(r.powi(n), theta * n as f64)
}

/// Evenly log-spaced grid over `[lo, hi]`, endpoints included exactly.
pub(crate) fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2 && lo > 0.0 && hi > lo);
    let ratio = hi / lo;
    let mut grid = Vec::with_capacity(n);
    for j in 0..n {
        grid.push(lo * ratio.powf(j as f64 / (n - 1) as f64));
    }
    grid[0] = lo;
    grid[n - 1] = hi;
    grid
}

/// Evenly spaced grid over `[lo, hi]`, endpoints included exactly.
pub(crate) fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    let mut grid = Vec::with_capacity(n);
    for j in 0..n {
        grid.push(lo + (hi - lo) * j as f64 / (n - 1) as f64);
    }
    grid[0] = lo;
    grid[n - 1] = hi;
    grid
}
