//! Crate-wide error type.

use core::fmt;

/// Errors reported by measure constructors and pipeline operations.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A NaN or infinite component was fed into a constructor.
    NonFinite,
    /// A circle measure was given an atom at the origin.
    OriginAtom,
    /// The operation needs a nonempty measure; an empty one means the
    /// periodized measure is identically zero and callers must short-circuit
    /// (the vanishing criterion holds trivially).
    EmptyMeasure,
    /// The result magnitude exceeds the double range.
    Overflow,
    /// Growth or indicator estimation on a sum with no terms.
    DegenerateSum,
    /// An interior atom sits too close to the boundary circle for the
    /// requested grid: quadrature accuracy decays like `(|a|/r)^M`. Raise the
    /// grid size.
    AtomTooClose { index: usize, ratio: f64 },
    /// Quadrature cannot certify moments beyond `grid / 4`.
    AliasRisk { n_max: usize, grid: usize },
    /// The mod-2π cluster criterion needs purely real frequencies.
    NonRealFrequency { index: usize },
    /// A parameter violated its documented range.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => write!(f, "non-finite component (NaN or infinity)"),
            Error::OriginAtom => write!(f, "circle measure may not carry an atom at the origin"),
            Error::EmptyMeasure => write!(f, "operation requires a nonempty measure"),
            Error::Overflow => write!(f, "result magnitude exceeds the double range"),
            Error::DegenerateSum => write!(f, "exponential sum has no terms"),
            Error::AtomTooClose { index, ratio } => write!(
                f,
                "atom {index} lies at |a|/r = {ratio:.6} of the boundary, beyond the sweep guard; raise the grid size"
            ),
            Error::AliasRisk { n_max, grid } => write!(
                f,
                "moment order {n_max} exceeds grid/4 = {} for grid {grid}; aliasing would corrupt the result",
                grid / 4
            ),
            Error::NonRealFrequency { index } => {
                write!(f, "term {index} has a non-real frequency")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
