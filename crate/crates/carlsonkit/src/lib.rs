//! Documents, reports, and command drivers for the `carlsonkit` CLI.
//!
//! Input documents are plain text: a header line `carlsonkit v1 <kind>`
//! followed by one whitespace-separated decimal record per line. Blank lines
//! and lines starting with `#` are skipped. Floating-point fields serialize
//! with 17 significant digits, so every document round-trips bit-exactly.
//!
//! The command drivers return exit codes instead of calling `exit`, which
//! keeps the whole CLI surface testable in-process:
//!
//! - `0` — the mathematical verdict is true,
//! - `1` — input or parameter error,
//! - `2` — the verdict is false,
//! - `3` — internal disagreement between criteria that must agree (a bug
//!   trap).

pub mod commands;
pub mod document;
pub mod report;

pub use commands::{
    run_check, run_dichotomy, run_growth, run_sweep, CheckOpts, CmdOutcome, DichotomyOpts,
    GrowthOpts, Mode, SweepOpts, EXIT_DISAGREE, EXIT_ERROR, EXIT_FALSE, EXIT_TRUE,
};
pub use document::{parse_document, serialize_document, Document, Kind, ParseError};
pub use report::Format;
