//! Command drivers. Each returns a [`CmdOutcome`] instead of exiting, so the
//! exit-code contract is testable in-process:
//! `0` verdict true, `1` error, `2` verdict false, `3` internal disagreement.

use std::fmt::Write as _;

use carlson_core::balayage::{sweep_measure, verify_sweep, SweepConfig};
use carlson_core::carlson::dichotomy_check;
use carlson_core::expsum::{ExpSum, DEFAULT_GROWTH_SAMPLES, DEFAULT_Y_MAX, DEFAULT_Y_MIN};
use carlson_core::hardy::{
    discrete_criterion, lift_real_frequencies, vanishing_criterion, CriterionReport,
    DEFAULT_GROUP_TOL, DEFAULT_TOL, REAL_FREQUENCY_IM_TOL,
};
use carlson_core::periodize::periodize_default;
use carlson_core::Error;

use crate::document::{serialize_document, Document};
use crate::report::{criterion_lines, dichotomy_lines, growth_lines, sweep_summary_lines, Format};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FALSE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

/// What a command produced: exit code plus the text destined for stdout and
/// stderr.
#[derive(Clone, Debug, PartialEq)]
pub struct CmdOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutcome {
    fn error(message: impl std::fmt::Display) -> Self {
        CmdOutcome {
            exit_code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Which criterion route `check` runs.
///
/// `Pipeline` reads the document in the exponential convention
/// `g(z) = Σ c_k·exp(ω_k z)`. `Discrete` requires real frequencies and reads
/// them in the angular convention `g(z) = Σ c_k·exp(i ω_k z)`. `Both` runs
/// every applicable route and trips exit code 3 if they disagree: for real
/// frequencies that is discrete + pipeline + direct scan, all in the angular
/// convention — the one interpretation under which the three answer the same
/// question — otherwise pipeline + direct scan in the exponential convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Discrete,
    Pipeline,
    Both,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOpts {
    /// Scan bound for the direct integer check (mode `both`).
    pub n_max: usize,
    /// Relative tolerance for every criterion.
    pub tol: f64,
    pub mode: Mode,
    pub format: Format,
}

impl Default for CheckOpts {
    fn default() -> Self {
        CheckOpts {
            n_max: 30,
            tol: DEFAULT_TOL,
            mode: Mode::Pipeline,
            format: Format::Human,
        }
    }
}

fn all_frequencies_real(g: &ExpSum) -> bool {
    g.terms()
        .iter()
        .all(|t| t.frequency.im.abs() <= REAL_FREQUENCY_IM_TOL)
}

fn pipeline_criterion(g: &ExpSum, tol: f64) -> Result<CriterionReport, Error> {
    let nu = periodize_default(&g.spectral_measure())?;
    Ok(vanishing_criterion(&nu, tol))
}

fn verdict_exit(verdict: bool) -> i32 {
    if verdict {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

pub fn run_check(doc: &Document, opts: &CheckOpts) -> CmdOutcome {
    let Document::ExpSum(g) = doc else {
        return CmdOutcome::error(format!(
            "check expects an expsum document, found {}",
            doc.kind().as_str()
        ));
    };
    let mut out = String::new();
    match opts.mode {
        Mode::Discrete => {
            let report = match discrete_criterion(g, DEFAULT_GROUP_TOL, opts.tol) {
                Ok(r) => r,
                Err(e) => return CmdOutcome::error(e),
            };
            note_convention(&mut out, "angular", opts.format);
            criterion_lines("discrete", &report, opts.format, &mut out);
            CmdOutcome {
                exit_code: verdict_exit(report.verdict),
                stdout: out,
                stderr: String::new(),
            }
        }
        Mode::Pipeline => {
            let report = match pipeline_criterion(g, opts.tol) {
                Ok(r) => r,
                Err(e) => return CmdOutcome::error(e),
            };
            note_convention(&mut out, "exponential", opts.format);
            criterion_lines("pipeline", &report, opts.format, &mut out);
            CmdOutcome {
                exit_code: verdict_exit(report.verdict),
                stdout: out,
                stderr: String::new(),
            }
        }
        Mode::Both => {
            let mut verdicts: Vec<bool> = Vec::new();
            if all_frequencies_real(g) {
                // Angular convention: discrete clusters, the pipeline on the
                // rotated sum, and the direct scan must all agree.
                let lifted = match lift_real_frequencies(g) {
                    Ok(l) => l,
                    Err(e) => return CmdOutcome::error(e),
                };
                let discrete = match discrete_criterion(g, DEFAULT_GROUP_TOL, opts.tol) {
                    Ok(r) => r,
                    Err(e) => return CmdOutcome::error(e),
                };
                let pipeline = match pipeline_criterion(&lifted, opts.tol) {
                    Ok(r) => r,
                    Err(e) => return CmdOutcome::error(e),
                };
                let scan = lifted.direct_integer_vanishing(opts.n_max, opts.tol);
                note_convention(&mut out, "angular", opts.format);
                criterion_lines("discrete", &discrete, opts.format, &mut out);
                criterion_lines("pipeline", &pipeline, opts.format, &mut out);
                direct_lines(&scan.vanishes, scan.witness, opts, &mut out);
                verdicts.extend([discrete.verdict, pipeline.verdict, scan.vanishes]);
            } else {
                let pipeline = match pipeline_criterion(g, opts.tol) {
                    Ok(r) => r,
                    Err(e) => return CmdOutcome::error(e),
                };
                let scan = g.direct_integer_vanishing(opts.n_max, opts.tol);
                note_convention(&mut out, "exponential", opts.format);
                criterion_lines("pipeline", &pipeline, opts.format, &mut out);
                direct_lines(&scan.vanishes, scan.witness, opts, &mut out);
                verdicts.extend([pipeline.verdict, scan.vanishes]);
            }
            let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
            match opts.format {
                Format::Records => {
                    let _ = writeln!(out, "agreement {agree}");
                }
                Format::Human => {
                    let _ = writeln!(out, "criteria agree: {agree}");
                }
            }
            CmdOutcome {
                exit_code: if agree {
                    verdict_exit(verdicts[0])
                } else {
                    EXIT_DISAGREE
                },
                stdout: out,
                stderr: String::new(),
            }
        }
    }
}

fn note_convention(out: &mut String, convention: &str, format: Format) {
    match format {
        Format::Records => {
            let _ = writeln!(out, "convention {convention}");
        }
        Format::Human => {
            let desc = match convention {
                "angular" => "g(z) = sum c_k exp(i w_k z)",
                _ => "g(z) = sum c_k exp(w_k z)",
            };
            let _ = writeln!(out, "convention: {convention}  [{desc}]");
        }
    }
}

fn direct_lines(vanishes: &bool, witness: Option<usize>, opts: &CheckOpts, out: &mut String) {
    match opts.format {
        Format::Records => {
            let _ = writeln!(
                out,
                "criterion direct verdict {vanishes} method integer_scan n_max {} witness {}",
                opts.n_max,
                witness.map_or_else(|| "none".to_string(), |n| n.to_string()),
            );
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "criterion direct    verdict {}  method integer_scan (n <= {}){}",
                if *vanishes { "TRUE " } else { "FALSE" },
                opts.n_max,
                witness.map_or_else(String::new, |n| format!("  witness n = {n}")),
            );
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOpts {
    /// Boundary grid size (power of two, at least 64).
    pub grid: usize,
    /// Verify moments up to this order.
    pub n_verify: usize,
    /// Target circle radius; defaults to max(1, support radius).
    pub radius: Option<f64>,
    pub format: Format,
}

impl Default for SweepOpts {
    fn default() -> Self {
        SweepOpts {
            grid: carlson_core::balayage::DEFAULT_GRID,
            n_verify: 16,
            radius: None,
            format: Format::Human,
        }
    }
}

pub fn run_sweep(doc: &Document, opts: &SweepOpts) -> CmdOutcome {
    let Document::CircleMeasure(nu) = doc else {
        return CmdOutcome::error(format!(
            "sweep expects a circle_measure document, found {}",
            doc.kind().as_str()
        ));
    };
    let config = match SweepConfig::with_grid(opts.grid) {
        Ok(c) => c,
        Err(e) => return CmdOutcome::error(e),
    };
    // Disc radius: explicit flag, else the support radius with a unit-disc
    // floor (an empty measure has no support radius; it sweeps to the zero
    // density on the unit circle).
    let support = nu.support_radius().unwrap_or(0.0);
    let radius = match opts.radius {
        Some(r) if r.is_finite() && r > 0.0 => {
            if support > r {
                return CmdOutcome::error(format!(
                    "requested radius {r} is smaller than the support radius {support}"
                ));
            }
            r
        }
        Some(_) => return CmdOutcome::error("radius must be positive"),
        None => support.max(1.0),
    };
    let rim_tol = 1e-9 * (1.0 + radius);
    let (interior, rim) = nu.split_interior_boundary(radius, rim_tol);
    let density = match sweep_measure(&interior, radius, &config) {
        Ok(h) => h,
        Err(e) => return CmdOutcome::error(e),
    };
    let verify_error = verify_sweep(&interior, &density, opts.n_verify);

    let stdout = serialize_document(&Document::Density(density));
    let mut stderr = String::new();
    sweep_summary_lines(
        radius,
        opts.grid,
        interior.len(),
        rim.len(),
        verify_error,
        opts.format,
        &mut stderr,
    );
    CmdOutcome {
        exit_code: EXIT_TRUE,
        stdout,
        stderr,
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GrowthOpts {
    pub y_max: f64,
    /// Samples per sign of the imaginary axis.
    pub samples: usize,
    pub format: Format,
}

impl Default for GrowthOpts {
    fn default() -> Self {
        GrowthOpts {
            y_max: DEFAULT_Y_MAX,
            samples: DEFAULT_GROWTH_SAMPLES,
            format: Format::Human,
        }
    }
}

pub fn run_growth(doc: &Document, opts: &GrowthOpts) -> CmdOutcome {
    let Document::ExpSum(g) = doc else {
        return CmdOutcome::error(format!(
            "growth expects an expsum document, found {}",
            doc.kind().as_str()
        ));
    };
    match g.growth_rate_imaginary(DEFAULT_Y_MIN, opts.y_max, opts.samples) {
        Ok(est) => {
            let mut out = String::new();
            growth_lines(&est, opts.format, &mut out);
            CmdOutcome {
                exit_code: EXIT_TRUE,
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(e) => CmdOutcome::error(e),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DichotomyOpts {
    pub n_max: usize,
    pub y_max: f64,
    /// Slack subtracted from π in the growth bound.
    pub tol: f64,
    pub format: Format,
}

impl Default for DichotomyOpts {
    fn default() -> Self {
        DichotomyOpts {
            n_max: 30,
            y_max: DEFAULT_Y_MAX,
            tol: 0.05,
            format: Format::Human,
        }
    }
}

pub fn run_dichotomy(doc: &Document, opts: &DichotomyOpts) -> CmdOutcome {
    let Document::ExpSum(g) = doc else {
        return CmdOutcome::error(format!(
            "dichotomy expects an expsum document, found {}",
            doc.kind().as_str()
        ));
    };
    match dichotomy_check(g, opts.n_max, opts.y_max, opts.tol) {
        Ok(report) => {
            let mut out = String::new();
            dichotomy_lines(&report, opts.format, &mut out);
            CmdOutcome {
                exit_code: verdict_exit(report.vanishes),
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(e) => CmdOutcome::error(e),
    }
}
