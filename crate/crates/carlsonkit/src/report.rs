//! Report rendering: aligned human tables or one-record-per-line machine
//! output. Both are deterministic — identical inputs produce byte-identical
//! text.

use std::fmt::Write as _;

use carlson_core::expsum::GrowthEstimate;
use carlson_core::hardy::{CriterionMethod, CriterionReport};
use carlson_core::{carlson::DichotomyReport, principal_arg};

use crate::document::fmt_f64;

/// Output style.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Records,
}

fn method_str(m: CriterionMethod) -> &'static str {
    match m {
        CriterionMethod::ExactVandermonde => "exact_vandermonde",
        CriterionMethod::QuadratureMoments => "quadrature_moments",
    }
}

pub fn criterion_lines(label: &str, report: &CriterionReport, format: Format, out: &mut String) {
    match format {
        Format::Records => {
            let _ = writeln!(
                out,
                "criterion {label} verdict {} method {} residual {} clusters {}",
                report.verdict,
                method_str(report.method),
                fmt_f64(report.max_moment_residual),
                report.merged_weights.len(),
            );
            for (i, a) in report.merged_weights.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "cluster {label} {i} {} {} {} {}",
                    fmt_f64(a.location.re),
                    fmt_f64(a.location.im),
                    fmt_f64(a.weight.re),
                    fmt_f64(a.weight.im),
                );
            }
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "criterion {label:<9} verdict {}  method {}  residual {:.3e}",
                if report.verdict { "TRUE " } else { "FALSE" },
                method_str(report.method),
                report.max_moment_residual,
            );
            if !report.merged_weights.is_empty() {
                let _ = writeln!(
                    out,
                    "  {:>3}  {:>24}  {:>10}  {:>24}",
                    "#", "location (re, im)", "arg", "merged weight (re, im)"
                );
                for (i, a) in report.merged_weights.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "  {:>3}  ({:>10.6}, {:>10.6})  {:>10.6}  ({:>10.3e}, {:>10.3e})",
                        i,
                        a.location.re,
                        a.location.im,
                        principal_arg(a.location),
                        a.weight.re,
                        a.weight.im,
                    );
                }
            }
        }
    }
}

pub fn growth_lines(est: &GrowthEstimate, format: Format, out: &mut String) {
    match format {
        Format::Records => {
            let _ = writeln!(
                out,
                "growth rate {} y_max {} samples {}",
                fmt_f64(est.rate),
                fmt_f64(est.y_max),
                est.samples_used,
            );
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "growth rate on the imaginary axis: {:.9}  (window +/-[1, {}], {} samples)",
                est.rate, est.y_max, est.samples_used,
            );
        }
    }
}

pub fn dichotomy_lines(report: &DichotomyReport, format: Format, out: &mut String) {
    let bound = match report.carlson_bound_met {
        Some(true) => "met",
        Some(false) => "not_met",
        None => "n/a",
    };
    match format {
        Format::Records => {
            let _ = writeln!(
                out,
                "dichotomy vanishes {} trivial {} rate {} y_max {} samples {} carlson_bound {bound}",
                report.vanishes,
                report.is_trivial,
                fmt_f64(report.growth.rate),
                fmt_f64(report.growth.y_max),
                report.growth.samples_used,
            );
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "vanishes on the non-negative integers: {}",
                report.vanishes
            );
            let _ = writeln!(
                out,
                "identically zero:                      {}",
                report.is_trivial
            );
            let _ = writeln!(
                out,
                "growth rate on the imaginary axis:     {:.9}",
                report.growth.rate
            );
            let _ = writeln!(out, "growth bound (rate >= pi - slack):     {bound}");
        }
    }
}

pub fn sweep_summary_lines(
    radius: f64,
    grid: usize,
    swept: usize,
    rim: usize,
    verify_error: f64,
    format: Format,
    out: &mut String,
) {
    match format {
        Format::Records => {
            let _ = writeln!(
                out,
                "sweep radius {} grid {grid} swept {swept} rim {rim} verify_error {}",
                fmt_f64(radius),
                fmt_f64(verify_error),
            );
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "swept {swept} interior atom(s) onto |z| = {radius} with {grid} samples; \
                 {rim} rim atom(s) kept atomic; max relative moment error {verify_error:.3e}",
            );
        }
    }
}
