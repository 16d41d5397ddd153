//! The `carlsonkit v1` document format.
//!
//! Four kinds share one record grammar:
//!
//! ```text
//! carlsonkit v1 expsum            carlsonkit v1 circle_measure
//! <om.re> <om.im> <c.re> <c.im>   <loc.re> <loc.im> <w.re> <w.im>
//! ...                             ...
//!
//! carlsonkit v1 planar_measure    carlsonkit v1 density
//! <loc.re> <loc.im> <w.re> <w.im> <radius> <M>
//! ...                             <re> <im>          (M sample records)
//! ```
//!
//! Parsing normalizes like the library constructors do: records with exactly
//! zero weight or coefficient are dropped. Serialized fields carry 17
//! significant digits and round-trip to the identical bits.

use std::fmt;

use carlson_core::expsum::{ExpSum, Term};
use carlson_core::measures::{Atom, BoundaryDensity, CircleMeasure, PlanarMeasure};
use carlson_core::Complex64;

pub const FORMAT_VERSION: &str = "v1";

/// Document payload kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    ExpSum,
    PlanarMeasure,
    CircleMeasure,
    Density,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::ExpSum => "expsum",
            Kind::PlanarMeasure => "planar_measure",
            Kind::CircleMeasure => "circle_measure",
            Kind::Density => "density",
        }
    }
}

/// A parsed document.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    ExpSum(ExpSum),
    PlanarMeasure(PlanarMeasure),
    CircleMeasure(CircleMeasure),
    Density(BoundaryDensity),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::ExpSum(_) => Kind::ExpSum,
            Document::PlanarMeasure(_) => Kind::PlanarMeasure,
            Document::CircleMeasure(_) => Kind::CircleMeasure,
            Document::Density(_) => Kind::Density,
        }
    }
}

/// Parse failure with a 1-based line position.
#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_fields(line: usize, text: &str, expected: usize) -> Result<Vec<f64>, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != expected {
        return Err(err(
            line,
            format!("expected {expected} fields, found {}", tokens.len()),
        ));
    }
    tokens
        .iter()
        .map(|t| {
            let value: f64 = t
                .parse()
                .map_err(|_| err(line, format!("not a number: '{t}'")))?;
            if !value.is_finite() {
                return Err(err(line, format!("non-finite value: '{t}'")));
            }
            Ok(value)
        })
        .collect()
}

/// Parse a document, reporting the first offending line on failure.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let content: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .collect();

    let Some(&(header_line, header)) = content.first() else {
        return Err(err(
            1,
            "empty document: missing 'carlsonkit v1 <kind>' header",
        ));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "carlsonkit" {
        return Err(err(
            header_line,
            format!("expected header 'carlsonkit v1 <kind>', found '{header}'"),
        ));
    }
    if tokens[1] != FORMAT_VERSION {
        return Err(err(
            header_line,
            format!("unsupported format version '{}'", tokens[1]),
        ));
    }
    let records = &content[1..];

    match tokens[2] {
        "expsum" => {
            let mut terms = Vec::with_capacity(records.len());
            for &(line, text) in records {
                let f = parse_fields(line, text, 4)?;
                terms.push(Term::new(
                    Complex64::new(f[0], f[1]),
                    Complex64::new(f[2], f[3]),
                ));
            }
            Ok(Document::ExpSum(
                ExpSum::new(terms).expect("fields validated finite"),
            ))
        }
        "planar_measure" => {
            let atoms = parse_atoms(records, false)?;
            Ok(Document::PlanarMeasure(
                PlanarMeasure::new(atoms).expect("fields validated finite"),
            ))
        }
        "circle_measure" => {
            let atoms = parse_atoms(records, true)?;
            Ok(Document::CircleMeasure(
                CircleMeasure::new(atoms).expect("fields validated finite and off-origin"),
            ))
        }
        "density" => {
            let Some(&(line, text)) = records.first() else {
                return Err(err(
                    header_line,
                    "density document is missing its '<radius> <M>' record",
                ));
            };
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(err(line, "expected '<radius> <M>'"));
            }
            let radius: f64 = tokens[0]
                .parse()
                .map_err(|_| err(line, format!("not a number: '{}'", tokens[0])))?;
            let m: usize = tokens[1]
                .parse()
                .map_err(|_| err(line, format!("not a sample count: '{}'", tokens[1])))?;
            if !(radius.is_finite() && radius > 0.0) {
                return Err(err(line, "density radius must be positive"));
            }
            let sample_records = &records[1..];
            if sample_records.len() != m {
                return Err(err(
                    line,
                    format!("declared {m} samples, found {}", sample_records.len()),
                ));
            }
            let mut samples = Vec::with_capacity(m);
            for &(line, text) in sample_records {
                let f = parse_fields(line, text, 2)?;
                samples.push(Complex64::new(f[0], f[1]));
            }
            BoundaryDensity::new(radius, samples)
                .map(Document::Density)
                .map_err(|e| err(line, e.to_string()))
        }
        other => Err(err(header_line, format!("unknown document kind '{other}'"))),
    }
}

fn parse_atoms(records: &[(usize, &str)], on_circle: bool) -> Result<Vec<Atom>, ParseError> {
    let mut atoms = Vec::with_capacity(records.len());
    for &(line, text) in records {
        let f = parse_fields(line, text, 4)?;
        let location = Complex64::new(f[0], f[1]);
        let weight = Complex64::new(f[2], f[3]);
        if on_circle && location.norm() == 0.0 && weight.norm() > 0.0 {
            return Err(err(
                line,
                "circle measure may not carry an atom at the origin",
            ));
        }
        atoms.push(Atom::new(location, weight));
    }
    Ok(atoms)
}

/// A float with 17 significant digits; parses back to the identical bits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_record(out: &mut String, fields: &[f64]) {
    let mut first = true;
    for f in fields {
        if !first {
            out.push(' ');
        }
        out.push_str(&fmt_f64(*f));
        first = false;
    }
    out.push('\n');
}

/// Serialize to the canonical text form.
pub fn serialize_document(doc: &Document) -> String {
    let mut out = format!("carlsonkit {FORMAT_VERSION} {}\n", doc.kind().as_str());
    match doc {
        Document::ExpSum(g) => {
            for t in g.terms() {
                push_record(
                    &mut out,
                    &[
                        t.frequency.re,
                        t.frequency.im,
                        t.coefficient.re,
                        t.coefficient.im,
                    ],
                );
            }
        }
        Document::PlanarMeasure(mu) => {
            for a in mu.atoms() {
                push_record(
                    &mut out,
                    &[a.location.re, a.location.im, a.weight.re, a.weight.im],
                );
            }
        }
        Document::CircleMeasure(nu) => {
            for a in nu.atoms() {
                push_record(
                    &mut out,
                    &[a.location.re, a.location.im, a.weight.re, a.weight.im],
                );
            }
        }
        Document::Density(h) => {
            out.push_str(&fmt_f64(h.radius()));
            out.push(' ');
            out.push_str(&h.grid_size().to_string());
            out.push('\n');
            for s in h.samples() {
                push_record(&mut out, &[s.re, s.im]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expsum_round_trip() {
        let doc = Document::ExpSum(
            ExpSum::from_pairs(&[
                (
                    Complex64::new(0.0, core::f64::consts::PI),
                    Complex64::new(0.0, -0.5),
                ),
                (Complex64::new(1.0, -2.5), Complex64::new(0.125, 3.0)),
            ])
            .unwrap(),
        );
        let text = serialize_document(&doc);
        let parsed = parse_document(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(serialize_document(&parsed), text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "\n# a comment\ncarlsonkit v1 expsum\n\n0e0 0e0 1e0 0e0\n# trailing\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.kind(), Kind::ExpSum);
    }

    #[test]
    fn errors_carry_line_positions() {
        let e = parse_document("carlsonkit v1 expsum\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_document("carlsonkit v2 expsum\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("version"));
        let e = parse_document("carlsonkit v1 expsum\n1 2 3 x\n").unwrap_err();
        assert!(e.message.contains('x'));
        let e = parse_document("carlsonkit v1 expsum\n1 2 3 inf\n").unwrap_err();
        assert!(e.message.contains("non-finite"));
        let e = parse_document("").unwrap_err();
        assert!(e.message.contains("empty"));
        let e = parse_document("carlsonkit v1 cheese\n").unwrap_err();
        assert!(e.message.contains("cheese"));
    }

    #[test]
    fn circle_measure_rejects_origin_atoms_with_position() {
        let e = parse_document("carlsonkit v1 circle_measure\n0 0 1 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("origin"));
    }

    #[test]
    fn density_declares_its_sample_count() {
        let text = "carlsonkit v1 density\n1e0 4\n1 0\n0 1\n-1 0\n0 -1\n";
        let doc = parse_document(text).unwrap();
        match &doc {
            Document::Density(h) => assert_eq!(h.grid_size(), 4),
            other => panic!("unexpected {other:?}"),
        }
        let e = parse_document("carlsonkit v1 density\n1e0 5\n1 0\n0 1\n-1 0\n0 -1\n").unwrap_err();
        assert!(e.message.contains("declared 5 samples"));
    }
}
