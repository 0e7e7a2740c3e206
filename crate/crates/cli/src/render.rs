//! Text, JSON and CSV rendering of spectra and verification reports.

use std::io::{self, Write};

use serde_json::{json, Value};

use dlmkit_core::graph::{to_graph6, Graph, GraphError};
use dlmkit_core::linalg::{format_root, CharPolynomial, ExactSpectrum, Root};
use dlmkit_core::spectra::{distance_laplacian, laplacian, SpectraError};
use dlmkit_core::verify::{write_records_csv, ClassificationReport, CospectralReport, VerifyReport};

use crate::{CliError, Format};

pub struct RenderedSpectrum {
    graph6: String,
    matrix: &'static str,
    n: usize,
    poly: CharPolynomial,
    spectrum: ExactSpectrum,
}

pub fn spectrum_of(g: &Graph, distance: bool) -> Result<RenderedSpectrum, CliError> {
    let graph6 = to_graph6(g);
    let m = if distance {
        distance_laplacian(g).map_err(|e| match e {
            SpectraError::Graph(GraphError::Disconnected) => {
                CliError::Input(format!("{graph6}: graph is disconnected; the distance Laplacian needs a connected graph"))
            }
            other => other.into(),
        })?
    } else {
        laplacian(g)
    };
    let poly = m.char_poly();
    let spectrum = ExactSpectrum::from_char_poly(&poly);
    Ok(RenderedSpectrum { graph6, matrix: if distance { "dl" } else { "l" }, n: g.order(), poly, spectrum })
}

fn root_json(root: &Root, multiplicity: u32) -> Value {
    match root {
        Root::Integer(k) => json!({ "value": k.to_string(), "multiplicity": multiplicity, "exact": true }),
        Root::Isolated(iso) => json!({
            "value": format_root(root),
            "multiplicity": multiplicity,
            "exact": false,
            "interval": { "lo": iso.lo().to_string(), "hi": iso.hi().to_string() },
        }),
    }
}

fn spectrum_json(s: &RenderedSpectrum) -> Value {
    json!({
        "graph6": s.graph6,
        "matrix": s.matrix,
        "n": s.n,
        "char_poly": s.poly.to_string(),
        "char_poly_coefficients": s.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "eigenvalues": s.spectrum.entries().iter().map(|e| root_json(&e.root, e.multiplicity)).collect::<Vec<_>>(),
    })
}

pub fn write_spectra(out: &mut dyn Write, spectra: &[RenderedSpectrum], format: Format) -> io::Result<()> {
    match format {
        Format::Text => {
            for s in spectra {
                if spectra.len() == 1 {
                    writeln!(out, "{}", s.spectrum)?;
                } else {
                    writeln!(out, "{}: {}", s.graph6, s.spectrum)?;
                }
            }
        }
        Format::Json => {
            let value = match spectra {
                [one] => spectrum_json(one),
                many => Value::Array(many.iter().map(spectrum_json).collect()),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        Format::Csv => {
            writeln!(out, "graph6,value,multiplicity,exact,lo,hi")?;
            for s in spectra {
                for e in s.spectrum.entries() {
                    let (lo, hi) = match &e.root {
                        Root::Integer(k) => (k.to_string(), k.to_string()),
                        Root::Isolated(iso) => (iso.lo().to_string(), iso.hi().to_string()),
                    };
                    writeln!(
                        out,
                        "{},{},{},{},{lo},{hi}",
                        csv_field(&s.graph6),
                        format_root(&e.root),
                        e.multiplicity,
                        e.root.is_integer()
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_json(out: &mut dyn Write, value: &impl serde::Serialize) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)
}

fn write_report_text(out: &mut dyn Write, r: &VerifyReport) -> io::Result<()> {
    writeln!(
        out,
        "{} n={} count={} class_size={} verdict={}",
        r.kind,
        r.n,
        r.count,
        r.class_size,
        if r.passed() { "match" } else { "mismatch" }
    )?;
    for s in &r.suites {
        let tag = if s.passed() { "PASS" } else { "FAIL" };
        if s.failures == 0 {
            writeln!(out, "[{tag}] {} ({} checked)", s.name, s.checked)?;
        } else {
            writeln!(out, "[{tag}] {} ({} checked, {} failed)", s.name, s.checked, s.failures)?;
        }
        for d in &s.details {
            writeln!(out, "    {d}")?;
        }
    }
    if !r.missing.is_empty() {
        writeln!(out, "missing: {}", r.missing.join(" "))?;
    }
    if !r.unexpected.is_empty() {
        writeln!(out, "unexpected: {}", r.unexpected.join(" "))?;
    }
    Ok(())
}

fn write_suites_csv(out: &mut dyn Write, r: &VerifyReport) -> io::Result<()> {
    writeln!(out, "kind,n,suite,status,checked,failures,counterexamples")?;
    for s in &r.suites {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.kind,
            r.n,
            s.name,
            if s.passed() { "pass" } else { "fail" },
            s.checked,
            s.failures,
            csv_field(&s.counterexamples.join(" "))
        )?;
    }
    Ok(())
}

pub fn write_report(out: &mut dyn Write, r: &VerifyReport, format: Format) -> io::Result<()> {
    match format {
        Format::Text => write_report_text(out, r),
        Format::Json => write_json(out, r),
        Format::Csv => write_suites_csv(out, r),
    }
}

pub fn write_classification(out: &mut dyn Write, reports: &[ClassificationReport], format: Format) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                write_report_text(out, &r.report)?;
                let class: Vec<&str> = r.class().map(|g| g.graph6.as_str()).collect();
                writeln!(out, "class: {}", class.join(" "))?;
            }
            Ok(())
        }
        Format::Json => match reports {
            [one] => write_json(out, &one.report),
            many => write_json(out, &many.iter().map(|r| &r.report).collect::<Vec<_>>()),
        },
        Format::Csv => {
            for (i, r) in reports.iter().enumerate() {
                let mut buf = Vec::new();
                write_records_csv(&mut buf, r.report.n, &r.records)?;
                let body = if i == 0 { &buf[..] } else { &buf[buf.iter().position(|&b| b == b'\n').map_or(0, |p| p + 1)..] };
                out.write_all(body)?;
            }
            Ok(())
        }
    }
}

pub fn write_groups(out: &mut dyn Write, r: &CospectralReport, format: Format) -> io::Result<()> {
    match format {
        Format::Text => {
            for g in &r.groups {
                writeln!(out, "{}", g.join(" "))?;
            }
            writeln!(
                out,
                "{} cospectral groups among {} graphs; classified members {}",
                r.groups.len(),
                r.report.count,
                if r.passed() { "have no mates" } else { "have mates" }
            )
        }
        Format::Json => write_json(out, &r.report),
        Format::Csv => {
            writeln!(out, "group,graph6")?;
            for (i, g) in r.groups.iter().enumerate() {
                for code in g {
                    writeln!(out, "{i},{}", csv_field(code))?;
                }
            }
            Ok(())
        }
    }
}
