//! Image and CSV writers.
//!
//! Images are written with the top row at `+y`. Grayscale maps are 16-bit
//! binary PGM (big-endian samples), Stokes composites 8-bit binary PPM.

use std::fs;
use std::path::Path;

use lightsim_core::analysis::StokesField;
use lightsim_core::beams::ScalarField;

use crate::error::CliError;

/// One checked scalar result.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub scenario: String,
    pub quantity: String,
    pub value: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SummaryRow {
    /// Passes when `|value − expected| <= tolerance` and `value` is finite.
    pub fn check(scenario: &str, quantity: impl Into<String>, value: f64, expected: f64, tolerance: f64) -> Self {
        let pass = value.is_finite() && (value - expected).abs() <= tolerance;
        SummaryRow {
            scenario: scenario.to_string(),
            quantity: quantity.into(),
            value,
            expected,
            tolerance,
            pass,
        }
    }
}

/// Scientific notation with 17 significant digits and a signed two-digit exponent.
pub fn format_sci(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.16e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

pub fn summary_csv(rows: &[SummaryRow]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let map = |e: csv::Error| CliError::Numerical(format!("csv: {e}"));
    w.write_record(["scenario", "quantity", "value", "expected", "tolerance", "pass"])
        .map_err(map)?;
    for r in rows {
        w.write_record([
            r.scenario.as_str(),
            r.quantity.as_str(),
            &format_sci(r.value),
            &format_sci(r.expected),
            &format_sci(r.tolerance),
            if r.pass { "true" } else { "false" },
        ])
        .map_err(map)?;
    }
    w.into_inner().map_err(|e| CliError::Numerical(format!("csv: {e}")))
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// 16-bit P5 image of row-major `values` (row 0 at `−y`), already scaled to `0..=65535`.
pub fn pgm16(n: usize, values: &[u16]) -> Vec<u8> {
    let mut out = format!("P5\n{n} {n}\n65535\n").into_bytes();
    out.reserve(2 * values.len());
    for iy in (0..n).rev() {
        for &v in &values[iy * n..(iy + 1) * n] {
            out.extend_from_slice(&v.to_be_bytes());
        }
    }
    out
}

/// Linear map of `data` onto `0..=65535` by its maximum.
pub fn normalized_pgm(n: usize, data: &[f64]) -> Vec<u8> {
    let max = data.iter().copied().fold(0.0, f64::max);
    let scale = if max > 0.0 { 65535.0 / max } else { 0.0 };
    let values: Vec<u16> = data.iter().map(|&v| (v.max(0.0) * scale).round() as u16).collect();
    pgm16(n, &values)
}

pub fn intensity_pgm(s: &ScalarField) -> Vec<u8> {
    let data: Vec<f64> = s.amp.iter().map(|a| a.norm_sqr()).collect();
    normalized_pgm(s.grid.n(), &data)
}

/// Phase mapped linearly from (−π, π] onto 0..=65535.
pub fn phase_pgm(s: &ScalarField) -> Vec<u8> {
    use std::f64::consts::{PI, TAU};
    let values: Vec<u16> = s
        .amp
        .iter()
        .map(|a| {
            let mut phi = a.arg();
            if phi <= -PI {
                phi = PI;
            }
            ((phi + PI) / TAU * 65535.0).round() as u16
        })
        .collect();
    pgm16(s.grid.n(), &values)
}

/// `(s1, s2, s3)/s0` as RGB with `[−1, 1] → 0..=255`; unlit pixels map to mid-gray.
pub fn stokes_ppm(stokes: &StokesField) -> Vec<u8> {
    let n = stokes.grid.n();
    let floor = 1e-12 * stokes.max_s0();
    let byte = |v: f64| ((v.clamp(-1.0, 1.0) + 1.0) * 0.5 * 255.0).round() as u8;
    let mut out = format!("P6\n{n} {n}\n255\n").into_bytes();
    out.reserve(3 * n * n);
    for iy in (0..n).rev() {
        for s in &stokes.data[iy * n..(iy + 1) * n] {
            let (r, g, b) = if s.s0 > floor {
                (s.s1 / s.s0, s.s2 / s.s0, s.s3 / s.s0)
            } else {
                (0.0, 0.0, 0.0)
            };
            out.extend_from_slice(&[byte(r), byte(g), byte(b)]);
        }
    }
    out
}
