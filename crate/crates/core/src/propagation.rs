//! Free-space propagation by the angular-spectrum method and the Fraunhofer
//! far field.
//!
//! Fields are envelopes relative to the carrier `e^{ikz}`: the transfer phase
//! is `z·(kz − k)`, evaluated as `−z·(kx² + ky²)/(k + kz)` so that it stays
//! accurate at distances of many meters. This only drops a global phase.
//!
//! Evanescent spatial frequencies (`kx² + ky² > k²`) are dropped. Propagation
//! distances must be non-negative; [`propagate_back`] undoes a forward step by
//! conjugating around a forward propagation.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use thiserror::Error;

use crate::analysis::{beam_moments, oam_per_photon, rms_radius, topological_charge, AnalysisError, BeamMoments};
use crate::beams::{ScalarField, VectorField};
use crate::fourier::{fft2_forward, fft2_inverse, fft_frequency};

/// Border intensity must stay below this fraction of the peak.
pub const EDGE_INTENSITY_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PropagationError {
    #[error("window too small: border intensity is {edge_ratio:e} of the peak (limit 1e-6)")]
    WindowTooSmall { edge_ratio: f64 },
    #[error("propagation distance must be non-negative, got {0}")]
    NegativeDistance(f64),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    AngularSpectrum,
    Fraunhofer,
}

/// A propagation request on a given grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationPlan {
    pub grid: crate::beams::Grid,
    pub z: f64,
    pub method: Method,
}

impl PropagationPlan {
    pub fn new(grid: crate::beams::Grid, z: f64, method: Method) -> Result<Self, PropagationError> {
        if !(z >= 0.0) {
            return Err(PropagationError::NegativeDistance(z));
        }
        Ok(PropagationPlan { grid, z, method })
    }

    pub fn execute(&self, s: &ScalarField) -> Result<ScalarField, PropagationError> {
        match self.method {
            Method::AngularSpectrum => propagate(s, self.z),
            Method::Fraunhofer => far_field(s),
        }
    }
}

/// Rayleigh range `π·w0²/λ`.
pub fn rayleigh_range(w0: f64, wavelength: f64) -> f64 {
    PI * w0 * w0 / wavelength
}

/// Largest border-sample intensity relative to the peak.
pub fn edge_intensity_ratio(s: &ScalarField) -> f64 {
    let n = s.grid.n();
    let max = s.max_intensity();
    if !(max > 0.0) {
        return 0.0;
    }
    let mut edge: f64 = 0.0;
    for i in 0..n {
        for idx in [i, (n - 1) * n + i, i * n, i * n + n - 1] {
            edge = edge.max(s.intensity(idx));
        }
    }
    edge / max
}

fn check_window(s: &ScalarField) -> Result<(), PropagationError> {
    let edge_ratio = edge_intensity_ratio(s);
    if edge_ratio >= EDGE_INTENSITY_LIMIT {
        return Err(PropagationError::WindowTooSmall { edge_ratio });
    }
    Ok(())
}

fn transfer(s: &ScalarField, z: f64, conjugate: bool) -> ScalarField {
    let g = s.grid;
    let n = g.n();
    let k = g.wavenumber();
    let mut spectrum = s.amp.clone();
    fft2_forward(&mut spectrum, n);
    for ky in 0..n {
        let fy = TAU * fft_frequency(ky, n, g.pitch());
        for kx in 0..n {
            let fx = TAU * fft_frequency(kx, n, g.pitch());
            let kt2 = fx * fx + fy * fy;
            let kz2 = k * k - kt2;
            let idx = ky * n + kx;
            if kz2 < 0.0 {
                spectrum[idx] = Complex64::new(0.0, 0.0);
            } else {
                let phase = -z * kt2 / (k + kz2.sqrt());
                let h = Complex64::from_polar(1.0, if conjugate { -phase } else { phase });
                spectrum[idx] *= h;
            }
        }
    }
    fft2_inverse(&mut spectrum, n);
    ScalarField {
        grid: g,
        amp: spectrum,
    }
}

/// Angular-spectrum propagation over distance `z >= 0`.
pub fn propagate(s: &ScalarField, z: f64) -> Result<ScalarField, PropagationError> {
    if !(z >= 0.0) {
        return Err(PropagationError::NegativeDistance(z));
    }
    check_window(s)?;
    let out = transfer(s, z, false);
    check_window(&out)?;
    Ok(out)
}

/// Inverse of [`propagate`] on the propagating band, computed as
/// `conj(propagate(conj(s), z))`.
pub fn propagate_back(s: &ScalarField, z: f64) -> Result<ScalarField, PropagationError> {
    let conj = ScalarField {
        grid: s.grid,
        amp: s.amp.iter().map(|a| a.conj()).collect(),
    };
    let forward = propagate(&conj, z)?;
    Ok(ScalarField {
        grid: forward.grid,
        amp: forward.amp.iter().map(|a| a.conj()).collect(),
    })
}

/// Propagates both transverse components independently (paraxial).
pub fn propagate_vector(f: &VectorField, z: f64) -> Result<VectorField, PropagationError> {
    let ex = propagate(&f.component_x(), z)?;
    let ey = propagate(&f.component_y(), z)?;
    Ok(VectorField {
        grid: f.grid,
        ex: ex.amp,
        ey: ey.amp,
    })
}

/// Fraunhofer pattern sampled at cell-centered angles `θ_m = (m − n/2 + 1/2)·λ/(n·pitch)`.
///
/// The returned field's grid pitch is that angular pitch in radians.
pub fn far_field(s: &ScalarField) -> Result<ScalarField, PropagationError> {
    check_window(s)?;
    let g = s.grid;
    let n = g.n();
    // Both grids are offset by half a sample; c is that offset in index units.
    let c = n as f64 / 2.0 - 0.5;
    let nf = n as f64;
    let twiddle = |i: usize| Complex64::from_polar(1.0, TAU * c * i as f64 / nf);
    let tw: Vec<Complex64> = (0..n).map(twiddle).collect();
    let mut work: Vec<Complex64> = s
        .amp
        .iter()
        .enumerate()
        .map(|(idx, a)| a * tw[idx % n] * tw[idx / n])
        .collect();
    fft2_forward(&mut work, n);
    let global = Complex64::from_polar(g.pitch() * g.pitch(), -2.0 * TAU * c * c / nf);
    for (idx, v) in work.iter_mut().enumerate() {
        *v *= global * tw[idx % n] * tw[idx / n];
    }
    Ok(ScalarField {
        grid: g.with_pitch(g.wavelength() / (nf * g.pitch())),
        amp: work,
    })
}

/// Where a beam is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Plane {
    At(f64),
    FarField,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityRecord {
    pub plane: Plane,
    pub moments: BeamMoments,
    pub rms_radius: f64,
    /// Winding on the circle of radius `rms_radius`; `None` if the circle meets a dark point.
    pub charge: Option<i64>,
    pub oam: f64,
}

/// Width, orientation, charge and OAM of `s` at each requested plane.
pub fn stability_metrics(s: &ScalarField, planes: &[Plane]) -> Result<Vec<StabilityRecord>, PropagationError> {
    planes
        .iter()
        .map(|&plane| {
            let field = match plane {
                Plane::At(z) => propagate(s, z)?,
                Plane::FarField => far_field(s)?,
            };
            let radius = rms_radius(&field)?;
            let charge = match topological_charge(&field, radius) {
                Ok(c) => Some(c),
                Err(AnalysisError::LoopThroughZero { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(StabilityRecord {
                plane,
                moments: beam_moments(&field)?,
                rms_radius: radius,
                charge,
                oam: oam_per_photon(&field)?,
            })
        })
        .collect()
}
