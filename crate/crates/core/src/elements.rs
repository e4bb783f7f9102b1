//! Space-variant and time-varying retarders.
//!
//! A q-plate is a retarder whose fast axis angle follows `α(φ) = q·φ + α0`
//! around the optical axis. For `δ = π` it converts `|L>` into `|R>` while
//! imprinting the azimuthal factor `e^{2iqφ}` (and `e^{2iα0}`).

use num_complex::Complex64;
use thiserror::Error;

use crate::beams::VectorField;
use crate::polarization::{apply, waveplate, JonesMatrix, JonesVector};

/// Minimum number of samples per rotation period of a rotating element.
pub const MIN_SAMPLES_PER_ROTATION: f64 = 64.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ElementError {
    #[error("q = {0} is not a multiple of 1/2")]
    InvalidCharge(f64),
    #[error("axis map has {got} samples, field grid has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rotation undersampled: {samples_per_period:.2} samples per period (need >= 64)")]
    UndersampledRotation { samples_per_period: f64 },
    #[error("sample times must be uniformly spaced and increasing")]
    NonUniformSampling,
}

/// Geometry of a q-plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QPlateSpec {
    q: f64,
    alpha0: f64,
    retardance: f64,
}

impl QPlateSpec {
    pub fn new(q: f64, alpha0: f64, retardance: f64) -> Result<Self, ElementError> {
        let twice = 2.0 * q;
        if !q.is_finite() || (twice - twice.round()).abs() > 1e-9 {
            return Err(ElementError::InvalidCharge(q));
        }
        Ok(QPlateSpec {
            q: twice.round() / 2.0,
            alpha0,
            retardance,
        })
    }

    /// Half-wave q-plate with zero axis offset.
    pub fn half_wave(q: f64) -> Result<Self, ElementError> {
        QPlateSpec::new(q, 0.0, std::f64::consts::PI)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    pub fn retardance(&self) -> f64 {
        self.retardance
    }

    pub fn with_alpha0(&self, alpha0: f64) -> Self {
        QPlateSpec { alpha0, ..*self }
    }

    /// Fast-axis angle at azimuth `phi`.
    pub fn axis_angle(&self, phi: f64) -> f64 {
        self.q * phi + self.alpha0
    }
}

pub fn qplate_matrix(spec: &QPlateSpec, phi: f64) -> JonesMatrix {
    waveplate(spec.retardance, spec.axis_angle(phi))
}

/// Applies the q-plate pixel by pixel, with the azimuth taken from the
/// cell-centered coordinates of each sample.
pub fn apply_qplate(spec: &QPlateSpec, f: &VectorField) -> VectorField {
    f.map_jones(|_, x, y, e| apply(&qplate_matrix(spec, y.atan2(x)), &e))
}

/// Retarder with an arbitrary fast-axis map.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternedRetarder {
    pub alpha_map: Vec<f64>,
    pub retardance: f64,
}

impl PatternedRetarder {
    pub fn new(alpha_map: Vec<f64>, retardance: f64) -> Self {
        PatternedRetarder {
            alpha_map,
            retardance,
        }
    }

    /// Samples `alpha(x, y)` on the grid of `f`.
    pub fn from_fn<F>(grid: &crate::beams::Grid, retardance: f64, alpha: F) -> Self
    where
        F: Fn(f64, f64) -> f64,
    {
        let alpha_map = (0..grid.len())
            .map(|i| {
                let (x, y) = grid.position(i);
                alpha(x, y)
            })
            .collect();
        PatternedRetarder::new(alpha_map, retardance)
    }
}

pub fn apply_patterned(p: &PatternedRetarder, f: &VectorField) -> Result<VectorField, ElementError> {
    if p.alpha_map.len() != f.grid.len() {
        return Err(ElementError::DimensionMismatch {
            expected: f.grid.len(),
            got: p.alpha_map.len(),
        });
    }
    Ok(f.map_jones(|idx, _, _, e| apply(&waveplate(p.retardance, p.alpha_map[idx]), &e)))
}

/// Checks uniform increasing sampling with enough samples per rotation period.
pub fn check_rotation_sampling(omega: f64, t: &[f64]) -> Result<f64, ElementError> {
    if t.len() < 2 {
        return Ok(0.0);
    }
    let dt = (t[t.len() - 1] - t[0]) / (t.len() - 1) as f64;
    if !(dt > 0.0) {
        return Err(ElementError::NonUniformSampling);
    }
    let tol = 1e-9 * dt + 8.0 * f64::EPSILON * t[0].abs().max(t[t.len() - 1].abs());
    for (k, tk) in t.iter().enumerate() {
        if (tk - (t[0] + k as f64 * dt)).abs() > tol {
            return Err(ElementError::NonUniformSampling);
        }
    }
    if omega != 0.0 {
        let samples_per_period = std::f64::consts::TAU / (omega.abs() * dt);
        if samples_per_period < MIN_SAMPLES_PER_ROTATION {
            return Err(ElementError::UndersampledRotation { samples_per_period });
        }
    }
    Ok(dt)
}

/// Output of a waveplate whose axis rotates as `Ω·t`.
pub fn rotating_waveplate_series(
    retardance: f64,
    omega: f64,
    input: &JonesVector,
    t: &[f64],
) -> Result<Vec<JonesVector>, ElementError> {
    check_rotation_sampling(omega, t)?;
    Ok(t.iter()
        .map(|&tk| apply(&waveplate(retardance, omega * tk), input))
        .collect())
}

/// Rotating half-wave plate followed by a fixed one at `α = 0`. The pair
/// returns `|L>` to `|L>` with phase advancing as `2Ω·t`.
pub fn rotating_hwp_pair_series(
    omega: f64,
    input: &JonesVector,
    t: &[f64],
) -> Result<Vec<JonesVector>, ElementError> {
    let rotated = rotating_waveplate_series(std::f64::consts::PI, omega, input, t)?;
    let fixed = waveplate(std::f64::consts::PI, 0.0);
    Ok(rotated.iter().map(|v| apply(&fixed, v)).collect())
}

/// Lazily yields the output of a q-plate whose offset rotates as `α0 + Ω·t`.
pub fn rotating_qplate_iter<'a>(
    spec: &'a QPlateSpec,
    omega: f64,
    f: &'a VectorField,
    t: &'a [f64],
) -> Result<impl Iterator<Item = VectorField> + 'a, ElementError> {
    check_rotation_sampling(omega, t)?;
    Ok(t.iter().map(move |&tk| {
        let rotated = spec.with_alpha0(spec.alpha0 + omega * tk);
        apply_qplate(&rotated, f)
    }))
}

pub fn rotating_qplate_series(
    spec: &QPlateSpec,
    omega: f64,
    f: &VectorField,
    t: &[f64],
) -> Result<Vec<VectorField>, ElementError> {
    Ok(rotating_qplate_iter(spec, omega, f, t)?.collect())
}

/// Uniform sample times `t_k = k·duration/samples`, `k = 0..samples`.
pub fn uniform_times(duration: f64, samples: usize) -> Vec<f64> {
    let dt = duration / samples as f64;
    (0..samples).map(|k| k as f64 * dt).collect()
}

/// Unit phasor helper for tests and callers composing global phases.
pub fn phasor(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}
