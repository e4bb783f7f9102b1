//! Observables of sampled beams and plane waves.
//!
//! Per-photon quantities are ratios of grid integrals, so they do not depend on
//! the absolute field scale. Every grid reduction uses pairwise summation in a
//! fixed order.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;
use num_complex::Complex64;
use thiserror::Error;

use crate::beams::{plane_wave_em, Grid, PlaneWavePolarization, ScalarField, VectorField};
use crate::constants::{PLANCK, SPEED_OF_LIGHT};
use crate::fourier::{fft2_forward, fft2_inverse, fft_frequency};
use crate::numeric::{pairwise_sum_by, wrap_angle, wrapped_phase_circulation};
use crate::polarization::{stokes_of, StokesVector};

/// Samples on the loop used by winding and spectrum computations.
pub const MIN_LOOP_SAMPLES: usize = 512;
/// Loop intensity must exceed this fraction of the peak intensity.
pub const LOOP_INTENSITY_FLOOR: f64 = 1e-9;
/// Number of time samples per optical cycle for period averages.
pub const PERIOD_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("field carries no power")]
    ZeroField,
    #[error("radius {radius:e} outside the usable range (0, {max:e}]")]
    RadiusOutOfGrid { radius: f64, max: f64 },
    #[error("loop passes through a near-zero of the field (min/max intensity {ratio:e})")]
    LoopThroughZero { ratio: f64 },
    #[error("loop passes through unpolarized or circularly polarized points")]
    LoopThroughUnpolarized,
    #[error("both amplitudes are zero")]
    ZeroAmplitudes,
    #[error("energy density is zero")]
    ZeroEnergy,
    #[error("frequency must be positive, got {0}")]
    NonpositiveFrequency(f64),
}

/// Per-pixel Stokes parameters of a vector field.
#[derive(Debug, Clone, PartialEq)]
pub struct StokesField {
    pub grid: Grid,
    pub data: Vec<StokesVector>,
}

impl StokesField {
    pub fn max_s0(&self) -> f64 {
        self.data.iter().map(|s| s.s0).fold(0.0, f64::max)
    }

    fn interpolate(&self, x: f64, y: f64) -> Option<StokesVector> {
        let g = &self.grid;
        let half = g.n() as f64 / 2.0 - 0.5;
        let u = x / g.pitch() + half;
        let v = y / g.pitch() + half;
        let last = (g.n() - 1) as f64;
        if !(u >= 0.0 && v >= 0.0 && u <= last && v <= last) {
            return None;
        }
        let n = g.n();
        let i0 = (u.floor() as usize).min(n - 2);
        let j0 = (v.floor() as usize).min(n - 2);
        let fu = u - i0 as f64;
        let fv = v - j0 as f64;
        let w = [
            ((1.0 - fu) * (1.0 - fv), i0, j0),
            (fu * (1.0 - fv), i0 + 1, j0),
            ((1.0 - fu) * fv, i0, j0 + 1),
            (fu * fv, i0 + 1, j0 + 1),
        ];
        let mut out = StokesVector::default();
        for (wt, i, j) in w {
            let s = self.data[j * n + i];
            out.s0 += wt * s.s0;
            out.s1 += wt * s.s1;
            out.s2 += wt * s.s2;
            out.s3 += wt * s.s3;
        }
        Some(out)
    }
}

pub fn stokes_field(f: &VectorField) -> StokesField {
    StokesField {
        grid: f.grid,
        data: (0..f.grid.len()).map(|i| stokes_of(&f.jones_at(i))).collect(),
    }
}

/// Spin per photon in units of ħ: `Σ s3 / Σ s0`.
pub fn sam_per_photon(f: &VectorField) -> Result<f64, AnalysisError> {
    let stokes: Vec<StokesVector> = (0..f.grid.len()).map(|i| stokes_of(&f.jones_at(i))).collect();
    let s0 = pairwise_sum_by(stokes.len(), &|i| stokes[i].s0);
    if !(s0 > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    let s3 = pairwise_sum_by(stokes.len(), &|i| stokes[i].s3);
    Ok(s3 / s0)
}

/// Fourth-order centered derivative along x (`axis = 0`) or y (`axis = 1`).
/// The two outermost samples on each side are given zero derivative.
fn centered_derivative(s: &ScalarField, idx: usize, axis: usize) -> Complex64 {
    let n = s.grid.n();
    let (ix, iy) = (idx % n, idx / n);
    let i = if axis == 0 { ix } else { iy };
    if i < 2 || i + 2 >= n {
        return Complex64::new(0.0, 0.0);
    }
    let stride = if axis == 0 { 1 } else { n };
    let a = &s.amp;
    (a[idx - 2 * stride] - a[idx + 2 * stride] + (a[idx + stride] - a[idx - stride]) * 8.0)
        / (12.0 * s.grid.pitch())
}

/// `(Im Σ ψ*·(x∂y − y∂x)ψ, Σ|ψ|²)` with finite-difference derivatives.
fn oam_moments(s: &ScalarField) -> (f64, f64) {
    let g = s.grid;
    let num = pairwise_sum_by(g.len(), &|idx| {
        let (x, y) = g.position(idx);
        let d = centered_derivative(s, idx, 1) * x - centered_derivative(s, idx, 0) * y;
        (s.amp[idx].conj() * d).im
    });
    let den = pairwise_sum_by(g.len(), &|idx| s.amp[idx].norm_sqr());
    (num, den)
}

/// Orbital angular momentum per photon in units of ħ, from the azimuthal
/// derivative `x∂y − y∂x` evaluated with centered finite differences.
pub fn oam_per_photon(s: &ScalarField) -> Result<f64, AnalysisError> {
    let (num, den) = oam_moments(s);
    if !(den > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    Ok(num / den)
}

/// Intensity-weighted OAM over both transverse components.
pub fn oam_per_photon_vector(f: &VectorField) -> Result<f64, AnalysisError> {
    let (nx, dx) = oam_moments(&f.component_x());
    let (ny, dy) = oam_moments(&f.component_y());
    let den = dx + dy;
    if !(den > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    Ok((nx + ny) / den)
}

/// Independent OAM estimate using spectral (FFT) derivatives.
pub fn oam_per_photon_spectral(s: &ScalarField) -> Result<f64, AnalysisError> {
    let g = s.grid;
    let n = g.n();
    let mut spectrum = s.amp.clone();
    fft2_forward(&mut spectrum, n);
    let mut dx = spectrum.clone();
    let mut dy = spectrum;
    for ky in 0..n {
        let fy = TAU * fft_frequency(ky, n, g.pitch());
        for kx in 0..n {
            let fx = TAU * fft_frequency(kx, n, g.pitch());
            let k = ky * n + kx;
            // The Nyquist bin has no well-defined odd derivative.
            let nyq_x = kx == n / 2;
            let nyq_y = ky == n / 2;
            dx[k] *= if nyq_x { Complex64::new(0.0, 0.0) } else { Complex64::new(0.0, fx) };
            dy[k] *= if nyq_y { Complex64::new(0.0, 0.0) } else { Complex64::new(0.0, fy) };
        }
    }
    fft2_inverse(&mut dx, n);
    fft2_inverse(&mut dy, n);
    let num = pairwise_sum_by(g.len(), &|idx| {
        let (x, y) = g.position(idx);
        (s.amp[idx].conj() * (dy[idx] * x - dx[idx] * y)).im
    });
    let den = pairwise_sum_by(g.len(), &|idx| s.amp[idx].norm_sqr());
    if !(den > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    Ok(num / den)
}

fn loop_samples(grid: &Grid, radius: f64) -> usize {
    let by_arc = (8.0 * TAU * radius / grid.pitch()).ceil() as usize;
    by_arc.max(MIN_LOOP_SAMPLES)
}

fn check_radius(grid: &Grid, radius: f64) -> Result<(), AnalysisError> {
    let max = grid.max_loop_radius();
    if !(radius > 0.0 && radius <= max) {
        return Err(AnalysisError::RadiusOutOfGrid { radius, max });
    }
    Ok(())
}

/// Field samples on the axis-centered circle of radius `r`, counter-clockwise from +x.
fn circle_samples(s: &ScalarField, radius: f64, count: usize) -> Result<Vec<Complex64>, AnalysisError> {
    check_radius(&s.grid, radius)?;
    (0..count)
        .map(|k| {
            let phi = TAU * k as f64 / count as f64;
            s.interpolate(radius * phi.cos(), radius * phi.sin())
                .ok_or(AnalysisError::RadiusOutOfGrid {
                    radius,
                    max: s.grid.max_loop_radius(),
                })
        })
        .collect()
}

/// Power fractions of the azimuthal harmonics `e^{ilφ}` on a circle.
#[derive(Debug, Clone, PartialEq)]
pub struct AzimuthalSpectrum {
    pub fractions: BTreeMap<i64, f64>,
}

impl AzimuthalSpectrum {
    pub fn fraction(&self, l: i64) -> f64 {
        self.fractions.get(&l).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        let v: Vec<f64> = self.fractions.values().copied().collect();
        crate::numeric::pairwise_sum(&v)
    }

    /// Harmonic carrying the largest fraction.
    pub fn dominant(&self) -> (i64, f64) {
        self.fractions
            .iter()
            .map(|(&l, &f)| (l, f))
            .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    /// `Σ l·fraction(l)`.
    pub fn mean_charge(&self) -> f64 {
        self.fractions.iter().map(|(&l, &f)| l as f64 * f).sum()
    }
}

/// Discrete Fourier decomposition of `ψ(r, φ)` in `φ`.
pub fn azimuthal_spectrum(s: &ScalarField, radius: f64) -> Result<AzimuthalSpectrum, AnalysisError> {
    let count = loop_samples(&s.grid, radius).next_power_of_two();
    let mut samples = circle_samples(s, radius, count)?;
    let mut planner = rustfft::FftPlanner::new();
    planner.plan_fft_forward(count).process(&mut samples);
    let total = pairwise_sum_by(count, &|k| samples[k].norm_sqr());
    if !(total > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    let fractions = samples
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let l = if k < count / 2 {
                k as i64
            } else {
                k as i64 - count as i64
            };
            (l, c.norm_sqr() / total)
        })
        .collect();
    Ok(AzimuthalSpectrum { fractions })
}

/// Winding number of the phase of `s` around the axis-centered circle of radius `r`.
pub fn topological_charge(s: &ScalarField, loop_radius: f64) -> Result<i64, AnalysisError> {
    let count = loop_samples(&s.grid, loop_radius);
    let samples = circle_samples(s, loop_radius, count)?;
    let max = s.max_intensity();
    let min_on_loop = samples.iter().map(|c| c.norm_sqr()).fold(f64::INFINITY, f64::min);
    if !(max > 0.0) || min_on_loop <= LOOP_INTENSITY_FLOOR * max {
        let ratio = if max > 0.0 { min_on_loop / max } else { 0.0 };
        return Err(AnalysisError::LoopThroughZero { ratio });
    }
    let phases: Vec<f64> = samples.iter().map(|c| c.arg()).collect();
    Ok((wrapped_phase_circulation(&phases) / TAU).round() as i64)
}

/// Polarization-singularity index: half the winding of `arg(s1 + i·s2)` around
/// the loop. Always a multiple of 1/2.
pub fn cpoint_index(stokes: &StokesField, loop_radius: f64) -> Result<f64, AnalysisError> {
    let grid = stokes.grid;
    check_radius(&grid, loop_radius)?;
    let count = loop_samples(&grid, loop_radius);
    let mut angles = Vec::with_capacity(count);
    for k in 0..count {
        let phi = TAU * k as f64 / count as f64;
        let s = stokes
            .interpolate(loop_radius * phi.cos(), loop_radius * phi.sin())
            .ok_or(AnalysisError::RadiusOutOfGrid {
                radius: loop_radius,
                max: grid.max_loop_radius(),
            })?;
        let linear = s.s1 * s.s1 + s.s2 * s.s2;
        if !(s.s0 > 0.0) || linear <= 1e-12 * s.s0 * s.s0 {
            return Err(AnalysisError::LoopThroughUnpolarized);
        }
        angles.push(s.s2.atan2(s.s1));
    }
    let winding = (wrapped_phase_circulation(&angles) / TAU).round();
    Ok(winding / 2.0)
}

/// Intensity-weighted mean of two wave vectors with amplitudes `rho1`, `rho2`.
pub fn weighted_wavevector(
    rho1: f64,
    rho2: f64,
    k1: &Vector3<f64>,
    k2: &Vector3<f64>,
) -> Result<Vector3<f64>, AnalysisError> {
    let (w1, w2) = (rho1 * rho1, rho2 * rho2);
    let total = w1 + w2;
    if !(total > 0.0) {
        return Err(AnalysisError::ZeroAmplitudes);
    }
    Ok((k1 * w1 + k2 * w2) / total)
}

/// `u = (E² + B²)/8π`.
pub fn energy_density(e: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    (e.norm_squared() + b.norm_squared()) / (8.0 * PI)
}

/// `g = (E × B)/4πc`.
pub fn momentum_density(e: &Vector3<f64>, b: &Vector3<f64>) -> Vector3<f64> {
    e.cross(b) / (4.0 * PI * SPEED_OF_LIGHT)
}

/// Fraction of the energy density held by the magnetic field.
pub fn magnetic_energy_fraction(e: &Vector3<f64>, b: &Vector3<f64>) -> Result<f64, AnalysisError> {
    let u = energy_density(e, b);
    if !(u > 0.0) {
        return Err(AnalysisError::ZeroEnergy);
    }
    Ok(b.norm_squared() / (8.0 * PI) / u)
}

/// Energy and momentum densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmDensities {
    pub u: f64,
    pub g: Vector3<f64>,
}

impl EmDensities {
    pub fn at(e: &Vector3<f64>, b: &Vector3<f64>) -> Self {
        EmDensities {
            u: energy_density(e, b),
            g: momentum_density(e, b),
        }
    }

    /// `u / (|g|·c)`.
    pub fn energy_momentum_ratio(&self) -> f64 {
        self.u / (self.g.norm() * SPEED_OF_LIGHT)
    }
}

/// Densities of a plane wave averaged over one optical cycle with
/// [`PERIOD_SAMPLES`] uniform samples. Also returns the averaged magnetic fraction.
pub fn period_averaged_densities(
    amplitude: f64,
    polarization: PlaneWavePolarization,
) -> (EmDensities, f64) {
    let samples: Vec<(Vector3<f64>, Vector3<f64>)> = (0..PERIOD_SAMPLES)
        .map(|k| plane_wave_em(amplitude, polarization, TAU * k as f64 / PERIOD_SAMPLES as f64))
        .collect();
    let inv = 1.0 / PERIOD_SAMPLES as f64;
    let u = pairwise_sum_by(samples.len(), &|k| energy_density(&samples[k].0, &samples[k].1)) * inv;
    let g = samples
        .iter()
        .fold(Vector3::zeros(), |acc, (e, b)| acc + momentum_density(e, b))
        * inv;
    let magnetic =
        pairwise_sum_by(samples.len(), &|k| samples[k].1.norm_squared() / (8.0 * PI)) * inv;
    (EmDensities { u, g }, magnetic / u)
}

/// Equal split of a photon's energy into rotational and translational parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPartition {
    pub rotational: f64,
    pub translational: f64,
}

impl EnergyPartition {
    pub fn total(&self) -> f64 {
        self.rotational + self.translational
    }
}

/// `(hν/2, hν/2)` in erg.
pub fn photon_partition(frequency: f64) -> Result<EnergyPartition, AnalysisError> {
    if !(frequency > 0.0) {
        return Err(AnalysisError::NonpositiveFrequency(frequency));
    }
    let half = 0.5 * PLANCK * frequency;
    Ok(EnergyPartition {
        rotational: half,
        translational: half,
    })
}

/// Kinetic energy `(Lω/2, pv/2)` of a spinning, translating particle.
pub fn classical_ke(
    angular_momentum: f64,
    angular_velocity: f64,
    momentum: f64,
    velocity: f64,
) -> EnergyPartition {
    EnergyPartition {
        rotational: 0.5 * angular_momentum * angular_velocity,
        translational: 0.5 * momentum * velocity,
    }
}

/// Angular momentum per photon in units of ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmLedger {
    pub sam: f64,
    pub oam: f64,
    pub total: f64,
}

impl AmLedger {
    pub fn new(sam: f64, oam: f64) -> Self {
        AmLedger {
            sam,
            oam,
            total: sam + oam,
        }
    }
}

pub fn am_ledger(f: &VectorField) -> Result<AmLedger, AnalysisError> {
    Ok(AmLedger::new(sam_per_photon(f)?, oam_per_photon_vector(f)?))
}

/// Intensity second moments of a scalar beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamMoments {
    pub centroid: (f64, f64),
    /// `2·sqrt(λ)` for the larger covariance eigenvalue λ.
    pub major_width: f64,
    pub minor_width: f64,
    /// Angle of the major axis from +x, in (−π/2, π/2].
    pub orientation: f64,
}

impl BeamMoments {
    pub fn aspect_ratio(&self) -> f64 {
        self.major_width / self.minor_width
    }
}

pub fn beam_moments(s: &ScalarField) -> Result<BeamMoments, AnalysisError> {
    let g = s.grid;
    let w = pairwise_sum_by(g.len(), &|i| s.intensity(i));
    if !(w > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    let mean = |f: &dyn Fn(f64, f64) -> f64| {
        pairwise_sum_by(g.len(), &|i| {
            let (x, y) = g.position(i);
            s.intensity(i) * f(x, y)
        }) / w
    };
    let cx = mean(&|x, _| x);
    let cy = mean(&|_, y| y);
    let sxx = mean(&|x, _| (x - cx) * (x - cx));
    let syy = mean(&|_, y| (y - cy) * (y - cy));
    let sxy = mean(&|x, y| (x - cx) * (y - cy));
    let tr = 0.5 * (sxx + syy);
    let disc = (0.25 * (sxx - syy) * (sxx - syy) + sxy * sxy).sqrt();
    let (l1, l2) = (tr + disc, (tr - disc).max(0.0));
    let mut orientation = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    if orientation <= -PI / 2.0 {
        orientation += PI;
    }
    Ok(BeamMoments {
        centroid: (cx, cy),
        major_width: 2.0 * l1.sqrt(),
        minor_width: 2.0 * l2.sqrt(),
        orientation: wrap_angle(2.0 * orientation) / 2.0,
    })
}

/// RMS radius `sqrt(<r²>)` of the intensity about the axis.
pub fn rms_radius(s: &ScalarField) -> Result<f64, AnalysisError> {
    let g = s.grid;
    let w = pairwise_sum_by(g.len(), &|i| s.intensity(i));
    if !(w > 0.0) {
        return Err(AnalysisError::ZeroField);
    }
    let r2 = pairwise_sum_by(g.len(), &|i| {
        let (x, y) = g.position(i);
        s.intensity(i) * (x * x + y * y)
    });
    Ok((r2 / w).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beams::{elliptical_gaussian, gaussian, laguerre_gaussian, vector_field};
    use crate::constants::HBAR;
    use crate::polarization::{jones_state, JonesVector, StateKind};
    use approx::assert_abs_diff_eq;

    const W0: f64 = 1e-3;

    fn grid(n: usize) -> Grid {
        Grid::with_window(n, 8.0 * W0, 633e-9).unwrap()
    }

    fn phase_winding(l: f64) -> impl Fn(f64, f64) -> Complex64 + Sync {
        move |x, y| Complex64::from_polar(1.0, l * y.atan2(x))
    }

    #[test]
    fn sam_examples() {
        let g = gaussian(grid(128), W0).unwrap();
        let l = vector_field(&g, &jones_state(StateKind::L)).unwrap();
        assert_abs_diff_eq!(sam_per_photon(&l).unwrap(), 1.0, epsilon = 1e-12);
        let h = vector_field(&g, &jones_state(StateKind::H)).unwrap();
        assert_abs_diff_eq!(sam_per_photon(&h).unwrap(), 0.0, epsilon = 1e-12);
        let lj = jones_state(StateKind::L);
        let rj = jones_state(StateKind::R);
        let split = l.map_jones(|idx, x, _, _| {
            let a = g.amp[idx];
            let pol = if x < 0.0 { lj } else { rj };
            pol.scale(a)
        });
        assert_abs_diff_eq!(sam_per_photon(&split).unwrap(), 0.0, epsilon = 1e-12);
        let zero = vector_field(&ScalarField::zeros(g.grid), &lj).unwrap();
        assert_eq!(sam_per_photon(&zero), Err(AnalysisError::ZeroField));
    }

    #[test]
    fn oam_examples() {
        let gs = gaussian(grid(512), W0).unwrap();
        assert!(oam_per_photon(&gs).unwrap().abs() < 1e-9);
        let lg1 = laguerre_gaussian(grid(512), 1, 0, W0).unwrap();
        assert!((oam_per_photon(&lg1).unwrap() - 1.0).abs() < 1e-3);
        let twisted = gs.modulated(phase_winding(2.0));
        let v = oam_per_photon(&twisted).unwrap();
        assert!((v - 2.0).abs() < 1e-3, "oam {v}");
        assert_eq!(
            oam_per_photon(&ScalarField::zeros(gs.grid)),
            Err(AnalysisError::ZeroField)
        );
    }

    #[test]
    fn oam_estimators_agree_on_smooth_modes() {
        for &(l, p) in &[(1, 0), (-2, 1), (3, 0)] {
            let lg = laguerre_gaussian(grid(256), l, p, W0).unwrap();
            let fd = oam_per_photon(&lg).unwrap();
            let sp = oam_per_photon_spectral(&lg).unwrap();
            assert!((fd - sp).abs() < 1e-3, "l={l} p={p}: fd {fd}, spectral {sp}");
        }
    }

    #[test]
    fn oam_additive_over_harmonics() {
        let g = grid(512);
        let modes = [(-1, 0.5), (2, 0.3), (3, 0.2)];
        let mut field = ScalarField::zeros(g);
        let mut expected_num = 0.0;
        let mut expected_den = 0.0;
        for &(l, w) in &modes {
            let m = laguerre_gaussian(g, l, 0, W0).unwrap();
            let c = Complex64::new(w, 0.0);
            field = field.combine(Complex64::new(1.0, 0.0), &m, c).unwrap();
            expected_num += w * w * l as f64;
            expected_den += w * w;
        }
        let v = oam_per_photon(&field).unwrap();
        assert!((v - expected_num / expected_den).abs() < 2e-3);
    }

    #[test]
    fn spectrum_examples() {
        let g = grid(256);
        let lg2 = laguerre_gaussian(g, 2, 0, W0).unwrap();
        let sp = azimuthal_spectrum(&lg2, W0).unwrap();
        assert!(sp.fraction(2) > 0.999);
        assert!((sp.total() - 1.0).abs() < 1e-9);
        let gs = gaussian(g, W0).unwrap();
        assert!(azimuthal_spectrum(&gs, W0).unwrap().fraction(0) > 0.999);
        let a = laguerre_gaussian(g, 1, 0, W0).unwrap();
        let b = laguerre_gaussian(g, -1, 0, W0).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let sup = a.combine(Complex64::new(s, 0.0), &b, Complex64::new(s, 0.0)).unwrap();
        let sp = azimuthal_spectrum(&sup, W0).unwrap();
        assert!((sp.fraction(1) - 0.5).abs() < 1e-3);
        assert!((sp.fraction(-1) - 0.5).abs() < 1e-3);
        assert!(matches!(
            azimuthal_spectrum(&gs, 5.0 * W0),
            Err(AnalysisError::RadiusOutOfGrid { .. })
        ));
    }

    #[test]
    fn spectrum_invariant_under_global_phase() {
        let g = grid(128);
        let f = laguerre_gaussian(g, 2, 1, W0).unwrap();
        let a = azimuthal_spectrum(&f, 0.7 * W0).unwrap();
        let b = azimuthal_spectrum(&f.scaled(Complex64::from_polar(1.0, 1.234)), 0.7 * W0).unwrap();
        for (l, fa) in &a.fractions {
            assert!((fa - b.fraction(*l)).abs() < 1e-12);
        }
    }

    #[test]
    fn charge_examples() {
        let g = grid(256);
        let gs = gaussian(g, W0).unwrap();
        assert_eq!(topological_charge(&gs, W0).unwrap(), 0);
        let lg = laguerre_gaussian(g, -3, 0, W0).unwrap();
        assert_eq!(topological_charge(&lg, W0).unwrap(), -3);
        let lg2 = laguerre_gaussian(g, 2, 0, W0).unwrap();
        assert_eq!(topological_charge(&lg2, W0).unwrap(), 2);
        // LG_{0,1} has a dark ring at r = w0/√2
        let ring = laguerre_gaussian(g, 0, 1, W0).unwrap();
        assert!(matches!(
            topological_charge(&ring, W0 / std::f64::consts::SQRT_2),
            Err(AnalysisError::LoopThroughZero { .. })
        ));
    }

    #[test]
    fn charge_is_pitch_invariant() {
        for &n in &[256, 512, 1024] {
            let lg = laguerre_gaussian(grid(n), 3, 1, W0).unwrap();
            assert_eq!(topological_charge(&lg, 1.5 * W0).unwrap(), 3);
        }
    }

    #[test]
    fn cpoint_index_of_uniform_and_cpoint_fields() {
        let g = grid(256);
        let gs = gaussian(g, W0).unwrap();
        let h = vector_field(&gs, &jones_state(StateKind::H)).unwrap();
        assert_eq!(cpoint_index(&stokes_field(&h), W0).unwrap(), 0.0);
        // |L> Gaussian plus |R> vortex: a C-point of index ±1/2 on the axis
        let lj = jones_state(StateKind::L);
        let rj = jones_state(StateKind::R);
        for &(charge, index) in &[(1, 0.5), (-1, -0.5)] {
            let vortex = laguerre_gaussian(g, charge, 0, W0).unwrap();
            let peak = gs.max_intensity().sqrt();
            let f = h.map_jones(|idx, _, _, _| {
                lj.scale(gs.amp[idx] / peak) + rj.scale(vortex.amp[idx] / vortex.max_intensity().sqrt())
            });
            assert_eq!(cpoint_index(&stokes_field(&f), W0).unwrap(), index);
        }
        let l = vector_field(&gs, &lj).unwrap();
        assert_eq!(
            cpoint_index(&stokes_field(&l), W0),
            Err(AnalysisError::LoopThroughUnpolarized)
        );
    }

    #[test]
    fn weighted_wavevector_examples() {
        let k1 = Vector3::new(0.0, 0.0, 1.0);
        let k2 = Vector3::new(0.1, 0.0, 0.995);
        assert_eq!(weighted_wavevector(1.0, 0.0, &k1, &k2).unwrap(), k1);
        let mid = weighted_wavevector(0.7, 0.7, &k1, &k2).unwrap();
        assert!((mid - (k1 + k2) / 2.0).norm() < 1e-15);
        let w = weighted_wavevector(2.0, 1.0, &k1, &k2).unwrap();
        assert!((w - Vector3::new(0.02, 0.0, 0.999)).norm() < 1e-15);
        assert_eq!(
            weighted_wavevector(0.0, 0.0, &k1, &k2),
            Err(AnalysisError::ZeroAmplitudes)
        );
    }

    #[test]
    fn energy_and_momentum_examples() {
        let z = Vector3::zeros();
        assert_eq!(energy_density(&z, &z), 0.0);
        let e = Vector3::new(1.0, 0.0, 0.0);
        let b = Vector3::new(0.0, 1.0, 0.0);
        assert_abs_diff_eq!(energy_density(&e, &b), 1.0 / (4.0 * PI), epsilon = 1e-16);
        assert_abs_diff_eq!(energy_density(&e, &z), 1.0 / (8.0 * PI), epsilon = 1e-16);
        assert_eq!(momentum_density(&e, &(e * 3.0)), Vector3::zeros());
        let e0 = 2.5;
        let g = momentum_density(&(e * e0), &(b * e0));
        assert_abs_diff_eq!(g.z, e0 * e0 / (4.0 * PI * SPEED_OF_LIGHT), epsilon = 1e-25);
        assert_eq!((g.x, g.y), (0.0, 0.0));
    }

    #[test]
    fn plane_wave_identity_independent_of_polarization() {
        for pol in [
            PlaneWavePolarization::Linear,
            PlaneWavePolarization::Circular,
            PlaneWavePolarization::Elliptical { ratio: 0.35 },
        ] {
            let (d, magnetic) = period_averaged_densities(3.0, pol);
            assert!((d.energy_momentum_ratio() - 1.0).abs() < 1e-12);
            assert!((magnetic - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn magnetic_fraction_examples() {
        let e = Vector3::new(1.0, 0.0, 0.0);
        let b = Vector3::new(0.0, 1.0, 0.0);
        assert_abs_diff_eq!(magnetic_energy_fraction(&e, &b).unwrap(), 0.5, epsilon = 1e-15);
        assert_eq!(magnetic_energy_fraction(&e, &Vector3::zeros()).unwrap(), 0.0);
        let z = Vector3::zeros();
        assert_eq!(magnetic_energy_fraction(&z, &z), Err(AnalysisError::ZeroEnergy));
    }

    #[test]
    fn photon_partition_examples() {
        let nu = 5e14;
        let p = photon_partition(nu).unwrap();
        assert_eq!(p.rotational, p.translational);
        assert!((p.total() - PLANCK * nu).abs() <= 1e-15 * PLANCK * nu);
        let omega = TAU * nu;
        assert!((HBAR * omega - PLANCK * nu).abs() <= 1e-15 * PLANCK * nu);
        assert!((HBAR * omega / 2.0 - p.rotational).abs() <= 1e-15 * p.rotational);
        let ke = classical_ke(HBAR, omega, PLANCK * nu / SPEED_OF_LIGHT, SPEED_OF_LIGHT);
        assert!((ke.rotational - p.rotational).abs() <= 1e-15 * p.rotational);
        assert!((ke.translational - p.translational).abs() <= 1e-15 * p.translational);
        assert!(photon_partition(0.0).is_err());
        assert!(photon_partition(-1.0).is_err());
    }

    #[test]
    fn classical_ke_examples() {
        assert_eq!(classical_ke(0.0, 3.0, 2.0, 5.0).rotational, 0.0);
        assert_eq!(classical_ke(0.0, 3.0, 2.0, 5.0).translational, 5.0);
        assert_eq!(classical_ke(2.0, 3.0, 0.0, 5.0).rotational, 3.0);
        let (omega, v) = (7.0, 3.0);
        let ke = classical_ke(HBAR, omega, HBAR * omega / v, v);
        assert!((ke.rotational - ke.translational).abs() <= 1e-15 * ke.rotational);
    }

    #[test]
    fn ledger_examples() {
        let g = grid(512);
        let gs = gaussian(g, W0).unwrap();
        let l = vector_field(&gs, &jones_state(StateKind::L)).unwrap();
        let led = am_ledger(&l).unwrap();
        assert_abs_diff_eq!(led.sam, 1.0, epsilon = 1e-12);
        assert!(led.oam.abs() < 1e-9);
        assert_eq!(led.total, led.sam + led.oam);
        let lg2 = laguerre_gaussian(g, 2, 0, W0).unwrap();
        let h = vector_field(&lg2, &jones_state(StateKind::H)).unwrap();
        let led = am_ledger(&h).unwrap();
        assert!(led.sam.abs() < 1e-12);
        assert!((led.oam - 2.0).abs() < 1e-3);
        assert!((led.total - 2.0).abs() < 1e-3);
    }

    #[test]
    fn ledger_is_basis_independent() {
        let g = grid(256);
        let lg = laguerre_gaussian(g, 1, 0, W0).unwrap();
        let pol = JonesVector::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8));
        let f = vector_field(&lg, &pol).unwrap();
        let (cl, cr) = f.circular_components();
        let circ = VectorField::from_components(cl, cr).unwrap();
        let a = oam_per_photon_vector(&f).unwrap();
        let b = oam_per_photon_vector(&circ).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn moments_recover_elliptical_waists() {
        let g = grid(512);
        let (wx, wy) = (W0, 0.5 * W0);
        let f = elliptical_gaussian(g, wx, wy, 0.0).unwrap();
        let m = beam_moments(&f).unwrap();
        assert!((m.major_width - wx).abs() / wx < 5e-3);
        assert!((m.minor_width - wy).abs() / wy < 5e-3);
        assert!(m.orientation.abs() < 1e-9);
        let tilted = elliptical_gaussian(g, wx, wy, 0.4).unwrap();
        let m = beam_moments(&tilted).unwrap();
        assert!((m.orientation - 0.4).abs() < 1e-6);
        assert!((m.major_width - wx).abs() / wx < 5e-3);
        let e = elliptical_gaussian(g, wx, wy, 0.0).unwrap();
        assert!(oam_per_photon(&e).unwrap().abs() < 1e-9);
    }
}
