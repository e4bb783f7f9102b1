//! Sampled transverse beams at the waist plane.
//!
//! Fields live on a square, cell-centered grid: sample `i` sits at
//! `x_i = (i - n/2 + 1/2)·pitch`, so no sample ever lands on the optical axis.
//! Storage is row-major with `y` as the slow index (`amp[iy * n + ix]`).

use std::f64::consts::{PI, SQRT_2};

use nalgebra::Vector3;
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::numeric::{pairwise_sum_by, pairwise_sum_complex_by};
use crate::polarization::JonesVector;

/// Minimum window-to-waist ratio a grid must offer.
pub const WINDOW_PER_WAIST: f64 = 8.0;
/// A waist must span more than this many samples.
pub const MIN_SAMPLES_PER_WAIST: f64 = 4.0;
pub const MAX_LG_AZIMUTHAL: i32 = 10;
pub const MAX_LG_RADIAL: u32 = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeamError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("waist {waist:e} m outside the allowed range ({min:e} m, {max:e} m]")]
    WaistOutOfRange { waist: f64, min: f64, max: f64 },
    #[error("mode indices out of range: l = {l}, p = {p} (|l| <= 10, p <= 5)")]
    IndexOutOfRange { l: i32, p: u32 },
    #[error("polarization state must be unit (norm² = {norm_sqr})")]
    NonUnitPolarization { norm_sqr: f64 },
    #[error("fields live on different grids")]
    GridMismatch,
}

/// Square sampling grid of the transverse plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n: usize,
    pitch: f64,
    wavelength: f64,
}

impl Grid {
    pub fn new(n: usize, pitch: f64, wavelength: f64) -> Result<Self, BeamError> {
        if n < 32 || n % 2 != 0 {
            return Err(BeamError::InvalidGrid(format!(
                "n must be even and >= 32, got {n}"
            )));
        }
        if !(pitch.is_finite() && pitch > 0.0) {
            return Err(BeamError::InvalidGrid(format!("pitch must be positive, got {pitch}")));
        }
        if !(wavelength.is_finite() && wavelength > 0.0) {
            return Err(BeamError::InvalidGrid(format!(
                "wavelength must be positive, got {wavelength}"
            )));
        }
        Ok(Grid { n, pitch, wavelength })
    }

    /// Grid with `n` samples spanning `window` meters.
    pub fn with_window(n: usize, window: f64, wavelength: f64) -> Result<Self, BeamError> {
        Grid::new(n, window / n as f64, wavelength)
    }

    /// Grid that is guaranteed to hold beams with waists up to `max_waist`.
    pub fn with_max_waist(
        n: usize,
        pitch: f64,
        wavelength: f64,
        max_waist: f64,
    ) -> Result<Self, BeamError> {
        let grid = Grid::new(n, pitch, wavelength)?;
        grid.check_waist(max_waist)?;
        Ok(grid)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    pub fn window(&self) -> f64 {
        self.n as f64 * self.pitch
    }

    pub fn len(&self) -> usize {
        self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cell-centered coordinate of sample `i` along either axis.
    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 - self.n as f64 / 2.0 + 0.5) * self.pitch
    }

    /// `(x, y)` of the sample at flat index `idx`.
    pub fn position(&self, idx: usize) -> (f64, f64) {
        (self.coord(idx % self.n), self.coord(idx / self.n))
    }

    /// Same grid with a different pitch; used for far-field (angle) grids.
    pub fn with_pitch(&self, pitch: f64) -> Self {
        Grid { pitch, ..*self }
    }

    pub fn check_waist(&self, waist: f64) -> Result<(), BeamError> {
        let min = MIN_SAMPLES_PER_WAIST * self.pitch;
        let max = self.window() / WINDOW_PER_WAIST;
        // window = 8·w0 is the canonical configuration; admit it despite rounding.
        if !(waist.is_finite() && waist > min && waist <= max * (1.0 + 1e-12)) {
            return Err(BeamError::WaistOutOfRange { waist, min, max });
        }
        Ok(())
    }

    /// Bilinear interpolation of `data` at `(x, y)`; `None` outside the
    /// interpolable square spanned by the outermost sample centers.
    pub fn interpolate(&self, data: &[Complex64], x: f64, y: f64) -> Option<Complex64> {
        let half = self.n as f64 / 2.0 - 0.5;
        let u = x / self.pitch + half;
        let v = y / self.pitch + half;
        let last = (self.n - 1) as f64;
        if !(u >= 0.0 && v >= 0.0 && u <= last && v <= last) {
            return None;
        }
        let i0 = (u.floor() as usize).min(self.n - 2);
        let j0 = (v.floor() as usize).min(self.n - 2);
        let fu = u - i0 as f64;
        let fv = v - j0 as f64;
        let at = |i: usize, j: usize| data[j * self.n + i];
        Some(
            at(i0, j0) * ((1.0 - fu) * (1.0 - fv))
                + at(i0 + 1, j0) * (fu * (1.0 - fv))
                + at(i0, j0 + 1) * ((1.0 - fu) * fv)
                + at(i0 + 1, j0 + 1) * (fu * fv),
        )
    }

    /// Largest radius a sampling circle centered on the axis may use.
    pub fn max_loop_radius(&self) -> f64 {
        (self.n as f64 / 2.0 - 0.5) * self.pitch
    }
}

/// Complex scalar amplitude sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub grid: Grid,
    pub amp: Vec<Complex64>,
}

impl ScalarField {
    pub fn zeros(grid: Grid) -> Self {
        ScalarField {
            grid,
            amp: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    /// Samples `f(x, y)` at every grid point.
    pub fn from_fn<F>(grid: Grid, f: F) -> Self
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        let amp = (0..grid.len())
            .into_par_iter()
            .map(|idx| {
                let (x, y) = grid.position(idx);
                f(x, y)
            })
            .collect();
        ScalarField { grid, amp }
    }

    pub fn intensity(&self, idx: usize) -> f64 {
        self.amp[idx].norm_sqr()
    }

    pub fn max_intensity(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).fold(0.0, f64::max)
    }

    /// `Σ|amp|²·pitch²`.
    pub fn power(&self) -> f64 {
        let p2 = self.grid.pitch * self.grid.pitch;
        pairwise_sum_by(self.amp.len(), &|i| self.amp[i].norm_sqr()) * p2
    }

    /// Overlap `<self|other> = Σ conj(self)·other·pitch²`.
    pub fn inner(&self, other: &ScalarField) -> Result<Complex64, BeamError> {
        if self.grid != other.grid {
            return Err(BeamError::GridMismatch);
        }
        let p2 = self.grid.pitch * self.grid.pitch;
        Ok(pairwise_sum_complex_by(self.amp.len(), &|i| {
            self.amp[i].conj() * other.amp[i]
        }) * p2)
    }

    pub fn scaled(&self, c: Complex64) -> ScalarField {
        ScalarField {
            grid: self.grid,
            amp: self.amp.iter().map(|a| a * c).collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(
        &self,
        a: Complex64,
        other: &ScalarField,
        b: Complex64,
    ) -> Result<ScalarField, BeamError> {
        if self.grid != other.grid {
            return Err(BeamError::GridMismatch);
        }
        Ok(ScalarField {
            grid: self.grid,
            amp: self
                .amp
                .iter()
                .zip(&other.amp)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        })
    }

    /// Multiplies every sample by `f(x, y)`.
    pub fn modulated<F>(&self, f: F) -> ScalarField
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        let grid = self.grid;
        let amp = self
            .amp
            .par_iter()
            .enumerate()
            .map(|(idx, a)| {
                let (x, y) = grid.position(idx);
                a * f(x, y)
            })
            .collect();
        ScalarField { grid, amp }
    }

    pub fn normalized_to_unit_power(&self) -> ScalarField {
        let p = self.power();
        self.scaled(Complex64::new(1.0 / p.sqrt(), 0.0))
    }

    pub fn interpolate(&self, x: f64, y: f64) -> Option<Complex64> {
        self.grid.interpolate(&self.amp, x, y)
    }

    /// Largest `|a - b|` over the grid.
    pub fn max_abs_diff(&self, other: &ScalarField) -> f64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Paraxial transverse vector field `(ex, ey)` on a shared grid.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub grid: Grid,
    pub ex: Vec<Complex64>,
    pub ey: Vec<Complex64>,
}

impl VectorField {
    pub fn from_components(ex: ScalarField, ey: ScalarField) -> Result<Self, BeamError> {
        if ex.grid != ey.grid {
            return Err(BeamError::GridMismatch);
        }
        Ok(VectorField {
            grid: ex.grid,
            ex: ex.amp,
            ey: ey.amp,
        })
    }

    pub fn jones_at(&self, idx: usize) -> JonesVector {
        JonesVector::new(self.ex[idx], self.ey[idx])
    }

    pub fn intensity(&self, idx: usize) -> f64 {
        self.ex[idx].norm_sqr() + self.ey[idx].norm_sqr()
    }

    pub fn max_intensity(&self) -> f64 {
        (0..self.grid.len())
            .map(|i| self.intensity(i))
            .fold(0.0, f64::max)
    }

    pub fn power(&self) -> f64 {
        let p2 = self.grid.pitch * self.grid.pitch;
        pairwise_sum_by(self.grid.len(), &|i| self.intensity(i)) * p2
    }

    pub fn component_x(&self) -> ScalarField {
        ScalarField {
            grid: self.grid,
            amp: self.ex.clone(),
        }
    }

    pub fn component_y(&self) -> ScalarField {
        ScalarField {
            grid: self.grid,
            amp: self.ey.clone(),
        }
    }

    /// Circular-basis components `(<L|E>, <R|E>)` as scalar fields.
    pub fn circular_components(&self) -> (ScalarField, ScalarField) {
        let (l, r): (Vec<_>, Vec<_>) = (0..self.grid.len())
            .map(|i| self.jones_at(i).circular_amplitudes())
            .unzip();
        (
            ScalarField {
                grid: self.grid,
                amp: l,
            },
            ScalarField {
                grid: self.grid,
                amp: r,
            },
        )
    }

    /// Per-pixel Jones map `f(x, y, E)`.
    pub fn map_jones<F>(&self, f: F) -> VectorField
    where
        F: Fn(usize, f64, f64, JonesVector) -> JonesVector + Sync,
    {
        let grid = self.grid;
        let (ex, ey): (Vec<_>, Vec<_>) = (0..grid.len())
            .into_par_iter()
            .map(|idx| {
                let (x, y) = grid.position(idx);
                let out = f(idx, x, y, self.jones_at(idx));
                (out.ex, out.ey)
            })
            .unzip();
        VectorField { grid, ex, ey }
    }

    pub fn max_abs_diff(&self, other: &VectorField) -> f64 {
        (0..self.grid.len())
            .map(|i| {
                (self.ex[i] - other.ex[i])
                    .norm()
                    .max((self.ey[i] - other.ey[i]).norm())
            })
            .fold(0.0, f64::max)
    }
}

/// Unit-peak TEM00 amplitude `exp(-(x²+y²)/w0²)`.
pub fn gaussian(grid: Grid, w0: f64) -> Result<ScalarField, BeamError> {
    grid.check_waist(w0)?;
    let inv = 1.0 / (w0 * w0);
    Ok(ScalarField::from_fn(grid, |x, y| {
        Complex64::new((-(x * x + y * y) * inv).exp(), 0.0)
    }))
}

/// Unit-peak elliptical Gaussian with principal waists `wx`, `wy` along axes
/// rotated by `tilt` from the grid axes.
pub fn elliptical_gaussian(
    grid: Grid,
    wx: f64,
    wy: f64,
    tilt: f64,
) -> Result<ScalarField, BeamError> {
    grid.check_waist(wx)?;
    grid.check_waist(wy)?;
    let (s, c) = tilt.sin_cos();
    let (ix, iy) = (1.0 / (wx * wx), 1.0 / (wy * wy));
    Ok(ScalarField::from_fn(grid, |x, y| {
        let xr = c * x + s * y;
        let yr = -s * x + c * y;
        Complex64::new((-(xr * xr * ix) - yr * yr * iy).exp(), 0.0)
    }))
}

/// Generalized Laguerre polynomial `L_p^a(x)` by the three-term recurrence.
pub fn generalized_laguerre(p: u32, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if p == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 1..p {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Laguerre-Gaussian mode `LG_{l,p}` at its waist, normalized to unit power on the grid.
pub fn laguerre_gaussian(grid: Grid, l: i32, p: u32, w0: f64) -> Result<ScalarField, BeamError> {
    if l.abs() > MAX_LG_AZIMUTHAL || p > MAX_LG_RADIAL {
        return Err(BeamError::IndexOutOfRange { l, p });
    }
    grid.check_waist(w0)?;
    let al = l.unsigned_abs() as i32;
    let field = ScalarField::from_fn(grid, |x, y| {
        let r2 = (x * x + y * y) / (w0 * w0);
        let radial = (SQRT_2 * r2.sqrt()).powi(al)
            * generalized_laguerre(p, al as f64, 2.0 * r2)
            * (-r2).exp();
        Complex64::from_polar(radial, l as f64 * y.atan2(x))
    });
    Ok(field.normalized_to_unit_power())
}

/// Uniformly polarized beam `pol ⊗ s`.
pub fn vector_field(s: &ScalarField, pol: &JonesVector) -> Result<VectorField, BeamError> {
    if !pol.is_unit() {
        return Err(BeamError::NonUnitPolarization {
            norm_sqr: pol.norm_sqr(),
        });
    }
    Ok(VectorField {
        grid: s.grid,
        ex: s.amp.iter().map(|a| a * pol.ex).collect(),
        ey: s.amp.iter().map(|a| a * pol.ey).collect(),
    })
}

/// Polarization of a plane wave travelling along +z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlaneWavePolarization {
    Linear,
    Circular,
    /// `E = E0·(cos ωt, ratio·sin ωt, 0)` with `0 <= ratio <= 1`.
    Elliptical { ratio: f64 },
}

/// Instantaneous real `(E, B)` of a monochromatic plane wave along +z in
/// Gaussian units, at phase `ωt`. `B = ẑ × E`, so `|E| = |B|` pointwise.
pub fn plane_wave_em(
    amplitude: f64,
    polarization: PlaneWavePolarization,
    phase: f64,
) -> (Vector3<f64>, Vector3<f64>) {
    let ratio = match polarization {
        PlaneWavePolarization::Linear => 0.0,
        PlaneWavePolarization::Circular => 1.0,
        PlaneWavePolarization::Elliptical { ratio } => ratio,
    };
    let (s, c) = phase.sin_cos();
    let e = Vector3::new(amplitude * c, amplitude * ratio * s, 0.0);
    let b = Vector3::z().cross(&e);
    (e, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::{jones_state, StateKind};
    use approx::assert_abs_diff_eq;

    fn grid(n: usize, w0: f64) -> Grid {
        Grid::with_window(n, 8.0 * w0, 633e-9).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(30, 1e-5, 1e-6).is_err());
        assert!(Grid::new(33, 1e-5, 1e-6).is_err());
        assert!(Grid::new(64, 0.0, 1e-6).is_err());
        assert!(Grid::new(64, 1e-5, -1.0).is_err());
        assert!(Grid::with_max_waist(64, 1e-5, 1e-6, 1e-4).is_err());
        assert!(Grid::with_max_waist(64, 1e-5, 1e-6, 0.8e-4).is_ok());
    }

    #[test]
    fn coordinates_are_cell_centered_and_symmetric() {
        let g = Grid::new(32, 1.0, 1.0).unwrap();
        assert_eq!(g.coord(0), -15.5);
        assert_eq!(g.coord(31), 15.5);
        assert_eq!(g.coord(15), -0.5);
        assert_eq!(g.coord(16), 0.5);
    }

    #[test]
    fn gaussian_peak_and_power() {
        let w0 = 1e-3;
        let g = gaussian(grid(512, w0), w0).unwrap();
        let n = 512;
        let centre = g.amp[(n / 2) * n + n / 2].re;
        assert!((1.0 - centre).abs() < 1e-3);
        let expected = PI * w0 * w0 / 2.0;
        assert!((g.power() - expected).abs() / expected < 1e-3);
    }

    #[test]
    fn waist_range_is_enforced() {
        let g = grid(64, 1e-3);
        assert!(matches!(gaussian(g, 2e-3), Err(BeamError::WaistOutOfRange { .. })));
        assert!(matches!(gaussian(g, 0.4e-3), Err(BeamError::WaistOutOfRange { .. })));
        assert!(elliptical_gaussian(g, 1e-3, 0.1e-3, 0.0).is_err());
    }

    #[test]
    fn elliptical_reduces_to_gaussian() {
        let w0 = 1e-3;
        let g = grid(128, w0);
        let a = elliptical_gaussian(g, w0, w0, 0.7).unwrap();
        let b = gaussian(g, w0).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-12);
    }

    #[test]
    fn lg_index_range() {
        let g = grid(64, 1e-3);
        assert!(matches!(
            laguerre_gaussian(g, 11, 0, 1e-3),
            Err(BeamError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            laguerre_gaussian(g, 0, 6, 1e-3),
            Err(BeamError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn lg00_is_normalized_gaussian() {
        let w0 = 1e-3;
        let g = grid(256, w0);
        let lg = laguerre_gaussian(g, 0, 0, w0).unwrap();
        let gs = gaussian(g, w0).unwrap().normalized_to_unit_power();
        assert!(lg.max_abs_diff(&gs) < 1e-9 * gs.max_intensity().sqrt());
        assert_abs_diff_eq!(lg.power(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn lg_vanishes_on_axis() {
        let w0 = 1e-3;
        let g = grid(256, w0);
        let lg = laguerre_gaussian(g, 2, 0, w0).unwrap();
        let peak = lg.max_intensity().sqrt();
        // nearest samples sit half a pixel from the axis
        let n = 256;
        let near = lg.amp[(n / 2) * n + n / 2].norm();
        assert!(near < 1e-2 * peak);
        assert!(lg.interpolate(0.0, 0.0).unwrap().norm() < 1e-12 * peak);
    }

    #[test]
    fn laguerre_polynomial_values() {
        // L_2^1(x) = (x² - 6x + 6)/2
        for &x in &[0.0, 0.5, 2.0, 7.0] {
            assert_abs_diff_eq!(
                generalized_laguerre(2, 1.0, x),
                (x * x - 6.0 * x + 6.0) / 2.0,
                epsilon = 1e-12
            );
        }
        assert_eq!(generalized_laguerre(0, 3.0, 1.0), 1.0);
        assert_abs_diff_eq!(generalized_laguerre(1, 3.0, 1.0), 3.0, epsilon = 1e-15);
    }

    #[test]
    fn lg_modes_are_orthonormal() {
        let w0 = 1e-3;
        let g = grid(512, w0);
        let modes: Vec<_> = [(0, 0), (1, 0), (-1, 0), (2, 1), (0, 1), (3, 0)]
            .iter()
            .map(|&(l, p)| laguerre_gaussian(g, l, p, w0).unwrap())
            .collect();
        for (i, a) in modes.iter().enumerate() {
            for (j, b) in modes.iter().enumerate() {
                let o = a.inner(b).unwrap().norm();
                if i == j {
                    assert!((o - 1.0).abs() < 1e-3);
                } else {
                    assert!(o < 1e-3, "modes {i},{j} overlap {o}");
                }
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let w0 = 1e-3;
        let g = grid(128, w0);
        let a = laguerre_gaussian(g, 3, 2, w0).unwrap();
        let b = laguerre_gaussian(g, 3, 2, w0).unwrap();
        assert!(a.amp.iter().zip(&b.amp).all(|(x, y)| x.re.to_bits() == y.re.to_bits()
            && x.im.to_bits() == y.im.to_bits()));
    }

    #[test]
    fn vector_field_examples() {
        let w0 = 1e-3;
        let s = gaussian(grid(64, w0), w0).unwrap();
        let h = vector_field(&s, &jones_state(StateKind::H)).unwrap();
        assert!(h.ey.iter().all(|c| c.norm() == 0.0));
        let l = vector_field(&s, &jones_state(StateKind::L)).unwrap();
        assert!((l.power() - s.power()).abs() < 1e-12 * s.power());
        let bad = JonesVector::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        assert!(vector_field(&s, &bad).is_err());
    }

    #[test]
    fn plane_wave_fields() {
        let (e, b) = plane_wave_em(2.0, PlaneWavePolarization::Linear, 0.0);
        assert_eq!(e, Vector3::new(2.0, 0.0, 0.0));
        assert_eq!(b, Vector3::new(0.0, 2.0, 0.0));
        for k in 0..64 {
            let t = k as f64 * 0.1;
            let (e, b) = plane_wave_em(2.0, PlaneWavePolarization::Circular, t);
            assert_abs_diff_eq!(e.norm(), 2.0, epsilon = 1e-14);
            assert_abs_diff_eq!(e.dot(&b), 0.0, epsilon = 1e-14);
            let (e, b) = plane_wave_em(1.5, PlaneWavePolarization::Elliptical { ratio: 0.4 }, t);
            assert_abs_diff_eq!(e.dot(&b), 0.0, epsilon = 1e-14);
            assert_abs_diff_eq!(e.norm(), b.norm(), epsilon = 1e-14);
        }
    }

    #[test]
    fn interpolation_reproduces_linear_functions() {
        let g = Grid::new(32, 0.5, 1.0).unwrap();
        let f = ScalarField::from_fn(g, |x, y| Complex64::new(2.0 * x - y, x + 3.0 * y));
        let v = f.interpolate(1.23, -2.71).unwrap();
        assert_abs_diff_eq!(v.re, 2.0 * 1.23 + 2.71, epsilon = 1e-12);
        assert_abs_diff_eq!(v.im, 1.23 - 3.0 * 2.71, epsilon = 1e-12);
        assert!(f.interpolate(8.0, 0.0).is_none());
    }
}
