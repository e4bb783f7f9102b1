//! Jones calculus for fully polarized paraxial light.
//!
//! Conventions used throughout the crate:
//!
//! * time dependence `e^{-iωt}`;
//! * `|L> = (1, i)/√2` has `s3 = +1`, `|R> = (1, -i)/√2` has `s3 = -1`;
//! * retarders are symmetric, `diag(e^{-iδ/2}, e^{+iδ/2})` in their own axis frame,
//!   so a half-wave plate at `α = 0` is `-i·diag(1, -1)`.
//!
//! With these choices a half-wave plate whose fast axis sits at angle `α` maps
//! `|L>` to `-i·e^{2iα}|R>` and `|R>` to `-i·e^{-2iα}|L>`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::ops::{Add, Mul};

use num_complex::Complex64;
use thiserror::Error;

use crate::numeric::wrap_angle;

/// Below this overlap magnitude two unit states are treated as orthogonal.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum PolarizationError {
    #[error("states are orthogonal (|<a|b>| = {overlap:e}); the relative phase is indeterminate")]
    OrthogonalStates { overlap: f64 },
}

/// Named basis states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    H,
    V,
    D,
    A,
    L,
    R,
}

impl StateKind {
    pub const ALL: [StateKind; 6] = [
        StateKind::H,
        StateKind::V,
        StateKind::D,
        StateKind::A,
        StateKind::L,
        StateKind::R,
    ];
}

impl std::str::FromStr for StateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "H" | "h" => Ok(StateKind::H),
            "V" | "v" => Ok(StateKind::V),
            "D" | "d" => Ok(StateKind::D),
            "A" | "a" => Ok(StateKind::A),
            "L" | "l" => Ok(StateKind::L),
            "R" | "r" => Ok(StateKind::R),
            other => Err(format!("unknown polarization state `{other}`")),
        }
    }
}

/// Transverse polarization state `(ex, ey)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesVector {
    pub ex: Complex64,
    pub ey: Complex64,
}

impl JonesVector {
    pub const fn new(ex: Complex64, ey: Complex64) -> Self {
        JonesVector { ex, ey }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.ex.norm_sqr() + self.ey.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// True when `|ex|² + |ey|² = 1` within 1e-12.
    pub fn is_unit(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= 1e-12
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        JonesVector::new(self.ex / n, self.ey / n)
    }

    /// Hermitian inner product `<self|other> = ex*·ex' + ey*·ey'`.
    pub fn inner(&self, other: &JonesVector) -> Complex64 {
        self.ex.conj() * other.ex + self.ey.conj() * other.ey
    }

    pub fn scale(&self, c: Complex64) -> Self {
        JonesVector::new(self.ex * c, self.ey * c)
    }

    /// Amplitudes on the circular basis, `(<L|v>, <R|v>)`.
    pub fn circular_amplitudes(&self) -> (Complex64, Complex64) {
        let i = Complex64::i();
        let l = (self.ex - i * self.ey) * FRAC_1_SQRT_2;
        let r = (self.ex + i * self.ey) * FRAC_1_SQRT_2;
        (l, r)
    }

    /// True if `self = e^{iθ}·other` for some θ, within `tol` on the residual.
    pub fn equals_up_to_phase(&self, other: &JonesVector, tol: f64) -> bool {
        let overlap = other.inner(self);
        if overlap.norm() <= tol {
            return self.norm() <= tol && other.norm() <= tol;
        }
        let phase = overlap / overlap.norm();
        let d = *self + other.scale(-phase);
        d.norm() <= tol
    }
}

impl Add for JonesVector {
    type Output = JonesVector;

    fn add(self, rhs: JonesVector) -> JonesVector {
        JonesVector::new(self.ex + rhs.ex, self.ey + rhs.ey)
    }
}

impl fmt::Display for JonesVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ex, self.ey)
    }
}

/// Unit state of the given kind.
pub fn jones_state(kind: StateKind) -> JonesVector {
    let s = FRAC_1_SQRT_2;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    match kind {
        StateKind::H => JonesVector::new(c(1.0, 0.0), c(0.0, 0.0)),
        StateKind::V => JonesVector::new(c(0.0, 0.0), c(1.0, 0.0)),
        StateKind::D => JonesVector::new(c(s, 0.0), c(s, 0.0)),
        StateKind::A => JonesVector::new(c(s, 0.0), c(-s, 0.0)),
        StateKind::L => JonesVector::new(c(s, 0.0), c(0.0, s)),
        StateKind::R => JonesVector::new(c(s, 0.0), c(0.0, -s)),
    }
}

/// Stokes parameters of a Jones state, in intensity units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StokesVector {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl StokesVector {
    /// `s3/s0`, the spin helicity of the state. Zero for a zero state.
    pub fn helicity(&self) -> f64 {
        if self.s0 > 0.0 {
            self.s3 / self.s0
        } else {
            0.0
        }
    }

    pub fn degree_of_polarization(&self) -> f64 {
        (self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3).sqrt() / self.s0
    }
}

pub fn stokes_of(v: &JonesVector) -> StokesVector {
    let ax = v.ex.norm_sqr();
    let ay = v.ey.norm_sqr();
    let cross = v.ex.conj() * v.ey;
    StokesVector {
        s0: ax + ay,
        s1: ax - ay,
        s2: 2.0 * cross.re,
        s3: 2.0 * cross.im,
    }
}

/// 2×2 complex matrix acting on [`JonesVector`]s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesMatrix {
    pub m00: Complex64,
    pub m01: Complex64,
    pub m10: Complex64,
    pub m11: Complex64,
}

impl JonesMatrix {
    pub const fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        JonesMatrix { m00, m01, m10, m11 }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        JonesMatrix::new(one, zero, zero, one)
    }

    /// Real rotation by `angle` (counter-clockwise).
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        JonesMatrix::new(
            Complex64::new(c, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(c, 0.0),
        )
    }

    pub fn adjoint(&self) -> Self {
        JonesMatrix::new(self.m00.conj(), self.m10.conj(), self.m01.conj(), self.m11.conj())
    }

    /// Largest entrywise deviation of `M†M` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let p = self.adjoint() * *self;
        let id = JonesMatrix::identity();
        [
            p.m00 - id.m00,
            p.m01 - id.m01,
            p.m10 - id.m10,
            p.m11 - id.m11,
        ]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &JonesMatrix) -> f64 {
        [
            self.m00 - other.m00,
            self.m01 - other.m01,
            self.m10 - other.m10,
            self.m11 - other.m11,
        ]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max)
    }
}

impl Mul for JonesMatrix {
    type Output = JonesMatrix;

    fn mul(self, b: JonesMatrix) -> JonesMatrix {
        JonesMatrix::new(
            self.m00 * b.m00 + self.m01 * b.m10,
            self.m00 * b.m01 + self.m01 * b.m11,
            self.m10 * b.m00 + self.m11 * b.m10,
            self.m10 * b.m01 + self.m11 * b.m11,
        )
    }
}

impl Mul<JonesVector> for JonesMatrix {
    type Output = JonesVector;

    fn mul(self, v: JonesVector) -> JonesVector {
        apply(&self, &v)
    }
}

/// Linear retarder with retardance `retardance` and fast axis at `axis_angle`
/// from x: `R(α)·diag(e^{-iδ/2}, e^{iδ/2})·R(-α)`.
pub fn waveplate(retardance: f64, axis_angle: f64) -> JonesMatrix {
    let (s2, c2) = (2.0 * axis_angle).sin_cos();
    let (sh, ch) = (0.5 * retardance).sin_cos();
    // Expanded product: cos(δ/2)·I - i·sin(δ/2)·[[cos2α, sin2α], [sin2α, -cos2α]]
    let diag = Complex64::new(ch, -sh * c2);
    let off = Complex64::new(0.0, -sh * s2);
    let diag2 = Complex64::new(ch, sh * c2);
    JonesMatrix::new(diag, off, off, diag2)
}

pub fn half_wave_plate(axis_angle: f64) -> JonesMatrix {
    waveplate(std::f64::consts::PI, axis_angle)
}

pub fn quarter_wave_plate(axis_angle: f64) -> JonesMatrix {
    waveplate(std::f64::consts::FRAC_PI_2, axis_angle)
}

/// Polarization rotator (optical activity) by `angle`.
pub fn rotator(angle: f64) -> JonesMatrix {
    JonesMatrix::rotation(angle)
}

pub fn apply(m: &JonesMatrix, v: &JonesVector) -> JonesVector {
    JonesVector::new(m.m00 * v.ex + m.m01 * v.ey, m.m10 * v.ex + m.m11 * v.ey)
}

/// Pancharatnam phase difference `arg<a|b>` in (−π, π].
pub fn pancharatnam_phase(a: &JonesVector, b: &JonesVector) -> Result<f64, PolarizationError> {
    let overlap = a.inner(b);
    let scale = (a.norm_sqr() * b.norm_sqr()).sqrt();
    let magnitude = if scale > 0.0 { overlap.norm() / scale } else { 0.0 };
    if magnitude <= ORTHOGONALITY_TOLERANCE {
        return Err(PolarizationError::OrthogonalStates { overlap: magnitude });
    }
    Ok(wrap_angle(overlap.arg()))
}
