//! Geometric phases on unit spheres.
//!
//! Paths are polygons of unit vectors joined by minor geodesic arcs. The
//! enclosed solid angle is the sum of signed geodesic-triangle areas fanned
//! from an apex direction, using
//! `tan(Ω/2) = a·(b×c) / (1 + a·b + b·c + c·a)` for each triangle. The apex is
//! the mean direction of the vertices; when the vertices balance out (a great
//! circle) it falls back to the circulation axis `Σ pᵢ × pᵢ₊₁`, so the
//! traversal direction picks which hemisphere is enclosed.
//!
//! Sign conventions: counter-clockwise circulation seen from outside along the
//! apex is positive, and a positive-helicity state (`|L>`) acquires a
//! spin-redirection phase of `−Ω`.

use std::f64::consts::TAU;

use nalgebra::{Rotation3, Vector3};
use thiserror::Error;

use crate::numeric::wrap_angle;
use crate::polarization::{stokes_of, JonesVector, ORTHOGONALITY_TOLERANCE};

/// Points per traversal of the q-plate wave-vector cycle.
pub const QPLATE_PATH_POINTS: usize = 256;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("a path needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("point {index} is not a unit vector (norm {norm})")]
    NotUnit { index: usize, norm: f64 },
    #[error("path is not closed")]
    OpenPath,
    #[error("segment starting at point {index} joins antipodal points")]
    DegenerateSegment { index: usize },
    #[error("path is degenerate: {0}")]
    DegeneratePath(String),
    #[error("states {index} and {next} are orthogonal")]
    OrthogonalConsecutiveStates { index: usize, next: usize },
    #[error("cycle does not return to its first state")]
    OpenCycle,
    #[error("zero polarization state has no Poincaré point")]
    ZeroState,
}

/// Ordered points on the unit sphere. A closed path repeats its first point at the end.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePath {
    points: Vec<Vector3<f64>>,
    closed: bool,
}

impl SpherePath {
    pub fn new(points: Vec<Vector3<f64>>, closed: bool) -> Result<Self, GeomError> {
        if points.len() < 3 {
            return Err(GeomError::TooFewPoints(points.len()));
        }
        for (index, p) in points.iter().enumerate() {
            let norm = p.norm();
            if (norm - 1.0).abs() > 1e-12 {
                return Err(GeomError::NotUnit { index, norm });
            }
        }
        if closed && (points[0] - points[points.len() - 1]).norm() > 1e-9 {
            return Err(GeomError::OpenPath);
        }
        for (index, w) in points.windows(2).enumerate() {
            if (w[0] + w[1]).norm() < 1e-9 {
                return Err(GeomError::DegenerateSegment { index });
            }
        }
        Ok(SpherePath { points, closed })
    }

    /// Closed path through `vertices`, normalizing each and repeating the first at the end.
    pub fn closed_polygon(vertices: &[Vector3<f64>]) -> Result<Self, GeomError> {
        let mut points: Vec<_> = vertices.iter().map(|v| v.normalize()).collect();
        if let Some(first) = points.first().copied() {
            points.push(first);
        }
        SpherePath::new(points, true)
    }

    pub fn points(&self) -> &[Vector3<f64>] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Distinct vertices of a closed path (the repeated endpoint dropped).
    fn vertices(&self) -> &[Vector3<f64>] {
        if self.closed {
            &self.points[..self.points.len() - 1]
        } else {
            &self.points
        }
    }

    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        SpherePath {
            points,
            closed: self.closed,
        }
    }

    pub fn rotated(&self, rotation: &Rotation3<f64>) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| (rotation * p).normalize())
            .collect();
        SpherePath {
            points,
            closed: self.closed,
        }
    }

    /// Inserts `factor - 1` points along each geodesic segment.
    pub fn densified(&self, factor: usize) -> Self {
        let factor = factor.max(1);
        let mut points = Vec::with_capacity(self.points.len() * factor);
        for w in self.points.windows(2) {
            for k in 0..factor {
                points.push(slerp(&w[0], &w[1], k as f64 / factor as f64));
            }
        }
        points.push(self.points[self.points.len() - 1]);
        SpherePath {
            points,
            closed: self.closed,
        }
    }
}

/// Point at fraction `t` along the minor arc from `a` to `b`.
pub fn slerp(a: &Vector3<f64>, b: &Vector3<f64>, t: f64) -> Vector3<f64> {
    let cos = a.dot(b).clamp(-1.0, 1.0);
    let angle = cos.acos();
    if angle < 1e-15 {
        return *a;
    }
    let s = angle.sin();
    let v = a * (((1.0 - t) * angle).sin() / s) + b * ((t * angle).sin() / s);
    v.normalize()
}

/// Signed solid angle of the geodesic triangle `(a, b, c)`, in (−2π, 2π).
pub fn triangle_solid_angle(a: &Vector3<f64>, b: &Vector3<f64>, c: &Vector3<f64>) -> f64 {
    let numerator = a.dot(&b.cross(c));
    let denominator = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    2.0 * numerator.atan2(denominator)
}

/// Oriented solid angle enclosed by a closed path.
///
/// Simple loops return values in (−4π, 4π); a loop traversed several times
/// accumulates one enclosed area per traversal.
pub fn solid_angle(path: &SpherePath) -> Result<f64, GeomError> {
    if !path.closed {
        return Err(GeomError::OpenPath);
    }
    let vertices = path.vertices();
    let n = vertices.len();
    let centroid: Vector3<f64> = vertices.iter().sum();
    let apex = if centroid.norm() > 1e-9 * n as f64 {
        centroid.normalize()
    } else {
        let circulation: Vector3<f64> = (0..n)
            .map(|i| vertices[i].cross(&vertices[(i + 1) % n]))
            .sum();
        if circulation.norm() <= 1e-12 {
            return Ok(0.0);
        }
        circulation.normalize()
    };
    Ok((0..n)
        .map(|i| triangle_solid_angle(&apex, &vertices[i], &vertices[(i + 1) % n]))
        .sum())
}

/// Spin helicity of a circular state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Helicity {
    /// `|L>`, `s3 = +1`.
    Positive,
    /// `|R>`, `s3 = −1`.
    Negative,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Positive => 1.0,
            Helicity::Negative => -1.0,
        }
    }
}

/// Spin-redirection phase `−h·Ω` for a cycle of the propagation direction.
pub fn srp_phase(path: &SpherePath, helicity: Helicity) -> Result<f64, GeomError> {
    Ok(-helicity.sign() * solid_angle(path)?)
}

/// Wave-vector cycle modelling a q-plate: `|q|·turns` traversals of a great
/// circle, 256 points each, counter-clockwise for positive `q·turns`.
///
/// Only `q = 1, turns = 1` corresponds to a described construction; other
/// values extrapolate it by repeating the traversal.
pub fn qplate_k_path(q: f64, turns: f64) -> Result<SpherePath, GeomError> {
    let winding = q * turns;
    if !winding.is_finite() || winding.abs() < 1e-12 {
        return Err(GeomError::DegeneratePath(format!(
            "q·turns = {winding} gives no traversal"
        )));
    }
    if (winding - winding.round()).abs() > 1e-9 {
        return Err(GeomError::OpenPath);
    }
    let traversals = winding.round().abs() as usize;
    let direction = winding.signum();
    let total = traversals * QPLATE_PATH_POINTS;
    let mut points: Vec<Vector3<f64>> = (0..total)
        .map(|k| {
            let theta = direction * TAU * k as f64 / QPLATE_PATH_POINTS as f64;
            Vector3::new(theta.cos(), theta.sin(), 0.0)
        })
        .collect();
    points.push(points[0]);
    SpherePath::new(points, true)
}

/// Geometric phase acquired by a state carried around a closed cycle of
/// polarization states under the Pancharatnam connection:
/// `−arg Π <s_k|s_{k+1}>`, wrapped to (−π, π]. For geodesic polygons this is
/// `−Ω/2`, with `Ω` the solid angle of the Poincaré-sphere image.
///
/// `states` must return to the first state (up to a global phase).
pub fn pancharatnam_cycle_phase(states: &[JonesVector]) -> Result<f64, GeomError> {
    if states.len() < 2 {
        return Err(GeomError::TooFewPoints(states.len()));
    }
    let first = states[0].normalized();
    let last = states[states.len() - 1].normalized();
    if !last.equals_up_to_phase(&first, 1e-9) {
        return Err(GeomError::OpenCycle);
    }
    // Close the loop on the first state itself so the result is gauge invariant.
    let vertices = &states[..states.len() - 1];
    let n = vertices.len();
    let mut total_arg = 0.0;
    for k in 0..n {
        let next = (k + 1) % n;
        let a = vertices[k].normalized();
        let b = vertices[next].normalized();
        let overlap = a.inner(&b);
        if overlap.norm() <= ORTHOGONALITY_TOLERANCE {
            return Err(GeomError::OrthogonalConsecutiveStates {
                index: k,
                next: if next == 0 { states.len() - 1 } else { next },
            });
        }
        total_arg += overlap.arg();
    }
    Ok(wrap_angle(-total_arg))
}

/// Normalized Stokes direction `(s1, s2, s3)/s0`.
pub fn poincare_point(v: &JonesVector) -> Result<Vector3<f64>, GeomError> {
    let s = stokes_of(v);
    if !(s.s0 > 0.0) {
        return Err(GeomError::ZeroState);
    }
    Ok(Vector3::new(s.s1, s.s2, s.s3) / s.s0)
}

/// Closed path of Poincaré images of a closed cycle of states.
pub fn poincare_path(states: &[JonesVector]) -> Result<SpherePath, GeomError> {
    let points = states
        .iter()
        .map(|s| poincare_point(s).map(|p| p.normalize()))
        .collect::<Result<Vec<_>, _>>()?;
    SpherePath::new(points, true)
}

/// Small circle at polar angle `theta` about +z, counter-clockwise seen from +z.
pub fn small_circle(theta: f64, count: usize) -> Result<SpherePath, GeomError> {
    let (st, ct) = theta.sin_cos();
    let mut points: Vec<_> = (0..count)
        .map(|k| {
            let phi = TAU * k as f64 / count as f64;
            Vector3::new(st * phi.cos(), st * phi.sin(), ct)
        })
        .collect();
    points.push(points[0]);
    SpherePath::new(points, true)
}
