//! Structured-light simulation: Jones calculus, q-plates, Laguerre-Gaussian
//! beams, spin/orbital angular momentum bookkeeping, geometric phases on the
//! Poincaré and wave-vector spheres, and angular-spectrum propagation.

pub mod analysis;
pub mod beams;
pub mod constants;
pub mod elements;
pub mod fourier;
pub mod geomphase;
pub mod numeric;
pub mod polarization;
pub mod propagation;

pub use analysis::{AmLedger, AnalysisError};
pub use beams::{BeamError, Grid, ScalarField, VectorField};
pub use elements::{ElementError, QPlateSpec};
pub use geomphase::{GeomError, SpherePath};
pub use polarization::{JonesMatrix, JonesVector, StateKind, StokesVector};
pub use propagation::PropagationError;
