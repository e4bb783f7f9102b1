//! Physical constants in Gaussian (CGS) units.

/// Planck constant, erg·s.
pub const PLANCK: f64 = 6.62607015e-27;
/// Speed of light, cm/s.
pub const SPEED_OF_LIGHT: f64 = 2.99792458e10;
/// Reduced Planck constant, erg·s.
pub const HBAR: f64 = PLANCK / std::f64::consts::TAU;
