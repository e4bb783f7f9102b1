//! Small numerical helpers shared by the field and path code.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

/// Principal value of an angle in (−π, π].
pub fn wrap_angle(a: f64) -> f64 {
    let mut w = a % TAU;
    if w <= -PI {
        w += TAU;
    } else if w > PI {
        w -= TAU;
    }
    w
}

const PAIRWISE_BLOCK: usize = 64;

/// Pairwise (tree) summation. The order of additions depends only on the
/// length of the input, so results are reproducible bit-for-bit.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= PAIRWISE_BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Pairwise sum of `f(i)` for `i in 0..len`, without materializing the terms.
pub fn pairwise_sum_by<F>(len: usize, f: &F) -> f64
where
    F: Fn(usize) -> f64,
{
    fn rec<F: Fn(usize) -> f64>(lo: usize, hi: usize, f: &F) -> f64 {
        if hi - lo <= PAIRWISE_BLOCK {
            return (lo..hi).map(f).sum();
        }
        let mid = lo + (hi - lo) / 2;
        rec(lo, mid, f) + rec(mid, hi, f)
    }
    rec(0, len, f)
}

pub fn pairwise_sum_complex_by<F>(len: usize, f: &F) -> Complex64
where
    F: Fn(usize) -> Complex64,
{
    fn rec<F: Fn(usize) -> Complex64>(lo: usize, hi: usize, f: &F) -> Complex64 {
        if hi - lo <= PAIRWISE_BLOCK {
            return (lo..hi).map(f).sum();
        }
        let mid = lo + (hi - lo) / 2;
        rec(lo, mid, f) + rec(mid, hi, f)
    }
    rec(0, len, f)
}

/// Sum of phase increments between consecutive samples of a closed loop,
/// each increment wrapped into (−π, π]. Divided by 2π this is the winding number.
pub fn wrapped_phase_circulation(phases: &[f64]) -> f64 {
    let n = phases.len();
    (0..n)
        .map(|k| wrap_angle(phases[(k + 1) % n] - phases[k]))
        .sum()
}
