//! Two-dimensional FFTs on row-major square arrays.

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

fn transform_rows(data: &mut [Complex64], n: usize, fft: &dyn Fft<f64>) {
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    for row in data.chunks_exact_mut(n) {
        fft.process_with_scratch(row, &mut scratch);
    }
}

fn transpose(data: &mut [Complex64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            data.swap(i * n + j, j * n + i);
        }
    }
}

fn fft2(data: &mut [Complex64], n: usize, direction: FftDirection) {
    assert_eq!(data.len(), n * n, "fft2 expects an n×n array");
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft(n, direction);
    transform_rows(data, n, fft.as_ref());
    transpose(data, n);
    transform_rows(data, n, fft.as_ref());
    transpose(data, n);
}

/// Unnormalized forward transform, kernel `e^{-2πi(km)/n}` along each axis.
pub fn fft2_forward(data: &mut [Complex64], n: usize) {
    fft2(data, n, FftDirection::Forward);
}

/// Inverse transform including the `1/n²` normalization.
pub fn fft2_inverse(data: &mut [Complex64], n: usize) {
    fft2(data, n, FftDirection::Inverse);
    let scale = 1.0 / (n * n) as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

/// Spatial frequency (cycles per unit length) of FFT bin `k` for `n` samples at `pitch`.
pub fn fft_frequency(k: usize, n: usize, pitch: f64) -> f64 {
    let signed = if k < n.div_ceil(2) {
        k as f64
    } else {
        k as f64 - n as f64
    };
    signed / (n as f64 * pitch)
}
