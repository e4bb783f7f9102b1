//! Frequency shift measured behind rotating retarders.

use lightsim_core::beams::VectorField;
use lightsim_core::elements::{
    check_rotation_sampling, rotating_hwp_pair_series, rotating_qplate_iter, uniform_times, ElementError, QPlateSpec,
};
use lightsim_core::numeric::pairwise_sum_complex_by;
use lightsim_core::polarization::JonesVector;
use num_complex::Complex64;
use rustfft::FftPlanner;

/// Frequency of the strongest DFT bin of `series`, as the rate (rad/s) at
/// which its phase advances. Bins above `N/2` are negative frequencies.
pub fn dominant_frequency(series: &[Complex64], dt: f64) -> f64 {
    let n = series.len();
    let mut buf = series.to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let (k, _) = buf
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (k, c)| {
            let p = c.norm_sqr();
            if p > best.1 {
                (k, p)
            } else {
                best
            }
        });
    let signed = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
    std::f64::consts::TAU * signed / (n as f64 * dt)
}

/// Width of one DFT bin in rad/s.
pub fn bin_width(samples: usize, dt: f64) -> f64 {
    std::f64::consts::TAU / (samples as f64 * dt)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyShift {
    pub shift: f64,
    pub bin_width: f64,
}

/// Shift of `input` behind a rotating half-wave plate followed by a fixed one,
/// read from the amplitude that stays in the input state.
pub fn hwp_pair_shift(
    omega: f64,
    input: &JonesVector,
    duration: f64,
    samples: usize,
) -> Result<FrequencyShift, ElementError> {
    let t = uniform_times(duration, samples);
    let dt = check_rotation_sampling(omega, &t)?;
    let series: Vec<Complex64> = rotating_hwp_pair_series(omega, input, &t)?
        .iter()
        .map(|v| input.inner(v))
        .collect();
    Ok(FrequencyShift {
        shift: dominant_frequency(&series, dt),
        bin_width: bin_width(samples, dt),
    })
}

/// Shift behind a q-plate rotating at `Ω`, read from the overlap of the
/// output with the output at `t = 0`.
pub fn qplate_shift(
    spec: &QPlateSpec,
    omega: f64,
    f: &VectorField,
    duration: f64,
    samples: usize,
) -> Result<FrequencyShift, ElementError> {
    let t = uniform_times(duration, samples);
    let dt = check_rotation_sampling(omega, &t)?;
    let mut outputs = rotating_qplate_iter(spec, omega, f, &t)?;
    let first = outputs.next().expect("at least one sample");
    let overlap = |g: &VectorField| {
        pairwise_sum_complex_by(g.grid.len(), &|i| first.ex[i].conj() * g.ex[i] + first.ey[i].conj() * g.ey[i])
    };
    let mut series = Vec::with_capacity(samples);
    series.push(overlap(&first));
    series.extend(outputs.map(|g| overlap(&g)));
    Ok(FrequencyShift {
        shift: dominant_frequency(&series, dt),
        bin_width: bin_width(samples, dt),
    })
}
