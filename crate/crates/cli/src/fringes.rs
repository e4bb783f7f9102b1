//! Off-axis interferograms and fringe counting.

use lightsim_core::beams::{Grid, ScalarField};
use num_complex::Complex64;
use thiserror::Error;

pub const MIN_FRINGES: f64 = 8.0;
pub const MIN_SAMPLES_PER_FRINGE: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FringeError {
    #[error("tilt gives {fringes:.2} fringes across the window (need >= 8)")]
    TiltTooSmall { fringes: f64 },
    #[error("fringes unresolvable: {0}")]
    UnresolvableFringes(String),
    #[error("field is identically zero")]
    ZeroField,
}

/// Normalized intensity of a beam interfering with a tilted plane wave.
#[derive(Debug, Clone, PartialEq)]
pub struct Interferogram {
    pub grid: Grid,
    pub tilt: f64,
    /// Row-major like the field, in `[0, 1]`.
    pub data: Vec<f64>,
}

impl Interferogram {
    pub fn fringe_period(&self) -> f64 {
        self.grid.wavelength() / self.tilt.sin().abs()
    }

    fn row(&self, iy: usize) -> &[f64] {
        let n = self.grid.n();
        &self.data[iy * n..(iy + 1) * n]
    }
}

/// `|ψ/|ψ|max + e^{i k sinθ x}|²`, scaled to a maximum of 1.
pub fn interference_image(out: &ScalarField, tilt: f64) -> Result<Interferogram, FringeError> {
    let grid = out.grid;
    let fringes = grid.window() * tilt.sin().abs() / grid.wavelength();
    if !(fringes >= MIN_FRINGES) {
        return Err(FringeError::TiltTooSmall { fringes });
    }
    let peak = out.max_intensity().sqrt();
    if !(peak > 0.0) {
        return Err(FringeError::ZeroField);
    }
    let kx = grid.wavenumber() * tilt.sin();
    let mut data: Vec<f64> = out
        .amp
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let (x, _) = grid.position(idx);
            (a / peak + Complex64::from_polar(1.0, kx * x)).norm_sqr()
        })
        .collect();
    let max = data.iter().copied().fold(0.0, f64::max);
    for v in &mut data {
        *v /= max;
    }
    Ok(Interferogram { grid, tilt, data })
}

fn extrema(row: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    for i in 1..row.len() - 1 {
        if row[i] > row[i - 1] && row[i] >= row[i + 1] {
            maxima.push(i);
        } else if row[i] < row[i - 1] && row[i] <= row[i + 1] {
            minima.push(i);
        }
    }
    (maxima, minima)
}

/// Charge read off the fork in `img` from two rows `offset` pixels above and
/// below the axis.
///
/// Both rows are trimmed to the same pair of fringes (matched minima at their
/// ends); the difference in enclosed maxima is the number of fringes that
/// terminate between the rows. With `k sinθ > 0` a positive charge adds
/// fringes to the upper row, so the result is `sign(θ)·(above − below)`.
pub fn fringe_fork_count(img: &Interferogram, offset: usize) -> Result<i64, FringeError> {
    let g = img.grid;
    let n = g.n();
    let period = img.fringe_period();
    let per_fringe = period / g.pitch();
    if per_fringe < MIN_SAMPLES_PER_FRINGE {
        return Err(FringeError::UnresolvableFringes(format!(
            "{per_fringe:.2} samples per fringe (need >= 4)"
        )));
    }
    if offset >= n / 2 {
        return Err(FringeError::UnresolvableFringes(format!(
            "cut offset {offset} leaves the grid"
        )));
    }
    let above = img.row(n / 2 + offset);
    let below = img.row(n / 2 - 1 - offset);
    let (max_a, min_a) = extrema(above);
    let (max_b, min_b) = extrema(below);
    if min_a.len() < 2 || min_b.len() < 2 {
        return Err(FringeError::UnresolvableFringes("fewer than two minima on a cut".into()));
    }
    let half = 0.5 * per_fringe;
    let nearest = |target: usize| -> Result<usize, FringeError> {
        let best = *min_b
            .iter()
            .min_by_key(|&&m| m.abs_diff(target))
            .expect("non-empty");
        if best.abs_diff(target) as f64 >= half {
            return Err(FringeError::UnresolvableFringes(
                "fringes at the cut ends do not line up".into(),
            ));
        }
        Ok(best)
    };
    // keep a fringe of margin so the partner minimum cannot fall off the grid
    let margin = per_fringe.ceil() as usize;
    let inner: Vec<usize> = min_a
        .iter()
        .copied()
        .filter(|&m| m >= margin && m + margin < n)
        .collect();
    if inner.len() < 2 {
        return Err(FringeError::UnresolvableFringes("fewer than two minima on a cut".into()));
    }
    let (a0, a1) = (inner[0], inner[inner.len() - 1]);
    let (b0, b1) = (nearest(a0)?, nearest(a1)?);
    let count = |maxima: &[usize], lo: usize, hi: usize| maxima.iter().filter(|&&m| m > lo && m < hi).count() as i64;
    let diff = count(&max_a, a0, a1) - count(&max_b, b0, b1);
    Ok(if img.tilt > 0.0 { diff } else { -diff })
}

/// Cut offset in pixels for a distance of `periods` fringe periods.
pub fn cut_offset_pixels(img: &Interferogram, periods: f64) -> usize {
    (periods * img.fringe_period() / img.grid.pitch()).round().max(1.0) as usize
}
