//! Scenario configuration files.
//!
//! A config is a TOML document naming one scenario plus optional sections
//! overriding that scenario's defaults. Lengths are in metres, angles in
//! radians, angular velocities in rad/s and frequencies in Hz. Unknown keys,
//! and sections the scenario does not read, are rejected.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use lightsim_core::beams::{Grid, MAX_LG_AZIMUTHAL, MAX_LG_RADIAL};
use lightsim_core::elements::QPlateSpec;
use lightsim_core::polarization::StateKind;
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_WAIST: f64 = 1.0e-3;
pub const DEFAULT_WAVELENGTH: f64 = 633e-9;
pub const DEFAULT_FRINGES: f64 = 32.0;
/// Rotation scenarios must cover at least this many periods.
pub const MIN_ROTATION_PERIODS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScenarioKind {
    QplateConversion,
    QplateChargeSweep,
    QplateLinearInput,
    LgOam,
    SrpGreatcircle,
    PancharatnamCycle,
    PlaneWaveIdentity,
    PhotonPartition,
    InterferenceFork,
    RotatingHwpPair,
    RotatingQplate,
    PropagationStability,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 12] = [
        ScenarioKind::InterferenceFork,
        ScenarioKind::LgOam,
        ScenarioKind::PancharatnamCycle,
        ScenarioKind::PhotonPartition,
        ScenarioKind::PlaneWaveIdentity,
        ScenarioKind::PropagationStability,
        ScenarioKind::QplateChargeSweep,
        ScenarioKind::QplateConversion,
        ScenarioKind::QplateLinearInput,
        ScenarioKind::RotatingHwpPair,
        ScenarioKind::RotatingQplate,
        ScenarioKind::SrpGreatcircle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::QplateConversion => "qplate_conversion",
            ScenarioKind::QplateChargeSweep => "qplate_charge_sweep",
            ScenarioKind::QplateLinearInput => "qplate_linear_input",
            ScenarioKind::LgOam => "lg_oam",
            ScenarioKind::SrpGreatcircle => "srp_greatcircle",
            ScenarioKind::PancharatnamCycle => "pancharatnam_cycle",
            ScenarioKind::PlaneWaveIdentity => "plane_wave_identity",
            ScenarioKind::PhotonPartition => "photon_partition",
            ScenarioKind::InterferenceFork => "interference_fork",
            ScenarioKind::RotatingHwpPair => "rotating_hwp_pair",
            ScenarioKind::RotatingQplate => "rotating_qplate",
            ScenarioKind::PropagationStability => "propagation_stability",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ScenarioKind::QplateConversion => "q-plate on a circularly polarized Gaussian: charge, SAM/OAM ledger",
            ScenarioKind::QplateChargeSweep => "output charge 2q for both input helicities over a list of q",
            ScenarioKind::QplateLinearInput => "q-plate on linear polarization: vector vortex and polarization index",
            ScenarioKind::LgOam => "OAM per photon and azimuthal purity of LG modes",
            ScenarioKind::SrpGreatcircle => "solid angle and spin-redirection phase of k-space loops",
            ScenarioKind::PancharatnamCycle => "Pancharatnam phase of closed polarization cycles",
            ScenarioKind::PlaneWaveIdentity => "energy density equals |momentum density|·c for plane waves",
            ScenarioKind::PhotonPartition => "rotational/translational split of the photon energy",
            ScenarioKind::InterferenceFork => "fork interferograms and fringe-counted charges",
            ScenarioKind::RotatingHwpPair => "frequency shift behind a rotating half-wave plate pair",
            ScenarioKind::RotatingQplate => "frequency shift behind a rotating q-plate",
            ScenarioKind::PropagationStability => "charge, OAM and width under free-space propagation",
        }
    }

    fn sections(self) -> &'static [Section] {
        use Section::*;
        match self {
            ScenarioKind::QplateConversion | ScenarioKind::QplateLinearInput => {
                &[Grid, Beam, Polarization, Element, Output]
            }
            ScenarioKind::QplateChargeSweep => &[Grid, Beam, Element, Sweep, Output],
            ScenarioKind::LgOam => &[Grid, Beam, Sweep, Output],
            ScenarioKind::SrpGreatcircle | ScenarioKind::PlaneWaveIdentity => &[Output],
            ScenarioKind::PancharatnamCycle => &[Sweep, Output],
            ScenarioKind::PhotonPartition => &[Photon, Output],
            ScenarioKind::InterferenceFork => &[Grid, Beam, Interference, Output],
            ScenarioKind::RotatingHwpPair => &[Polarization, Rotation, Output],
            ScenarioKind::RotatingQplate => &[Grid, Beam, Polarization, Element, Rotation, Output],
            ScenarioKind::PropagationStability => &[Grid, Beam, Sweep, Propagation, Output],
        }
    }

    /// Whether the scenario builds a single input beam of configurable shape.
    fn shaped_beam(self) -> bool {
        matches!(
            self,
            ScenarioKind::QplateConversion | ScenarioKind::QplateLinearInput | ScenarioKind::RotatingQplate
        )
    }

    pub fn uses_grid(self) -> bool {
        self.sections().contains(&Section::Grid)
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown scenario `{s}` (see `lightsim list-scenarios`)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Grid,
    Beam,
    Polarization,
    Element,
    Rotation,
    Interference,
    Propagation,
    Sweep,
    Photon,
    Output,
}

impl Section {
    fn name(self) -> &'static str {
        match self {
            Section::Grid => "grid",
            Section::Beam => "beam",
            Section::Polarization => "polarization",
            Section::Element => "element",
            Section::Rotation => "rotation",
            Section::Interference => "interference",
            Section::Propagation => "propagation",
            Section::Sweep => "sweep",
            Section::Photon => "photon",
            Section::Output => "output",
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    scenario: String,
    seed: Option<u64>,
    grid: Option<GridSection>,
    beam: Option<BeamSection>,
    polarization: Option<PolarizationSection>,
    element: Option<ElementSection>,
    rotation: Option<RotationSection>,
    interference: Option<InterferenceSection>,
    propagation: Option<PropagationSection>,
    sweep: Option<SweepSection>,
    photon: Option<PhotonSection>,
    output: Option<OutputSection>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridSection {
    n: Option<usize>,
    window: Option<f64>,
    wavelength: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct BeamSection {
    kind: Option<String>,
    w0: Option<f64>,
    l: Option<i32>,
    p: Option<u32>,
    wx: Option<f64>,
    wy: Option<f64>,
    orientation: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolarizationSection {
    kind: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementSection {
    q: Option<f64>,
    alpha0: Option<f64>,
    retardance: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotationSection {
    omega: Option<f64>,
    periods: Option<f64>,
    samples: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct InterferenceSection {
    tilt: Option<f64>,
    cut_offset: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PropagationSection {
    z_rayleigh: Option<Vec<f64>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepSection {
    twice_q: Option<Vec<i32>>,
    l: Option<Vec<i32>>,
    p: Option<Vec<u32>>,
    triangles: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhotonSection {
    frequency: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct OutputSection {
    dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridParams {
    pub n: usize,
    pub window: f64,
    pub wavelength: f64,
}

impl GridParams {
    pub fn build(&self) -> Result<Grid, CliError> {
        Grid::with_window(self.n, self.window, self.wavelength).map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BeamShape {
    Gaussian,
    LaguerreGaussian { l: i32, p: u32 },
    Elliptical { wx: f64, wy: f64, orientation: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParams {
    pub w0: f64,
    pub shape: BeamShape,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationParams {
    pub omega: f64,
    pub periods: f64,
    pub samples: usize,
}

impl RotationParams {
    /// Total duration; for `Ω = 0` one "period" is taken as 2π s.
    pub fn duration(&self) -> f64 {
        let period = if self.omega == 0.0 {
            std::f64::consts::TAU
        } else {
            std::f64::consts::TAU / self.omega.abs()
        };
        self.periods * period
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceParams {
    /// Reference-beam tilt; `None` puts [`DEFAULT_FRINGES`] fringes across the window.
    pub tilt: Option<f64>,
    /// Distance of the two cut rows from the axis, in fringe periods.
    pub cut_offset: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepParams {
    pub twice_q: Vec<i32>,
    pub l: Vec<i32>,
    pub p: Vec<u32>,
    pub triangles: usize,
}

/// Fully resolved and validated scenario parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: ScenarioKind,
    pub seed: u64,
    pub grid: GridParams,
    pub beam: BeamParams,
    pub polarization: StateKind,
    pub element: QPlateSpec,
    pub rotation: RotationParams,
    pub interference: InterferenceParams,
    pub z_rayleigh: Vec<f64>,
    pub sweep: SweepParams,
    pub photon_frequency: f64,
    pub output_dir: Option<PathBuf>,
}

impl ScenarioConfig {
    /// Built-in parameters of a scenario.
    pub fn defaults(scenario: ScenarioKind) -> Self {
        let window = match scenario {
            ScenarioKind::PropagationStability => 16.0 * DEFAULT_WAIST,
            _ => 8.0 * DEFAULT_WAIST,
        };
        let n = match scenario {
            ScenarioKind::RotatingQplate => 64,
            _ => 512,
        };
        let l = match scenario {
            ScenarioKind::PropagationStability => vec![-2, -1, 1, 2],
            _ => (-3..=3).collect(),
        };
        let p = match scenario {
            ScenarioKind::PropagationStability => vec![0],
            _ => vec![0, 1],
        };
        ScenarioConfig {
            scenario,
            seed: 0,
            grid: GridParams {
                n,
                window,
                wavelength: DEFAULT_WAVELENGTH,
            },
            beam: BeamParams {
                w0: DEFAULT_WAIST,
                shape: BeamShape::Gaussian,
            },
            polarization: match scenario {
                ScenarioKind::QplateLinearInput => StateKind::H,
                _ => StateKind::L,
            },
            element: QPlateSpec::half_wave(1.0).expect("q = 1 is valid"),
            rotation: RotationParams {
                omega: 1.0,
                periods: 16.0,
                samples: 4096,
            },
            interference: InterferenceParams {
                tilt: None,
                cut_offset: 2.0,
            },
            z_rayleigh: vec![0.5, 1.0, 2.0],
            sweep: SweepParams {
                twice_q: vec![-4, -2, -1, 1, 2, 4],
                l,
                p,
                triangles: 100,
            },
            photon_frequency: 4.74e14,
            output_dir: None,
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self, CliError> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        let scenario: ScenarioKind = file.scenario.parse()?;
        let mut cfg = ScenarioConfig::defaults(scenario);
        cfg.apply(file)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        ScenarioConfig::from_toml_str(&text)
    }

    fn apply(&mut self, file: ConfigFile) -> Result<(), CliError> {
        let allowed = self.scenario.sections();
        let present = [
            (Section::Grid, file.grid.is_some()),
            (Section::Beam, file.beam.is_some()),
            (Section::Polarization, file.polarization.is_some()),
            (Section::Element, file.element.is_some()),
            (Section::Rotation, file.rotation.is_some()),
            (Section::Interference, file.interference.is_some()),
            (Section::Propagation, file.propagation.is_some()),
            (Section::Sweep, file.sweep.is_some()),
            (Section::Photon, file.photon.is_some()),
            (Section::Output, file.output.is_some()),
        ];
        for (section, is_present) in present {
            if is_present && !allowed.contains(&section) {
                return Err(CliError::Config(format!(
                    "section [{}] is not used by scenario {}",
                    section.name(),
                    self.scenario
                )));
            }
        }

        if let Some(seed) = file.seed {
            self.seed = seed;
        }
        if let Some(g) = file.grid {
            self.grid.n = g.n.unwrap_or(self.grid.n);
            self.grid.window = g.window.unwrap_or(self.grid.window);
            self.grid.wavelength = g.wavelength.unwrap_or(self.grid.wavelength);
        }
        if let Some(b) = file.beam {
            self.apply_beam(b)?;
        }
        if let Some(p) = file.polarization {
            self.polarization = p.kind.parse().map_err(|_| {
                CliError::Config(format!("unknown polarization `{}` (expected H, V, D, A, L or R)", p.kind))
            })?;
        }
        if let Some(e) = file.element {
            if e.q.is_some() && self.scenario == ScenarioKind::QplateChargeSweep {
                return Err(CliError::Config(
                    "element.q is not used by qplate_charge_sweep; set sweep.twice_q".into(),
                ));
            }
            let q = e.q.unwrap_or(self.element.q());
            let alpha0 = e.alpha0.unwrap_or(self.element.alpha0());
            let retardance = e.retardance.unwrap_or(self.element.retardance());
            self.element = QPlateSpec::new(q, alpha0, retardance).map_err(|e| CliError::Config(e.to_string()))?;
        }
        if let Some(r) = file.rotation {
            self.rotation.omega = r.omega.unwrap_or(self.rotation.omega);
            self.rotation.periods = r.periods.unwrap_or(self.rotation.periods);
            self.rotation.samples = r.samples.unwrap_or(self.rotation.samples);
        }
        if let Some(i) = file.interference {
            if i.tilt.is_some() {
                self.interference.tilt = i.tilt;
            }
            self.interference.cut_offset = i.cut_offset.unwrap_or(self.interference.cut_offset);
        }
        if let Some(p) = file.propagation {
            self.z_rayleigh = p.z_rayleigh.unwrap_or(std::mem::take(&mut self.z_rayleigh));
        }
        if let Some(s) = file.sweep {
            let unused = match self.scenario {
                ScenarioKind::QplateChargeSweep => s.l.is_some() || s.p.is_some() || s.triangles.is_some(),
                ScenarioKind::LgOam | ScenarioKind::PropagationStability => {
                    s.twice_q.is_some() || s.triangles.is_some()
                }
                ScenarioKind::PancharatnamCycle => s.twice_q.is_some() || s.l.is_some() || s.p.is_some(),
                _ => true,
            };
            if unused {
                return Err(CliError::Config(format!(
                    "sweep keys given that scenario {} does not use",
                    self.scenario
                )));
            }
            if let Some(v) = s.twice_q {
                self.sweep.twice_q = v;
            }
            if let Some(v) = s.l {
                self.sweep.l = v;
            }
            if let Some(v) = s.p {
                self.sweep.p = v;
            }
            if let Some(v) = s.triangles {
                self.sweep.triangles = v;
            }
        }
        if let Some(p) = file.photon {
            self.photon_frequency = p.frequency.unwrap_or(self.photon_frequency);
        }
        if let Some(o) = file.output {
            self.output_dir = o.dir;
        }
        Ok(())
    }

    fn apply_beam(&mut self, b: BeamSection) -> Result<(), CliError> {
        if let Some(w0) = b.w0 {
            self.beam.w0 = w0;
        }
        let shaped = b.kind.is_some() || b.l.is_some() || b.p.is_some() || b.wx.is_some() || b.wy.is_some();
        if !shaped && b.orientation.is_none() {
            return Ok(());
        }
        if !self.scenario.shaped_beam() {
            return Err(CliError::Config(format!(
                "scenario {} only reads beam.w0",
                self.scenario
            )));
        }
        let kind = b.kind.as_deref().unwrap_or("gaussian");
        self.beam.shape = match kind {
            "gaussian" => {
                if b.l.is_some() || b.p.is_some() || b.wx.is_some() || b.wy.is_some() || b.orientation.is_some() {
                    return Err(CliError::Config("gaussian beam takes only w0".into()));
                }
                BeamShape::Gaussian
            }
            "lg" => {
                if b.wx.is_some() || b.wy.is_some() || b.orientation.is_some() {
                    return Err(CliError::Config("lg beam takes w0, l and p".into()));
                }
                BeamShape::LaguerreGaussian {
                    l: b.l.unwrap_or(0),
                    p: b.p.unwrap_or(0),
                }
            }
            "elliptical" => {
                if b.l.is_some() || b.p.is_some() || b.w0.is_some() {
                    return Err(CliError::Config("elliptical beam takes wx, wy and orientation".into()));
                }
                let (wx, wy) = match (b.wx, b.wy) {
                    (Some(wx), Some(wy)) => (wx, wy),
                    _ => return Err(CliError::Config("elliptical beam needs wx and wy".into())),
                };
                BeamShape::Elliptical {
                    wx,
                    wy,
                    orientation: b.orientation.unwrap_or(0.0),
                }
            }
            other => {
                return Err(CliError::Config(format!(
                    "unknown beam kind `{other}` (expected gaussian, lg or elliptical)"
                )))
            }
        };
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Config(msg));
        let kind = self.scenario;
        if kind.uses_grid() {
            let grid = self.grid.build()?;
            let waists: Vec<f64> = match self.beam.shape {
                BeamShape::Elliptical { wx, wy, .. } => vec![wx, wy],
                _ => vec![self.beam.w0],
            };
            for w in waists {
                grid.check_waist(w).map_err(|e| CliError::Config(e.to_string()))?;
            }
            if let BeamShape::LaguerreGaussian { l, p } = self.beam.shape {
                check_lg(l, p)?;
            }
        }
        match kind {
            ScenarioKind::QplateChargeSweep => {
                if self.sweep.twice_q.is_empty() || self.sweep.twice_q.contains(&0) {
                    return bad("sweep.twice_q must be a non-empty list of nonzero integers".into());
                }
            }
            ScenarioKind::LgOam | ScenarioKind::PropagationStability => {
                if self.sweep.l.is_empty() || self.sweep.p.is_empty() {
                    return bad("sweep.l and sweep.p must be non-empty".into());
                }
                for &l in &self.sweep.l {
                    for &p in &self.sweep.p {
                        check_lg(l, p)?;
                    }
                }
                if kind == ScenarioKind::PropagationStability && self.sweep.l.contains(&0) {
                    return bad("propagation_stability needs vortex beams (l != 0)".into());
                }
            }
            ScenarioKind::PancharatnamCycle if self.sweep.triangles == 0 => {
                return bad("sweep.triangles must be positive".into());
            }
            _ => {}
        }
        if kind == ScenarioKind::QplateConversion && !matches!(self.polarization, StateKind::L | StateKind::R) {
            return bad("qplate_conversion needs circular input (L or R); see qplate_linear_input".into());
        }
        if kind == ScenarioKind::QplateLinearInput {
            if matches!(self.polarization, StateKind::L | StateKind::R) {
                return bad("qplate_linear_input needs linear input (H, V, D or A)".into());
            }
            if (self.element.retardance() - std::f64::consts::PI).abs() > 1e-12 {
                return bad("qplate_linear_input needs a half-wave plate (retardance = π)".into());
            }
        }
        if matches!(kind, ScenarioKind::RotatingHwpPair | ScenarioKind::RotatingQplate) {
            let r = &self.rotation;
            if !matches!(self.polarization, StateKind::L | StateKind::R) {
                return bad("rotation scenarios need circular input (L or R)".into());
            }
            if !r.omega.is_finite() || r.samples < 2 || !(r.periods > 0.0) {
                return bad("rotation needs finite omega, periods > 0 and samples >= 2".into());
            }
            if r.omega != 0.0 && r.periods < MIN_ROTATION_PERIODS {
                return bad(format!("rotation must cover at least {MIN_ROTATION_PERIODS} periods"));
            }
            let samples_per_period = r.samples as f64 / r.periods;
            if r.omega != 0.0 && samples_per_period < lightsim_core::elements::MIN_SAMPLES_PER_ROTATION {
                return bad(format!(
                    "rotation undersampled: {samples_per_period:.2} samples per period"
                ));
            }
        }
        if kind == ScenarioKind::InterferenceFork {
            let tilt = self.tilt();
            let fringes = self.grid.window * tilt.sin().abs() / self.grid.wavelength;
            if !(fringes >= crate::fringes::MIN_FRINGES) {
                return bad(format!("tilt {tilt} gives {fringes:.2} fringes across the window (need >= 8)"));
            }
            let per_fringe = self.grid.n as f64 / fringes;
            if per_fringe < crate::fringes::MIN_SAMPLES_PER_FRINGE {
                return bad(format!("tilt {tilt} leaves {per_fringe:.2} samples per fringe (need >= 4)"));
            }
            if !(self.interference.cut_offset > 0.0) {
                return bad("interference.cut_offset must be positive".into());
            }
        }
        if kind == ScenarioKind::PropagationStability
            && self.z_rayleigh.iter().any(|z| !(z.is_finite() && *z >= 0.0))
        {
            return bad("propagation.z_rayleigh entries must be finite and non-negative".into());
        }
        if kind == ScenarioKind::PhotonPartition && !(self.photon_frequency > 0.0 && self.photon_frequency.is_finite()) {
            return bad("photon.frequency must be positive".into());
        }
        Ok(())
    }

    /// Reference-beam tilt, explicit or derived from the default fringe count.
    pub fn tilt(&self) -> f64 {
        self.interference
            .tilt
            .unwrap_or_else(|| (DEFAULT_FRINGES * self.grid.wavelength / self.grid.window).asin())
    }

    pub fn with_grid_n(mut self, n: usize) -> Result<Self, CliError> {
        self.grid.n = n;
        self.validate()?;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

fn check_lg(l: i32, p: u32) -> Result<(), CliError> {
    if l.abs() > MAX_LG_AZIMUTHAL || p > MAX_LG_RADIAL {
        return Err(CliError::Config(format!(
            "LG indices l={l}, p={p} outside |l| <= {MAX_LG_AZIMUTHAL}, p <= {MAX_LG_RADIAL}"
        )));
    }
    Ok(())
}
