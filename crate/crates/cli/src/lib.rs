//! Scenario runner for `lightsim-core`.
//!
//! Every scenario reproduces one physical claim as a configured numerical
//! experiment and reports checked scalar results plus image and CSV files.

pub mod config;
pub mod error;
pub mod fringes;
pub mod io;
pub mod rotation;
pub mod scenarios;
pub mod selftest;

pub use config::{ScenarioConfig, ScenarioKind};
pub use error::CliError;
pub use scenarios::{run_scenario, run_to_dir, ScenarioReport};
