use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Settings shared by every command. Loaded from an optional JSON file and
/// then overridden by command-line flags.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub gamma: f64,
    pub epsilon: f64,
    pub bond_length: f64,
    pub resolution: usize,
    pub tolerance: f64,
    pub beta: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            gamma: 1.0,
            epsilon: 0.0,
            bond_length: nanotube::DEFAULT_BOND_LENGTH,
            resolution: nanotube::bands::DEFAULT_RESOLUTION,
            tolerance: 1e-8,
            beta: None,
            format: None,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Invalid(format!("bad config {}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.gamma.is_nan() || self.gamma <= 0.0 {
            return Err(CliError::Invalid(format!("gamma must be positive, got {}", self.gamma)));
        }
        if self.bond_length.is_nan() || self.bond_length <= 0.0 {
            return Err(CliError::Invalid(format!(
                "bond length must be positive, got {}",
                self.bond_length
            )));
        }
        if self.resolution < 64 {
            return Err(CliError::Invalid(format!(
                "resolution must be at least 64, got {}",
                self.resolution
            )));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(CliError::Invalid(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Lattice scale `a` derived from the bond length.
    pub fn scale(&self) -> f64 {
        nanotube::bond_length_scale(self.bond_length).expect("bond length validated")
    }
}
