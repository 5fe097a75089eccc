//! Experiment configuration and its validation.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use pss_core::objectives::{lookup, ObjectiveSpec};
use pss_core::{PssParams, SearchDomain};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Search strategy driven by a batch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    #[default]
    Pss,
    /// Uniform random search with the same evaluation budget.
    Random,
}

/// Box `[lower, upper]` applied to every coordinate when counting successes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuccessRegion {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub problem: String,
    pub dims: usize,
    pub alpha: f64,
    pub beta: usize,
    pub gamma: usize,
    pub replicates: usize,
    pub base_seed: u64,
    /// Iteration indices at which best-so-far errors are recorded.
    pub milestones: Vec<usize>,
    pub output: Option<PathBuf>,
    pub format: Format,
    #[serde(default)]
    pub algorithm: Algorithm,
    #[serde(default)]
    pub success_region: Option<SuccessRegion>,
    /// Worker threads; `None` uses rayon's default.
    #[serde(default)]
    pub jobs: Option<usize>,
}

impl ExperimentConfig {
    /// A configuration with the usual defaults (`alpha = 0.95`, `beta = 30`).
    pub fn new(problem: &str, dims: usize, gamma: usize, replicates: usize) -> Self {
        Self {
            problem: problem.to_string(),
            dims,
            alpha: 0.95,
            beta: 30,
            gamma,
            replicates,
            base_seed: 0,
            milestones: Vec::new(),
            output: None,
            format: Format::Csv,
            algorithm: Algorithm::Pss,
            success_region: None,
            jobs: None,
        }
    }

    pub fn params(&self) -> Result<PssParams> {
        PssParams::new(self.alpha, self.beta, self.gamma)
            .map_err(|e| BenchError::Config(e.to_string()))
    }

    pub fn spec(&self) -> Result<&'static ObjectiveSpec> {
        lookup(&self.problem).map_err(|e| BenchError::Config(e.to_string()))
    }

    pub fn domain(&self) -> Result<SearchDomain> {
        self.spec()?
            .domain(self.dims)
            .map_err(|e| BenchError::Config(e.to_string()))
    }

    /// Checks everything that can be checked before a run starts.
    pub fn validate(&self) -> Result<()> {
        self.params()?;
        self.domain()?;
        if self.replicates == 0 {
            return Err(BenchError::Config(
                "at least one replicate is required".into(),
            ));
        }
        if self.jobs == Some(0) {
            return Err(BenchError::Config("--jobs must be at least 1".into()));
        }
        if let Some(&last) = self.milestones.last() {
            if last > self.gamma {
                return Err(BenchError::Config(format!(
                    "milestone {last} exceeds the iteration budget {}",
                    self.gamma
                )));
            }
        }
        if self.milestones.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BenchError::Config(
                "milestones must be strictly increasing".into(),
            ));
        }
        if let Some(r) = self.success_region {
            if r.lower.is_nan() || r.upper.is_nan() || r.lower > r.upper {
                return Err(BenchError::Config(format!(
                    "success region [{}, {}] is empty",
                    r.lower, r.upper
                )));
            }
        }
        Ok(())
    }
}
