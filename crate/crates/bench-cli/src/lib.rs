//! Batch experiments for the PSS optimizer: replicate runs, error values at
//! iteration milestones, aggregate statistics and CSV/JSON export.
//!
//! ```no_run
//! use pss_bench::{run_batch, ExperimentConfig};
//!
//! let mut config = ExperimentConfig::new("schwefel_shifted", 30, 500, 25);
//! config.milestones = vec![0, 100, 500];
//! let report = run_batch(&config).unwrap();
//! println!("mean final fitness {}", report.mean_final_fitness());
//! ```

pub mod batch;
pub mod cli;
pub mod config;
mod error;
pub mod export;

pub use batch::{replicate_seed, run_batch, BatchReport, RunResult};
pub use config::{Algorithm, ExperimentConfig, Format, SuccessRegion};
pub use error::{BenchError, Result};
