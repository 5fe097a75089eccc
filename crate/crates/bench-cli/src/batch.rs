//! Replicate execution and aggregation.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use pss_core::analysis::{aggregate_stats, success_rate, StatsSummary};
use pss_core::{derive_seed, random_search, run, RunRecord};

use crate::config::{Algorithm, ExperimentConfig};
use crate::error::{BenchError, Result};

/// One replicate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub run: usize,
    pub seed: u64,
    /// `f(x) - f(x_opt)`, or the raw fitness when no optimum is known.
    pub final_error: f64,
    pub final_fitness: f64,
    pub final_x: Vec<f64>,
    /// Best-so-far error at each configured milestone.
    pub milestone_errors: Vec<f64>,
    pub wall_clock_secs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub config: ExperimentConfig,
    /// Published optimum subtracted from every error value.
    pub reference_optimum: Option<f64>,
    pub runs: Vec<RunResult>,
    /// Statistics of `final_error` over all runs.
    pub stats: StatsSummary,
    pub success_rate: Option<f64>,
}

impl BatchReport {
    /// Copy with every wall-clock entry zeroed, for comparing reports.
    pub fn without_timings(&self) -> BatchReport {
        let mut r = self.clone();
        for run in &mut r.runs {
            run.wall_clock_secs = 0.0;
        }
        r
    }

    pub fn final_errors(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.final_error).collect()
    }

    pub fn mean_final_fitness(&self) -> f64 {
        self.runs.iter().map(|r| r.final_fitness).sum::<f64>() / self.runs.len() as f64
    }
}

/// Seed of replicate `k`; depends only on the base seed and `k`.
pub fn replicate_seed(base_seed: u64, k: usize) -> u64 {
    derive_seed(base_seed, k as u64)
}

/// Runs every replicate of `config` and aggregates the results. The report
/// does not depend on the number of worker threads.
pub fn run_batch(config: &ExperimentConfig) -> Result<BatchReport> {
    config.validate()?;
    let spec = config.spec()?;
    let domain = config.domain()?;
    let params = config.params()?;
    let reference = spec.true_optimum(config.dims).ok();
    let objective = spec.evaluator();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
        .map_err(|e| BenchError::Config(e.to_string()))?;

    let outcomes: Vec<(RunRecord, f64)> = pool.install(|| {
        (0..config.replicates)
            .into_par_iter()
            .map(|k| {
                let seed = replicate_seed(config.base_seed, k);
                let t = Instant::now();
                let record = match config.algorithm {
                    Algorithm::Pss => run(&objective, &domain, params, seed),
                    Algorithm::Random => random_search(&objective, &domain, params, seed),
                }?;
                Ok((record, t.elapsed().as_secs_f64()))
            })
            .collect::<Result<_>>()
    })?;

    let error = |f: f64| reference.map_or(f, |opt| f - opt);
    let runs: Vec<RunResult> = outcomes
        .iter()
        .enumerate()
        .map(|(k, (record, secs))| RunResult {
            run: k,
            seed: record.seed,
            final_error: error(record.final_best.fitness),
            final_fitness: record.final_best.fitness,
            final_x: record.final_best.x.clone(),
            milestone_errors: config
                .milestones
                .iter()
                .map(|&m| error(record.history[m].best_fitness))
                .collect(),
            wall_clock_secs: *secs,
        })
        .collect();

    let errors: Vec<f64> = runs.iter().map(|r| r.final_error).collect();
    let stats = aggregate_stats(&errors)?;
    let success_rate = match config.success_region {
        Some(region) => {
            let records: Vec<RunRecord> = outcomes.into_iter().map(|(r, _)| r).collect();
            let lo = vec![region.lower; config.dims];
            let hi = vec![region.upper; config.dims];
            Some(success_rate(&records, &lo, &hi)?)
        }
        None => None,
    };

    Ok(BatchReport {
        config: config.clone(),
        reference_optimum: reference,
        runs,
        stats,
        success_rate,
    })
}
