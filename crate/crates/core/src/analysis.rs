//! Parameter-tuning probabilities, landscape discretization and run
//! statistics.
//!
//! The probabilities treat one design variable of a discretized landscape:
//! `n_prime` of its `n_total` grid points lie in the true prominent region,
//! i.e. below the lowest local-minimum valley other than the global one.
//! Independent variables combine by multiplication; that is left to callers.

use serde::{Deserialize, Serialize};

use crate::engine::RunRecord;
use crate::error::{invalid, PssError, Result};

/// Grid points inside a region (`n_prime`) out of all grid points
/// (`n_total`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccupancyCount {
    pub n_prime: u64,
    pub n_total: u64,
}

impl OccupancyCount {
    pub fn new(n_prime: u64, n_total: u64) -> Result<Self> {
        let occ = Self { n_prime, n_total };
        occ.validate()?;
        Ok(occ)
    }

    fn validate(&self) -> Result<()> {
        if self.n_total == 0 {
            return Err(invalid("occupancy needs at least one grid point"));
        }
        if self.n_prime > self.n_total {
            return Err(invalid(format!(
                "occupied count {} exceeds total {}",
                self.n_prime, self.n_total
            )));
        }
        Ok(())
    }
}

fn check_beta(beta: u64) -> Result<()> {
    if beta == 0 {
        return Err(invalid("population size must be at least 1"));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(invalid(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    Ok(())
}

/// Probability that one uniform draw lands in the region: `n' / N`.
pub fn p_in_prominent(occ: OccupancyCount) -> Result<f64> {
    occ.validate()?;
    Ok(occ.n_prime as f64 / occ.n_total as f64)
}

/// Probability that at least one of `beta` uniform draws lands in the
/// region: `1 - (1 - n'/N)^beta`.
pub fn p_at_least_one(occ: OccupancyCount, beta: u64) -> Result<f64> {
    check_beta(beta)?;
    let p = p_in_prominent(occ)?;
    // 1 - (1 - p)^beta without cancellation for small p
    Ok(-(beta as f64 * (-p).ln_1p()).exp_m1())
}

/// Probability of finding a region point through whole-domain sampling
/// (`r > alpha`): `p_at_least_one * (1 - alpha)`. No iteration index enters.
pub fn exploration_probability(occ: OccupancyCount, beta: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(p_at_least_one(occ, beta)? * (1.0 - alpha))
}

/// Probability of improving inside the current region through prominent
/// sampling (`r <= alpha`): `p_at_least_one(occ_t) * alpha`, where `occ_t`
/// counts better points within the current region.
pub fn intensification_probability(occ_t: OccupancyCount, beta: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(p_at_least_one(occ_t, beta)? * alpha)
}

fn grid_values<F: Fn(f64) -> f64>(
    f: &F,
    lower: f64,
    upper: f64,
    grid: usize,
) -> Result<Vec<(f64, f64)>> {
    if grid < 2 {
        return Err(invalid(format!("grid needs at least 2 points, got {grid}")));
    }
    if lower.is_nan() || upper.is_nan() || lower >= upper {
        return Err(invalid(format!(
            "need lower < upper, got [{lower}, {upper}]"
        )));
    }
    let step = (upper - lower) / (grid - 1) as f64;
    (0..grid)
        .map(|k| {
            let x = if k == grid - 1 {
                upper
            } else {
                lower + k as f64 * step
            };
            let value = f(x);
            if value.is_finite() {
                Ok((x, value))
            } else {
                Err(PssError::NonFiniteSample { x, value })
            }
        })
        .collect()
}

/// Counts grid points with `f(x) < threshold` on a uniform grid of `grid`
/// points including both endpoints.
pub fn discretize_occupancy<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    upper: f64,
    grid: usize,
    threshold: f64,
) -> Result<OccupancyCount> {
    let values = grid_values(&f, lower, upper, grid)?;
    let n_prime = values.iter().filter(|(_, v)| *v < threshold).count();
    OccupancyCount::new(n_prime as u64, grid as u64)
}

/// Local minima `(x, f(x))` of `f` on the same grid as
/// [`discretize_occupancy`], sorted by value (lowest first). An endpoint
/// counts when it is below its single neighbour.
///
/// The second entry is the usual threshold for the true prominent region
/// around the lowest one; picking it is left to the caller.
pub fn grid_local_minima<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    upper: f64,
    grid: usize,
) -> Result<Vec<(f64, f64)>> {
    let v = grid_values(&f, lower, upper, grid)?;
    let last = v.len() - 1;
    let mut minima: Vec<(f64, f64)> = (0..=last)
        .filter(|&k| {
            let left = k == 0 || v[k].1 < v[k - 1].1;
            let right = k == last || v[k].1 < v[k + 1].1;
            left && right
        })
        .map(|k| v[k])
        .collect();
    minima.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(minima)
}

/// Fraction of runs whose final best lies inside `[region_lower,
/// region_upper]` in every component.
pub fn success_rate(runs: &[RunRecord], region_lower: &[f64], region_upper: &[f64]) -> Result<f64> {
    if runs.is_empty() {
        return Err(invalid("success rate needs at least one run"));
    }
    if region_lower.len() != region_upper.len() {
        return Err(invalid("region bounds differ in length"));
    }
    let mut hits = 0usize;
    for (k, run) in runs.iter().enumerate() {
        let x = &run.final_best.x;
        if x.len() != region_lower.len() {
            return Err(invalid(format!(
                "run {k} has {} components, region has {}",
                x.len(),
                region_lower.len()
            )));
        }
        let inside = x
            .iter()
            .zip(region_lower.iter().zip(region_upper))
            .all(|(&v, (&lo, &hi))| v >= lo && v <= hi);
        if inside {
            hits += 1;
        }
    }
    Ok(hits as f64 / runs.len() as f64)
}

/// Order statistics, mean and sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub min: f64,
    pub max: f64,
    pub median: f64,
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator); 0 for one value.
    pub std: f64,
    pub count: usize,
}

pub fn aggregate_stats(values: &[f64]) -> Result<StatsSummary> {
    if values.is_empty() {
        return Err(invalid("statistics need at least one value"));
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(invalid("statistics input contains NaN"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
        (ss / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(StatsSummary {
        min: sorted[0],
        max: sorted[n - 1],
        median,
        mean,
        std,
        count: n,
    })
}
