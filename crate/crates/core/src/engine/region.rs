//! Per-component building blocks of a generation: bandwidth, prominent
//! region, feature sampling and integer quantization.

use serde::{Deserialize, Serialize};

use super::domain::{PssParams, SearchDomain, VariableKind};
use crate::error::{invalid, PssError, Result};
use crate::sampling::scale_to_interval;

/// The tightened box around the incumbent best.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProminentRegion {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Per-dimension half-width before clipping.
    pub eta: Vec<f64>,
    pub center: Vec<f64>,
}

/// Half-width of the prominent region at `iteration`:
/// `(1 - alpha) * (1 - i / gamma) / 2 * (upper - lower)` per dimension.
pub fn compute_bandwidth(
    params: &PssParams,
    iteration: usize,
    domain: &SearchDomain,
) -> Result<Vec<f64>> {
    params.validate()?;
    if iteration > params.gamma {
        return Err(invalid(format!(
            "iteration {iteration} exceeds budget {}",
            params.gamma
        )));
    }
    let remaining = 1.0 - iteration as f64 / params.gamma as f64;
    let factor = (1.0 - params.alpha) * remaining / 2.0;
    Ok((0..domain.dims())
        .map(|j| (factor * domain.width(j)).max(0.0))
        .collect())
}

/// Centres the region on `best_x` with half-widths `eta`, clipped to the
/// domain bounds.
pub fn update_prominent_region(
    best_x: &[f64],
    eta: &[f64],
    domain: &SearchDomain,
) -> Result<ProminentRegion> {
    if best_x.len() != domain.dims() || eta.len() != domain.dims() {
        return Err(invalid(format!(
            "expected {} components, got best_x = {}, eta = {}",
            domain.dims(),
            best_x.len(),
            eta.len()
        )));
    }
    if eta.iter().any(|&e| e.is_nan() || e < 0.0) {
        return Err(invalid("bandwidth components must be non-negative"));
    }
    let (lo, hi) = (domain.lower(), domain.upper());
    if best_x
        .iter()
        .enumerate()
        .any(|(j, &v)| !(v >= lo[j] && v <= hi[j]))
    {
        return Err(invalid(format!(
            "best point {best_x:?} lies outside the domain"
        )));
    }
    let lower = (0..domain.dims())
        .map(|j| (best_x[j] - eta[j]).max(lo[j]))
        .collect();
    let upper = (0..domain.dims())
        .map(|j| (best_x[j] + eta[j]).min(hi[j]))
        .collect();
    Ok(ProminentRegion {
        lower,
        upper,
        eta: eta.to_vec(),
        center: best_x.to_vec(),
    })
}

/// Draws component `j` of a new candidate.
///
/// With `r <= alpha` the coefficient `u` is scaled into the prominent region,
/// otherwise into the full domain. Integer components are then quantized.
pub fn sample_feature(
    j: usize,
    region: &ProminentRegion,
    domain: &SearchDomain,
    u: f64,
    r: f64,
    alpha: f64,
) -> Result<f64> {
    let (lo, hi) = if r <= alpha {
        (region.lower[j], region.upper[j])
    } else {
        (domain.lower()[j], domain.upper()[j])
    };
    let v = scale_to_interval(u, lo, hi)?;
    quantize(v, domain.kinds()[j], domain.lower()[j], domain.upper()[j])
}

/// Rounds integer-kind values to the nearest whole number inside
/// `[ceil(lower), floor(upper)]`; continuous values pass through.
pub fn quantize(value: f64, kind: VariableKind, lower: f64, upper: f64) -> Result<f64> {
    match kind {
        VariableKind::Continuous => Ok(value),
        VariableKind::Integer => {
            let (lo, hi) = (lower.ceil(), upper.floor());
            if lo > hi {
                return Err(PssError::Domain(format!(
                    "no whole number in [{lower}, {upper}]"
                )));
            }
            Ok(value.round().clamp(lo, hi))
        }
    }
}
