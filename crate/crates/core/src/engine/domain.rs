use serde::{Deserialize, Serialize};

use crate::error::{invalid, PssError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariableKind {
    Continuous,
    /// Whole-number variable. Sampled values are rounded to the nearest
    /// integer inside the bounds.
    Integer,
}

/// Box-shaped search domain with a variable kind per dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchDomain {
    lower: Vec<f64>,
    upper: Vec<f64>,
    kinds: Vec<VariableKind>,
}

impl SearchDomain {
    /// All-continuous domain.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let kinds = vec![VariableKind::Continuous; lower.len()];
        Self::with_kinds(lower, upper, kinds)
    }

    pub fn with_kinds(lower: Vec<f64>, upper: Vec<f64>, kinds: Vec<VariableKind>) -> Result<Self> {
        if lower.is_empty() {
            return Err(invalid("search domain needs at least one dimension"));
        }
        if lower.len() != upper.len() || lower.len() != kinds.len() {
            return Err(invalid(format!(
                "bound/kind lengths differ: {} lower, {} upper, {} kinds",
                lower.len(),
                upper.len(),
                kinds.len()
            )));
        }
        for (j, ((&lo, &hi), &kind)) in lower.iter().zip(&upper).zip(&kinds).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(invalid(format!("dimension {j}: bounds must be finite")));
            }
            if lo > hi {
                return Err(invalid(format!(
                    "dimension {j}: lower bound {lo} exceeds upper bound {hi}"
                )));
            }
            if kind == VariableKind::Integer && lo.ceil() > hi.floor() {
                return Err(PssError::Domain(format!(
                    "dimension {j}: no whole number in [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self {
            lower,
            upper,
            kinds,
        })
    }

    /// `dims` continuous variables sharing the bounds `[lower, upper]`.
    pub fn uniform(dims: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dims], vec![upper; dims])
    }

    /// `dims` integer variables sharing the bounds `[lower, upper]`.
    pub fn uniform_integer(dims: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::with_kinds(
            vec![lower; dims],
            vec![upper; dims],
            vec![VariableKind::Integer; dims],
        )
    }

    pub fn dims(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn kinds(&self) -> &[VariableKind] {
        &self.kinds
    }

    pub fn width(&self, j: usize) -> f64 {
        self.upper[j] - self.lower[j]
    }

    /// True when `x` has the right length, lies inside the bounds and has
    /// whole numbers in every integer dimension.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dims()
            && x.iter().enumerate().all(|(j, &v)| {
                v >= self.lower[j]
                    && v <= self.upper[j]
                    && (self.kinds[j] == VariableKind::Continuous || v.fract() == 0.0)
            })
    }
}

/// Acceptance probability `alpha`, population size `beta` and iteration
/// budget `gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PssParams {
    pub alpha: f64,
    pub beta: usize,
    pub gamma: usize,
}

impl PssParams {
    pub fn new(alpha: f64, beta: usize, gamma: usize) -> Result<Self> {
        let p = Self { alpha, beta, gamma };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(invalid(format!(
                "alpha must lie in [0, 1], got {}",
                self.alpha
            )));
        }
        if self.beta == 0 {
            return Err(invalid("population size must be at least 1"));
        }
        if self.gamma == 0 {
            return Err(invalid("iteration budget must be at least 1"));
        }
        Ok(())
    }

    /// Objective evaluations performed by a full run: the initial
    /// population plus one generation per iteration.
    pub fn evaluations(&self) -> usize {
        self.beta * (self.gamma + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub x: Vec<f64>,
    pub fitness: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_bounds() {
        assert!(SearchDomain::new(vec![1.0], vec![0.0]).is_err());
    }

    #[test]
    fn rejects_length_mismatch_and_empty() {
        assert!(SearchDomain::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(SearchDomain::new(vec![], vec![]).is_err());
        assert!(SearchDomain::with_kinds(vec![0.0], vec![1.0], vec![]).is_err());
    }

    #[test]
    fn rejects_integer_dimension_without_whole_number() {
        let err = SearchDomain::uniform_integer(1, 0.2, 0.8).unwrap_err();
        assert!(matches!(err, PssError::Domain(_)));
    }

    #[test]
    fn degenerate_dimension_allowed() {
        let d = SearchDomain::uniform(3, 0.0, 0.0).unwrap();
        assert_eq!(d.width(1), 0.0);
        assert!(d.contains(&[0.0, 0.0, 0.0]));
    }

    #[test]
    fn contains_checks_integrality() {
        let d = SearchDomain::uniform_integer(2, 12.0, 60.0).unwrap();
        assert!(d.contains(&[12.0, 60.0]));
        assert!(!d.contains(&[12.5, 60.0]));
        assert!(!d.contains(&[11.0, 60.0]));
        assert!(!d.contains(&[12.0]));
    }

    #[test]
    fn params_bounds() {
        assert!(PssParams::new(0.0, 1, 1).is_ok());
        assert!(PssParams::new(1.0, 1, 1).is_ok());
        assert!(PssParams::new(1.5, 30, 10).is_err());
        assert!(PssParams::new(-0.1, 30, 10).is_err());
        assert!(PssParams::new(f64::NAN, 30, 10).is_err());
        assert!(PssParams::new(0.9, 0, 10).is_err());
        assert!(PssParams::new(0.9, 30, 0).is_err());
        assert_eq!(PssParams::new(0.95, 30, 500).unwrap().evaluations(), 15_030);
    }
}
