//! Constrained engineering design problems with static-penalty handling.
//!
//! Constraints are written as `g_k(x) <= 0`. The penalized value is
//! `raw + multiplier * sum_k max(0, g_k(x))`.

use std::f64::consts::SQRT_2;

use crate::engine::SearchDomain;
use crate::error::{invalid, Result};

pub const DEFAULT_PENALTY: f64 = 1e6;

pub type Evaluator = fn(&[f64]) -> f64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstrainedValue {
    pub raw: f64,
    pub violation: f64,
    pub penalized: f64,
}

impl ConstrainedValue {
    pub fn is_feasible(&self) -> bool {
        self.violation == 0.0
    }
}

#[derive(Debug, Clone)]
pub struct ConstrainedProblem {
    pub id: &'static str,
    pub objective: Evaluator,
    pub constraints: Vec<Evaluator>,
    pub penalty_multiplier: f64,
    pub domain: SearchDomain,
}

impl ConstrainedProblem {
    pub fn with_penalty(mut self, multiplier: f64) -> Self {
        self.penalty_multiplier = multiplier;
        self
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<ConstrainedValue> {
        if x.len() != self.domain.dims() {
            return Err(invalid(format!(
                "{} takes {} variables, got {}",
                self.id,
                self.domain.dims(),
                x.len()
            )));
        }
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[f64]) -> ConstrainedValue {
        let raw = (self.objective)(x);
        let violation: f64 = self.constraints.iter().map(|g| g(x).max(0.0)).sum();
        let penalized = if violation > 0.0 {
            raw + self.penalty_multiplier * violation
        } else {
            raw
        };
        ConstrainedValue {
            raw,
            violation,
            penalized,
        }
    }

    pub fn penalized(&self, x: &[f64]) -> f64 {
        self.evaluate_unchecked(x).penalized
    }
}

/// `(raw, violation, penalized)` for `x`.
pub fn evaluate_constrained(problem: &ConstrainedProblem, x: &[f64]) -> Result<ConstrainedValue> {
    problem.evaluate(x)
}

// Cantilever beam: five hollow square segments of side x_i, weight
// proportional to the total side length, one deflection constraint.

pub fn cantilever_weight(x: &[f64]) -> f64 {
    0.0624 * x.iter().sum::<f64>()
}

pub fn cantilever_deflection(x: &[f64]) -> f64 {
    const C: [f64; 5] = [61.0, 37.0, 19.0, 7.0, 1.0];
    C.iter().zip(x).map(|(c, v)| c / v.powi(3)).sum::<f64>() - 1.0
}

// Gear train: teeth counts x = (A, B, D, F), target ratio 1 / 6.931.

pub fn gear_ratio_error(x: &[f64]) -> f64 {
    (1.0 / 6.931 - (x[1] * x[2]) / (x[0] * x[3])).powi(2)
}

// Three-bar truss: cross sections x = (A1 = A3, A2), bar length 100,
// load P = 2, allowable stress 2.

const TRUSS_LENGTH: f64 = 100.0;
const TRUSS_LOAD: f64 = 2.0;
const TRUSS_STRESS: f64 = 2.0;

pub fn truss_weight(x: &[f64]) -> f64 {
    (2.0 * SQRT_2 * x[0] + x[1]) * TRUSS_LENGTH
}

fn truss_denominator(x: &[f64]) -> f64 {
    SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1]
}

pub fn truss_stress_1(x: &[f64]) -> f64 {
    (SQRT_2 * x[0] + x[1]) / truss_denominator(x) * TRUSS_LOAD - TRUSS_STRESS
}

pub fn truss_stress_2(x: &[f64]) -> f64 {
    x[1] / truss_denominator(x) * TRUSS_LOAD - TRUSS_STRESS
}

pub fn truss_stress_3(x: &[f64]) -> f64 {
    1.0 / (SQRT_2 * x[1] + x[0]) * TRUSS_LOAD - TRUSS_STRESS
}

pub fn cantilever_beam() -> ConstrainedProblem {
    ConstrainedProblem {
        id: "cantilever_beam",
        objective: cantilever_weight,
        constraints: vec![cantilever_deflection],
        penalty_multiplier: DEFAULT_PENALTY,
        domain: SearchDomain::uniform(5, 0.01, 100.0).expect("valid bounds"),
    }
}

/// Integer formulation: every tooth count is a whole number in `[12, 60]`.
pub fn gear_train() -> ConstrainedProblem {
    ConstrainedProblem {
        id: "gear_train",
        objective: gear_ratio_error,
        constraints: Vec::new(),
        penalty_multiplier: DEFAULT_PENALTY,
        domain: SearchDomain::uniform_integer(4, 12.0, 60.0).expect("valid bounds"),
    }
}

pub fn three_bar_truss() -> ConstrainedProblem {
    ConstrainedProblem {
        id: "three_bar_truss",
        objective: truss_weight,
        constraints: vec![truss_stress_1, truss_stress_2, truss_stress_3],
        penalty_multiplier: DEFAULT_PENALTY,
        domain: SearchDomain::uniform(2, 0.0, 1.0).expect("valid bounds"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_point_is_unpenalized() {
        let p = cantilever_beam();
        let v = p.evaluate(&[10.0; 5]).unwrap();
        assert!(v.is_feasible());
        assert_eq!(v.penalized, v.raw);
        assert!((v.raw - 3.12).abs() < 1e-12);
    }

    #[test]
    fn infeasible_point_is_penalized() {
        let p = cantilever_beam();
        let v = p.evaluate(&[1.0; 5]).unwrap();
        // g = 61 + 37 + 19 + 7 + 1 - 1
        assert_eq!(v.violation, 124.0);
        assert_eq!(v.penalized, v.raw + 124.0 * DEFAULT_PENALTY);

        let soft = p.with_penalty(10.0).evaluate(&[1.0; 5]).unwrap();
        assert_eq!(soft.penalized, soft.raw + 1240.0);
    }

    #[test]
    fn wrong_arity_rejected() {
        assert!(three_bar_truss().evaluate(&[0.5]).is_err());
    }

    #[test]
    fn gear_ratio_symmetric_in_driver_and_driven_pairs() {
        let x = [43.0, 19.0, 16.0, 49.0];
        assert_eq!(
            gear_ratio_error(&x),
            gear_ratio_error(&[49.0, 16.0, 19.0, 43.0])
        );
        assert_eq!(
            gear_ratio_error(&x),
            gear_ratio_error(&[43.0, 16.0, 19.0, 49.0])
        );
        assert_eq!(
            gear_ratio_error(&[12.0, 12.0, 12.0, 12.0]),
            (1.0f64 / 6.931 - 1.0).powi(2)
        );
    }
}
