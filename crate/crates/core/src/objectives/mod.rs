//! Benchmark landscapes with published optima, and constrained engineering
//! design problems.
//!
//! Problems are looked up by id (`"sphere"`, `"schwefel_shifted"`, ...) or by
//! their table alias (`"f1"` .. `"f16"`). Each carries two optimum values:
//!
//! - the *published* optimum ([`ObjectiveSpec::true_optimum`]), as printed in
//!   benchmark tables and used for error values, e.g. `-1.0316` for the
//!   six-hump camel, and
//! - the *reference* optimum ([`ObjectiveSpec::reference_optimum`]), the
//!   function evaluated at a high-precision minimizer, e.g.
//!   `-1.031628453489877`.
//!
//! Tests that compare against search results below the published rounding
//! use the reference value.

pub mod engineering;
pub mod functions;

use crate::engine::{SearchDomain, VariableKind};
use crate::error::{invalid, PssError, Result};
pub use engineering::{evaluate_constrained, ConstrainedProblem, ConstrainedValue};
use functions::*;

pub type BoxedObjective = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dims {
    Fixed(usize),
    /// Any dimensionality `>= min`.
    Any {
        min: usize,
    },
}

impl Dims {
    pub fn admits(&self, n: usize) -> bool {
        match *self {
            Dims::Fixed(d) => n == d,
            Dims::Any { min } => n >= min,
        }
    }
}

/// How a published optimum is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimumKind {
    /// The global minimum of the function (up to the published rounding).
    Exact,
    /// Best value reported in the literature; a search may improve on it.
    BestKnown,
}

/// High-precision minimizer and the function value there.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownOptimum {
    pub point: Vec<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Plain(fn(&[f64]) -> f64),
    Constrained(fn() -> ConstrainedProblem),
}

/// A registered problem.
#[derive(Debug, Clone, Copy)]
pub struct ObjectiveSpec {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub title: &'static str,
    pub dims: Dims,
    kind: Kind,
    bounds: fn(usize) -> (f64, f64),
    variable: VariableKind,
    published: fn(usize) -> Option<f64>,
    minimizer: fn(usize) -> Option<Vec<f64>>,
    optimum_kind: OptimumKind,
}

impl ObjectiveSpec {
    /// Default dimensionality: the fixed one, or `None` for "any n".
    pub fn default_dims(&self) -> Option<usize> {
        match self.dims {
            Dims::Fixed(n) => Some(n),
            Dims::Any { .. } => None,
        }
    }

    fn check_dims(&self, n: usize) -> Result<()> {
        if self.dims.admits(n) {
            Ok(())
        } else {
            Err(invalid(format!(
                "{} does not admit n = {n} ({:?})",
                self.id, self.dims
            )))
        }
    }

    /// Default search domain for `n` variables.
    pub fn domain(&self, n: usize) -> Result<SearchDomain> {
        self.check_dims(n)?;
        let (lo, hi) = (self.bounds)(n);
        SearchDomain::with_kinds(vec![lo; n], vec![hi; n], vec![self.variable; n])
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        self.check_dims(x.len())?;
        Ok(self.value(x))
    }

    /// Objective value without dimensionality checks; constrained problems
    /// return their penalized value.
    pub fn value(&self, x: &[f64]) -> f64 {
        match self.kind {
            Kind::Plain(f) => f(x),
            Kind::Constrained(p) => p().penalized(x),
        }
    }

    /// Evaluator for use by the optimizer. Builds constrained problems once.
    pub fn evaluator(&self) -> BoxedObjective {
        match self.kind {
            Kind::Plain(f) => Box::new(f),
            Kind::Constrained(p) => {
                let problem = p();
                Box::new(move |x: &[f64]| problem.penalized(x))
            }
        }
    }

    pub fn constrained(&self) -> Option<ConstrainedProblem> {
        match self.kind {
            Kind::Plain(_) => None,
            Kind::Constrained(p) => Some(p()),
        }
    }

    /// Published optimum for `n` variables.
    pub fn true_optimum(&self, n: usize) -> Result<f64> {
        self.check_dims(n)?;
        (self.published)(n).ok_or_else(|| PssError::NoKnownOptimum {
            id: self.id.to_string(),
            dims: n,
        })
    }

    pub fn optimum_kind(&self) -> OptimumKind {
        self.optimum_kind
    }

    /// High-precision minimizer for `n` variables, when one is registered.
    pub fn known_optimum(&self, n: usize) -> Option<KnownOptimum> {
        if !self.dims.admits(n) {
            return None;
        }
        (self.minimizer)(n).map(|point| {
            let value = self.value(&point);
            KnownOptimum { point, value }
        })
    }

    /// The function value at the registered minimizer.
    pub fn reference_optimum(&self, n: usize) -> Option<f64> {
        self.known_optimum(n).map(|k| k.value)
    }
}

fn zeros(n: usize) -> Option<Vec<f64>> {
    Some(vec![0.0; n])
}

fn zero(_: usize) -> Option<f64> {
    Some(0.0)
}

const REGISTRY: &[ObjectiveSpec] = &[
    ObjectiveSpec {
        id: "sphere",
        alias: Some("f1"),
        title: "Sphere",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(sphere),
        bounds: |_| (-100.0, 100.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "sum_squares",
        alias: Some("f2"),
        title: "Sum squares",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(sum_squares),
        bounds: |_| (-10.0, 10.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "chung_reynolds",
        alias: Some("f3"),
        title: "Chung Reynolds",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(chung_reynolds),
        bounds: |_| (-100.0, 100.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "schwefel_2_21",
        alias: Some("f4"),
        title: "Schwefel 2.21",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(schwefel_2_21),
        bounds: |_| (-100.0, 100.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "schwefel_2_22",
        alias: Some("f5"),
        title: "Schwefel 2.22",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(schwefel_2_22),
        bounds: |_| (-10.0, 10.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "rosenbrock",
        alias: Some("f6"),
        title: "Rosenbrock",
        dims: Dims::Any { min: 2 },
        kind: Kind::Plain(rosenbrock),
        bounds: |_| (-30.0, 30.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: |n| Some(vec![1.0; n]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "trid",
        alias: Some("f7"),
        title: "Trid",
        dims: Dims::Any { min: 2 },
        kind: Kind::Plain(trid),
        bounds: |n| {
            let b = (n * n) as f64;
            (-b, b)
        },
        variable: VariableKind::Continuous,
        published: |n| {
            let n = n as f64;
            Some(-n * (n + 4.0) * (n - 1.0) / 6.0)
        },
        minimizer: |n| Some((1..=n).map(|i| (i * (n + 1 - i)) as f64).collect()),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "zakharov",
        alias: Some("f8"),
        title: "Zakharov",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(zakharov),
        bounds: |_| (-5.0, 10.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "griewank",
        alias: Some("f9"),
        title: "Griewank",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(griewank),
        bounds: |_| (-600.0, 600.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "ackley",
        alias: Some("f10"),
        title: "Ackley",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(ackley),
        bounds: |_| (-32.0, 32.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: zeros,
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "schwefel",
        alias: Some("f11"),
        title: "Schwefel",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(schwefel),
        bounds: |_| (-500.0, 500.0),
        variable: VariableKind::Continuous,
        published: zero,
        minimizer: |n| Some(vec![SCHWEFEL_MINIMIZER; n]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "shubert",
        alias: Some("f12"),
        title: "Shubert",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(shubert),
        bounds: |_| (-10.0, 10.0),
        variable: VariableKind::Continuous,
        // no published optimum; the 2-D minimizer pairs the lowest and the
        // highest value of the 1-D factor
        published: |_| None,
        minimizer: |n| (n == 2).then(|| vec![-1.471_368_938_279_414, -0.778_211_959_011_046]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "six_hump_camel",
        alias: Some("f13"),
        title: "Six-hump camel",
        dims: Dims::Fixed(2),
        kind: Kind::Plain(six_hump_camel),
        bounds: |_| (-5.0, 5.0),
        variable: VariableKind::Continuous,
        published: |_| Some(-1.0316),
        minimizer: |_| Some(vec![0.089_842_011_817_429_17, -0.712_656_405_622_466_9]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "goldstein",
        alias: Some("f14"),
        title: "Goldstein-Price",
        dims: Dims::Fixed(2),
        kind: Kind::Plain(goldstein_price),
        bounds: |_| (-2.0, 2.0),
        variable: VariableKind::Continuous,
        published: |_| Some(3.0),
        minimizer: |_| Some(vec![0.0, -1.0]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "de_jong_5",
        alias: Some("f15"),
        title: "De Jong 5 (Shekel's foxholes)",
        dims: Dims::Fixed(2),
        kind: Kind::Plain(de_jong_5),
        bounds: |_| (-65.536, 65.536),
        variable: VariableKind::Continuous,
        published: |_| Some(0.998004),
        minimizer: |_| Some(vec![-31.978_333_377_976_48, -31.978_334_007_870_856]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "hartmann_3",
        alias: Some("f16"),
        title: "Hartmann 3",
        dims: Dims::Fixed(3),
        kind: Kind::Plain(hartmann_3),
        bounds: |_| (0.0, 1.0),
        variable: VariableKind::Continuous,
        published: |_| Some(-3.8628),
        minimizer: |_| {
            Some(vec![
                0.114_588_881_225_412_87,
                0.555_648_895_473_937_1,
                0.852_546_984_217_274_6,
            ])
        },
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "schwefel_shifted",
        alias: None,
        title: "Schwefel without offset",
        dims: Dims::Any { min: 1 },
        kind: Kind::Plain(schwefel_shifted),
        bounds: |_| (-500.0, 500.0),
        variable: VariableKind::Continuous,
        published: |n| Some(-SCHWEFEL_OFFSET * n as f64),
        minimizer: |n| Some(vec![SCHWEFEL_MINIMIZER; n]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "cantilever_beam",
        alias: None,
        title: "Cantilever beam design",
        dims: Dims::Fixed(5),
        kind: Kind::Constrained(engineering::cantilever_beam),
        bounds: |_| (0.01, 100.0),
        variable: VariableKind::Continuous,
        published: |_| Some(1.339_956_643_995_19),
        minimizer: |_| {
            Some(vec![
                6.016_830_100_960_92,
                5.306_551_876_597_79,
                4.494_209_484_225_88,
                3.502_729_285_177_48,
                2.153_343_419_627_52,
            ])
        },
        optimum_kind: OptimumKind::BestKnown,
    },
    ObjectiveSpec {
        id: "gear_train",
        alias: None,
        title: "Gear train design (integer)",
        dims: Dims::Fixed(4),
        kind: Kind::Constrained(engineering::gear_train),
        bounds: |_| (12.0, 60.0),
        variable: VariableKind::Integer,
        published: |_| Some(2.7009e-12),
        minimizer: |_| Some(vec![43.0, 19.0, 16.0, 49.0]),
        optimum_kind: OptimumKind::Exact,
    },
    ObjectiveSpec {
        id: "three_bar_truss",
        alias: None,
        title: "Three-bar truss design",
        dims: Dims::Fixed(2),
        kind: Kind::Constrained(engineering::three_bar_truss),
        bounds: |_| (0.0, 1.0),
        variable: VariableKind::Continuous,
        published: |_| Some(263.895_843_501_333),
        minimizer: |_| Some(vec![0.788_683_438_026_281, 0.408_224_806_061_712]),
        optimum_kind: OptimumKind::BestKnown,
    },
];

/// All registered problems, in table order.
pub fn registry() -> &'static [ObjectiveSpec] {
    REGISTRY
}

/// Finds a problem by id or alias.
pub fn lookup(id: &str) -> Result<&'static ObjectiveSpec> {
    REGISTRY
        .iter()
        .find(|s| s.id == id || s.alias == Some(id))
        .ok_or_else(|| PssError::UnknownProblem(id.to_string()))
}

/// Evaluates problem `id` at `x`; the dimensionality is taken from `x`.
pub fn evaluate(id: &str, x: &[f64]) -> Result<f64> {
    lookup(id)?.evaluate(x)
}

/// Published optimum of problem `id` with `n` variables.
pub fn true_optimum(id: &str, n: usize) -> Result<f64> {
    lookup(id)?.true_optimum(n)
}
