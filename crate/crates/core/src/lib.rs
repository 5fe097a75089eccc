//! Pareto-like sequential sampling (PSS) for bound-constrained global
//! minimization.
//!
//! Each generation samples most solution components (probability `alpha`)
//! from a prominent region centred on the incumbent best, and the rest
//! uniformly over the whole domain. The prominent region is re-centred and
//! re-sized whenever the incumbent improves; its half-width shrinks linearly
//! to zero over the iteration budget.
//!
//! The crate is organised as:
//!
//! - [`sampling`]: seeded random streams and design-of-experiments sampling.
//! - [`engine`]: the optimizer itself and its domain types.
//! - [`objectives`]: standard benchmark landscapes and constrained
//!   engineering design problems.
//! - [`analysis`]: success probabilities for parameter tuning, landscape
//!   discretization and run statistics.
//!
//! ```
//! use pss_core::{PssParams, SearchDomain};
//!
//! let domain = SearchDomain::uniform(2, -5.0, 5.0).unwrap();
//! let params = PssParams::new(0.95, 30, 200).unwrap();
//! let record = pss_core::run(
//!     |x: &[f64]| x.iter().map(|v| v * v).sum(),
//!     &domain,
//!     params,
//!     7,
//! )
//! .unwrap();
//! assert!(record.final_best.fitness < 1e-2);
//! ```

pub mod analysis;
pub mod engine;
mod error;
pub mod objectives;
pub mod sampling;

pub use engine::{
    random_search, run, Candidate, HistoryEntry, ProminentRegion, Pss, PssParams, PssRun,
    RunRecord, RunState, SearchDomain, StepReport, VariableKind,
};
pub use error::{PssError, Result};
pub use sampling::{derive_seed, CoefficientMatrix, MonteCarlo, RandomStream, Sampler};
