//! The PSS optimizer.
//!
//! A run is a sequential state machine ([`PssRun`]): the initial population
//! is sampled over the whole domain and evaluated (iteration 0), then each
//! of the `gamma` iterations
//!
//! 1. re-centres the prominent region on the incumbent if the previous
//!    generation improved it, with the bandwidth evaluated at the current
//!    iteration index,
//! 2. draws one `beta x n` coefficient matrix and one `beta x n` matrix of
//!    acceptance draws,
//! 3. builds every candidate component-wise with [`sample_feature`], and
//! 4. evaluates the generation and updates the incumbent on strict
//!    improvement.
//!
//! Coefficients and acceptance draws come from two streams derived from the
//! run seed (indices 0 and 1 of [`derive_seed`]), so the coefficient stream
//! advances by exactly `beta * n` draws per generation.

mod domain;
mod region;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use domain::{Candidate, PssParams, SearchDomain, VariableKind};
pub use region::{
    compute_bandwidth, quantize, sample_feature, update_prominent_region, ProminentRegion,
};

use crate::error::{PssError, Result};
use crate::sampling::{derive_seed, uniform_matrix, MonteCarlo, RandomStream, Sampler};

/// Live state of a run after its last completed iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunState {
    pub iteration: usize,
    /// Best-so-far candidate.
    pub best: Candidate,
    pub region: ProminentRegion,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub iteration: usize,
    pub best_fitness: f64,
    pub best_x: Vec<f64>,
}

/// Outcome of a complete run. `history[i]` is the best-so-far after
/// iteration `i`, with the initial population at index 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub params: PssParams,
    pub history: Vec<HistoryEntry>,
    pub final_best: Candidate,
    pub evaluations: usize,
}

impl RunRecord {
    /// Best-so-far fitness after `iteration`, if the run reached it.
    pub fn best_at(&self, iteration: usize) -> Option<f64> {
        self.history.get(iteration).map(|h| h.best_fitness)
    }
}

/// What happened during one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepReport {
    pub iteration: usize,
    /// The prominent region was recomputed before sampling.
    pub region_updated: bool,
    /// The generation produced a strictly better incumbent.
    pub improved: bool,
    /// Components drawn from the prominent region (`r <= alpha`).
    pub prominent_draws: usize,
    /// Components drawn from the whole domain.
    pub domain_draws: usize,
}

/// Optimizer configuration.
#[derive(Debug, Clone)]
pub struct Pss<S = MonteCarlo> {
    params: PssParams,
    sampler: S,
    retighten_every_iteration: bool,
    parallel_evaluation: bool,
}

impl Pss<MonteCarlo> {
    pub fn new(params: PssParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            params,
            sampler: MonteCarlo,
            retighten_every_iteration: false,
            parallel_evaluation: false,
        })
    }
}

impl<S: Sampler> Pss<S> {
    pub fn with_sampler<T: Sampler>(self, sampler: T) -> Pss<T> {
        Pss {
            params: self.params,
            sampler,
            retighten_every_iteration: self.retighten_every_iteration,
            parallel_evaluation: self.parallel_evaluation,
        }
    }

    /// Recompute the bandwidth and region at every iteration instead of only
    /// after an improvement. Off by default.
    pub fn retighten_every_iteration(mut self, on: bool) -> Self {
        self.retighten_every_iteration = on;
        self
    }

    /// Evaluate each generation on the rayon pool. All random draws happen
    /// before evaluation, so results are identical to serial evaluation.
    pub fn parallel_evaluation(mut self, on: bool) -> Self {
        self.parallel_evaluation = on;
        self
    }

    pub fn params(&self) -> &PssParams {
        &self.params
    }

    pub fn start<'a, F>(
        &'a self,
        objective: &'a F,
        domain: &'a SearchDomain,
        seed: u64,
    ) -> Result<PssRun<'a, F, S>>
    where
        F: Fn(&[f64]) -> f64 + Sync,
    {
        PssRun::start(self, objective, domain, seed)
    }

    pub fn run<F>(&self, objective: F, domain: &SearchDomain, seed: u64) -> Result<RunRecord>
    where
        F: Fn(&[f64]) -> f64 + Sync,
    {
        self.run_with_progress(objective, domain, seed, |_, _| {})
    }

    /// Like [`Pss::run`], calling `progress(iteration, best_fitness)` after
    /// the initial population and after every iteration.
    pub fn run_with_progress<F, P>(
        &self,
        objective: F,
        domain: &SearchDomain,
        seed: u64,
        mut progress: P,
    ) -> Result<RunRecord>
    where
        F: Fn(&[f64]) -> f64 + Sync,
        P: FnMut(usize, f64),
    {
        let mut run = self.start(&objective, domain, seed)?;
        progress(0, run.state().best.fitness);
        while run.step()?.is_some() {
            progress(run.state().iteration, run.state().best.fitness);
        }
        Ok(run.finish())
    }
}

/// Runs PSS with Monte Carlo sampling and default options.
pub fn run<F>(
    objective: F,
    domain: &SearchDomain,
    params: PssParams,
    seed: u64,
) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    Pss::new(params)?.run(objective, domain, seed)
}

/// Samples the `params.beta` starting points over the whole domain from one
/// coefficient matrix.
pub fn initialize_population<S: Sampler>(
    domain: &SearchDomain,
    params: &PssParams,
    sampler: &S,
    stream: &mut RandomStream,
) -> Result<Vec<Vec<f64>>> {
    params.validate()?;
    let u = sampler.coefficients(stream, params.beta, domain.dims())?;
    (0..params.beta)
        .map(|k| scale_row(u.row(k), domain))
        .collect()
}

fn scale_row(u: &[f64], domain: &SearchDomain) -> Result<Vec<f64>> {
    u.iter()
        .enumerate()
        .map(|(j, &c)| {
            let (lo, hi) = (domain.lower()[j], domain.upper()[j]);
            let v = crate::sampling::scale_to_interval(c, lo, hi)?;
            quantize(v, domain.kinds()[j], lo, hi)
        })
        .collect()
}

fn evaluate_all<F>(objective: &F, xs: Vec<Vec<f64>>, parallel: bool) -> Result<Vec<Candidate>>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let fitness: Vec<f64> = if parallel {
        xs.par_iter().map(|x| objective(x)).collect()
    } else {
        xs.iter().map(|x| objective(x)).collect()
    };
    xs.into_iter()
        .zip(fitness)
        .map(|(x, fitness)| {
            if fitness.is_nan() {
                Err(PssError::Evaluation { point: x })
            } else {
                Ok(Candidate { x, fitness })
            }
        })
        .collect()
}

/// Lowest fitness, first index on ties.
fn generation_best(population: &[Candidate]) -> &Candidate {
    population
        .iter()
        .reduce(|best, c| if c.fitness < best.fitness { c } else { best })
        .expect("population is never empty")
}

/// A run in progress. Drive it with [`PssRun::step`] or let
/// [`Pss::run`] do so.
pub struct PssRun<'a, F, S = MonteCarlo> {
    config: &'a Pss<S>,
    objective: &'a F,
    domain: &'a SearchDomain,
    seed: u64,
    coefficients: RandomStream,
    acceptance: RandomStream,
    state: RunState,
    population: Vec<Candidate>,
    history: Vec<HistoryEntry>,
    improved_since_update: bool,
}

impl<'a, F, S> PssRun<'a, F, S>
where
    F: Fn(&[f64]) -> f64 + Sync,
    S: Sampler,
{
    fn start(
        config: &'a Pss<S>,
        objective: &'a F,
        domain: &'a SearchDomain,
        seed: u64,
    ) -> Result<Self> {
        let params = config.params;
        let mut coefficients = RandomStream::new(derive_seed(seed, 0));
        let acceptance = RandomStream::new(derive_seed(seed, 1));

        let xs = initialize_population(domain, &params, &config.sampler, &mut coefficients)?;
        let population = evaluate_all(objective, xs, config.parallel_evaluation)?;
        let best = generation_best(&population).clone();

        let eta = compute_bandwidth(&params, 1, domain)?;
        let region = update_prominent_region(&best.x, &eta, domain)?;

        let history = vec![HistoryEntry {
            iteration: 0,
            best_fitness: best.fitness,
            best_x: best.x.clone(),
        }];
        Ok(Self {
            config,
            objective,
            domain,
            seed,
            coefficients,
            acceptance,
            state: RunState {
                iteration: 0,
                best,
                region,
                evaluations: params.beta,
            },
            population,
            history,
            improved_since_update: false,
        })
    }

    pub fn state(&self) -> &RunState {
        &self.state
    }

    /// The most recently evaluated generation.
    pub fn population(&self) -> &[Candidate] {
        &self.population
    }

    pub fn coefficient_draws(&self) -> u64 {
        self.coefficients.position()
    }

    pub fn is_finished(&self) -> bool {
        self.state.iteration >= self.config.params.gamma
    }

    /// Executes the next iteration; `Ok(None)` once the budget is spent.
    pub fn step(&mut self) -> Result<Option<StepReport>> {
        if self.is_finished() {
            return Ok(None);
        }
        let params = self.config.params;
        let (beta, n) = (params.beta, self.domain.dims());
        let i = self.state.iteration + 1;

        let region_updated = self.improved_since_update || self.config.retighten_every_iteration;
        if region_updated {
            let eta = compute_bandwidth(&params, i, self.domain)?;
            self.state.region = update_prominent_region(&self.state.best.x, &eta, self.domain)?;
            self.improved_since_update = false;
        }

        let u = self
            .config
            .sampler
            .coefficients(&mut self.coefficients, beta, n)?;
        let r = uniform_matrix(&mut self.acceptance, beta, n)?;

        let mut prominent_draws = 0;
        let mut xs = Vec::with_capacity(beta);
        for k in 0..beta {
            let mut x = Vec::with_capacity(n);
            for j in 0..n {
                let rk = r.get(k, j);
                if rk <= params.alpha {
                    prominent_draws += 1;
                }
                x.push(sample_feature(
                    j,
                    &self.state.region,
                    self.domain,
                    u.get(k, j),
                    rk,
                    params.alpha,
                )?);
            }
            xs.push(x);
        }

        self.population = evaluate_all(self.objective, xs, self.config.parallel_evaluation)?;
        self.state.evaluations += beta;
        self.state.iteration = i;

        let candidate = generation_best(&self.population);
        let improved = candidate.fitness < self.state.best.fitness;
        if improved {
            self.state.best = candidate.clone();
            self.improved_since_update = true;
        }
        self.history.push(HistoryEntry {
            iteration: i,
            best_fitness: self.state.best.fitness,
            best_x: self.state.best.x.clone(),
        });

        Ok(Some(StepReport {
            iteration: i,
            region_updated,
            improved,
            prominent_draws,
            domain_draws: beta * n - prominent_draws,
        }))
    }

    /// Consumes the run, returning its record. Unspent iterations are not
    /// executed.
    pub fn finish(self) -> RunRecord {
        RunRecord {
            seed: self.seed,
            params: self.config.params,
            history: self.history,
            final_best: self.state.best,
            evaluations: self.state.evaluations,
        }
    }
}

/// Uniform random search with the same budget and history layout as a PSS
/// run: `params.beta` fresh points over the whole domain per iteration.
/// `params.alpha` is ignored. Baseline only.
pub fn random_search<F>(
    objective: F,
    domain: &SearchDomain,
    params: PssParams,
    seed: u64,
) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    params.validate()?;
    let mut stream = RandomStream::new(derive_seed(seed, 0));
    let mut best: Option<Candidate> = None;
    let mut history = Vec::with_capacity(params.gamma + 1);
    for i in 0..=params.gamma {
        let xs = initialize_population(domain, &params, &MonteCarlo, &mut stream)?;
        let population = evaluate_all(&objective, xs, false)?;
        let gen = generation_best(&population);
        if best.as_ref().is_none_or(|b| gen.fitness < b.fitness) {
            best = Some(gen.clone());
        }
        let b = best.as_ref().expect("set above");
        history.push(HistoryEntry {
            iteration: i,
            best_fitness: b.fitness,
            best_x: b.x.clone(),
        });
    }
    Ok(RunRecord {
        seed,
        params,
        history,
        final_best: best.expect("at least one generation"),
        evaluations: params.evaluations(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn degenerate_domain_gives_zero_population() {
        let d = SearchDomain::uniform(4, 0.0, 0.0).unwrap();
        let p = PssParams::new(0.95, 10, 5).unwrap();
        let pop = initialize_population(&d, &p, &MonteCarlo, &mut RandomStream::new(1)).unwrap();
        assert_eq!(pop.len(), 10);
        assert!(pop.iter().all(|x| x == &vec![0.0; 4]));
    }

    #[test]
    fn initial_population_inside_schwefel_box() {
        let d = SearchDomain::uniform(2, -500.0, 500.0).unwrap();
        let p = PssParams::new(0.95, 30, 20).unwrap();
        let a = initialize_population(&d, &p, &MonteCarlo, &mut RandomStream::new(8)).unwrap();
        let b = initialize_population(&d, &p, &MonteCarlo, &mut RandomStream::new(8)).unwrap();
        assert_eq!(a.len(), 30);
        assert!(a.iter().all(|x| d.contains(x)));
        assert_eq!(a, b);
    }

    #[test]
    fn record_shape() {
        let d = SearchDomain::uniform(3, -5.0, 5.0).unwrap();
        let p = PssParams::new(0.9, 12, 40).unwrap();
        let rec = run(sphere, &d, p, 3).unwrap();
        assert_eq!(rec.history.len(), 41);
        assert_eq!(rec.evaluations, 12 * 41);
        assert_eq!(rec.final_best.fitness, rec.history[40].best_fitness);
        assert!(rec
            .history
            .iter()
            .enumerate()
            .all(|(i, h)| h.iteration == i));
    }

    #[test]
    fn nan_objective_aborts_with_point() {
        let d = SearchDomain::uniform(2, -1.0, 1.0).unwrap();
        let p = PssParams::new(0.9, 5, 5).unwrap();
        let err = run(
            |x: &[f64]| if x[0] > 0.0 { f64::NAN } else { 1.0 },
            &d,
            p,
            0,
        )
        .unwrap_err();
        match err {
            PssError::Evaluation { point } => assert!(point[0] > 0.0),
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn infinite_fitness_is_legal() {
        let d = SearchDomain::uniform(2, -1.0, 1.0).unwrap();
        let p = PssParams::new(0.9, 5, 5).unwrap();
        let rec = run(
            |x: &[f64]| if x[0] > 0.0 { f64::INFINITY } else { x[0] },
            &d,
            p,
            0,
        )
        .unwrap();
        assert!(rec.final_best.fitness <= 0.0);
    }

    #[test]
    fn region_only_moves_after_improvement() {
        let d = SearchDomain::uniform(2, -10.0, 10.0).unwrap();
        let p = PssParams::new(0.8, 8, 30).unwrap();
        let pss = Pss::new(p).unwrap();
        let f = sphere;
        let mut run = pss.start(&f, &d, 17).unwrap();
        let mut prev_improved = true; // the first region is built at start
        let mut region = run.state().region.clone();
        assert_eq!(region.center, run.state().best.x);
        while let Some(rep) = run.step().unwrap() {
            if rep.iteration > 1 {
                assert_eq!(rep.region_updated, prev_improved);
            }
            if !rep.region_updated {
                assert_eq!(run.state().region, region);
            } else {
                let eta = compute_bandwidth(&p, rep.iteration, &d).unwrap();
                assert_eq!(run.state().region.eta, eta);
            }
            region = run.state().region.clone();
            prev_improved = rep.improved;
        }
    }

    #[test]
    fn retightening_toggle_updates_every_iteration() {
        let d = SearchDomain::uniform(2, -10.0, 10.0).unwrap();
        let p = PssParams::new(0.8, 8, 10).unwrap();
        let pss = Pss::new(p).unwrap().retighten_every_iteration(true);
        let f = sphere;
        let mut run = pss.start(&f, &d, 17).unwrap();
        while let Some(rep) = run.step().unwrap() {
            assert!(rep.region_updated);
            let eta = compute_bandwidth(&p, rep.iteration, &d).unwrap();
            assert_eq!(run.state().region.eta, eta);
        }
    }

    #[test]
    fn parallel_evaluation_matches_serial() {
        let d = SearchDomain::uniform(5, -3.0, 3.0).unwrap();
        let p = PssParams::new(0.9, 20, 25).unwrap();
        let serial = Pss::new(p).unwrap().run(sphere, &d, 99).unwrap();
        let parallel = Pss::new(p)
            .unwrap()
            .parallel_evaluation(true)
            .run(sphere, &d, 99)
            .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn progress_hook_sees_every_iteration() {
        let d = SearchDomain::uniform(2, -3.0, 3.0).unwrap();
        let p = PssParams::new(0.9, 6, 7).unwrap();
        let mut seen = Vec::new();
        let rec = Pss::new(p)
            .unwrap()
            .run_with_progress(sphere, &d, 1, |i, f| seen.push((i, f)))
            .unwrap();
        let expected: Vec<_> = rec
            .history
            .iter()
            .map(|h| (h.iteration, h.best_fitness))
            .collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn random_search_shape_and_monotone() {
        let d = SearchDomain::uniform(2, -3.0, 3.0).unwrap();
        let p = PssParams::new(0.9, 6, 7).unwrap();
        let rec = random_search(sphere, &d, p, 4).unwrap();
        assert_eq!(rec.history.len(), 8);
        assert!(rec
            .history
            .windows(2)
            .all(|w| w[1].best_fitness <= w[0].best_fitness));
    }

    #[test]
    fn ties_keep_lowest_index() {
        let pop = vec![
            Candidate {
                x: vec![1.0],
                fitness: 2.0,
            },
            Candidate {
                x: vec![2.0],
                fitness: 1.0,
            },
            Candidate {
                x: vec![3.0],
                fitness: 1.0,
            },
        ];
        assert_eq!(generation_best(&pop).x, vec![2.0]);
    }
}
