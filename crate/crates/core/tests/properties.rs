use proptest::prelude::*;

use pss_core::analysis::{
    exploration_probability, intensification_probability, p_at_least_one, p_in_prominent,
    OccupancyCount,
};
use pss_core::engine::{compute_bandwidth, update_prominent_region};
use pss_core::sampling::scale_to_interval;
use pss_core::{Pss, PssParams, SearchDomain, VariableKind};

fn domain_strategy(max_dims: usize) -> impl Strategy<Value = SearchDomain> {
    prop::collection::vec((-1e3f64..1e3, 0.0f64..1e3, any::<bool>()), 1..=max_dims).prop_map(
        |dims| {
            let mut lower = Vec::new();
            let mut upper = Vec::new();
            let mut kinds = Vec::new();
            for (lo, w, int) in dims {
                if int {
                    // at least one whole number inside
                    let lo = lo.floor();
                    lower.push(lo);
                    upper.push(lo + w.floor());
                    kinds.push(VariableKind::Integer);
                } else {
                    lower.push(lo);
                    upper.push(lo + w);
                    kinds.push(VariableKind::Continuous);
                }
            }
            SearchDomain::with_kinds(lower, upper, kinds).unwrap()
        },
    )
}

fn point_in(domain: &SearchDomain, t: &[f64]) -> Vec<f64> {
    (0..domain.dims())
        .map(|j| domain.lower()[j] + t[j % t.len()] * domain.width(j))
        .collect()
}

fn objective(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (v - i as f64).powi(2) + (v * 0.1).sin())
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn region_is_clipped_to_domain(
        domain in domain_strategy(6),
        t in prop::collection::vec(0.0f64..=1.0, 6),
        scale in 0.0f64..2.0,
    ) {
        let best = point_in(&domain, &t);
        let eta: Vec<f64> = (0..domain.dims()).map(|j| scale * domain.width(j)).collect();
        let r = update_prominent_region(&best, &eta, &domain).unwrap();
        for j in 0..domain.dims() {
            prop_assert!(domain.lower()[j] <= r.lower[j]);
            prop_assert!(r.lower[j] <= best[j] && best[j] <= r.upper[j]);
            prop_assert!(r.upper[j] <= domain.upper()[j]);
            prop_assert_eq!(r.lower[j], domain.lower()[j].max(best[j] - eta[j]));
            prop_assert_eq!(r.upper[j], domain.upper()[j].min(best[j] + eta[j]));
        }
    }

    #[test]
    fn bandwidth_decays_linearly_to_zero(
        domain in domain_strategy(5),
        alpha in 0.0f64..=1.0,
        gamma in 1usize..200,
    ) {
        let params = PssParams::new(alpha, 2, gamma).unwrap();
        let first = compute_bandwidth(&params, 0, &domain).unwrap();
        let last = compute_bandwidth(&params, gamma, &domain).unwrap();
        prop_assert!(last.iter().all(|&e| e == 0.0));
        for (j, &e) in first.iter().enumerate() {
            let w = domain.width(j);
            prop_assert!((e - (1.0 - alpha) / 2.0 * w).abs() <= 1e-12 * w.max(1.0));
        }
        for i in 0..gamma {
            let a = compute_bandwidth(&params, i, &domain).unwrap();
            let b = compute_bandwidth(&params, i + 1, &domain).unwrap();
            for j in 0..domain.dims() {
                let step = first[j] / gamma as f64;
                prop_assert!(b[j] <= a[j]);
                prop_assert!(((a[j] - b[j]) - step).abs() <= 1e-9 * first[j].max(1.0));
            }
        }
    }

    #[test]
    fn run_invariants(
        domain in domain_strategy(4),
        alpha in 0.0f64..=1.0,
        beta in 1usize..12,
        gamma in 1usize..25,
        seed in any::<u64>(),
    ) {
        let params = PssParams::new(alpha, beta, gamma).unwrap();
        let pss = Pss::new(params).unwrap();
        let mut run = pss.start(&objective, &domain, seed).unwrap();
        let per_step = (beta * domain.dims()) as u64;
        let mut draws = run.coefficient_draws();
        prop_assert_eq!(draws, per_step);
        for c in run.population() {
            prop_assert!(domain.contains(&c.x));
        }
        let mut prev = run.state().best.fitness;
        while let Some(report) = run.step().unwrap() {
            prop_assert_eq!(report.prominent_draws + report.domain_draws, beta * domain.dims());
            prop_assert_eq!(run.coefficient_draws() - draws, per_step);
            draws = run.coefficient_draws();
            for c in run.population() {
                prop_assert!(domain.contains(&c.x), "{:?}", c.x);
            }
            let best = run.state().best.fitness;
            prop_assert!(best <= prev);
            prop_assert_eq!(report.improved, best < prev);
            prev = best;
        }
        let record = run.finish();
        prop_assert_eq!(record.history.len(), gamma + 1);
        prop_assert_eq!(record.evaluations, beta * (gamma + 1));
        prop_assert!(record.history.windows(2).all(|w| w[1].best_fitness <= w[0].best_fitness));
        prop_assert_eq!(record.final_best.fitness, objective(&record.final_best.x));
        prop_assert!(domain.contains(&record.final_best.x));

        let again = pss.run(objective, &domain, seed).unwrap();
        prop_assert_eq!(again, record);
    }

    #[test]
    fn acceptance_fraction_matches_alpha(
        alpha in 0.05f64..0.95,
        beta in 30usize..60,
        n in 30usize..40,
        seed in any::<u64>(),
    ) {
        // beta * n >= 900 per generation
        let domain = SearchDomain::uniform(n, -10.0, 10.0).unwrap();
        let pss = Pss::new(PssParams::new(alpha, beta, 3).unwrap()).unwrap();
        let mut run = pss.start(&objective, &domain, seed).unwrap();
        while let Some(report) = run.step().unwrap() {
            let total = (report.prominent_draws + report.domain_draws) as f64;
            let frac = report.domain_draws as f64 / total;
            let sigma = (alpha * (1.0 - alpha) / total).sqrt();
            prop_assert!((frac - (1.0 - alpha)).abs() <= 4.0 * sigma, "{} vs {}", frac, 1.0 - alpha);
        }
    }

    #[test]
    fn scale_to_interval_is_monotone(
        lo in -1e6f64..1e6,
        w in 0.0f64..1e6,
        a in 0.0f64..1.0,
        b in 0.0f64..1.0,
    ) {
        let hi = lo + w;
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        let (x, y) = (scale_to_interval(u, lo, hi).unwrap(), scale_to_interval(v, lo, hi).unwrap());
        prop_assert!(x <= y);
        prop_assert!(lo <= x && y <= hi);
        if w > 0.0 {
            prop_assert!(y < hi);
        }
    }

    #[test]
    fn probability_identities(
        total in 1u64..10_000,
        frac in 0.0f64..=1.0,
        beta in 1u64..200,
        alpha in 0.0f64..=1.0,
    ) {
        let occ = OccupancyCount::new((frac * total as f64).floor() as u64, total).unwrap();
        let p1 = p_at_least_one(occ, 1).unwrap();
        prop_assert!((p1 - p_in_prominent(occ).unwrap()).abs() <= 1e-15);
        let p = p_at_least_one(occ, beta).unwrap();
        let more = p_at_least_one(occ, beta + 1).unwrap();
        prop_assert!((0.0..=1.0).contains(&p));
        prop_assert!(more >= p);
        let e = exploration_probability(occ, beta, alpha).unwrap();
        let i = intensification_probability(occ, beta, alpha).unwrap();
        prop_assert!((e + i - p).abs() <= 1e-15);
    }
}

#[test]
fn parallel_evaluation_is_bit_identical() {
    let domain = SearchDomain::uniform(8, -5.0, 5.0).unwrap();
    let params = PssParams::new(0.9, 40, 50).unwrap();
    let serial = Pss::new(params)
        .unwrap()
        .run(objective, &domain, 17)
        .unwrap();
    let parallel = Pss::new(params)
        .unwrap()
        .parallel_evaluation(true)
        .run(objective, &domain, 17)
        .unwrap();
    assert_eq!(serial, parallel);
}
