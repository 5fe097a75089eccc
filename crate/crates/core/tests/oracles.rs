//! Independent oracles: brute force, enumeration and simulation.

use pss_core::analysis::{
    discretize_occupancy, exploration_probability, grid_local_minima, intensification_probability,
    p_at_least_one, OccupancyCount,
};
use pss_core::objectives::engineering::gear_ratio_error;
use pss_core::objectives::{functions, lookup, registry, Dims};
use pss_core::{MonteCarlo, RandomStream, Sampler};

#[test]
fn random_search_never_beats_two_dimensional_optima() {
    let mut s = RandomStream::new(2021);
    for spec in registry() {
        if !spec.dims.admits(2) || spec.constrained().is_some() {
            continue;
        }
        let Some(opt) = spec.reference_optimum(2) else {
            continue;
        };
        let d = spec.domain(2).unwrap();
        let f = spec.evaluator();
        let mut best = f64::INFINITY;
        for _ in 0..1_000_000 {
            let x = [
                d.lower()[0] + s.next_unit() * d.width(0),
                d.lower()[1] + s.next_unit() * d.width(1),
            ];
            best = best.min(f(&x));
        }
        assert!(best >= opt - 1e-9, "{}: {best} < {opt}", spec.id);
    }
}

#[test]
fn gear_train_brute_force() {
    let f = gear_ratio_error;
    let mut best = f64::INFINITY;
    let mut argmins = Vec::new();
    for a in 12..=60 {
        for b in 12..=60 {
            for d in 12..=60 {
                for e in 12..=60 {
                    let x = [a as f64, b as f64, d as f64, e as f64];
                    let v = f(&x);
                    if v < best {
                        best = v;
                        argmins.clear();
                    }
                    if v == best {
                        argmins.push((a, b, d, e));
                    }
                }
            }
        }
    }
    assert!((best - 2.7009e-12).abs() < 5e-17, "{best}");
    assert_eq!(
        lookup("gear_train").unwrap().reference_optimum(4),
        Some(best)
    );
    // every minimizer realises the same ratio as (43, 19, 16, 49)
    for (a, b, d, e) in argmins {
        assert_eq!(b * d * 43 * 49, 19 * 16 * a * e, "{a} {b} {d} {e}");
    }
}

#[test]
fn schwefel_1d_true_prominent_region() {
    let f = |x: f64| functions::schwefel(&[x]);
    let grid = 100_001;
    let minima = grid_local_minima(f, -500.0, 500.0, grid).unwrap();
    assert!((minima[0].0 - 420.97).abs() < 0.01);
    let threshold = minima[1].1;
    assert!((threshold - 118.44).abs() < 0.01, "{threshold}");

    let occ = discretize_occupancy(f, -500.0, 500.0, grid, threshold).unwrap();
    let step = 1000.0 / (grid - 1) as f64;
    // the points below the second-lowest valley form one interval
    let inside: Vec<f64> = (0..grid)
        .map(|k| -500.0 + k as f64 * step)
        .filter(|&x| f(x) < threshold)
        .collect();
    let (lo, hi) = (inside[0], *inside.last().unwrap());
    assert_eq!(inside.len() as u64, occ.n_prime);
    assert_eq!(((hi - lo) / step).round() as usize + 1, inside.len());
    assert!(
        (lo - 389.33).abs() < 0.02 && (hi - 452.16).abs() < 0.02,
        "[{lo}, {hi}]"
    );
    let frac = occ.n_prime as f64 / occ.n_total as f64;
    assert!((frac - (452.16 - 389.33) / 1000.0).abs() < 3e-4, "{frac}");
}

#[test]
fn unit_draws_pass_chi_square() {
    let mut s = RandomStream::new(99);
    let m = MonteCarlo.coefficients(&mut s, 1000, 100).unwrap();
    let mut bins = [0u64; 10];
    for &u in m.values() {
        bins[(u * 10.0) as usize] += 1;
    }
    let expected = 10_000.0;
    let chi2: f64 = bins
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    // 9 degrees of freedom, p = 0.001
    assert!(chi2 < 27.877, "chi2 = {chi2}");
}

/// Counts, for every `n'`, the draws of `beta` indices out of `0..n` that
/// hit `0..n'` at least once, by walking all `n^beta` sequences.
fn enumerate_hits(n: u64, beta: u32) -> Vec<u64> {
    let mut by_min = vec![0u64; n as usize];
    let total = n.pow(beta);
    for code in 0..total {
        let mut c = code;
        let mut m = n;
        for _ in 0..beta {
            m = m.min(c % n);
            c /= n;
        }
        by_min[m as usize] += 1;
    }
    // hits(n') = #{draws with min index < n'}
    let mut hits = vec![0u64; n as usize + 1];
    for k in 0..n as usize {
        hits[k + 1] = hits[k] + by_min[k];
    }
    hits
}

#[test]
fn p_at_least_one_matches_enumeration() {
    for n in 1..=20u64 {
        for beta in 1..=5u32 {
            let hits = enumerate_hits(n, beta);
            let total = n.pow(beta);
            assert_eq!(total - hits[n as usize], 0);
            for n_prime in 0..=n {
                let exact = hits[n_prime as usize];
                assert_eq!(exact, total - (n - n_prime).pow(beta));
                let p =
                    p_at_least_one(OccupancyCount::new(n_prime, n).unwrap(), beta as u64).unwrap();
                let oracle = exact as f64 / total as f64;
                assert!(
                    (p - oracle).abs() <= 4.0 * f64::EPSILON * oracle.max(f64::MIN_POSITIVE),
                    "n'={n_prime} N={n} beta={beta}: {p} vs {oracle}"
                );
            }
        }
    }
}

#[test]
fn p_at_least_one_matches_simulation() {
    let (n_prime, n, beta) = (10u64, 100u64, 30u64);
    let p = p_at_least_one(OccupancyCount::new(n_prime, n).unwrap(), beta).unwrap();
    let trials = 1_000_000u64;
    let mut s = RandomStream::new(5);
    let hits = (0..trials)
        .filter(|_| {
            let mut hit = false;
            for _ in 0..beta {
                hit |= s.next_below(n) < n_prime;
            }
            hit
        })
        .count() as f64;
    let se = (p * (1.0 - p) / trials as f64).sqrt();
    assert!(
        (hits / trials as f64 - p).abs() < 4.0 * se,
        "{} vs {p}",
        hits / trials as f64
    );
}

#[test]
fn split_probabilities_by_alpha() {
    let occ = OccupancyCount::new(10, 100).unwrap();
    let p = p_at_least_one(occ, 30).unwrap();
    assert!((exploration_probability(occ, 30, 0.95).unwrap() - 0.05 * p).abs() < 1e-15);
    assert!((intensification_probability(occ, 30, 0.95).unwrap() - 0.95 * p).abs() < 1e-15);
    // hand value: 1 - 0.9^30
    assert!((p - (1.0 - 0.9f64.powi(30))).abs() < 1e-15);
}

#[test]
fn every_registered_dimension_rule_has_a_domain() {
    for spec in registry() {
        let n = match spec.dims {
            Dims::Fixed(n) => n,
            Dims::Any { min } => min,
        };
        assert_eq!(spec.domain(n).unwrap().dims(), n);
    }
}
