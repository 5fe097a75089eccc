//! Standard benchmark landscapes.
//!
//! Every function is pure and takes the full point; dimensionality is checked
//! by the registry, not here.

use std::f64::consts::{E, PI};

/// Constant of the Schwefel f11 form; `418.9829 * n` approximately cancels
/// the sum at the minimizer.
pub const SCHWEFEL_OFFSET: f64 = 418.9829;

/// Location of the 1-D Schwefel minimum, the first critical point of
/// `x * sin(sqrt(x))` past 400.
pub const SCHWEFEL_MINIMIZER: f64 = 420.968_746_359_982;

/// `x * sin(sqrt(x))` at [`SCHWEFEL_MINIMIZER`].
pub const SCHWEFEL_PEAK: f64 = 418.982_887_272_433_8;

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn sum_squares(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

pub fn chung_reynolds(x: &[f64]) -> f64 {
    sphere(x).powi(2)
}

/// Schwefel 2.21: largest absolute component.
pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Schwefel 2.22: sum plus product of absolute components.
pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
        .sum()
}

pub fn trid(x: &[f64]) -> f64 {
    let a: f64 = x.iter().map(|v| (v - 1.0).powi(2)).sum();
    let b: f64 = x.windows(2).map(|w| w[0] * w[1]).sum();
    a - b
}

pub fn zakharov(x: &[f64]) -> f64 {
    let s1 = sphere(x);
    let s2: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum();
    s1 + s2.powi(2) + s2.powi(4)
}

pub fn griewank(x: &[f64]) -> f64 {
    let s = sphere(x) / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    1.0 + s - p
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let s1 = sphere(x) / n;
    let s2 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * s1.sqrt()).exp() - s2.exp() + 20.0 + E
}

fn schwefel_sum(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v.abs().sqrt().sin()).sum()
}

/// Schwefel with the `418.9829 n` offset (minimum close to 0).
pub fn schwefel(x: &[f64]) -> f64 {
    SCHWEFEL_OFFSET * x.len() as f64 - schwefel_sum(x)
}

/// Schwefel without offset (minimum `-418.9829 n`).
pub fn schwefel_shifted(x: &[f64]) -> f64 {
    -schwefel_sum(x)
}

/// Product form `prod_i sum_{j=1..5} cos((j + 1) x_i + j)`. The common
/// literature variant also weights each cosine by `j`; this one does not.
pub fn shubert(x: &[f64]) -> f64 {
    x.iter()
        .map(|&v| {
            (1..=5)
                .map(|j| {
                    let j = j as f64;
                    ((j + 1.0) * v + j).cos()
                })
                .sum::<f64>()
        })
        .product()
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let t1 = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let t2 = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    t1 * t2
}

const FOXHOLE_GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

/// De Jong's fifth function (Shekel's foxholes).
pub fn de_jong_5(x: &[f64]) -> f64 {
    let s: f64 = (0..25)
        .map(|j| {
            let (a1, a2) = (FOXHOLE_GRID[j % 5], FOXHOLE_GRID[j / 5]);
            1.0 / ((j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6))
        })
        .sum();
    1.0 / (1.0 / 500.0 + s)
}

const HARTMANN3_ALPHA: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381, 0.5743, 0.8828],
];

pub fn hartmann_3(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..3)
                .map(|j| HARTMANN3_A[i][j] * (x[j] - HARTMANN3_P[i][j]).powi(2))
                .sum();
            HARTMANN3_ALPHA[i] * (-e).exp()
        })
        .sum::<f64>()
}
