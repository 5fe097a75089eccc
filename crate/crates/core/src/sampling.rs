//! Seeded random streams and design-of-experiments sampling.
//!
//! All randomness in the crate flows through [`RandomStream`], a ChaCha8
//! generator (`rand_chacha` 0.3.1, pinned) seeded with `seed_from_u64`. A
//! unit draw takes the top 53 bits of one `u64` output and scales them by
//! 2^-53, giving a value in `[0, 1)`. Both steps are fixed here rather than
//! delegated to `rand`'s distribution code so a seed produces the same
//! stream on every platform and release of this crate.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{invalid, Result};

const UNIT_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

/// A single-owner, reproducible stream of uniform draws.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    position: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            position: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of draws consumed so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn next_u64(&mut self) -> u64 {
        self.position += 1;
        self.rng.next_u64()
    }

    /// Uniform draw in `[0, 1)`.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * UNIT_SCALE
    }

    /// Uniform integer in `0..n` by rejection, so the result is unbiased.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below requires n > 0");
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Independent child stream for `index`; see [`derive_seed`].
    pub fn child(&self, index: u64) -> RandomStream {
        RandomStream::new(derive_seed(self.seed, index))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed splitting rule: `splitmix64(base ^ splitmix64(index))`.
///
/// Used for replicate seeds (`index` = replicate number) and for the
/// independent streams inside one run. The result depends only on
/// `(base, index)`, never on execution order.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64(base ^ splitmix64(index))
}

/// Row-major `rows x cols` matrix of coefficients in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl CoefficientMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.values[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.values[row * self.cols..(row + 1) * self.cols]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// A design-of-experiments method producing coefficient matrices.
///
/// Only Monte Carlo sampling is provided. Space-filling designs such as
/// Latin hypercubes fit the same contract: fill a `rows x cols` matrix in
/// `[0, 1)` from the caller's stream.
pub trait Sampler {
    fn coefficients(
        &self,
        stream: &mut RandomStream,
        rows: usize,
        cols: usize,
    ) -> Result<CoefficientMatrix>;
}

/// Plain i.i.d. uniform sampling.
#[derive(Debug, Clone, Copy, Default)]
pub struct MonteCarlo;

impl Sampler for MonteCarlo {
    fn coefficients(
        &self,
        stream: &mut RandomStream,
        rows: usize,
        cols: usize,
    ) -> Result<CoefficientMatrix> {
        uniform_matrix(stream, rows, cols)
    }
}

/// Fills a matrix with i.i.d. uniform draws, consuming exactly
/// `rows * cols` draws in row-major order.
pub fn uniform_matrix(
    stream: &mut RandomStream,
    rows: usize,
    cols: usize,
) -> Result<CoefficientMatrix> {
    if rows == 0 || cols == 0 {
        return Err(invalid(format!(
            "coefficient matrix must be non-empty, got {rows} x {cols}"
        )));
    }
    let values = (0..rows * cols).map(|_| stream.next_unit()).collect();
    Ok(CoefficientMatrix { rows, cols, values })
}

/// Maps a unit coefficient onto `[lower, upper)`.
///
/// Rounding can push `lower + u * (upper - lower)` onto `upper` for `u`
/// close to one; such results are pulled back to the largest float below
/// `upper`. A degenerate interval returns `lower`.
pub fn scale_to_interval(u: f64, lower: f64, upper: f64) -> Result<f64> {
    if lower.is_nan() || upper.is_nan() || lower > upper {
        return Err(invalid(format!(
            "interval lower bound {lower} exceeds upper bound {upper}"
        )));
    }
    if lower == upper {
        return Ok(lower);
    }
    let v = lower + u * (upper - lower);
    if v >= upper {
        Ok(upper.next_down().max(lower))
    } else {
        Ok(v.max(lower))
    }
}
