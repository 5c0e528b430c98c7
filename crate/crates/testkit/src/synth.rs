//! Seeded generators for random clouds, diagrams and synthetic markets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in `[-1, 1]^dim`.
pub fn random_cloud<R: Rng>(rng: &mut R, n: usize, dim: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect()
}

/// `count` bars with births in `[0, 5)` and lengths in `(0, 3)`.
pub fn random_diagram<R: Rng>(rng: &mut R, count: usize) -> Vec<(f64, f64)> {
    (0..count)
        .map(|_| {
            let b = rng.random_range(0.0..5.0);
            let len = rng.random_range(1e-3..3.0);
            (b, b + len)
        })
        .collect()
}

/// i.i.d. Gaussian returns, `steps × assets`.
pub fn gaussian_returns<R: Rng>(
    rng: &mut R,
    steps: usize,
    assets: usize,
    sigma: f64,
) -> Vec<Vec<f64>> {
    let normal = Normal::new(0.0, sigma).unwrap();
    (0..steps)
        .map(|_| (0..assets).map(|_| normal.sample(rng)).collect())
        .collect()
}

/// Return rows with variance multiplied by `variance_factor` on rows
/// `start..=end` (inclusive).
pub fn variance_burst_returns(
    seed: u64,
    steps: usize,
    assets: usize,
    sigma: f64,
    start: usize,
    end: usize,
    variance_factor: f64,
) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    let mut rows = gaussian_returns(&mut r, steps, assets, sigma);
    let scale = variance_factor.sqrt();
    for row in rows.iter_mut().take(end + 1).skip(start) {
        for v in row.iter_mut() {
            *v *= scale;
        }
    }
    rows
}

/// Stationary Gaussian returns except that asset 0, from row `start` on,
/// adds a deterministic drift `sigma * exp(rate * (i - start))`.
pub fn exploding_asset_returns(
    seed: u64,
    steps: usize,
    assets: usize,
    sigma: f64,
    start: usize,
    rate: f64,
) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    let mut rows = gaussian_returns(&mut r, steps, assets, sigma);
    for (i, row) in rows.iter_mut().enumerate().skip(start) {
        row[0] += sigma * ((rate * (i - start) as f64).exp());
    }
    rows
}

/// Prices `p0 * exp(cumsum(returns))`, one more row than `returns`.
pub fn prices_from_returns(p0: f64, returns: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let assets = returns.first().map_or(0, Vec::len);
    let mut level = vec![0.0f64; assets];
    let mut out = vec![vec![p0; assets]];
    for row in returns {
        for (l, r) in level.iter_mut().zip(row) {
            *l += r;
        }
        out.push(level.iter().map(|l| p0 * l.exp()).collect());
    }
    out
}

/// Random-walk price table, `rows × assets`.
pub fn random_walk_prices(seed: u64, rows: usize, assets: usize) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    let returns = gaussian_returns(&mut r, rows.saturating_sub(1), assets, 0.01);
    prices_from_returns(100.0, &returns)
}
