//! Wall-clock cost of generating unbiased vectors, per method and dimension.
//!
//! The timed region covers the complete pipeline (uniform draws, biased
//! sample, shuffle). Nothing is written inside it.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Mt19937;
use crate::sampler::sample_unbiased;
use crate::vector::{check_dim, Method};

/// Shortest timing window accepted before `reps` is doubled.
pub const MIN_WINDOW: Duration = Duration::from_millis(10);

/// Independent runs per median.
pub const DEFAULT_RUNS: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub method: Method,
    pub dim: usize,
    pub reps: u64,
    pub total_seconds: f64,
    pub per_vector_seconds: f64,
}

fn run_batch(method: Method, d: usize, reps: u64, rng: &mut Mt19937) -> Result<Duration> {
    let start = Instant::now();
    for _ in 0..reps {
        black_box(sample_unbiased(method, black_box(d), rng)?);
    }
    Ok(start.elapsed())
}

/// Times `reps` unbiased samples, doubling `reps` until the window reaches
/// [`MIN_WINDOW`]. One untimed warm-up batch runs first.
pub fn time_method(method: Method, d: usize, reps: u64, rng: &mut Mt19937) -> Result<BenchRecord> {
    check_dim(d)?;
    if !matches!(method, Method::Normalization | Method::Trig) {
        return Err(Error::InvalidArgument(format!("cannot benchmark {method}")));
    }
    let mut reps = reps.max(1);
    run_batch(method, d, reps, rng)?;
    loop {
        let elapsed = run_batch(method, d, reps, rng)?;
        if elapsed >= MIN_WINDOW {
            let total_seconds = elapsed.as_secs_f64();
            return Ok(BenchRecord {
                method,
                dim: d,
                reps,
                total_seconds,
                per_vector_seconds: total_seconds / reps as f64,
            });
        }
        reps *= 2;
    }
}

/// Median (by per-vector time) of `runs` independent timings, each with its own
/// generator seeded `seed + run`.
pub fn time_method_median(
    method: Method,
    d: usize,
    reps: u64,
    seed: u32,
    runs: usize,
) -> Result<BenchRecord> {
    if runs == 0 {
        return Err(Error::InvalidArgument("need at least one run".into()));
    }
    let mut records = (0..runs)
        .map(|r| {
            let mut rng = Mt19937::new(seed.wrapping_add(r as u32));
            time_method(method, d, reps, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.per_vector_seconds.total_cmp(&b.per_vector_seconds));
    Ok(records.swap_remove(runs / 2))
}

/// Dimensions `2, 4, 8, ...` up to and including `max_dim` when it is a power of two.
pub fn power_of_two_dims(max_dim: usize) -> Vec<usize> {
    std::iter::successors(Some(2usize), |d| d.checked_mul(2))
        .take_while(|&d| d <= max_dim)
        .collect()
}

/// Least-squares slope of `ln(per_vector_seconds)` against `ln(dim)`.
pub fn loglog_slope(records: &[BenchRecord]) -> Result<f64> {
    if records.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let pts: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.dim as f64).ln(), r.per_vector_seconds.ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all dimensions equal".into()));
    }
    Ok(sxy / sxx)
}
