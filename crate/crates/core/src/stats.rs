//! Empirical summaries of generated vectors: per-component means, marginal
//! histograms, total variation between histograms, tail fractions, and
//! ternary-plot coordinates for `d = 3`.
//!
//! Accumulators can be filled independently and combined with `merge`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::ProbabilityVector;

/// Default number of histogram bins.
pub const DEFAULT_BINS: usize = 64;

/// Running per-component sums over a stream of probability vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentMeans {
    sums: Vec<f64>,
    count: u64,
}

impl ComponentMeans {
    pub fn new(dim: usize) -> Self {
        ComponentMeans {
            sums: vec![0.0; dim],
            count: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.sums.len()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn accumulate(&mut self, p: &ProbabilityVector) -> Result<()> {
        self.accumulate_slice(p.components())
    }

    pub fn accumulate_slice(&mut self, p: &[f64]) -> Result<()> {
        if p.len() != self.sums.len() {
            return Err(Error::DimensionMismatch {
                expected: self.sums.len(),
                found: p.len(),
            });
        }
        self.sums.iter_mut().zip(p).for_each(|(s, v)| *s += v);
        self.count += 1;
        Ok(())
    }

    /// Per-component means; all zero before the first accumulation.
    pub fn means(&self) -> Vec<f64> {
        if self.count == 0 {
            return vec![0.0; self.sums.len()];
        }
        let n = self.count as f64;
        self.sums.iter().map(|s| s / n).collect()
    }

    pub fn merge(&mut self, other: &ComponentMeans) -> Result<()> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        self.sums
            .iter_mut()
            .zip(&other.sums)
            .for_each(|(a, b)| *a += b);
        self.count += other.count;
        Ok(())
    }
}

/// Equal-width histogram over `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn new(bins: usize) -> Result<Self> {
        if bins < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 bins, got {bins}"
            )));
        }
        Ok(Histogram {
            counts: vec![0; bins],
            total: 0,
        })
    }

    pub fn from_values<I>(values: I, bins: usize) -> Result<Self>
    where
        I: IntoIterator<Item = f64>,
    {
        let mut h = Histogram::new(bins)?;
        for v in values {
            h.push(v)?;
        }
        Ok(h)
    }

    /// Rebuilds a histogram from stored counts.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidArgument("need at least 2 bins".into()));
        }
        let total = counts.iter().sum();
        Ok(Histogram { counts, total })
    }

    /// Adds `v` to bin `floor(v * B)`; `v = 1` goes to the last bin.
    pub fn push(&mut self, v: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::ValueOutOfRange(v));
        }
        let b = self.counts.len();
        let idx = ((v * b as f64) as usize).min(b - 1);
        self.counts[idx] += 1;
        self.total += 1;
        Ok(())
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn bin_width(&self) -> f64 {
        1.0 / self.counts.len() as f64
    }

    /// `[low, high)` of bin `i`.
    pub fn bin_edges(&self, i: usize) -> (f64, f64) {
        let b = self.counts.len() as f64;
        (i as f64 / b, (i + 1) as f64 / b)
    }

    /// Fraction of observations in each bin.
    pub fn frequencies(&self) -> Vec<f64> {
        let n = self.total.max(1) as f64;
        self.counts.iter().map(|&c| c as f64 / n).collect()
    }

    /// Probability density estimate per bin (frequency / width).
    pub fn densities(&self) -> Vec<f64> {
        let w = self.bin_width();
        self.frequencies().into_iter().map(|f| f / w).collect()
    }

    pub fn merge(&mut self, other: &Histogram) -> Result<()> {
        if other.bins() != self.bins() {
            return Err(Error::BinMismatch(self.bins(), other.bins()));
        }
        self.counts
            .iter_mut()
            .zip(&other.counts)
            .for_each(|(a, b)| *a += b);
        self.total += other.total;
        Ok(())
    }
}

/// `(1/2) sum_b |h1_b / n1 - h2_b / n2|`.
pub fn total_variation(h1: &Histogram, h2: &Histogram) -> Result<f64> {
    if h1.bins() != h2.bins() {
        return Err(Error::BinMismatch(h1.bins(), h2.bins()));
    }
    if h1.total == 0 || h2.total == 0 {
        return Err(Error::EmptyHistogram);
    }
    let (n1, n2) = (h1.total as f64, h2.total as f64);
    let l1: f64 = h1
        .counts
        .iter()
        .zip(&h2.counts)
        .map(|(&a, &b)| (a as f64 / n1 - b as f64 / n2).abs())
        .sum();
    Ok((0.5 * l1).min(1.0))
}

/// Counts how many vectors have a component above a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailCounter {
    threshold: f64,
    hits: u64,
    total: u64,
}

impl TailCounter {
    pub fn new(threshold: f64) -> Result<Self> {
        if !(threshold > 0.0 && threshold < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "threshold must lie in (0, 1), got {threshold}"
            )));
        }
        Ok(TailCounter {
            threshold,
            hits: 0,
            total: 0,
        })
    }

    pub fn observe(&mut self, p: &[f64]) {
        self.total += 1;
        if p.iter().any(|&c| c > self.threshold) {
            self.hits += 1;
        }
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn fraction(&self) -> Result<f64> {
        if self.total == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(self.hits as f64 / self.total as f64)
    }
}

/// Fraction of `samples` whose largest component exceeds `threshold`.
pub fn max_component_tail(samples: &[ProbabilityVector], threshold: f64) -> Result<f64> {
    let mut counter = TailCounter::new(threshold)?;
    let dim = samples.first().ok_or(Error::EmptyInput)?.dim();
    for p in samples {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        counter.observe(p.components());
    }
    counter.fraction()
}

/// Ternary-plot coordinates: `x = p2 + p3/2`, `y = (sqrt(3)/2) p3`.
///
/// Corners land at `(0, 0)`, `(1, 0)` and `(1/2, sqrt(3)/2)` for `p1`, `p2`, `p3`.
pub fn simplex_point(p: &[f64]) -> Result<(f64, f64)> {
    match *p {
        [_, p2, p3] => Ok((p2 + 0.5 * p3, 0.5 * 3f64.sqrt() * p3)),
        _ => Err(Error::DimensionMismatch {
            expected: 3,
            found: p.len(),
        }),
    }
}

pub fn export_simplex_points(samples: &[ProbabilityVector]) -> Result<Vec<(f64, f64)>> {
    samples
        .iter()
        .map(|p| simplex_point(p.components()))
        .collect()
}
