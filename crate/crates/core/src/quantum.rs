//! Random pure states `|psi> = sum_j sqrt(q_j) e^{i phi_j} |j>` built from an
//! unbiased probability vector `q` and independent uniform phases.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rng::UniformSource;
use crate::sampler::sample_unbiased;
use crate::vector::{Method, ProbabilityVector};

/// Unit vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    weights: Vec<f64>,
}

impl PureState {
    /// Amplitudes `sqrt(p_j) e^{i phi_j}`.
    pub fn from_parts(p: &ProbabilityVector, phases: &[f64]) -> Result<Self> {
        if phases.len() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: phases.len(),
            });
        }
        let amplitudes = p
            .components()
            .iter()
            .zip(phases)
            .map(|(&w, &phi)| Complex64::from_polar(w.sqrt(), phi))
            .collect();
        Ok(PureState {
            amplitudes,
            weights: p.components().to_vec(),
        })
    }

    /// Wraps raw amplitudes. Weights are taken as `|c_j|^2`.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        let weights = amplitudes.iter().map(|c| c.norm_sqr()).collect();
        PureState {
            amplitudes,
            weights,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// The probability vector the state was built from.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `|c_j|^2` recomputed from the amplitudes.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Phase `arg(c_j)` in `(-pi, pi]`.
    pub fn phases(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.arg()).collect()
    }
}

pub fn state_norm(psi: &PureState) -> f64 {
    psi.amplitudes
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Draws `q = sample_unbiased(method, d)` then `d` phases `2 pi u_j`.
///
/// Consumes `2(d - 1) + d` uniforms.
pub fn random_pure_state<R: UniformSource + ?Sized>(
    d: usize,
    method: Method,
    rng: &mut R,
) -> Result<PureState> {
    let q = sample_unbiased(method, d, rng)?;
    let phases: Vec<f64> = (0..d).map(|_| TAU * rng.next_uniform()).collect();
    PureState::from_parts(&q, &phases)
}
