//! Generators for pseudo-random probability vectors.
//!
//! Four procedures are provided:
//!
//! * [`sample_iid`]: `d` independent uniforms divided by their sum. Components
//!   are exchangeable, but vectors with a component near one are practically
//!   never produced.
//! * [`sample_normalization_biased`]: stick-breaking. `p_1 = u_1`, each later
//!   component takes a uniform fraction of what is left, the last one takes
//!   the remainder. Means fall off as `1/2, 1/4, ...`.
//! * [`sample_trig_biased`]: `p_j = sin^2(theta_{j-1}) * prod_{k>=j} cos^2(theta_k)`
//!   with `theta_0 = pi/2` and `theta_j = arccos(sqrt(t_j))`. Same law as the
//!   normalization method with the components reversed.
//! * [`sample_trig_exact`]: the same parametrization with angles chosen so each
//!   component would be uniform on `[0, 1]`. The required arcsin arguments
//!   exceed one most of the time, which is reported as [`Error::Domain`].
//!
//! [`sample_unbiased`] follows a biased normalization or trig sample with a
//! uniform random permutation, for `2(d - 1)` uniforms in total.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::permutation::shuffle;
use crate::rng::UniformSource;
use crate::vector::{check_dim, Method, ProbabilityVector};

/// Consecutive all-zero draws tolerated by [`sample_iid`] before giving up.
pub const IID_RETRY_LIMIT: u32 = 16;

pub fn sample_iid<R: UniformSource + ?Sized>(d: usize, rng: &mut R) -> Result<ProbabilityVector> {
    check_dim(d)?;
    let start = rng.draw_count();
    let mut x = vec![0.0; d];
    for _ in 0..IID_RETRY_LIMIT {
        x.iter_mut().for_each(|v| *v = rng.next_uniform());
        let sum: f64 = x.iter().sum();
        if sum > 0.0 {
            x.iter_mut().for_each(|v| *v /= sum);
            return Ok(ProbabilityVector::from_sampler(
                x,
                Method::Iid,
                rng.draw_count() - start,
            ));
        }
    }
    Err(Error::DegenerateSum {
        retries: IID_RETRY_LIMIT,
    })
}

pub fn sample_normalization_biased<R: UniformSource + ?Sized>(
    d: usize,
    rng: &mut R,
) -> Result<ProbabilityVector> {
    check_dim(d)?;
    let mut p = Vec::with_capacity(d);
    let mut partial = 0.0;
    for _ in 0..d - 1 {
        let pj = rng.next_uniform() * (1.0 - partial);
        partial += pj;
        p.push(pj);
    }
    p.push((1.0 - partial).max(0.0));
    Ok(ProbabilityVector::from_sampler(
        p,
        Method::Normalization,
        (d - 1) as u64,
    ))
}

pub fn sample_trig_biased<R: UniformSource + ?Sized>(
    d: usize,
    rng: &mut R,
) -> Result<ProbabilityVector> {
    check_dim(d)?;
    let mut angles = Vec::with_capacity(d);
    angles.push(FRAC_PI_2);
    for _ in 1..d {
        angles.push(rng.next_uniform().sqrt().acos());
    }
    Ok(ProbabilityVector::from_sampler(
        components_from_angles(angles),
        Method::Trig,
        (d - 1) as u64,
    ))
}

/// Exact inversion: `theta_{d-1} = arcsin(sqrt(t_{d-1}))`, then for
/// `j = d-2, ..., 1`, `theta_j = arcsin(sqrt(t_j / prod_{k>j} cos^2(theta_k)))`.
///
/// Stops at the first argument above one and returns [`Error::Domain`] with the
/// one-based angle index and the offending argument. Draws are consumed in
/// the order `t_{d-1}, t_{d-2}, ..., t_1`, so a failure leaves the remaining
/// draws untouched.
pub fn sample_trig_exact<R: UniformSource + ?Sized>(
    d: usize,
    rng: &mut R,
) -> Result<ProbabilityVector> {
    check_dim(d)?;
    let mut angles = vec![0.0; d];
    angles[0] = FRAC_PI_2;
    let mut cos2_tail = 1.0;
    for j in (1..d).rev() {
        let argument = rng.next_uniform() / cos2_tail;
        // NaN (0/0 after underflow) counts as a failure too
        if argument.is_nan() || argument > 1.0 {
            return Err(Error::Domain { index: j, argument });
        }
        let theta = argument.sqrt().asin();
        angles[j] = theta;
        cos2_tail *= theta.cos().powi(2);
    }
    Ok(ProbabilityVector::from_sampler(
        components_from_angles(angles),
        Method::TrigExact,
        (d - 1) as u64,
    ))
}

/// Evaluates `p_j = sin^2(theta_{j-1}) prod_{k=j}^{d-1} cos^2(theta_k)` in place,
/// where `angles[k]` holds `theta_k` and `angles[0] = pi/2`.
fn components_from_angles(mut angles: Vec<f64>) -> Vec<f64> {
    let mut cos2_tail = 1.0;
    for theta in angles.iter_mut().rev() {
        let (sin, cos) = theta.sin_cos();
        *theta = sin * sin * cos2_tail;
        cos2_tail *= cos * cos;
    }
    // slot i now holds sin^2(theta_i) * prod_{k>i} cos^2(theta_k), i.e. p_{i+1}
    angles
}

/// Biased sample followed by a uniform random permutation of the components.
///
/// Only [`Method::Normalization`] and [`Method::Trig`] are accepted: iid vectors
/// are already exchangeable and the exact trig scheme is not a usable sampler.
pub fn sample_unbiased<R: UniformSource + ?Sized>(
    method: Method,
    d: usize,
    rng: &mut R,
) -> Result<ProbabilityVector> {
    let biased = match method {
        Method::Normalization => sample_normalization_biased(d, rng)?,
        Method::Trig => sample_trig_biased(d, rng)?,
        Method::Iid | Method::TrigExact => {
            return Err(Error::InvalidArgument(format!(
                "unbiased sampling is defined for norm and trig, not {method}"
            )))
        }
    };
    Ok(shuffle(biased, rng))
}

/// Dispatches on `method`, optionally shuffling.
///
/// `shuffle` is ignored for iid. It is rejected for trig-exact.
pub fn sample<R: UniformSource + ?Sized>(
    method: Method,
    d: usize,
    shuffled: bool,
    rng: &mut R,
) -> Result<ProbabilityVector> {
    match (method, shuffled) {
        (Method::Iid, _) => sample_iid(d, rng),
        (Method::TrigExact, true) => Err(Error::InvalidArgument(
            "trig-exact cannot be combined with shuffling".into(),
        )),
        (Method::TrigExact, false) => sample_trig_exact(d, rng),
        (_, true) => sample_unbiased(method, d, rng),
        (Method::Normalization, false) => sample_normalization_biased(d, rng),
        (Method::Trig, false) => sample_trig_biased(d, rng),
    }
}
