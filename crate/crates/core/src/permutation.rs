//! Random permutations and component shuffling.

use crate::error::{Error, Result};
use crate::rng::UniformSource;
use crate::vector::{check_dim, ProbabilityVector};

/// A bijection on `0..d`, stored as the image list `(k_0, ..., k_{d-1})`.
///
/// Applying it to `p` yields `q_i = p[k_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// Builds from zero-based images, rejecting anything that is not a bijection.
    pub fn from_indices(indices: Vec<usize>) -> Result<Self> {
        let d = indices.len();
        let mut seen = vec![false; d];
        for &k in &indices {
            if k >= d || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidArgument(format!(
                    "{indices:?} is not a permutation of 0..{d}"
                )));
            }
        }
        Ok(Permutation(indices))
    }

    /// Builds from the conventional one-based notation `(k_1, ..., k_d)`.
    pub fn from_one_based(indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::InvalidArgument("one-based index 0".into()));
        }
        Permutation::from_indices(indices.iter().map(|k| k - 1).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `q_i = values[k_i]`.
    pub fn apply<T: Copy>(&self, values: &[T]) -> Vec<T> {
        assert_eq!(values.len(), self.0.len(), "permutation length mismatch");
        self.0.iter().map(|&k| values[k]).collect()
    }
}

/// Fisher-Yates: for `i = d..=2`, draw `u`, swap positions `i` and `1 + floor(u * i)`
/// (one-based). Consumes exactly `d - 1` uniforms.
pub fn random_permutation<R: UniformSource + ?Sized>(d: usize, rng: &mut R) -> Result<Permutation> {
    check_dim(d)?;
    let mut perm: Vec<usize> = (0..d).collect();
    fisher_yates(&mut perm, rng);
    Ok(Permutation(perm))
}

fn fisher_yates<T, R: UniformSource + ?Sized>(items: &mut [T], rng: &mut R) {
    for i in (1..items.len()).rev() {
        let bound = i + 1;
        // u < 1 keeps j <= i; the min only guards injected sources.
        let j = ((rng.next_uniform() * bound as f64) as usize).min(i);
        items.swap(i, j);
    }
}

/// Reorders the components of `p` under a fresh random permutation.
pub fn shuffle<R: UniformSource + ?Sized>(p: ProbabilityVector, rng: &mut R) -> ProbabilityVector {
    let perm = random_permutation(p.dim(), rng).expect("probability vectors have dim >= 2");
    shuffle_with(p, &perm)
}

/// Reorders the components of `p` under a given permutation.
pub fn shuffle_with(p: ProbabilityVector, perm: &Permutation) -> ProbabilityVector {
    let q = perm.apply(p.components());
    let extra = perm.len() as u64 - 1;
    p.into_shuffled(q, extra)
}
