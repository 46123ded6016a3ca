//! Pseudo-random probability vectors on the simplex.
//!
//! Vectors are produced by normalized iid uniforms, sequential normalization
//! (stick-breaking) or a squared-trigonometric parametrization. The last two
//! are biased towards particular components; a uniform random permutation of
//! the components removes the bias at the cost of `d - 1` extra uniforms, for
//! `2(d - 1)` per vector.
//!
//! ```
//! use prpv::{sample_unbiased, Method, Mt19937, UniformSource};
//!
//! let mut rng = Mt19937::new(7);
//! let q = sample_unbiased(Method::Normalization, 5, &mut rng).unwrap();
//! assert!((q.components().iter().sum::<f64>() - 1.0).abs() < 1e-12);
//! assert_eq!(rng.draw_count(), 8);
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod io;
pub mod permutation;
pub mod quantum;
pub mod rng;
pub mod sampler;
pub mod stats;
pub mod vector;

pub use error::{Error, Result};
pub use permutation::{random_permutation, shuffle, shuffle_with, Permutation};
pub use quantum::{random_pure_state, state_norm, PureState};
pub use rng::{Mt19937, Scripted, UniformSource};
pub use sampler::{
    sample, sample_iid, sample_normalization_biased, sample_trig_biased, sample_trig_exact,
    sample_unbiased,
};
pub use stats::{max_component_tail, total_variation, ComponentMeans, Histogram};
pub use vector::{Method, ProbabilityVector};
