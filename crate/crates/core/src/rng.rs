//! Uniform pseudo-random sources.
//!
//! Every sampler in this crate pulls its randomness through [`UniformSource`],
//! which yields half-open uniforms in `[0, 1)` and counts how many it has
//! produced. The counter is what makes per-vector draw costs observable.
//!
//! [`Mt19937`] is the concrete generator: the standard 32-bit Mersenne
//! Twister with the reference `init_genrand` seeding and tempering, so its
//! raw output matches every conforming implementation bit for bit.
//! [`Scripted`] replays a fixed list of uniforms and is used to drive the
//! samplers through hand-traced cases.

/// A counted source of uniform variates in `[0, 1)`.
pub trait UniformSource {
    /// Next uniform in `[0, 1)`. Increments the draw counter by one.
    fn next_uniform(&mut self) -> f64;

    /// Number of uniforms produced since construction.
    fn draw_count(&self) -> u64;
}

impl<R: UniformSource + ?Sized> UniformSource for &mut R {
    fn next_uniform(&mut self) -> f64 {
        (**self).next_uniform()
    }

    fn draw_count(&self) -> u64 {
        (**self).draw_count()
    }
}

const N: usize = 624;
const M: usize = 397;
const MATRIX_A: u32 = 0x9908_b0df;
const UPPER_MASK: u32 = 0x8000_0000;
const LOWER_MASK: u32 = 0x7fff_ffff;

/// 2^-32, the scale that maps a raw 32-bit word onto `[0, 1)`.
const INV_2_32: f64 = 1.0 / 4_294_967_296.0;

/// Default seed of the reference implementation.
pub const DEFAULT_SEED: u32 = 5489;

/// 32-bit Mersenne Twister (MT19937).
#[derive(Clone)]
pub struct Mt19937 {
    seed: u32,
    state: Box<[u32; N]>,
    index: usize,
    draws: u64,
}

impl Mt19937 {
    /// Seeds the generator with the reference `init_genrand` recurrence.
    pub fn new(seed: u32) -> Self {
        let mut state = Box::new([0u32; N]);
        state[0] = seed;
        for i in 1..N {
            let prev = state[i - 1];
            state[i] = 1_812_433_253u32
                .wrapping_mul(prev ^ (prev >> 30))
                .wrapping_add(i as u32);
        }
        Mt19937 {
            seed,
            state,
            index: N,
            draws: 0,
        }
    }

    pub fn seed(&self) -> u32 {
        self.seed
    }

    fn twist(&mut self) {
        for i in 0..N {
            let y = (self.state[i] & UPPER_MASK) | (self.state[(i + 1) % N] & LOWER_MASK);
            let mut next = self.state[(i + M) % N] ^ (y >> 1);
            if y & 1 != 0 {
                next ^= MATRIX_A;
            }
            self.state[i] = next;
        }
        self.index = 0;
    }

    /// Next tempered 32-bit output.
    ///
    /// Raw words do not touch the draw counter; only [`UniformSource::next_uniform`]
    /// counts, since the counter tracks uniform variates handed to samplers.
    pub fn next_u32(&mut self) -> u32 {
        if self.index >= N {
            self.twist();
        }
        let mut y = self.state[self.index];
        self.index += 1;

        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c_5680;
        y ^= (y << 15) & 0xefc6_0000;
        y ^= y >> 18;
        y
    }
}

impl Default for Mt19937 {
    fn default() -> Self {
        Mt19937::new(DEFAULT_SEED)
    }
}

impl std::fmt::Debug for Mt19937 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Mt19937")
            .field("seed", &self.seed)
            .field("index", &self.index)
            .field("draws", &self.draws)
            .finish_non_exhaustive()
    }
}

impl UniformSource for Mt19937 {
    #[inline]
    fn next_uniform(&mut self) -> f64 {
        self.draws += 1;
        f64::from(self.next_u32()) * INV_2_32
    }

    fn draw_count(&self) -> u64 {
        self.draws
    }
}

/// Replays a fixed sequence of uniforms.
///
/// Panics when the script runs out; a test that consumes more draws than it
/// scripted has a wrong trace.
#[derive(Debug, Clone)]
pub struct Scripted {
    values: Vec<f64>,
    pos: usize,
}

impl Scripted {
    pub fn new(values: impl Into<Vec<f64>>) -> Self {
        Scripted {
            values: values.into(),
            pos: 0,
        }
    }

    /// Draws not yet consumed.
    pub fn remaining(&self) -> usize {
        self.values.len() - self.pos
    }
}

impl UniformSource for Scripted {
    fn next_uniform(&mut self) -> f64 {
        let v = *self
            .values
            .get(self.pos)
            .unwrap_or_else(|| panic!("scripted source exhausted after {} draws", self.pos));
        self.pos += 1;
        v
    }

    fn draw_count(&self) -> u64 {
        self.pos as u64
    }
}
