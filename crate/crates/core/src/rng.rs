//! Reproducible random streams keyed on `(master_seed, cell, replication)`.
//!
//! Every replication of every grid cell gets its own ChaCha8 stream: the
//! master seed and cell index form the key, the replication index selects the
//! 64-bit stream id. Deriving a stream is a pure function of those three
//! numbers, so results do not depend on scheduling or worker count.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::normal;

const KEY_TAG: &[u8; 16] = b"unfriend/stream1";
const TWO_POW_53_INV: f64 = 1.0 / (1u64 << 53) as f64;

/// A deterministic source of uniforms and normals for one replication.
#[derive(Clone, Debug)]
pub struct RngStream {
    inner: ChaCha8Rng,
}

/// Derives the stream for replication `rep` of grid cell `cell`.
pub fn derive_stream(master_seed: u64, cell: u64, rep: u64) -> RngStream {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&master_seed.to_le_bytes());
    key[8..16].copy_from_slice(&cell.to_le_bytes());
    key[16..].copy_from_slice(KEY_TAG);
    let mut inner = ChaCha8Rng::from_seed(key);
    inner.set_stream(rep);
    RngStream { inner }
}

impl RngStream {
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 bits of resolution.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * TWO_POW_53_INV
    }

    /// Uniform on the open interval `(0, 1)`; never returns an endpoint.
    #[inline]
    pub fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * TWO_POW_53_INV
    }

    /// Standard normal draw by inverse-CDF transform of one open uniform.
    #[inline]
    pub fn standard_normal(&mut self) -> f64 {
        normal::quantile(self.uniform_open())
    }

    /// `N(mean, sd²)` draw. Consumes exactly one uniform, also when `sd == 0`.
    #[inline]
    pub fn normal(&mut self, mean: f64, sd: f64) -> f64 {
        mean + sd * self.standard_normal()
    }
}
