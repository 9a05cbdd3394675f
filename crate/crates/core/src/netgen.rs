//! Dyadic dissimilarity and latent-variable probit tie generation.
//!
//! A tie `i → j` exists when `η₀ + η₁·d_ij > ε_ij` with `ε_ij ~ N(0, 1)`
//! drawn independently for every ordered pair. With `ε = Φ⁻¹(U)` for a stream
//! uniform `U`, that event is exactly `U < Φ(η₀ + η₁·d_ij)`, which is how the
//! draw is evaluated here. One uniform is consumed per off-diagonal pair in
//! row-major order, so a given stream always yields the same network.

use crate::error::{Error, Result};
use crate::network::DirectedNetwork;
use crate::normal;
use crate::rng::RngStream;

/// `d_ij = -|y_i - y_j|`: symmetric, zero on the diagonal, never positive.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DifferenceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    #[inline]
    fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    /// Mean over all ordered pairs `i ≠ j`.
    pub fn mean_off_diagonal(&self) -> f64 {
        let total: f64 = self.values.iter().sum();
        total / (self.n * (self.n - 1)) as f64
    }

    /// Mean over the ties of `net`, or `None` if it has none.
    pub fn mean_over(&self, net: &DirectedNetwork) -> Option<f64> {
        let (sum, count) = net
            .edges()
            .fold((0.0, 0usize), |(s, c), (i, j)| (s + self.get(i, j), c + 1));
        (count > 0).then(|| sum / count as f64)
    }

    /// Smallest entry (the most dissimilar pair).
    fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::min)
    }
}

pub fn pairwise_difference(y: &[f64]) -> Result<DifferenceMatrix> {
    let n = y.len();
    if n < 2 {
        return Err(Error::Dimension(format!(
            "pairwise differences need at least 2 actors, got {n}"
        )));
    }
    let mut values = Vec::with_capacity(n * n);
    for &yi in y {
        values.extend(y.iter().map(|&yj| -(yi - yj).abs()));
    }
    Ok(DifferenceMatrix { n, values })
}

/// `Φ(η₀ + η₁·d)`.
#[inline]
pub fn tie_probability(d: f64, eta0: f64, eta1: f64) -> f64 {
    normal::cdf(eta0 + eta1 * d)
}

/// Intercept that turns `η₀ + η₁·(d - d̄)` into `η₀' + η₁·d`.
#[inline]
pub fn centered_intercept(eta0: f64, eta1: f64, mean_d: f64) -> f64 {
    eta0 - eta1 * mean_d
}

pub fn probit_ties(d: &DifferenceMatrix, eta0: f64, eta1: f64, rng: &mut RngStream) -> Result<DirectedNetwork> {
    if !eta0.is_finite() {
        return Err(Error::param("eta0", "eta0 must be finite"));
    }
    if !(eta1.is_finite() && eta1 >= 0.0) {
        return Err(Error::param("eta1", "eta1 must be finite and nonnegative"));
    }
    let n = d.n();
    // The index is bounded above by eta0 (d <= 0), so its probability is too.
    let lookup = ProbitLookup::new(eta0 + eta1 * d.min_value(), eta0);
    let sparse = lookup.ceiling < SPARSE_CEILING;
    let mut ties = vec![false; n * n];
    let mut uniforms = vec![0.0; n];
    for i in 0..n {
        // one draw per off-diagonal pair, row-major
        for (j, u) in uniforms.iter_mut().enumerate() {
            if j != i {
                *u = rng.uniform();
            }
        }
        let trow = &mut ties[i * n..(i + 1) * n];
        if sparse {
            lookup.decide_sparse(&uniforms, d.row(i), eta0, eta1, trow);
        } else {
            lookup.decide(&uniforms, d.row(i), eta0, eta1, trow);
        }
    }
    Ok(DirectedNetwork::from_adjacency(n, ties))
}

/// Below this tie-probability ceiling most draws are rejected outright, so a
/// separate early-out test pays for its branch.
const SPARSE_CEILING: f64 = 0.2;

/// Decides `u < Φ(index)` without evaluating `Φ` for almost every draw.
///
/// `Φ` is tabulated on a grid of step 2⁻¹⁰ spanning the possible index
/// range. Since `Φ` is monotone, `u` below the tabulated value at the grid
/// point under the index, or at/above the one over it, settles the
/// comparison; only draws falling inside that bracket evaluate `Φ` exactly.
/// Decisions are therefore identical to calling `Φ` for every pair.
struct ProbitLookup {
    first: i64,
    table: Vec<f64>,
    ceiling: f64,
}

const GRID_SCALE: f64 = 1024.0;
const MAX_TABLE: usize = 1 << 16;

/// Exact `floor(x)` for moderate `x`, without a libm call.
#[inline]
fn floor_i64(x: f64) -> i64 {
    let k = x as i64;
    // branch-free: the sign of x is data dependent
    k - ((k as f64) > x) as i64
}

impl ProbitLookup {
    fn new(lowest: f64, highest: f64) -> Self {
        let ceiling = normal::cdf(highest);
        let first = floor_i64(lowest * GRID_SCALE);
        let last = floor_i64(highest * GRID_SCALE) + 1;
        let len = (last - first + 1) as usize;
        let table = if len <= MAX_TABLE {
            (first..=last).map(|k| normal::cdf(k as f64 / GRID_SCALE)).collect()
        } else {
            Vec::new()
        };
        ProbitLookup { first, table, ceiling }
    }

    #[inline(always)]
    fn below(table: &[f64], first: i64, u: f64, index: f64) -> bool {
        let k = floor_i64(index * GRID_SCALE) - first;
        if k < 0 || k as usize + 1 >= table.len() {
            return exact_below(u, index);
        }
        let lo = table[k as usize];
        let hi = table[k as usize + 1];
        // u in [lo, hi], written as one sign test so it stays a single,
        // well-predicted branch instead of two coin flips
        if (u - lo) * (hi - u) >= 0.0 {
            return exact_below(u, index);
        }
        u < lo
    }

    fn decide(&self, uniforms: &[f64], drow: &[f64], eta0: f64, eta1: f64, out: &mut [bool]) {
        let (table, first) = (&self.table[..], self.first);
        for ((tie, &u), &dij) in out.iter_mut().zip(uniforms).zip(drow) {
            *tie = Self::below(table, first, u, eta0 + eta1 * dij);
        }
    }

    fn decide_sparse(&self, uniforms: &[f64], drow: &[f64], eta0: f64, eta1: f64, out: &mut [bool]) {
        let (table, first, ceiling) = (&self.table[..], self.first, self.ceiling);
        for ((tie, &u), &dij) in out.iter_mut().zip(uniforms).zip(drow) {
            *tie = u < ceiling && Self::below(table, first, u, eta0 + eta1 * dij);
        }
    }
}

#[cold]
#[inline(never)]
fn exact_below(u: f64, index: f64) -> bool {
    u < normal::cdf(index)
}
