//! Trait draws, shocks, and the between-wave trait update.

use crate::error::{Error, Result};
use crate::network::DirectedNetwork;
use crate::rng::RngStream;

/// Trait values at both waves plus the shocks that separate them.
#[derive(Clone, Debug, PartialEq)]
pub struct TraitPanel {
    y_t0: Vec<f64>,
    shock: Vec<f64>,
    y_t1: Vec<f64>,
}

impl TraitPanel {
    pub fn new(y_t0: Vec<f64>, shock: Vec<f64>, y_t1: Vec<f64>) -> Result<Self> {
        if y_t0.len() != shock.len() || y_t0.len() != y_t1.len() {
            return Err(Error::Dimension(format!(
                "trait panel lengths {}, {}, {}",
                y_t0.len(),
                shock.len(),
                y_t1.len()
            )));
        }
        Ok(TraitPanel { y_t0, shock, y_t1 })
    }

    pub fn len(&self) -> usize {
        self.y_t0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y_t0.is_empty()
    }

    pub fn y_t0(&self) -> &[f64] {
        &self.y_t0
    }

    pub fn shock(&self) -> &[f64] {
        &self.shock
    }

    pub fn y_t1(&self) -> &[f64] {
        &self.y_t1
    }
}

/// `n` i.i.d. draws from `N(mean, sd²)`.
pub fn draw_traits(n: usize, mean: f64, sd: f64, rng: &mut RngStream) -> Vec<f64> {
    (0..n).map(|_| rng.normal(mean, sd)).collect()
}

/// `n` i.i.d. shocks from `N(0, shock_sd²)`. One uniform is consumed per
/// actor even when `shock_sd == 0`, in which case every shock is exactly 0.
pub fn draw_shocks(n: usize, shock_sd: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if !(shock_sd.is_finite() && shock_sd >= 0.0) {
        return Err(Error::param("shock_sd", "shock_sd must be finite and nonnegative"));
    }
    Ok(draw_traits(n, 0.0, shock_sd, rng))
}

/// One simultaneous influence update.
///
/// Each ego moves to `(1 - b1)·(y + u)` plus `b1` times the mean of `y + u`
/// over the alters it names in `net_t0`. Egos naming nobody, and every ego
/// when `b1 == 0`, simply get `y + u`.
pub fn update_traits(y_t0: &[f64], shocks: &[f64], net_t0: &DirectedNetwork, b1: f64) -> Result<Vec<f64>> {
    let n = y_t0.len();
    if shocks.len() != n || net_t0.n() != n {
        return Err(Error::Dimension(format!(
            "traits {n}, shocks {}, network {}",
            shocks.len(),
            net_t0.n()
        )));
    }
    if !(0.0..=1.0).contains(&b1) {
        return Err(Error::param("b1", "b1 must lie in [0, 1]"));
    }
    let shocked: Vec<f64> = y_t0.iter().zip(shocks).map(|(y, u)| y + u).collect();
    if b1 == 0.0 {
        return Ok(shocked);
    }
    let updated = (0..n)
        .map(|i| {
            let (sum, count) = net_t0
                .alters(i)
                .fold((0.0, 0usize), |(s, c), j| (s + shocked[j], c + 1));
            if count == 0 {
                shocked[i]
            } else {
                (1.0 - b1) * shocked[i] + b1 * (sum / count as f64)
            }
        })
        .collect();
    Ok(updated)
}
